#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "darboux/jet.hpp"
#include "darboux/rational.hpp"

namespace darboux {

// The (n+1) x (n+2) matrix whose rows are the monomial exponents gamma_0
// (the integral) followed by gamma_1..gamma_n (the parameters).
class ExponentMatrix {
 public:
  explicit ExponentMatrix(std::vector<std::vector<Rational>> rows);

  const std::vector<std::vector<Rational>>& rows() const { return rows_; }
  std::size_t row_count() const { return rows_.size(); }
  std::size_t col_count() const { return rows_.empty() ? 0 : rows_[0].size(); }

 private:
  std::vector<std::vector<Rational>> rows_;
};

// Exact rank over the rationals of an arbitrary rational matrix,
// via fraction-free (Bareiss) elimination on cleared rows.
int rank_of(const std::vector<std::vector<Rational>>& rows);

int matrix_rank(const ExponentMatrix& m);

// Membership in the resonant locus: gamma_0 and the sum of the gamma_j are
// linearly dependent (all 2x2 minors of the stacked pair vanish). The zero
// vector is dependent with anything, hence resonant.
bool is_resonant(const std::vector<Rational>& gamma0,
                 const std::vector<std::vector<Rational>>& gammas);

struct RankDeficient : std::runtime_error {
  RankDeficient(int rank, int required)
      : std::runtime_error("exponent matrix rank " + std::to_string(rank) + " < " +
                           std::to_string(required) + "; kernel is not a line"),
        rank(rank),
        required(required) {}
  int rank;
  int required;
};

// X = sum_j alpha_j z_j d/dz_j. Stored as a primitive integer vector with the
// first nonzero entry positive.
struct LogLinearField {
  std::vector<Rational> alpha;
};

// The primitive generator of the kernel of a maximal-rank exponent matrix:
// the generalized cross product of the rows. Throws RankDeficient otherwise.
LogLinearField generator_field(const ExponentMatrix& m);

// <alpha, gamma> == 0, i.e. X kills the pure monomial z^gamma.
bool verify_annihilation(const LogLinearField& field, const std::vector<Rational>& gamma);

// X applied to z^gamma * unit vanishes to the unit's jet order. gamma is
// aligned with the unit's roster.
bool verify_annihilation(const LogLinearField& field, const std::vector<Rational>& gamma,
                         const Jet& unit);

}  // namespace darboux
