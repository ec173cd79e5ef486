#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "darboux/monomialize.hpp"
#include "darboux/resonance.hpp"

namespace darboux {

// Local diffeomorphism z_j -> z_j * V_j(z) fixing the origin; every V_j is a
// unit jet with constant term 1.
struct ChangeOfVariables {
  int order = 8;
  std::vector<std::string> variables;
  std::vector<Jet> factors;

  static ChangeOfVariables identity(std::vector<std::string> variables, int order);
};

struct NonGeneric : std::runtime_error {
  NonGeneric(int rank, int required)
      : std::runtime_error("nongeneric case: exponent matrix rank " + std::to_string(rank) +
                           " < " + std::to_string(required)),
        rank(rank),
        required(required) {}
  int rank;
  int required;
};

// Rescales every unit to constant term 1, pushing the extracted constants
// into dropped_constants. Throws on a zero constant term.
MonomialSystem normalize_units(const MonomialSystem& system);

struct EliminationResult {
  ChangeOfVariables change;
  MonomialSystem transformed;          // all units identically 1
  std::vector<std::size_t> columns;    // gauge: variables allowed a nontrivial V
  std::vector<bool> unit_match;        // per row: prod_j V_j^gamma_ij == Delta_i mod N+1
};

// Solves for the change of variables that turns every z^gamma_i * Delta_i into
// the bare monomial z^gamma_i modulo degree order+1. Takes jet logarithms of
// the units and solves the exact (n+1)x(n+1) linear system over the chosen
// column set; the remaining W_j are gauged to zero. Requires maximal rank
// (throws NonGeneric) and normalized units.
EliminationResult eliminate_units(const MonomialSystem& system, int order,
                                  const std::optional<std::vector<std::size_t>>& gauge =
                                      std::nullopt);

// The field sum_j (linear_j + correction_j(z)) z_j d/dz_j; corrections have
// zero constant term, so the linearization at the origin is `linear`.
struct PushedField {
  std::vector<std::string> variables;
  std::vector<Rational> linear;
  std::vector<Jet> corrections;
};

// Expresses a log-linear field given in the new coordinates z~_j = z_j V_j(z)
// back in the original coordinates, solving the implicit chain-rule system by
// fixed-point iteration to the change's jet order.
PushedField push_forward_field(const LogLinearField& field, const ChangeOfVariables& change);

// X(z^gamma * unit) == 0 modulo degree order+1.
bool field_annihilates(const PushedField& field, const std::vector<Rational>& gamma,
                       const Jet& unit);

struct Transversality {
  bool transversal;
  std::string detail;
};

// The field crosses the leaf {divisor_var = 0} iff the linear part has a
// nonzero component there.
Transversality transversality_report(const PushedField& field, const std::string& divisor_var);

}  // namespace darboux
