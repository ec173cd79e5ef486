#include "darboux/resonance.hpp"

namespace darboux {

namespace {

// Clears denominators row by row; neither rank nor kernel changes.
std::vector<std::vector<Integer>> cleared_rows(const std::vector<std::vector<Rational>>& rows) {
  using boost::multiprecision::lcm;
  std::vector<std::vector<Integer>> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    Integer den = 1;
    for (const auto& r : row) den = lcm(den, denominator(r));
    std::vector<Integer> irow;
    irow.reserve(row.size());
    for (const auto& r : row) irow.push_back(numerator(r) * (den / denominator(r)));
    out.push_back(std::move(irow));
  }
  return out;
}

// Fraction-free Gaussian elimination (Bareiss); every division is exact.
int bareiss_rank(std::vector<std::vector<Integer>> a) {
  if (a.empty()) return 0;
  const std::size_t n_rows = a.size(), n_cols = a[0].size();
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < n_cols && r < n_rows; ++c) {
    std::size_t pivot = r;
    while (pivot < n_rows && a[pivot][c] == 0) ++pivot;
    if (pivot == n_rows) continue;
    std::swap(a[pivot], a[r]);
    for (std::size_t i = r + 1; i < n_rows; ++i) {
      for (std::size_t j = c + 1; j < n_cols; ++j)
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

Integer bareiss_det(std::vector<std::vector<Integer>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

ExponentMatrix::ExponentMatrix(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw std::invalid_argument("empty exponent matrix");
  const std::size_t cols = rows_[0].size();
  for (const auto& row : rows_) {
    if (row.size() != cols) throw std::invalid_argument("ragged exponent matrix");
  }
  if (rows_.size() + 1 != cols)
    throw std::invalid_argument("exponent matrix must have one more column than rows");
}

int rank_of(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return 0;
  return bareiss_rank(cleared_rows(rows));
}

int matrix_rank(const ExponentMatrix& m) { return rank_of(m.rows()); }

bool is_resonant(const std::vector<Rational>& gamma0,
                 const std::vector<std::vector<Rational>>& gammas) {
  std::vector<Rational> sum(gamma0.size(), Rational(0));
  for (const auto& g : gammas) {
    if (g.size() != gamma0.size()) throw std::invalid_argument("gamma length mismatch");
    for (std::size_t j = 0; j < g.size(); ++j) sum[j] += g[j];
  }
  for (std::size_t i = 0; i < gamma0.size(); ++i) {
    for (std::size_t j = i + 1; j < gamma0.size(); ++j) {
      if (gamma0[i] * sum[j] - gamma0[j] * sum[i] != 0) return false;
    }
  }
  return true;
}

LogLinearField generator_field(const ExponentMatrix& m) {
  const auto a = cleared_rows(m.rows());
  const std::size_t cols = m.col_count();
  std::vector<Rational> alpha(cols, Rational(0));
  bool nonzero = false;
  for (std::size_t drop = 0; drop < cols; ++drop) {
    std::vector<std::vector<Integer>> minor;
    minor.reserve(a.size());
    for (const auto& row : a) {
      std::vector<Integer> r;
      r.reserve(cols - 1);
      for (std::size_t j = 0; j < cols; ++j) {
        if (j != drop) r.push_back(row[j]);
      }
      minor.push_back(std::move(r));
    }
    Integer d = bareiss_det(std::move(minor));
    if (drop % 2 == 1) d = -d;
    if (d != 0) nonzero = true;
    alpha[drop] = Rational(d);
  }
  if (!nonzero) throw RankDeficient(matrix_rank(m), static_cast<int>(m.row_count()));
  return LogLinearField{normalize_direction(alpha)};
}

bool verify_annihilation(const LogLinearField& field, const std::vector<Rational>& gamma) {
  return dot(field.alpha, gamma) == 0;
}

bool verify_annihilation(const LogLinearField& field, const std::vector<Rational>& gamma,
                         const Jet& unit) {
  const auto& vars = unit.variables();
  if (field.alpha.size() != vars.size() || gamma.size() != vars.size())
    throw std::invalid_argument("field/roster length mismatch");
  Jet residue = unit * dot(field.alpha, gamma);
  for (std::size_t j = 0; j < vars.size(); ++j) {
    if (field.alpha[j] == 0) continue;
    residue = residue + unit.theta(vars[j]) * field.alpha[j];
  }
  return residue.body().is_zero();
}

}  // namespace darboux
