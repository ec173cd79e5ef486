#pragma once

#include <map>
#include <string>
#include <vector>

#include "darboux/polynomial.hpp"

namespace darboux {

// A coordinate-subspace blow-up center: the locus where all named variables
// vanish. Size at least 2 and at most the chart dimension.
struct Center {
  std::vector<std::string> vars;
};

// One affine chart of a (possibly iterated) blow-up. Variable names are
// reused across charts; the chart id records the blow-up path. map_from_root
// expresses each original (root) coordinate in this chart's coordinates.
class Chart {
 public:
  Chart() = default;  // empty placeholder; real charts come from root() / blow_up()

  static Chart root(std::vector<std::string> roster, std::vector<std::string> divisor_vars);

  const std::string& id() const { return id_; }
  const std::vector<std::string>& roster() const { return roster_; }
  const std::vector<std::string>& root_roster() const { return root_roster_; }
  const std::vector<Polynomial>& map_from_root() const { return map_from_root_; }
  const std::string& parent_id() const { return parent_id_; }
  // Single-step substitution: image of each parent coordinate in this chart.
  const std::map<std::string, Polynomial>& step() const { return step_; }
  const std::vector<std::string>& divisor_vars() const { return divisor_vars_; }
  int depth() const { return depth_; }

  // Substitutes a polynomial over the root roster through map_from_root.
  Polynomial pullback(const Polynomial& p) const;

  friend std::vector<Chart> blow_up(const Chart& chart, const Center& center);

 private:
  std::string id_;
  std::vector<std::string> roster_;
  std::vector<std::string> root_roster_;
  std::vector<Polynomial> map_from_root_;  // indexed by root roster position
  std::string parent_id_;
  std::map<std::string, Polynomial> step_;
  std::vector<std::string> divisor_vars_;  // roster order
  int depth_ = 0;
};

// Standard charts of the blow-up along `center`, one per center variable in
// roster order. In the chart distinguished by z_j the substitution is
// z_i -> z_j * z_i for the other center variables and identity elsewhere;
// z_j joins the divisor variables.
std::vector<Chart> blow_up(const Chart& chart, const Center& center);

// Local decomposition p = z^beta * cofactor at the chart origin. `ok` means
// the cofactor has a nonzero constant term, i.e. p is monomial times unit.
struct NormalCrossings {
  Monomial beta;
  Polynomial cofactor;
  Rational constant;  // cofactor(0)
  bool ok;
};

NormalCrossings normal_crossings_at_origin(const Polynomial& p);

// Same test after recentering at the given rational point.
NormalCrossings normal_crossings_at_point(const Polynomial& p, const std::vector<Rational>& point);

}  // namespace darboux
