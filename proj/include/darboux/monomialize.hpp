#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "darboux/blowup.hpp"
#include "darboux/foliation.hpp"
#include "darboux/jet.hpp"

namespace darboux {

struct ScriptEntry {
  std::string chart_id;
  std::vector<std::string> center_vars;
};

// How blow-up centers are chosen. Manual replays a scripted sequence;
// auto_origin blows up the span of the variables occurring in the content-free
// part; auto_coordinate tries codimension-2 coordinate centers on which that
// part vanishes before falling back to the full span.
struct Strategy {
  enum class Kind { manual, auto_origin, auto_coordinate };
  Kind kind = Kind::auto_coordinate;
  std::vector<ScriptEntry> script;
  int max_depth = 12;
};

class ChartTree {
 public:
  explicit ChartTree(Chart root);

  const std::string& root_id() const { return root_id_; }
  bool contains(const std::string& id) const { return nodes_.count(id) != 0; }
  const Chart& chart(const std::string& id) const;
  const std::vector<std::string>& children(const std::string& id) const;
  bool is_leaf(const std::string& id) const { return children(id).empty(); }
  std::vector<std::string> leaf_ids() const;  // sorted
  std::vector<std::string> all_ids() const;   // sorted

  // Blows up a leaf along the center and returns the new child ids.
  std::vector<std::string> blow_up_leaf(const std::string& leaf_id, const Center& center);

 private:
  struct Node {
    Chart chart;
    std::vector<std::string> children;
  };
  std::map<std::string, Node> nodes_;
  std::string root_id_;
};

struct DepthExceeded : std::runtime_error {
  explicit DepthExceeded(std::vector<std::string> ids);
  std::vector<std::string> leaf_ids;
};

struct ManualScriptExhausted : std::runtime_error {
  explicit ManualScriptExhausted(std::vector<std::string> ids);
  std::vector<std::string> leaf_ids;
};

// An earlier factor lost normal crossings in a later chart. Impossible with
// coordinate centers, so this is an internal assertion.
struct StabilityViolation : std::logic_error {
  explicit StabilityViolation(const std::string& message) : std::logic_error(message) {}
};

// Decomposition of one pulled-back factor: pullback = z^beta * constant * unit,
// cofactor = constant * unit kept exactly as a polynomial.
struct FactorRecord {
  Monomial beta;
  Rational constant;
  Polynomial cofactor;
  Jet unit;
};

// Multiplicative constant separated from a unit. When the constant is not
// expressible as a rational (rational exponent on a non-power base), `formal`
// carries the symbolic leftover and `value` the rational part.
struct DroppedConstant {
  Rational value{1};
  std::string formal;

  bool exact() const { return formal.empty(); }
  std::string display() const;
};

// Per-leaf record of the transformed system: the integral and every parameter
// written as z^gamma * constant * unit in the chart coordinates.
struct MonomialSystem {
  Chart chart;
  int jet_order = 8;
  std::vector<Rational> gamma0;
  std::vector<std::vector<Rational>> gammas;  // one per parameter
  std::vector<Jet> units;                     // index 0 = integral unit
  std::vector<DroppedConstant> dropped;       // same indexing as units
  std::vector<FactorRecord> factor_records;   // empty for imported systems

  std::size_t n() const { return gammas.size(); }
  std::vector<std::vector<Rational>> exponent_rows() const;  // gamma0 first
};

enum class LeafState { ok, depth_exceeded, script_exhausted };

struct LeafOutcome {
  std::string chart_id;
  LeafState state = LeafState::ok;
  std::string detail;
  std::optional<MonomialSystem> system;
};

struct MonomializeResult {
  ChartTree tree;
  std::vector<LeafOutcome> leaves;  // sorted by chart id

  bool complete() const;
};

// Extends the tree until pullback(p) is monomial times unit at every leaf
// origin. Throws DepthExceeded or ManualScriptExhausted naming the leaves
// still failing; neither is a claim that no resolution exists.
ChartTree monomialize_factor(const ChartTree& tree, const Polynomial& p, const Strategy& strategy);

// Monomializes the factors in order, then assembles the per-leaf systems,
// re-verifying that every factor and every parameter is normal crossings in
// every surviving leaf. Leaves that ran out of depth or script are reported,
// not fixed.
MonomializeResult monomialize_sequence(const DarbouxIntegral& integral, const Strategy& strategy,
                                       int jet_order);

// Builds the system for one chart, verifying normal crossings of everything.
MonomialSystem assemble_system(const Chart& chart, const DarbouxIntegral& integral, int jet_order);

// Import path: a system given directly by its exponent rows and units
// (row 0 is the integral). The chart is synthetic with an identity map.
MonomialSystem import_system(const std::vector<std::string>& variables,
                             const std::vector<std::string>& divisor_vars,
                             const std::vector<std::vector<Rational>>& rows,
                             const std::vector<Jet>& units, int jet_order);

}  // namespace darboux
