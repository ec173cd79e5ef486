#include "darboux/monomialize.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace darboux {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

ChartTree::ChartTree(Chart root) : root_id_(root.id()) {
  nodes_.emplace(root_id_, Node{std::move(root), {}});
}

const Chart& ChartTree::chart(const std::string& id) const {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) throw std::invalid_argument("no chart with id '" + id + "'");
  return it->second.chart;
}

const std::vector<std::string>& ChartTree::children(const std::string& id) const {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) throw std::invalid_argument("no chart with id '" + id + "'");
  return it->second.children;
}

std::vector<std::string> ChartTree::leaf_ids() const {
  std::vector<std::string> out;
  for (const auto& [id, node] : nodes_) {
    if (node.children.empty()) out.push_back(id);
  }
  return out;  // map iteration is already sorted
}

std::vector<std::string> ChartTree::all_ids() const {
  std::vector<std::string> out;
  out.reserve(nodes_.size());
  for (const auto& [id, node] : nodes_) out.push_back(id);
  return out;
}

std::vector<std::string> ChartTree::blow_up_leaf(const std::string& leaf_id,
                                                 const Center& center) {
  auto it = nodes_.find(leaf_id);
  if (it == nodes_.end()) throw std::invalid_argument("no chart with id '" + leaf_id + "'");
  if (!it->second.children.empty())
    throw std::invalid_argument("chart '" + leaf_id + "' is not a leaf");
  std::vector<std::string> ids;
  for (auto& child : blow_up(it->second.chart, center)) {
    ids.push_back(child.id());
    it->second.children.push_back(child.id());
    nodes_.emplace(child.id(), Node{std::move(child), {}});
  }
  return ids;
}

DepthExceeded::DepthExceeded(std::vector<std::string> ids)
    : std::runtime_error("depth budget exhausted at: " + join(ids, ", ")),
      leaf_ids(std::move(ids)) {}

ManualScriptExhausted::ManualScriptExhausted(std::vector<std::string> ids)
    : std::runtime_error("manual script exhausted with failing leaves: " + join(ids, ", ")),
      leaf_ids(std::move(ids)) {}

std::string DroppedConstant::display() const {
  if (formal.empty()) return to_string(value);
  if (value == 1) return formal;
  return to_string(value) + "*" + formal;
}

std::vector<std::vector<Rational>> MonomialSystem::exponent_rows() const {
  std::vector<std::vector<Rational>> rows;
  rows.reserve(1 + gammas.size());
  rows.push_back(gamma0);
  for (const auto& g : gammas) rows.push_back(g);
  return rows;
}

bool MonomializeResult::complete() const {
  return std::all_of(leaves.begin(), leaves.end(),
                     [](const LeafOutcome& l) { return l.state == LeafState::ok; });
}

namespace {

// Variables occurring in the content-free part, in roster order.
std::vector<std::string> occurring_vars(const Polynomial& q) {
  std::vector<std::string> out;
  for (const auto& v : q.variables()) {
    if (q.depends_on(v)) out.push_back(v);
  }
  return out;
}

Center choose_center(const Polynomial& cofactor, Strategy::Kind kind) {
  const auto& vars = cofactor.variables();
  if (kind == Strategy::Kind::auto_coordinate) {
    // First codimension-2 coordinate subspace on which the cofactor vanishes,
    // i.e. every term contains one of the two variables.
    for (std::size_t i = 0; i < vars.size(); ++i) {
      for (std::size_t j = i + 1; j < vars.size(); ++j) {
        bool covers = true;
        for (const auto& [m, c] : cofactor.terms()) {
          if (m.exponent(i) == 0 && m.exponent(j) == 0) {
            covers = false;
            break;
          }
        }
        if (covers) return Center{{vars[i], vars[j]}};
      }
    }
  }
  // Content-free with zero constant term implies at least two variables occur.
  return Center{occurring_vars(cofactor)};
}

struct Frozen {
  LeafState state;
  std::string detail;
};

// Core driver shared by monomialize_factor and monomialize_sequence. The
// script cursor and the frozen set persist across factors.
void resolve_factor(ChartTree& tree, const Polynomial& p, const Strategy& strategy,
                    std::size_t& cursor, std::map<std::string, Frozen>& frozen) {
  for (;;) {
    std::vector<std::string> failing;
    for (const auto& id : tree.leaf_ids()) {
      if (frozen.count(id)) continue;
      const auto nc = normal_crossings_at_origin(tree.chart(id).pullback(p));
      if (!nc.ok) failing.push_back(id);
    }
    if (failing.empty()) return;

    if (strategy.kind == Strategy::Kind::manual) {
      if (cursor >= strategy.script.size()) {
        for (const auto& id : failing)
          frozen.emplace(id, Frozen{LeafState::script_exhausted,
                                    "not normal crossings and no script entry left"});
        return;
      }
      const auto& entry = strategy.script[cursor++];
      tree.blow_up_leaf(entry.chart_id, Center{entry.center_vars});
      continue;
    }

    for (const auto& id : failing) {
      const Chart& chart = tree.chart(id);
      if (chart.depth() >= strategy.max_depth) {
        frozen.emplace(id, Frozen{LeafState::depth_exceeded,
                                  "still not normal crossings at depth " +
                                      std::to_string(chart.depth())});
        continue;
      }
      const auto nc = normal_crossings_at_origin(chart.pullback(p));
      tree.blow_up_leaf(id, choose_center(nc.cofactor, strategy.kind));
    }
  }
}

DroppedConstant combine_constant_powers(const std::vector<Rational>& bases,
                                        const std::vector<Rational>& exponents) {
  DroppedConstant out;
  std::vector<std::string> formal_parts;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    if (const auto v = pow_exact(bases[i], exponents[i])) {
      out.value *= *v;
    } else {
      formal_parts.push_back("(" + to_string(bases[i]) + ")^(" + to_string(exponents[i]) + ")");
    }
  }
  out.formal = join(formal_parts, "*");
  return out;
}

}  // namespace

ChartTree monomialize_factor(const ChartTree& tree, const Polynomial& p,
                             const Strategy& strategy) {
  if (p.is_zero()) throw std::invalid_argument("cannot monomialize the zero polynomial");
  ChartTree out = tree;
  std::size_t cursor = 0;
  std::map<std::string, Frozen> frozen;
  resolve_factor(out, p, strategy, cursor, frozen);
  if (!frozen.empty()) {
    std::vector<std::string> depth_ids, script_ids;
    for (const auto& [id, f] : frozen) {
      (f.state == LeafState::depth_exceeded ? depth_ids : script_ids).push_back(id);
    }
    if (!depth_ids.empty()) throw DepthExceeded(depth_ids);
    throw ManualScriptExhausted(script_ids);
  }
  return out;
}

MonomialSystem assemble_system(const Chart& chart, const DarbouxIntegral& integral,
                               int jet_order) {
  MonomialSystem sys;
  sys.chart = chart;
  sys.jet_order = jet_order;
  const std::size_t dim = chart.roster().size();

  std::vector<Rational> betas_weighted(dim, Rational(0));
  std::vector<Rational> constants, exponents;
  Jet delta0 = Jet::one(chart.roster(), jet_order);
  for (const auto& factor : integral.factors()) {
    const Polynomial pb = chart.pullback(factor.poly);
    const auto nc = normal_crossings_at_origin(pb);
    if (!nc.ok)
      throw StabilityViolation("factor '" + factor.poly.str() +
                               "' is not normal crossings in chart '" + chart.id() + "'");
    const Jet unit = Jet(nc.cofactor * (Rational(1) / nc.constant), jet_order);
    delta0 = delta0 * unit.pow(factor.exponent);
    for (std::size_t j = 0; j < dim; ++j)
      betas_weighted[j] += factor.exponent * nc.beta.exponent(j);
    constants.push_back(nc.constant);
    exponents.push_back(factor.exponent);
    sys.factor_records.push_back(FactorRecord{nc.beta, nc.constant, nc.cofactor, unit});
  }
  sys.gamma0 = betas_weighted;
  sys.units.push_back(delta0);
  sys.dropped.push_back(combine_constant_powers(constants, exponents));

  for (const auto& eps : integral.parameters()) {
    std::size_t root_idx = 0;
    while (chart.root_roster()[root_idx] != eps) ++root_idx;
    const Polynomial pb = chart.map_from_root()[root_idx];
    const auto nc = normal_crossings_at_origin(pb);
    if (!nc.ok)
      throw StabilityViolation("parameter '" + eps + "' is not normal crossings in chart '" +
                               chart.id() + "'");
    std::vector<Rational> gamma;
    gamma.reserve(dim);
    for (std::size_t j = 0; j < dim; ++j) gamma.emplace_back(nc.beta.exponent(j));
    sys.gammas.push_back(std::move(gamma));
    sys.units.push_back(Jet(nc.cofactor * (Rational(1) / nc.constant), jet_order));
    DroppedConstant d;
    d.value = nc.constant;
    sys.dropped.push_back(d);
  }
  return sys;
}

MonomializeResult monomialize_sequence(const DarbouxIntegral& integral, const Strategy& strategy,
                                       int jet_order) {
  ChartTree tree(Chart::root(integral.variables(), integral.parameters()));
  std::size_t cursor = 0;
  std::map<std::string, Frozen> frozen;
  for (const auto& factor : integral.factors())
    resolve_factor(tree, factor.poly, strategy, cursor, frozen);

  MonomializeResult result{std::move(tree), {}};
  for (const auto& id : result.tree.leaf_ids()) {
    LeafOutcome outcome;
    outcome.chart_id = id;
    if (auto it = frozen.find(id); it != frozen.end()) {
      outcome.state = it->second.state;
      outcome.detail = it->second.detail;
    } else {
      outcome.system = assemble_system(result.tree.chart(id), integral, jet_order);
    }
    result.leaves.push_back(std::move(outcome));
  }
  return result;
}

MonomialSystem import_system(const std::vector<std::string>& variables,
                             const std::vector<std::string>& divisor_vars,
                             const std::vector<std::vector<Rational>>& rows,
                             const std::vector<Jet>& units, int jet_order) {
  if (variables.size() < 2) throw std::invalid_argument("import needs at least 2 variables");
  if (rows.size() + 1 != variables.size())
    throw std::invalid_argument("import needs exactly " + std::to_string(variables.size() - 1) +
                                " exponent rows (one per first integral)");
  for (const auto& row : rows) {
    if (row.size() != variables.size())
      throw std::invalid_argument("exponent row length mismatch");
  }
  if (units.size() != rows.size()) throw std::invalid_argument("one unit per row required");

  MonomialSystem sys;
  sys.chart = Chart::root(variables, divisor_vars);
  sys.jet_order = jet_order;
  sys.gamma0 = rows[0];
  sys.gammas.assign(rows.begin() + 1, rows.end());
  for (const auto& u : units) {
    if (u.variables() != variables) throw std::invalid_argument("unit roster mismatch");
    if (u.constant_term() == 0)
      throw std::invalid_argument("imported unit has zero constant term");
    sys.units.push_back(u.truncate(jet_order));
    sys.dropped.push_back(DroppedConstant{});
  }
  return sys;
}

}  // namespace darboux
