#include "ribbonforge/minors.hpp"

#include <algorithm>
#include <deque>
#include <thread>
#include <unordered_set>

#include "ribbonforge/edit_ops.hpp"
#include "ribbonforge/enumeration.hpp"
#include "ribbonforge/errors.hpp"
#include "ribbonforge/surface.hpp"

namespace ribbonforge {

std::string_view to_string(MinorOp op) noexcept {
  switch (op) {
    case MinorOp::DeleteEdge: return "delete_edge";
    case MinorOp::ContractEdge: return "contract_edge";
    case MinorOp::DeleteVertex: return "delete_vertex";
  }
  return "?";
}

std::string_view to_string(ExcludedPattern p) noexcept {
  switch (p) {
    case ExcludedPattern::Bbar1: return "bbar1";
    case ExcludedPattern::B3: return "b3";
    case ExcludedPattern::ThetaT: return "theta-t";
  }
  return "?";
}

ArrowPresentation apply_step(const ArrowPresentation& g, const MinorStep& step) {
  switch (step.op) {
    case MinorOp::DeleteEdge: return delete_edge(g, step.label);
    case MinorOp::ContractEdge: return contract_edge(g, step.label);
    case MinorOp::DeleteVertex:
      if (step.vertex >= g.vertex_count()) throw UnknownVertex(step.vertex);
      if (!g.curves()[step.vertex].arrows.empty())
        throw InvalidScript("vertex " + std::to_string(step.vertex) + " is not isolated");
      return delete_vertex(g, step.vertex);
  }
  throw InvalidScript("unknown step");
}

ArrowPresentation replay(const MinorScript& script, const ArrowPresentation& g) {
  ArrowPresentation cur = g;
  for (const auto& step : script.steps) cur = apply_step(cur, step);
  return cur;
}

void ScriptBuilder::apply(const MinorStep& step) {
  current_ = apply_step(current_, step);
  script_.steps.push_back(step);
}

void ScriptBuilder::delete_isolated_vertices() {
  for (auto iso = current_.isolated_vertices(); !iso.empty(); iso = current_.isolated_vertices())
    apply(MinorStep::delete_vertex(iso.front()));
}

// --- fixed graphs ---------------------------------------------------------------

ArrowPresentation build_B(std::size_t n) {
  if (n == 0) throw InvalidArgument("B_n needs n >= 1");
  auto e = [](std::size_t i) { return Arrow{"e" + std::to_string(i), Direction::Along}; };
  Curve curve;
  for (std::size_t i = 1; i < n; ++i) {
    curve.arrows.push_back(e(i + 1));
    curve.arrows.push_back(e(i));
  }
  curve.arrows.push_back(e(1));
  curve.arrows.push_back(e(n));
  return validate({curve});
}

ArrowPresentation build_Bbar1() { return make_presentation({{"a", "a'"}}); }

ArrowPresentation build_theta_t() {
  ArrowPresentation theta = partial_dual(build_B(3), std::string_view{"e1"});
  const SurfaceSummary s = surface_summary(theta);
  if (s.v != 2 || s.f != 1 || s.euler_genus != 2)
    throw InternalInvariantViolation("theta_t does not have v=2, f=1, euler genus 2");
  return theta;
}

ArrowPresentation build_pattern(ExcludedPattern p) {
  switch (p) {
    case ExcludedPattern::Bbar1: return build_Bbar1();
    case ExcludedPattern::B3: return build_B(3);
    case ExcludedPattern::ThetaT: return build_theta_t();
  }
  throw InvalidArgument("unknown pattern");
}

// --- search ----------------------------------------------------------------------

namespace {

struct Child {
  ArrowPresentation g;
  MinorStep step;
  CanonicalKey key;
  bool viable = false;
  bool expandable = false;
};

struct TargetProfile {
  CanonicalKey key;
  SurfaceSummary summary;
};

bool viable_for(const SurfaceSummary& s, const TargetProfile& t, bool surface_pruning) {
  if (s.e < t.summary.e) return false;
  if (!surface_pruning) return true;
  if (s.euler_genus < t.summary.euler_genus) return false;
  if (!t.summary.orientable && s.orientable) return false;
  return true;
}

bool expandable_for(const ArrowPresentation& g, const SurfaceSummary& s, const TargetProfile& t) {
  if (s.e > t.summary.e) return true;
  return s.v > t.summary.v && !g.isolated_vertices().empty();
}

std::vector<std::pair<ArrowPresentation, MinorStep>> raw_children(const ArrowPresentation& g, bool contract_loops,
                                                                  bool edge_moves) {
  std::vector<std::pair<ArrowPresentation, MinorStep>> out;
  if (edge_moves) {
    const auto labels = g.labels();
    for (const auto& label : labels) out.emplace_back(delete_edge(g, label), MinorStep::delete_edge(label));
    for (const auto& label : labels) {
      auto [a, b] = g.slots(label);
      if (!contract_loops && a.curve == b.curve) continue;
      out.emplace_back(contract_edge(g, label), MinorStep::contract_edge(label));
    }
  }
  // isolated vertices are interchangeable; deleting the first suffices
  if (const auto iso = g.isolated_vertices(); !iso.empty())
    out.emplace_back(delete_vertex(g, iso.front()), MinorStep::delete_vertex(iso.front()));
  return out;
}

template <class Fn>
void parallel_for(std::size_t count, std::size_t threads, Fn&& fn) {
  if (threads <= 1 || count < 16) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  const std::size_t workers = std::min(threads, count);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  }
}

}  // namespace

std::vector<OneStepMinor> one_step_minors(const ArrowPresentation& g, std::size_t max_edges) {
  std::vector<OneStepMinor> out;
  std::unordered_set<CanonicalKey, CanonicalKeyHash> seen;
  for (auto& [minor, step] : raw_children(g, true, true)) {
    if (seen.insert(canonical_key(minor, max_edges)).second) out.push_back({std::move(minor), step});
  }
  return out;
}

std::optional<MinorScript> has_minor(const ArrowPresentation& g, const ArrowPresentation& h,
                                     const SearchLimits& limits) {
  if (g.edge_count() > limits.max_edges) throw SizeBoundExceeded("has_minor source edges", g.edge_count(), limits.max_edges);
  if (h.edge_count() > limits.max_edges) throw SizeBoundExceeded("has_minor target edges", h.edge_count(), limits.max_edges);

  const TargetProfile target{canonical_key(h, limits.max_edges), surface_summary(h)};
  const std::size_t threads = limits.threads != 0 ? limits.threads : std::max(1u, std::thread::hardware_concurrency());

  struct Node {
    ArrowPresentation g;
    std::size_t parent;
    MinorStep step;
  };
  constexpr std::size_t kRoot = static_cast<std::size_t>(-1);
  std::vector<Node> nodes;
  nodes.push_back({g, kRoot, {}});

  auto script_to = [&](std::size_t index) {
    MinorScript script;
    for (std::size_t i = index; nodes[i].parent != kRoot; i = nodes[i].parent) script.steps.push_back(nodes[i].step);
    std::reverse(script.steps.begin(), script.steps.end());
    if (!equivalent(replay(script, g), h, limits.max_edges))
      throw InternalInvariantViolation("minor script does not replay to the target");
    return script;
  };

  const CanonicalKey root_key = canonical_key(g, limits.max_edges);
  if (root_key == target.key) return MinorScript{};
  const SurfaceSummary root_summary = surface_summary(g);
  if (!viable_for(root_summary, target, limits.surface_pruning)) return std::nullopt;

  std::unordered_set<CanonicalKey, CanonicalKeyHash> seen{root_key};
  std::vector<std::size_t> layer{0};
  while (!layer.empty()) {
    std::vector<std::vector<Child>> expanded(layer.size());
    parallel_for(layer.size(), threads, [&](std::size_t i) {
      const ArrowPresentation& cur = nodes[layer[i]].g;
      const bool edge_moves = cur.edge_count() > target.summary.e;
      for (auto& [minor, step] : raw_children(cur, limits.contract_loops, edge_moves)) {
        Child c{std::move(minor), std::move(step), {}, false, false};
        const SurfaceSummary s = surface_summary(c.g);
        c.key = canonical_key(c.g, limits.max_edges);
        c.viable = viable_for(s, target, limits.surface_pruning) || c.key == target.key;
        c.expandable = c.viable && expandable_for(c.g, s, target);
        expanded[i].push_back(std::move(c));
      }
    });

    std::vector<std::size_t> next;
    for (std::size_t i = 0; i < layer.size(); ++i) {
      for (auto& c : expanded[i]) {
        if (!c.viable) continue;
        if (!seen.insert(c.key).second) continue;
        nodes.push_back({std::move(c.g), layer[i], std::move(c.step)});
        if (c.key == target.key) return script_to(nodes.size() - 1);
        if (c.expandable) next.push_back(nodes.size() - 1);
      }
      if (nodes.size() > limits.max_states)
        throw SizeBoundExceeded("has_minor search states", nodes.size(), limits.max_states);
    }
    layer = std::move(next);
  }
  return std::nullopt;
}

MinorScript contraction_chain_Bn(std::size_t n) {
  if (n < 5 || n % 2 == 0) throw InvalidArgument("contraction chain needs odd n >= 5");
  ScriptBuilder builder(build_B(n));
  for (std::size_t m = n; m > 3; m -= 2) {
    builder.contract_edge("e" + std::to_string(m));
    builder.contract_edge("e" + std::to_string(m - 1));
    if (!equivalent(builder.current(), build_B(m - 2), n))
      throw InternalInvariantViolation("(B_m / e_m) / e_(m-1) is not B_(m-2) at m=" + std::to_string(m));
  }
  return builder.script();
}

// --- excluded patterns --------------------------------------------------------------

std::optional<MinorScript> bbar1_certificate(const ArrowPresentation& g) {
  const Multigraph m = underlying_multigraph(g);
  const auto inc = m.incidence();
  const std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent_edge(m.vertex_count, none), depth(m.vertex_count, 0);
  std::vector<int> parity(m.vertex_count, -1);
  LabelSet tree;
  for (std::size_t root = 0; root < m.vertex_count; ++root) {
    if (parity[root] >= 0) continue;
    parity[root] = 0;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t ei : inc[u]) {
        const auto& e = m.edges[ei];
        const std::size_t w = e.u == u ? e.v : e.u;
        if (parity[w] >= 0) continue;
        parity[w] = parity[u] ^ (is_twisted(g, e.label) ? 1 : 0);
        parent_edge[w] = ei;
        depth[w] = depth[u] + 1;
        tree.insert(e.label);
        queue.push_back(w);
      }
    }
  }

  for (std::size_t ei = 0; ei < m.edges.size(); ++ei) {
    const auto& e = m.edges[ei];
    if (tree.contains(e.label)) continue;
    if ((parity[e.u] ^ parity[e.v] ^ (is_twisted(g, e.label) ? 1 : 0)) == 0) continue;

    // odd cycle: e plus the tree path between its ends
    LabelSet path;
    std::size_t x = e.u, y = e.v;
    auto climb = [&](std::size_t& v) {
      const auto& pe = m.edges[parent_edge[v]];
      path.insert(pe.label);
      v = pe.u == v ? pe.v : pe.u;
    };
    while (depth[x] > depth[y]) climb(x);
    while (depth[y] > depth[x]) climb(y);
    while (x != y) {
      climb(x);
      climb(y);
    }

    ScriptBuilder builder(g);
    for (const auto& label : g.labels())
      if (label != e.label && !path.contains(label)) builder.delete_edge(label);
    builder.delete_isolated_vertices();
    for (const auto& label : path) builder.contract_edge(label);
    if (!equivalent(builder.current(), build_Bbar1(), 1))
      throw InternalInvariantViolation("odd-twist cycle did not reduce to B̄1");
    return builder.script();
  }
  return std::nullopt;
}

std::vector<PatternHit> excluded_minor_scan(const ArrowPresentation& g, const SearchLimits& limits) {
  if (g.edge_count() > limits.max_edges) throw SizeBoundExceeded("scan edges", g.edge_count(), limits.max_edges);
  std::vector<PatternHit> hits;
  if (auto script = bbar1_certificate(g)) hits.push_back({ExcludedPattern::Bbar1, std::move(*script)});
  for (auto p : {ExcludedPattern::B3, ExcludedPattern::ThetaT}) {
    if (auto script = has_minor(g, build_pattern(p), limits)) hits.push_back({p, std::move(*script)});
  }
  return hits;
}

// --- Euler genus -----------------------------------------------------------------------

bool in_b_family(const ArrowPresentation& g, std::size_t n) {
  if (g.empty()) return false;
  for (const auto& comp : components(g)) {
    if (comp.vertex_count() != 1 || comp.edge_count() == 0) return false;
    if (boundary_components(comp).count() != 1) return false;
  }
  const SurfaceSummary s = surface_summary(g);
  if (n % 2 == 1) return s.euler_genus == n + 1;
  return s.euler_genus == (s.orientable ? n + 2 : n + 1);
}

std::vector<ArrowPresentation> b_family_members(std::size_t n, std::size_t max_edges) {
  EnumerationFilter filter;
  filter.max_edges = max_edges;
  filter.min_edges = 1;
  std::vector<ArrowPresentation> out;
  enumerate_all(filter, [&](const ArrowPresentation& g) {
    if (in_b_family(g, n)) out.push_back(g);
  });
  return out;
}

std::optional<std::string> boundary_preserving_edge(const ArrowPresentation& bouquet) {
  const std::size_t f = boundary_components(bouquet).count();
  for (const auto& label : bouquet.labels())
    if (boundary_components(delete_edge(bouquet, label)).count() == f) return label;
  return std::nullopt;
}

namespace {

// Shared machinery of the genus reductions. Every step re-checks the
// Euler genus change it is supposed to cause.
class GenusReducer {
 public:
  explicit GenusReducer(const ArrowPresentation& g) : builder_(g) {}

  std::size_t gamma() const { return euler_genus(builder_.current()); }
  const ArrowPresentation& current() const { return builder_.current(); }
  const MinorScript& script() const { return builder_.script(); }

  void contract_spanning_forest() {
    const std::size_t before = gamma();
    for (const auto& label : spanning_forest(current())) builder_.contract_edge(label);
    if (gamma() != before) throw InternalInvariantViolation("forest contraction changed Euler genus");
  }

  void delete_two_sided_edges() {
    for (bool again = true; again;) {
      again = false;
      const auto walks = boundary_components(current());
      for (const auto& label : current().labels()) {
        auto [w1, w2] = free_side_walks(current(), walks, label);
        if (w1 == w2) continue;
        const std::size_t gamma_before = gamma();
        const std::size_t f_before = walks.count();
        builder_.delete_edge(label);
        if (gamma() != gamma_before || boundary_components(current()).count() + 1 != f_before)
          throw InternalInvariantViolation("two-sided deletion changed Euler genus");
        again = true;
        break;
      }
    }
  }

  struct ComponentInfo {
    LabelSet labels;
    bool orientable;
    std::size_t gamma;
  };

  std::vector<ComponentInfo> live_components() const {
    std::vector<ComponentInfo> out;
    const auto parts = component_partition(current());
    for (std::size_t i = 0; i < parts.count(); ++i) {
      if (parts.labels[i].empty()) continue;
      const auto comp = sub_presentation(current(), parts.curves[i]);
      const auto s = surface_summary(comp);
      if (s.euler_genus > 0) out.push_back({parts.labels[i], s.orientable, s.euler_genus});
    }
    return out;
  }

  bool has_orientable_positive() const {
    for (const auto& c : live_components())
      if (c.orientable) return true;
    return false;
  }
  bool has_nonorientable() const {
    for (const auto& c : live_components())
      if (!c.orientable) return true;
    return false;
  }

  // Orientable one-boundary bouquet: any deletion drops the genus by 2.
  void drop_orientable() {
    for (const auto& c : live_components()) {
      if (!c.orientable) continue;
      const std::size_t before = gamma();
      builder_.delete_edge(*c.labels.begin());
      if (gamma() + 2 != before) throw InternalInvariantViolation("orientable deletion did not drop Euler genus by 2");
      return;
    }
    throw InternalInvariantViolation("no orientable component left to reduce");
  }

  // Non-orientable one-boundary bouquet: an edge whose deletion keeps the
  // boundary count drops the genus by 1.
  void drop_nonorientable() {
    for (const auto& c : live_components()) {
      if (c.orientable) continue;
      const auto bouquet = restriction(current(), c.labels);
      if (bouquet.vertex_count() != 1 || boundary_components(bouquet).count() != 1)
        throw InternalInvariantViolation("component is not a one-boundary bouquet");
      const auto edge = boundary_preserving_edge(bouquet);
      if (!edge) throw ClaimViolation("no boundary-preserving deletion in non-orientable bouquet");
      const std::size_t before = gamma();
      builder_.delete_edge(*edge);
      if (gamma() + 1 != before) throw InternalInvariantViolation("non-orientable deletion did not drop Euler genus by 1");
      return;
    }
    throw InternalInvariantViolation("no non-orientable component left to reduce");
  }

  void delete_isolated_vertices() { builder_.delete_isolated_vertices(); }

 private:
  ScriptBuilder builder_;
};

}  // namespace

MinorScript extract_genus_minor(const ArrowPresentation& g, std::size_t target) {
  if (euler_genus(g) <= target) throw InvalidArgument("Euler genus is already at most the target");
  GenusReducer r(g);
  r.contract_spanning_forest();
  while (r.gamma() > target) {
    r.delete_two_sided_edges();
    const std::size_t gap = r.gamma() - target;
    if (gap >= 2 && r.has_orientable_positive())
      r.drop_orientable();
    else if (r.has_nonorientable())
      r.drop_nonorientable();
    else
      r.drop_orientable();
  }
  return r.script();
}

MinorScript genus_excluded_minor(const ArrowPresentation& g, std::size_t n) {
  if (euler_genus(g) <= n) throw InvalidArgument("Euler genus is already at most n");
  GenusReducer r(g);
  r.contract_spanning_forest();
  while (true) {
    r.delete_two_sided_edges();
    const bool orientable = is_orientable(r.current());
    const std::size_t target = orientable ? (n % 2 == 1 ? n + 1 : n + 2) : n + 1;
    if (r.gamma() < target) throw InternalInvariantViolation("Euler genus fell below the family target");
    if (r.gamma() == target) break;
    if (orientable)
      r.drop_orientable();
    else if (r.gamma() - target >= 2 && r.has_orientable_positive())
      r.drop_orientable();
    else
      r.drop_nonorientable();
  }
  r.delete_isolated_vertices();
  if (!in_b_family(r.current(), n)) throw InternalInvariantViolation("genus reduction missed the excluded family");
  return r.script();
}

}  // namespace ribbonforge
