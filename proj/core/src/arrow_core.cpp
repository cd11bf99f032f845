#include "ribbonforge/arrow_core.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "ribbonforge/errors.hpp"

namespace ribbonforge {

namespace {

void rotate_to_least(std::vector<Arrow>& arrows) {
  const std::size_t n = arrows.size();
  if (n < 2) return;
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      const Arrow& a = arrows[(r + i) % n];
      const Arrow& b = arrows[(best + i) % n];
      if (a < b) {
        best = r;
        break;
      }
      if (b < a) break;
    }
  }
  std::rotate(arrows.begin(), arrows.begin() + static_cast<std::ptrdiff_t>(best), arrows.end());
}

Arrow parse_token(std::string_view token) {
  Arrow arrow;
  if (!token.empty() && token.back() == '\'') {
    arrow.direction = Direction::Against;
    token.remove_suffix(1);
  }
  arrow.label = std::string(token);
  return arrow;
}

}  // namespace

bool is_valid_label(std::string_view label) noexcept {
  if (label.empty()) return false;
  return std::all_of(label.begin(), label.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

ArrowPresentation validate(std::vector<Curve> raw) {
  std::map<std::string, std::vector<ArrowSlot>, std::less<>> seen;
  for (auto& curve : raw) rotate_to_least(curve.arrows);
  for (std::size_t c = 0; c < raw.size(); ++c) {
    const auto& arrows = raw[c].arrows;
    for (std::size_t p = 0; p < arrows.size(); ++p) {
      const std::string& label = arrows[p].label;
      if (label.empty()) throw EmptyLabelError();
      if (!is_valid_label(label)) throw LabelSyntaxError(label);
      seen[label].push_back({c, p});
    }
  }
  ArrowPresentation out;
  out.edges_.reserve(seen.size());
  for (auto& [label, where] : seen) {
    if (where.size() != 2) throw LabelCountError(label, where.size());
    out.edges_.push_back({label, where[0], where[1]});
  }
  out.curves_ = std::move(raw);
  return out;
}

const ArrowPresentation::EdgeEntry* ArrowPresentation::find(std::string_view label) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), label,
                             [](const EdgeEntry& e, std::string_view l) { return e.label < l; });
  if (it == edges_.end() || it->label != label) return nullptr;
  return &*it;
}

std::vector<std::string> ArrowPresentation::labels() const {
  std::vector<std::string> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back(e.label);
  return out;
}

LabelSet ArrowPresentation::label_set() const {
  LabelSet out;
  for (const auto& e : edges_) out.insert(out.end(), e.label);
  return out;
}

bool ArrowPresentation::has_label(std::string_view label) const { return find(label) != nullptr; }

std::pair<ArrowSlot, ArrowSlot> ArrowPresentation::slots(std::string_view label) const {
  const EdgeEntry* e = find(label);
  if (e == nullptr) throw UnknownLabel(std::string(label));
  return {e->first, e->second};
}

std::vector<std::size_t> ArrowPresentation::isolated_vertices() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < curves_.size(); ++c)
    if (curves_[c].arrows.empty()) out.push_back(c);
  return out;
}

ArrowPresentation make_presentation(const std::vector<std::vector<std::string>>& curves) {
  std::vector<Curve> raw;
  raw.reserve(curves.size());
  for (const auto& tokens : curves) {
    Curve curve;
    for (const auto& t : tokens) curve.arrows.push_back(parse_token(t));
    raw.push_back(std::move(curve));
  }
  return validate(std::move(raw));
}

ArrowPresentation disjoint_union(const ArrowPresentation& a, const ArrowPresentation& b) {
  std::vector<Curve> raw = a.curves();
  raw.insert(raw.end(), b.curves().begin(), b.curves().end());
  return validate(std::move(raw));
}

ArrowPresentation with_label_prefix(const ArrowPresentation& g, std::string_view prefix) {
  std::vector<Curve> raw = g.curves();
  for (auto& curve : raw)
    for (auto& arrow : curve.arrows) arrow.label.insert(0, prefix);
  return validate(std::move(raw));
}

std::vector<std::vector<std::size_t>> Multigraph::incidence() const {
  std::vector<std::vector<std::size_t>> out(vertex_count);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out[edges[i].u].push_back(i);
    if (!edges[i].is_loop()) out[edges[i].v].push_back(i);
  }
  return out;
}

Multigraph underlying_multigraph(const ArrowPresentation& g) {
  Multigraph m;
  m.vertex_count = g.vertex_count();
  for (const auto& label : g.labels()) {
    auto [a, b] = g.slots(label);
    m.edges.push_back({label, a.curve, b.curve});
  }
  return m;
}

ComponentPartition component_partition(const ArrowPresentation& g) {
  const Multigraph m = underlying_multigraph(g);
  std::vector<std::size_t> parent(m.vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : m.edges) {
    std::size_t ru = root(e.u), rv = root(e.v);
    if (ru != rv) parent[std::max(ru, rv)] = std::min(ru, rv);
  }
  ComponentPartition out;
  out.component_of_curve.assign(m.vertex_count, 0);
  std::map<std::size_t, std::size_t> index_of_root;
  for (std::size_t c = 0; c < m.vertex_count; ++c) {
    auto [it, inserted] = index_of_root.try_emplace(root(c), out.curves.size());
    if (inserted) {
      out.curves.emplace_back();
      out.labels.emplace_back();
    }
    out.component_of_curve[c] = it->second;
    out.curves[it->second].push_back(c);
  }
  for (const auto& e : m.edges) out.labels[out.component_of_curve[e.u]].insert(e.label);
  return out;
}

ArrowPresentation sub_presentation(const ArrowPresentation& g, const std::vector<std::size_t>& curves) {
  std::vector<Curve> raw;
  raw.reserve(curves.size());
  for (std::size_t c : curves) {
    if (c >= g.vertex_count()) throw UnknownVertex(c);
    raw.push_back(g.curves()[c]);
  }
  return validate(std::move(raw));
}

std::vector<ArrowPresentation> components(const ArrowPresentation& g) {
  const ComponentPartition parts = component_partition(g);
  std::vector<ArrowPresentation> out;
  out.reserve(parts.count());
  for (const auto& curves : parts.curves) out.push_back(sub_presentation(g, curves));
  return out;
}

ArrowPresentation restriction(const ArrowPresentation& g, const LabelSet& a) {
  for (const auto& label : a)
    if (!g.has_label(label)) throw UnknownLabel(label);
  std::vector<Curve> raw;
  for (const auto& curve : g.curves()) {
    Curve kept;
    for (const auto& arrow : curve.arrows)
      if (a.contains(arrow.label)) kept.arrows.push_back(arrow);
    if (!kept.arrows.empty()) raw.push_back(std::move(kept));
  }
  return validate(std::move(raw));
}

LabelSet complement(const ArrowPresentation& g, const LabelSet& a) {
  LabelSet out;
  for (const auto& label : g.labels())
    if (!a.contains(label)) out.insert(label);
  return out;
}

namespace {

void bfs_tree_from(const Multigraph& m, const std::vector<std::vector<std::size_t>>& inc,
                   std::size_t root, std::vector<bool>& visited, LabelSet& tree) {
  std::deque<std::size_t> queue{root};
  visited[root] = true;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    // incidence lists are in edge order, which is label order
    for (std::size_t ei : inc[u]) {
      const auto& e = m.edges[ei];
      const std::size_t w = e.u == u ? e.v : e.u;
      if (visited[w]) continue;
      visited[w] = true;
      tree.insert(e.label);
      queue.push_back(w);
    }
  }
}

}  // namespace

LabelSet spanning_tree(const ArrowPresentation& g) {
  if (component_partition(g).count() > 1) throw NotConnected();
  return spanning_forest(g);
}

LabelSet spanning_forest(const ArrowPresentation& g) {
  const Multigraph m = underlying_multigraph(g);
  const auto inc = m.incidence();
  std::vector<bool> visited(m.vertex_count, false);
  LabelSet tree;
  for (std::size_t c = 0; c < m.vertex_count; ++c)
    if (!visited[c]) bfs_tree_from(m, inc, c, visited, tree);
  return tree;
}

LabelSet symmetric_difference(const LabelSet& a, const LabelSet& b) {
  LabelSet out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::inserter(out, out.end()));
  return out;
}

}  // namespace ribbonforge
