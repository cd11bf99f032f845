#include "ribbonforge/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ribbonforge/errors.hpp"

namespace ribbonforge {

namespace {

// Node numbering: arrow endpoints get consecutive ids, 2 per arrow.
struct EndIndex {
  std::vector<std::size_t> first_of_curve;  // id of (curve, 0, tail)
  std::vector<ArrowEnd> ends;

  explicit EndIndex(const ArrowPresentation& g) {
    std::size_t next = 0;
    for (std::size_t c = 0; c < g.vertex_count(); ++c) {
      first_of_curve.push_back(next);
      for (std::size_t p = 0; p < g.curves()[c].arrows.size(); ++p) {
        ends.push_back({{c, p}, false});
        ends.push_back({{c, p}, true});
        next += 2;
      }
    }
  }
  std::size_t id(const ArrowEnd& e) const {
    return first_of_curve[e.slot.curve] + 2 * e.slot.position + (e.head ? 1 : 0);
  }
};

// Endpoint reached first / last when reading the arrow in curve order.
ArrowEnd start_end(const ArrowPresentation& g, ArrowSlot s) {
  return {s, g.at(s).direction == Direction::Against};
}
ArrowEnd finish_end(const ArrowPresentation& g, ArrowSlot s) {
  return {s, g.at(s).direction == Direction::Along};
}

}  // namespace

std::size_t BoundaryWalks::walk_of(const ArrowEnd& end) const {
  for (std::size_t w = 0; w < walks.size(); ++w)
    if (std::find(walks[w].begin(), walks[w].end(), end) != walks[w].end()) return w;
  throw InternalInvariantViolation("arrow end not on any boundary walk");
}

BoundaryWalks boundary_components(const ArrowPresentation& g) {
  const EndIndex index(g);
  const std::size_t n = index.ends.size();
  // Every node has exactly one plain-arc neighbour and one free-side neighbour.
  std::vector<std::size_t> arc(n), side(n);
  for (std::size_t c = 0; c < g.vertex_count(); ++c) {
    const std::size_t len = g.curves()[c].arrows.size();
    for (std::size_t p = 0; p < len; ++p) {
      const std::size_t a = index.id(finish_end(g, {c, p}));
      const std::size_t b = index.id(start_end(g, {c, (p + 1) % len}));
      arc[a] = b;
      arc[b] = a;
    }
  }
  for (const auto& label : g.labels()) {
    auto [x, y] = g.slots(label);
    const std::size_t hx = index.id({x, true}), tx = index.id({x, false});
    const std::size_t hy = index.id({y, true}), ty = index.id({y, false});
    side[hx] = ty;
    side[ty] = hx;
    side[hy] = tx;
    side[tx] = hy;
  }

  BoundaryWalks out;
  std::vector<bool> seen(n, false);
  for (std::size_t start_node = 0; start_node < n; ++start_node) {
    if (seen[start_node]) continue;
    std::vector<ArrowEnd> walk;
    std::size_t node = start_node;
    do {
      const std::size_t across = arc[node];
      seen[node] = seen[across] = true;
      walk.push_back(index.ends[node]);
      walk.push_back(index.ends[across]);
      node = side[across];
    } while (node != start_node);
    out.walks.push_back(std::move(walk));
  }
  for (const auto& curve : g.curves())
    if (curve.arrows.empty()) out.walks.emplace_back();
  return out;
}

std::pair<std::size_t, std::size_t> free_side_walks(const ArrowPresentation& g, const BoundaryWalks& walks,
                                                    std::string_view label) {
  auto [a, b] = g.slots(label);
  return {walks.walk_of({a, true}), walks.walk_of({b, true})};
}

bool is_twisted(const ArrowPresentation& g, std::string_view label) {
  auto [a, b] = g.slots(label);
  return g.at(a).direction != g.at(b).direction;
}

bool is_orientable(const ArrowPresentation& g) {
  // parity union-find: parity[x] is the flip of x relative to its root
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> parent(n);
  std::vector<int> parity(n, 0);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    int p = 0;
    while (parent[x] != x) {
      p ^= parity[x];
      x = parent[x];
    }
    return std::pair{x, p};
  };
  for (const auto& label : g.labels()) {
    auto [a, b] = g.slots(label);
    const int twist = is_twisted(g, label) ? 1 : 0;
    auto [ra, pa] = find(a.curve);
    auto [rb, pb] = find(b.curve);
    if (ra == rb) {
      if ((pa ^ pb) != twist) return false;
    } else {
      parent[ra] = rb;
      parity[ra] = pa ^ pb ^ twist;
    }
  }
  return true;
}

SurfaceSummary surface_summary(const ArrowPresentation& g) {
  SurfaceSummary s;
  s.v = g.vertex_count();
  s.e = g.edge_count();
  s.f = boundary_components(g).count();
  s.k = component_partition(g).count();
  s.orientable = is_orientable(g);
  const long long gamma = 2 * static_cast<long long>(s.k) - static_cast<long long>(s.v) +
                          static_cast<long long>(s.e) - static_cast<long long>(s.f);
  if (gamma < 0) throw InternalInvariantViolation("negative Euler genus");
  s.euler_genus = static_cast<std::size_t>(gamma);
  if (s.orientable) {
    if (s.euler_genus % 2 != 0) throw InternalInvariantViolation("orientable surface with odd Euler genus");
    s.genus = s.euler_genus / 2;
  } else {
    s.genus = s.euler_genus;
  }
  return s;
}

std::size_t euler_genus(const ArrowPresentation& g) { return surface_summary(g).euler_genus; }

bool is_plane(const ArrowPresentation& g) { return euler_genus(g) == 0; }

}  // namespace ribbonforge
