#include "ribbonforge/edit_ops.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "ribbonforge/errors.hpp"

namespace ribbonforge {

namespace {

// Endpoints of the two arrows a (first slot) and b (second slot).
enum End : std::size_t { HeadA = 0, TailA = 1, HeadB = 2, TailB = 3 };

struct Segment {
  End from;
  End to;
  std::vector<Arrow> arrows;  // in curve order, from -> to
};

End start_of(bool along, bool is_a) {
  if (is_a) return along ? TailA : HeadA;
  return along ? TailB : HeadB;
}
End finish_of(bool along, bool is_a) {
  if (is_a) return along ? HeadA : TailA;
  return along ? HeadB : TailB;
}

// Shared by contraction and partial duality: the curves carrying the two
// e-arrows are cut at those arrows and the remaining arcs reconnected by
// segments head(a)-tail(b) and head(b)-tail(a). For partial duality the
// segments carry e-arrows pointing from head(a) to tail(b) and from
// head(b) to tail(a). Each resulting cycle becomes a curve, read in the
// direction it is traced.
ArrowPresentation splice(const ArrowPresentation& g, std::string_view label, bool keep_edge) {
  const auto [sa, sb] = g.slots(label);
  const auto& curves = g.curves();
  const bool along_a = g.at(sa).direction == Direction::Along;
  const bool along_b = g.at(sb).direction == Direction::Along;

  auto collect = [&](std::size_t curve, std::size_t after, std::size_t before) {
    // arrows strictly between positions `after` and `before`, cyclically
    std::vector<Arrow> out;
    const auto& arrows = curves[curve].arrows;
    const std::size_t n = arrows.size();
    for (std::size_t p = (after + 1) % n; p != before; p = (p + 1) % n) out.push_back(arrows[p]);
    return out;
  };

  std::array<Segment, 2> segs;
  if (sa.curve == sb.curve) {
    segs[0] = {finish_of(along_a, true), start_of(along_b, false), collect(sa.curve, sa.position, sb.position)};
    segs[1] = {finish_of(along_b, false), start_of(along_a, true), collect(sa.curve, sb.position, sa.position)};
  } else {
    segs[0] = {finish_of(along_a, true), start_of(along_a, true), collect(sa.curve, sa.position, sa.position)};
    segs[1] = {finish_of(along_b, false), start_of(along_b, false), collect(sb.curve, sb.position, sb.position)};
  }

  constexpr std::array<End, 4> across = {TailB, HeadB, TailA, HeadA};  // connector partner
  std::array<std::pair<std::size_t, bool>, 4> seg_at{};                // (segment, is_from)
  for (std::size_t s = 0; s < 2; ++s) {
    seg_at[segs[s].from] = {s, true};
    seg_at[segs[s].to] = {s, false};
  }

  std::vector<Curve> traced;
  std::array<bool, 2> used{false, false};
  for (std::size_t s0 = 0; s0 < 2; ++s0) {
    if (used[s0]) continue;
    Curve curve;
    std::size_t s = s0;
    bool forward = true;
    while (true) {
      used[s] = true;
      const auto& seg = segs[s];
      if (forward) {
        curve.arrows.insert(curve.arrows.end(), seg.arrows.begin(), seg.arrows.end());
      } else {
        for (auto it = seg.arrows.rbegin(); it != seg.arrows.rend(); ++it)
          curve.arrows.push_back({it->label, flip(it->direction)});
      }
      const End exit = forward ? seg.to : seg.from;
      const End enter = across[exit];
      if (keep_edge) {
        const bool from_head = (exit == HeadA || exit == HeadB);
        curve.arrows.push_back({std::string(label), from_head ? Direction::Along : Direction::Against});
      }
      const auto [next, is_from] = seg_at[enter];
      if (next == s0 && is_from) break;
      s = next;
      forward = is_from;
    }
    traced.push_back(std::move(curve));
  }

  std::vector<Curve> raw;
  const std::size_t first = std::min(sa.curve, sb.curve);
  for (std::size_t c = 0; c < curves.size(); ++c) {
    if (c == first) raw.insert(raw.end(), traced.begin(), traced.end());
    if (c == sa.curve || c == sb.curve) continue;
    raw.push_back(curves[c]);
  }
  return validate(std::move(raw));
}

}  // namespace

ArrowPresentation delete_edge(const ArrowPresentation& g, std::string_view label) {
  if (!g.has_label(label)) throw UnknownLabel(std::string(label));
  std::vector<Curve> raw = g.curves();
  for (auto& curve : raw)
    std::erase_if(curve.arrows, [&](const Arrow& a) { return a.label == label; });
  return validate(std::move(raw));
}

ArrowPresentation contract_edge(const ArrowPresentation& g, std::string_view label) {
  return splice(g, label, false);
}

ArrowPresentation delete_vertex(const ArrowPresentation& g, std::size_t vertex) {
  if (vertex >= g.vertex_count()) throw UnknownVertex(vertex);
  LabelSet doomed;
  for (const auto& arrow : g.curves()[vertex].arrows) doomed.insert(arrow.label);
  std::vector<Curve> raw;
  for (std::size_t c = 0; c < g.vertex_count(); ++c) {
    if (c == vertex) continue;
    Curve kept = g.curves()[c];
    std::erase_if(kept.arrows, [&](const Arrow& a) { return doomed.contains(a.label); });
    raw.push_back(std::move(kept));
  }
  return validate(std::move(raw));
}

ArrowPresentation partial_dual(const ArrowPresentation& g, std::string_view label) {
  return splice(g, label, true);
}

ArrowPresentation partial_dual(const ArrowPresentation& g, const LabelSet& a) {
  for (const auto& label : a)
    if (!g.has_label(label)) throw UnknownLabel(label);
  ArrowPresentation out = g;
  for (const auto& label : a) out = splice(out, label, true);
  return out;
}

ArrowPresentation geometric_dual(const ArrowPresentation& g) { return partial_dual(g, g.label_set()); }

}  // namespace ribbonforge
