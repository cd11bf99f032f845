#pragma once
// Slow, independent reference implementations used only by the tests.

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "ribbonforge/arrow_core.hpp"

namespace oracle {

using ribbonforge::ArrowPresentation;
using ribbonforge::Curve;
using ribbonforge::Direction;

// Relabels by first occurrence and renders curves as text.
inline std::string render(const std::vector<Curve>& curves) {
  std::map<std::string, int> number;
  std::string out;
  for (const auto& c : curves) {
    out += '(';
    for (const auto& a : c.arrows) {
      auto [it, fresh] = number.try_emplace(a.label, static_cast<int>(number.size()));
      out += std::to_string(it->second) + (a.direction == Direction::Along ? "+" : "-") + ' ';
    }
    out += ')';
  }
  return out;
}

inline Curve rotate_flip(const Curve& c, std::size_t r, bool reverse) {
  Curve out;
  const std::size_t n = c.arrows.size();
  for (std::size_t i = 0; i < n; ++i) {
    auto a = c.arrows[reverse ? (r + n - i) % n : (r + i) % n];
    if (reverse) a.direction = ribbonforge::flip(a.direction);
    out.arrows.push_back(a);
  }
  return out;
}

/// Minimum rendering over the whole group: every curve order, rotation,
/// reversal, and every choice of edge-disc orientations. Exponential; keep
/// to a handful of edges.
inline std::string brute_key(const ArrowPresentation& g) {
  const auto& curves = g.curves();
  const auto labels = g.labels();
  const std::size_t k = curves.size();
  std::string best;
  bool have = false;
  for (std::size_t flips = 0; flips < (std::size_t{1} << labels.size()); ++flips) {
    std::vector<Curve> base = curves;
    for (auto& c : base)
      for (auto& a : c.arrows) {
        const auto idx = static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), a.label) - labels.begin());
        if ((flips >> idx) & 1U) a.direction = ribbonforge::flip(a.direction);
      }
    // per-curve choices enumerated as a mixed-radix counter
    std::vector<std::size_t> radix(k);
    for (std::size_t c = 0; c < k; ++c) radix[c] = std::max<std::size_t>(1, 2 * base[c].arrows.size());
    std::vector<std::size_t> choice(k, 0);
    while (true) {
      std::vector<Curve> moved(k);
      for (std::size_t c = 0; c < k; ++c) {
        const std::size_t n = std::max<std::size_t>(1, base[c].arrows.size());
        moved[c] = base[c].arrows.empty() ? base[c] : rotate_flip(base[c], choice[c] % n, choice[c] / n == 1);
      }
      std::vector<std::size_t> perm(k);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        std::vector<Curve> ordered;
        for (std::size_t p : perm) ordered.push_back(moved[p]);
        std::string r = render(ordered);
        if (!have || r < best) {
          best = std::move(r);
          have = true;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      std::size_t i = 0;
      while (i < k && ++choice[i] == radix[i]) choice[i++] = 0;
      if (i == k) break;
    }
  }
  return best;
}

/// Applies a random element of the equivalence group.
inline ArrowPresentation random_group_action(const ArrowPresentation& g, std::mt19937_64& rng) {
  std::vector<Curve> curves = g.curves();
  std::map<std::string, bool> flip_edge;
  std::map<std::string, std::string> rename;
  auto labels = g.labels();
  std::vector<std::string> fresh;
  for (std::size_t i = 0; i < labels.size(); ++i) fresh.push_back("r" + std::to_string(i));
  std::shuffle(fresh.begin(), fresh.end(), rng);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    rename[labels[i]] = fresh[i];
    flip_edge[labels[i]] = rng() & 1U;
  }
  for (auto& c : curves) {
    for (auto& a : c.arrows) {
      if (flip_edge[a.label]) a.direction = ribbonforge::flip(a.direction);
      a.label = rename[a.label];
    }
    if (!c.arrows.empty()) c = rotate_flip(c, rng() % c.arrows.size(), rng() & 1U);
  }
  std::shuffle(curves.begin(), curves.end(), rng);
  return ribbonforge::validate(std::move(curves));
}

/// Number of boundary components by face tracing on the signed rotation
/// system: half-edges are arrows, rotation is reading order, an edge has
/// sign -1 when its two arrows point opposite ways. Every face is traced
/// once in each direction, and each arrow-free curve is one face.
inline std::size_t face_count(const ArrowPresentation& g) {
  struct Half {
    std::size_t curve, pos;
  };
  std::vector<Half> halves;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  const auto& curves = g.curves();
  std::size_t empty = 0;
  for (std::size_t c = 0; c < curves.size(); ++c) {
    if (curves[c].arrows.empty()) ++empty;
    for (std::size_t p = 0; p < curves[c].arrows.size(); ++p) {
      index[{c, p}] = halves.size();
      halves.push_back({c, p});
    }
  }
  std::vector<std::size_t> other(halves.size());
  std::vector<int> sign(halves.size());
  for (const auto& label : g.labels()) {
    auto [a, b] = g.slots(label);
    const std::size_t x = index[{a.curve, a.position}], y = index[{b.curve, b.position}];
    other[x] = y;
    other[y] = x;
    sign[x] = sign[y] = g.at(a).direction == g.at(b).direction ? 1 : -1;
  }
  auto step = [&](std::size_t h, int s) {
    const std::size_t n = curves[halves[h].curve].arrows.size();
    const std::size_t p = halves[h].pos;
    const std::size_t q = s > 0 ? (p + 1) % n : (p + n - 1) % n;
    return index[{halves[h].curve, q}];
  };
  std::vector<std::array<bool, 2>> seen(halves.size(), {false, false});
  std::size_t orbits = 0;
  for (std::size_t h0 = 0; h0 < halves.size(); ++h0) {
    for (int s0 : {1, -1}) {
      if (seen[h0][s0 > 0]) continue;
      ++orbits;
      std::size_t h = h0;
      int s = s0;
      while (!seen[h][s > 0]) {
        seen[h][s > 0] = true;
        const std::size_t t = other[h];
        s *= sign[h];
        h = step(t, s);
      }
    }
  }
  return orbits / 2 + empty;
}

}  // namespace oracle
