#include "ribbonforge/enumeration.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

#include "ribbonforge/canonical.hpp"
#include "ribbonforge/errors.hpp"
#include "ribbonforge/surface.hpp"

namespace ribbonforge {

bool EnumerationFilter::accepts(const ArrowPresentation& g) const {
  if (g.edge_count() < min_edges || g.edge_count() > max_edges) return false;
  if (bouquets_only && g.vertex_count() != 1) return false;
  if (connected_only && component_partition(g).count() != 1) return false;
  if (orientable_only && !is_orientable(g)) return false;
  return true;
}

namespace {

using ClassMap = std::map<CanonicalKey, ArrowPresentation>;

std::string label_of(std::size_t i) { return "e" + std::to_string(i + 1); }

void integer_partitions(std::size_t total, std::size_t max_part, std::vector<std::size_t>& prefix,
                        std::vector<std::vector<std::size_t>>& out) {
  if (total == 0) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t part = std::min(total, max_part); part >= 1; --part) {
    prefix.push_back(part);
    integer_partitions(total - part, part, prefix, out);
    prefix.pop_back();
  }
}

// Label words of length 2n, each label twice, labels introduced in order.
void label_words(std::size_t n, std::vector<std::size_t>& word, std::vector<int>& uses, std::size_t introduced,
                 std::vector<std::vector<std::size_t>>& out) {
  if (word.size() == 2 * n) {
    out.push_back(word);
    return;
  }
  for (std::size_t l = 0; l < introduced; ++l) {
    if (uses[l] != 1) continue;
    uses[l] = 2;
    word.push_back(l);
    label_words(n, word, uses, introduced, out);
    word.pop_back();
    uses[l] = 1;
  }
  if (introduced < n) {
    uses[introduced] = 1;
    word.push_back(introduced);
    label_words(n, word, uses, introduced + 1, out);
    word.pop_back();
    uses[introduced] = 0;
  }
}

void insert_class(ClassMap& out, std::vector<Curve> raw, std::size_t n) {
  ArrowPresentation g = validate(std::move(raw));
  auto key = canonical_key(g, n);
  if (!out.contains(key)) {
    ArrowPresentation rep = decode_key(key);
    out.emplace(std::move(key), std::move(rep));
  }
}

ClassMap classes_by_slots(std::size_t n) {
  ClassMap out;
  if (n == 0) return out;
  std::vector<std::vector<std::size_t>> partitions, words;
  std::vector<std::size_t> prefix, word;
  std::vector<int> uses(n, 0);
  integer_partitions(2 * n, 2 * n, prefix, partitions);
  label_words(n, word, uses, 0, words);

  for (const auto& parts : partitions) {
    // the first arrow of every curve is read along (vertex flip)
    std::vector<bool> pinned(2 * n, false);
    for (std::size_t start = 0, i = 0; i < parts.size(); start += parts[i], ++i) pinned[start] = true;
    const std::size_t free_bits = 2 * n - parts.size();
    for (const auto& w : words) {
      for (std::size_t mask = 0; mask < (std::size_t{1} << free_bits); ++mask) {
        std::vector<Curve> raw;
        std::size_t bit = 0, pos = 0;
        for (std::size_t part : parts) {
          Curve curve;
          for (std::size_t i = 0; i < part; ++i, ++pos) {
            bool against = false;
            if (!pinned[pos]) against = (mask >> bit++) & 1U;
            curve.arrows.push_back({label_of(w[pos]), against ? Direction::Against : Direction::Along});
          }
          raw.push_back(std::move(curve));
        }
        insert_class(out, std::move(raw), n);
      }
    }
  }
  return out;
}

ClassMap augment(const ClassMap& previous, std::size_t n) {
  ClassMap out;
  const std::string x = "x_new";
  for (const auto& [key, base] : previous) {
    const auto& curves = base.curves();
    for (int dirs = 0; dirs < 4; ++dirs) {
      const Arrow a{x, (dirs & 1) ? Direction::Against : Direction::Along};
      const Arrow b{x, (dirs & 2) ? Direction::Against : Direction::Along};

      // both arrows on existing curves
      for (std::size_t c1 = 0; c1 < curves.size(); ++c1) {
        for (std::size_t g1 = 0; g1 < curves[c1].arrows.size(); ++g1) {
          std::vector<Curve> with_a = curves;
          with_a[c1].arrows.insert(with_a[c1].arrows.begin() + static_cast<std::ptrdiff_t>(g1), a);
          for (std::size_t c2 = 0; c2 < with_a.size(); ++c2) {
            for (std::size_t g2 = 0; g2 <= with_a[c2].arrows.size(); ++g2) {
              std::vector<Curve> raw = with_a;
              raw[c2].arrows.insert(raw[c2].arrows.begin() + static_cast<std::ptrdiff_t>(g2), b);
              insert_class(out, std::move(raw), n);
            }
          }
          // the other arrow alone on a new curve
          std::vector<Curve> raw = with_a;
          raw.push_back(Curve{{b}});
          insert_class(out, std::move(raw), n);
        }
      }
      // both arrows on new curves
      std::vector<Curve> one = curves;
      one.push_back(Curve{{a, b}});
      insert_class(out, std::move(one), n);
      std::vector<Curve> two = curves;
      two.push_back(Curve{{a}});
      two.push_back(Curve{{b}});
      insert_class(out, std::move(two), n);
    }
  }
  return out;
}

ArrowPresentation isolated_vertex() { return validate({Curve{}}); }

}  // namespace

void enumerate_all(const EnumerationFilter& filter, const std::function<void(const ArrowPresentation&)>& visit,
                   EnumerationStrategy strategy, std::size_t cap) {
  if (filter.max_edges > cap) throw SizeBoundExceeded("enumeration edges", filter.max_edges, cap);
  if (filter.min_edges == 0 && filter.accepts(isolated_vertex())) visit(isolated_vertex());

  ClassMap layer;
  layer.emplace(canonical_key(ArrowPresentation{}), ArrowPresentation{});
  for (std::size_t n = 1; n <= filter.max_edges; ++n) {
    if (strategy == EnumerationStrategy::EdgeAugmentation) {
      layer = augment(layer, n);
    } else if (n >= filter.min_edges) {
      layer = classes_by_slots(n);
    } else {
      continue;
    }
    if (n < filter.min_edges) continue;
    for (const auto& [key, g] : layer)
      if (filter.accepts(g)) visit(g);
  }
}

std::vector<ArrowPresentation> enumerate_all(const EnumerationFilter& filter, EnumerationStrategy strategy,
                                             std::size_t cap) {
  std::vector<ArrowPresentation> out;
  enumerate_all(filter, [&](const ArrowPresentation& g) { out.push_back(g); }, strategy, cap);
  return out;
}

ArrowPresentation random_ribbon_graph(std::size_t n, std::uint64_t seed) {
  if (n > 32) throw SizeBoundExceeded("random_ribbon_graph edges", n, 32);
  std::mt19937_64 rng(seed);
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < n; ++i) {
    arrows.push_back({label_of(i), Direction::Along});
    arrows.push_back({label_of(i), Direction::Along});
  }
  std::shuffle(arrows.begin(), arrows.end(), rng);
  std::bernoulli_distribution coin(0.5);
  std::vector<Curve> raw;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (coin(rng)) arrows[i].direction = Direction::Against;
    if (i == 0 || coin(rng)) raw.emplace_back();
    raw.back().arrows.push_back(arrows[i]);
  }
  return validate(std::move(raw));
}

}  // namespace ribbonforge
