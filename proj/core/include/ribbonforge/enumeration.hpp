#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "ribbonforge/arrow_core.hpp"

namespace ribbonforge {

inline constexpr std::size_t kEnumerationCap = 5;

/// Selects ribbon graphs by size and shape. The universe at e >= 1 edges
/// is graphs without isolated vertices; at e = 0 it is the single
/// isolated vertex.
struct EnumerationFilter {
  std::size_t max_edges = 3;
  std::size_t min_edges = 0;
  bool connected_only = false;
  bool orientable_only = false;
  bool bouquets_only = false;  // exactly one vertex

  bool accepts(const ArrowPresentation& g) const;
};

enum class EnumerationStrategy {
  /// Arrow slots distributed over curves of every size profile, then
  /// deduplicated.
  SlotDistribution,
  /// Every class on n edges obtained by adding one edge, in every
  /// position and direction, to the classes on n-1 edges.
  EdgeAugmentation,
};

/// One canonical representative per equivalence class passing the filter,
/// ordered by edge count then canonical key. Throws SizeBoundExceeded when
/// filter.max_edges > cap.
std::vector<ArrowPresentation> enumerate_all(const EnumerationFilter& filter,
                                             EnumerationStrategy strategy = EnumerationStrategy::SlotDistribution,
                                             std::size_t cap = kEnumerationCap);

void enumerate_all(const EnumerationFilter& filter, const std::function<void(const ArrowPresentation&)>& visit,
                   EnumerationStrategy strategy = EnumerationStrategy::SlotDistribution,
                   std::size_t cap = kEnumerationCap);

/// Random presentation on n edges (labels e1..en): a uniformly random
/// arrangement of the 2n arrows, directions and curve breaks. Uniform over
/// raw configurations, not over equivalence classes. Deterministic in
/// (n, seed). Requires n <= 32.
ArrowPresentation random_ribbon_graph(std::size_t n, std::uint64_t seed);

}  // namespace ribbonforge
