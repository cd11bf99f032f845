#pragma once

#include <cstddef>
#include <vector>

#include "ribbonforge/arrow_core.hpp"

namespace ribbonforge {

/// One endpoint of an arrow on the surface boundary.
struct ArrowEnd {
  ArrowSlot slot;
  bool head = false;

  friend auto operator<=>(const ArrowEnd&, const ArrowEnd&) = default;
};

/// Boundary of the ribbon graph as a 1-manifold. Nodes are arrow
/// endpoints; each walk lists the endpoints of one boundary circle in
/// order. A curve with no arrows contributes an empty walk.
struct BoundaryWalks {
  std::vector<std::vector<ArrowEnd>> walks;

  std::size_t count() const noexcept { return walks.size(); }
  /// Index of the walk containing `end`.
  std::size_t walk_of(const ArrowEnd& end) const;
};

BoundaryWalks boundary_components(const ArrowPresentation& g);

/// For an edge, the walk indices of its two free sides
/// {head(a), tail(b)} and {head(b), tail(a)}.
std::pair<std::size_t, std::size_t> free_side_walks(const ArrowPresentation& g, const BoundaryWalks& walks,
                                                    std::string_view label);

/// An edge is twisted when its two arrows have opposite directions.
bool is_twisted(const ArrowPresentation& g, std::string_view label);

bool is_orientable(const ArrowPresentation& g);

struct SurfaceSummary {
  std::size_t v = 0;
  std::size_t e = 0;
  std::size_t f = 0;
  std::size_t k = 0;
  std::size_t euler_genus = 0;
  std::size_t genus = 0;
  bool orientable = true;

  friend bool operator==(const SurfaceSummary&, const SurfaceSummary&) = default;
};

/// Throws InternalInvariantViolation if Euler's formula yields a negative
/// or parity-inconsistent Euler genus.
SurfaceSummary surface_summary(const ArrowPresentation& g);

std::size_t euler_genus(const ArrowPresentation& g);

bool is_plane(const ArrowPresentation& g);

}  // namespace ribbonforge
