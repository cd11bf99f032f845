#pragma once

#include <compare>
#include <cstddef>
#include <string>

#include "ribbonforge/arrow_core.hpp"

namespace ribbonforge {

inline constexpr std::size_t kDefaultMaxEdges = 8;

/// Minimal encoding of a presentation over the equivalence group generated
/// by curve permutation, curve rotation, curve reversal with direction
/// flip, reversal of both arrows of one label (reorienting an edge disc),
/// and relabelling.
struct CanonicalKey {
  std::string encoding;

  std::string hex() const;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const noexcept {
    return std::hash<std::string>{}(k.encoding);
  }
};

/// Throws SizeBoundExceeded when edge_count() > max_edges.
CanonicalKey canonical_key(const ArrowPresentation& g, std::size_t max_edges = kDefaultMaxEdges);

/// The presentation a key encodes, with labels e1, e2, ... in order of
/// first occurrence.
ArrowPresentation decode_key(const CanonicalKey& key);

/// decode_key(canonical_key(g)).
ArrowPresentation canonical_form(const ArrowPresentation& g, std::size_t max_edges = kDefaultMaxEdges);

bool equivalent(const ArrowPresentation& g, const ArrowPresentation& h,
                std::size_t max_edges = kDefaultMaxEdges);

}  // namespace ribbonforge
