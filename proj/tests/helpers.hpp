#pragma once

#include <string>

#include "ribbonforge/arp_format.hpp"
#include "ribbonforge/canonical.hpp"
#include "ribbonforge/edit_ops.hpp"
#include "ribbonforge/enumeration.hpp"
#include "ribbonforge/minors.hpp"

namespace testing_support {

// "a b a b / c c" -> two curves
inline ribbonforge::ArrowPresentation arp(std::string text) {
  for (auto& c : text)
    if (c == '/') c = '\n';
  return ribbonforge::parse_arp(text);
}

inline std::vector<ribbonforge::ArrowPresentation> classes_up_to(std::size_t max_edges, bool connected = false) {
  ribbonforge::EnumerationFilter f;
  f.max_edges = max_edges;
  f.connected_only = connected;
  return ribbonforge::enumerate_all(f);
}

// (V(G), A): every vertex kept, only the edges in A.
inline ribbonforge::ArrowPresentation spanning_subgraph(ribbonforge::ArrowPresentation g,
                                                        const ribbonforge::LabelSet& a) {
  for (const auto& label : g.labels())
    if (!a.contains(label)) g = ribbonforge::delete_edge(g, label);
  return g;
}

}  // namespace testing_support
