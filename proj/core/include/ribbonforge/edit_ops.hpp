#pragma once

#include <cstddef>
#include <string_view>

#include "ribbonforge/arrow_core.hpp"

namespace ribbonforge {

/// G - e. Throws UnknownLabel.
ArrowPresentation delete_edge(const ArrowPresentation& g, std::string_view label);

/// G / e. Contracting a loop may split its vertex. Throws UnknownLabel.
ArrowPresentation contract_edge(const ArrowPresentation& g, std::string_view label);

/// G - v: removes curve `vertex` and every edge with an arrow on it.
/// Throws UnknownVertex.
ArrowPresentation delete_vertex(const ArrowPresentation& g, std::size_t vertex);

/// G^e. Throws UnknownLabel.
ArrowPresentation partial_dual(const ArrowPresentation& g, std::string_view label);

/// G^A, formed one edge at a time. Throws UnknownLabel.
ArrowPresentation partial_dual(const ArrowPresentation& g, const LabelSet& a);

/// G* = G^{E(G)}.
ArrowPresentation geometric_dual(const ArrowPresentation& g);

}  // namespace ribbonforge
