#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ribbonforge/arrow_core.hpp"
#include "ribbonforge/minors.hpp"

namespace ribbonforge {

// --- link diagrams --------------------------------------------------------------

/// One crossing: strand labels counterclockwise, starting with the
/// incoming under-strand.
struct Crossing {
  std::array<std::string, 4> strands;
};

struct PDCode {
  std::vector<Crossing> crossings;
};

/// Accepts `X(a,b,c,d)` groups (any number per line) or lines `X a b c d`.
/// Lines starting with `#` are comments; no crossings gives the empty
/// diagram. Throws ParseError, StrandCountError.
PDCode parse_pd(std::string_view text);

enum class Smoothing { A, B };

/// Ribbon graph of the all-A (or all-B) state. Crossing i (1-based) becomes
/// edge "i"; A joins strands (a,b) and (c,d), B joins (a,d) and (b,c). Both
/// arrows of a crossing point counterclockwise around it. Throws
/// OrientabilityViolation if the result is not orientable.
ArrowPresentation all_A_ribbon_graph(const PDCode& diagram, Smoothing smoothing = Smoothing::A);

// --- bouquets ----------------------------------------------------------------------

struct IntersectionGraph {
  std::vector<std::string> vertices;  // sorted labels
  std::vector<std::vector<bool>> adjacency;

  std::size_t index_of(std::string_view label) const;
  bool adjacent(std::string_view a, std::string_view b) const;
  /// Adjacent pairs (i < j) by vertex index.
  std::vector<std::pair<std::string, std::string>> edges() const;
};

/// e ~ f iff their ends alternate e f e f around the vertex. Throws
/// NotABouquet.
IntersectionGraph intersection_graph(const ArrowPresentation& bouquet);

/// A proper 2-colouring: colour 0 holds the smallest label of every
/// connected component. nullopt when not bipartite.
std::optional<std::vector<int>> two_colouring(const IntersectionGraph& graph);

/// A shortest odd cycle (chordless), as labels in cycle order.
std::optional<std::vector<std::string>> minimal_odd_cycle(const IntersectionGraph& graph);

// --- plane-biseparations -----------------------------------------------------------

/// Whether the edges of the vertex's component split into two nonempty
/// classes meeting only at the vertex (each loop is its own class).
bool is_separating_vertex(const ArrowPresentation& g, std::size_t vertex);

/// Whether such a split exists with every edge of A at the vertex on one
/// side and every other edge at the vertex on the other.
bool separates_sides(const ArrowPresentation& g, std::size_t vertex, const LabelSet& a);

enum class SeparationReading {
  /// G|_A and G|_{A^c} meet only at vertices that separate them.
  SplitsSides,
  /// Shared vertices need only be separating vertices of G in some way.
  /// Accepts subsets with non-plane partial duals (e.g. loops at a shared
  /// vertex always make it separating); kept for comparison.
  AnySeparation,
};

/// Every component of G|_A and G|_{A^c} is plane, and every vertex with
/// arrows from both sides is separating. Throws UnknownLabel.
bool defines_plane_biseparation(const ArrowPresentation& g, const LabelSet& a,
                                SeparationReading reading = SeparationReading::SplitsSides);

// --- representability -------------------------------------------------------------

struct Verdict {
  bool representable = false;
  /// A with euler_genus(G^A) == 0
  std::optional<LabelSet> witness;
  std::optional<MinorScript> certificate;
  std::optional<ExcludedPattern> certificate_pattern;
  /// odd cycle of the intersection graph of G^T
  std::optional<std::vector<std::string>> odd_cycle;
};

struct RepresentOptions {
  bool extract_certificate = true;
  SearchLimits limits{};
};

/// Decides whether G is the ribbon graph of a link diagram. The decision
/// and witness are polynomial; certificate extraction may fall back to a
/// bounded minor search (SizeBoundExceeded).
Verdict represents_link(const ArrowPresentation& g, const RepresentOptions& options = {});

/// Lexicographically least A (as a sorted label list) with G^A plane, by
/// trying all subsets. Throws SizeBoundExceeded when |E| > max_edges.
std::optional<LabelSet> brute_force_plane_dual(const ArrowPresentation& g, std::size_t max_edges = 12);

}  // namespace ribbonforge
