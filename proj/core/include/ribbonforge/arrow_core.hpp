#pragma once

// Ribbon graphs as arrow presentations: closed curves (vertex boundaries)
// carrying labelled, directed arrows, each label on exactly two arrows.

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ribbonforge {

enum class Direction : unsigned char { Along, Against };

constexpr Direction flip(Direction d) noexcept {
  return d == Direction::Along ? Direction::Against : Direction::Along;
}

struct Arrow {
  std::string label;
  Direction direction = Direction::Along;

  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

/// A vertex boundary. The arrow sequence is cyclic; an empty curve is an
/// isolated vertex.
struct Curve {
  std::vector<Arrow> arrows;

  friend auto operator<=>(const Curve&, const Curve&) = default;
};

/// Position of one arrow: curve index and index within that curve.
struct ArrowSlot {
  std::size_t curve = 0;
  std::size_t position = 0;

  friend auto operator<=>(const ArrowSlot&, const ArrowSlot&) = default;
};

using LabelSet = std::set<std::string>;

/// A validated arrow presentation. Immutable; construct through validate().
class ArrowPresentation {
 public:
  ArrowPresentation() = default;

  const std::vector<Curve>& curves() const noexcept { return curves_; }
  std::size_t vertex_count() const noexcept { return curves_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return curves_.empty(); }

  /// Edge labels in lexicographic order.
  std::vector<std::string> labels() const;
  LabelSet label_set() const;
  bool has_label(std::string_view label) const;

  /// The two arrows of `label`, in reading order (curve, then position).
  /// Throws UnknownLabel.
  std::pair<ArrowSlot, ArrowSlot> slots(std::string_view label) const;

  const Arrow& at(ArrowSlot slot) const { return curves_[slot.curve].arrows[slot.position]; }

  /// Indices of curves with no arrows.
  std::vector<std::size_t> isolated_vertices() const;

  friend bool operator==(const ArrowPresentation& a, const ArrowPresentation& b) {
    return a.curves_ == b.curves_;
  }

 private:
  friend ArrowPresentation validate(std::vector<Curve> raw);

  struct EdgeEntry {
    std::string label;
    ArrowSlot first;
    ArrowSlot second;
  };
  const EdgeEntry* find(std::string_view label) const;

  std::vector<Curve> curves_;
  std::vector<EdgeEntry> edges_;  // sorted by label
};

/// Checks that every label is a nonempty [A-Za-z0-9_] token appearing on
/// exactly two arrows, and rotates each curve to its lexicographically
/// least rotation. Throws LabelCountError, EmptyLabelError,
/// LabelSyntaxError.
ArrowPresentation validate(std::vector<Curve> raw);

bool is_valid_label(std::string_view label) noexcept;

/// Convenience builder: each inner vector is one curve, tokens as in the
/// .arp format (`x` along, `x'` against).
ArrowPresentation make_presentation(const std::vector<std::vector<std::string>>& curves);

/// Disjoint union. Labels must not collide (LabelCountError otherwise).
ArrowPresentation disjoint_union(const ArrowPresentation& a, const ArrowPresentation& b);

/// Copy of `g` with every label prefixed; used to build disjoint unions of
/// copies of one graph.
ArrowPresentation with_label_prefix(const ArrowPresentation& g, std::string_view prefix);

// --- underlying multigraph ------------------------------------------------

struct Multigraph {
  struct Edge {
    std::string label;
    std::size_t u = 0;
    std::size_t v = 0;
    bool is_loop() const noexcept { return u == v; }
  };
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;  // sorted by label

  /// Edge indices incident to each vertex (a loop is listed once).
  std::vector<std::vector<std::size_t>> incidence() const;
};

Multigraph underlying_multigraph(const ArrowPresentation& g);

struct ComponentPartition {
  /// component index of every curve
  std::vector<std::size_t> component_of_curve;
  /// curve indices of each component, ascending; components ordered by
  /// their smallest curve index
  std::vector<std::vector<std::size_t>> curves;
  std::vector<LabelSet> labels;

  std::size_t count() const noexcept { return curves.size(); }
};

ComponentPartition component_partition(const ArrowPresentation& g);

/// Connected components, each as its own presentation.
std::vector<ArrowPresentation> components(const ArrowPresentation& g);

/// Presentation made of the given curves only (their arrows must pair up
/// among themselves).
ArrowPresentation sub_presentation(const ArrowPresentation& g, const std::vector<std::size_t>& curves);

/// G|_A: edges in A and the curves they touch. Throws UnknownLabel.
ArrowPresentation restriction(const ArrowPresentation& g, const LabelSet& a);

/// Complement of `a` in E(g).
LabelSet complement(const ArrowPresentation& g, const LabelSet& a);

/// Deterministic BFS spanning tree from curve 0, scanning incident edges in
/// label order. Throws NotConnected.
LabelSet spanning_tree(const ArrowPresentation& g);

/// Union of per-component spanning trees (same rule within each
/// component, rooted at its smallest curve).
LabelSet spanning_forest(const ArrowPresentation& g);

LabelSet symmetric_difference(const LabelSet& a, const LabelSet& b);

}  // namespace ribbonforge
