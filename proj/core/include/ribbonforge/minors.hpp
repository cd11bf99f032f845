#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ribbonforge/arrow_core.hpp"
#include "ribbonforge/canonical.hpp"

namespace ribbonforge {

enum class MinorOp { DeleteEdge, ContractEdge, DeleteVertex };

std::string_view to_string(MinorOp op) noexcept;

struct MinorStep {
  MinorOp op = MinorOp::DeleteEdge;
  std::string label;       // edge steps
  std::size_t vertex = 0;  // DeleteVertex: curve index at the time of the step

  static MinorStep delete_edge(std::string label) { return {MinorOp::DeleteEdge, std::move(label), 0}; }
  static MinorStep contract_edge(std::string label) { return {MinorOp::ContractEdge, std::move(label), 0}; }
  static MinorStep delete_vertex(std::size_t v) { return {MinorOp::DeleteVertex, {}, v}; }

  friend bool operator==(const MinorStep&, const MinorStep&) = default;
};

struct MinorScript {
  std::vector<MinorStep> steps;

  bool empty() const noexcept { return steps.empty(); }
  std::size_t size() const noexcept { return steps.size(); }
  friend bool operator==(const MinorScript&, const MinorScript&) = default;
};

/// Applies one step. Vertex deletions must target an isolated vertex
/// (InvalidScript otherwise).
ArrowPresentation apply_step(const ArrowPresentation& g, const MinorStep& step);

ArrowPresentation replay(const MinorScript& script, const ArrowPresentation& g);

/// Records minor steps while applying them to a working copy.
class ScriptBuilder {
 public:
  explicit ScriptBuilder(ArrowPresentation start) : current_(std::move(start)) {}

  void apply(const MinorStep& step);
  void delete_edge(const std::string& label) { apply(MinorStep::delete_edge(label)); }
  void contract_edge(const std::string& label) { apply(MinorStep::contract_edge(label)); }
  /// Deletes every isolated vertex, one step each.
  void delete_isolated_vertices();
  void append(const MinorScript& script) {
    for (const auto& step : script.steps) apply(step);
  }

  const ArrowPresentation& current() const noexcept { return current_; }
  const MinorScript& script() const noexcept { return script_; }

 private:
  ArrowPresentation current_;
  MinorScript script_;
};

struct SearchLimits {
  std::size_t max_edges = kDefaultMaxEdges;
  std::size_t max_states = 1'000'000;
  /// Worker threads for frontier expansion; 0 picks hardware concurrency.
  std::size_t threads = 0;
  /// Disabling loop contraction gives the weaker relation under which the
  /// B_{2k+1} family is an antichain.
  bool contract_loops = true;
  /// Prune states whose Euler genus or orientability rules out the target.
  /// Off gives a blind search, for checking those invariants themselves.
  bool surface_pruning = true;
};

// --- fixed ribbon graphs ----------------------------------------------------

/// Bouquet on e1..en meeting the vertex in the order
/// e2 e1 e3 e2 ... en e(n-1) e1 en, all arrows along; B(1) = "e1 e1".
ArrowPresentation build_B(std::size_t n);

/// The one-edge non-orientable bouquet "a a'".
ArrowPresentation build_Bbar1();

/// The toroidal theta graph, B(3)^{e1}.
ArrowPresentation build_theta_t();

// --- minor search -------------------------------------------------------------

struct OneStepMinor {
  ArrowPresentation minor;
  MinorStep step;
};

/// Every result of one edge deletion, one edge contraction, or one
/// isolated-vertex deletion, deduplicated up to equivalence (first
/// occurrence in step order kept).
std::vector<OneStepMinor> one_step_minors(const ArrowPresentation& g, std::size_t max_edges = kDefaultMaxEdges);

/// Breadth-first search for a minor of `g` equivalent to `h`. Returns a
/// replay-verified script, or nullopt. Throws SizeBoundExceeded when
/// |E(g)| > limits.max_edges or the state budget runs out.
std::optional<MinorScript> has_minor(const ArrowPresentation& g, const ArrowPresentation& h,
                                     const SearchLimits& limits = {});

/// Contracts e_n, e_(n-1), e_(n-2), ... in pairs, taking B(n) to B(3).
/// Each intermediate is checked against B(m). Requires odd n >= 5.
MinorScript contraction_chain_Bn(std::size_t n);

enum class ExcludedPattern { Bbar1, B3, ThetaT };

std::string_view to_string(ExcludedPattern p) noexcept;
ArrowPresentation build_pattern(ExcludedPattern p);

struct PatternHit {
  ExcludedPattern pattern;
  MinorScript script;
};

/// Script to a B̄1 minor via a cycle of odd twist parity, or nullopt when
/// g is orientable.
std::optional<MinorScript> bbar1_certificate(const ArrowPresentation& g);

/// Which of B̄1, B3, θ_t occur as minors, each with a script.
std::vector<PatternHit> excluded_minor_scan(const ArrowPresentation& g, const SearchLimits& limits = {});

// --- Euler genus --------------------------------------------------------------

/// Membership in the excluded family for Euler genus <= n: every component
/// is a bouquet with at least one edge and one boundary component; the
/// Euler genus is n+1 for odd n; for even n it is n+2 when orientable and
/// n+1 otherwise.
bool in_b_family(const ArrowPresentation& g, std::size_t n);

/// All classes with at most `max_edges` edges in that family.
std::vector<ArrowPresentation> b_family_members(std::size_t n, std::size_t max_edges);

/// Lowers the Euler genus to `target` (or target-1 when only orientable
/// components remain and the gap is odd): contracts a spanning forest,
/// deletes edges whose free sides lie on distinct boundary walks, then
/// deletes one edge at a time from one-boundary bouquets. Requires
/// euler_genus(g) > target. Throws ClaimViolation if a non-orientable
/// one-boundary bouquet has no boundary-preserving deletion.
MinorScript extract_genus_minor(const ArrowPresentation& g, std::size_t target);

/// Script to a minor of g lying in the family of in_b_family(., n).
/// Requires euler_genus(g) > n.
MinorScript genus_excluded_minor(const ArrowPresentation& g, std::size_t n);

/// An edge of a one-boundary bouquet whose deletion keeps the boundary
/// count, if any.
std::optional<std::string> boundary_preserving_edge(const ArrowPresentation& bouquet);

}  // namespace ribbonforge
