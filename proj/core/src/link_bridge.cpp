#include "ribbonforge/link_bridge.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "ribbonforge/canonical.hpp"
#include "ribbonforge/edit_ops.hpp"
#include "ribbonforge/errors.hpp"
#include "ribbonforge/surface.hpp"

namespace ribbonforge {

// --- PD codes -------------------------------------------------------------------

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

Crossing make_crossing(const std::vector<std::string>& tokens, std::size_t line) {
  if (tokens.size() != 4)
    throw ParseError("crossing needs 4 strands, got " + std::to_string(tokens.size()), line);
  Crossing c;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!is_valid_label(tokens[i])) throw ParseError("bad strand label '" + tokens[i] + "'", line);
    c.strands[i] = tokens[i];
  }
  return c;
}

}  // namespace

PDCode parse_pd(std::string_view text) {
  PDCode pd;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.find('(') != std::string::npos) {
      std::size_t pos = 0;
      while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == ',')) ++pos;
        if (pos >= line.size()) break;
        if (line[pos] != 'X') throw ParseError("expected 'X(' at column " + std::to_string(pos + 1), line_no);
        ++pos;
        while (pos < line.size() && line[pos] == ' ') ++pos;
        if (pos >= line.size() || line[pos] != '(') throw ParseError("expected '(' after X", line_no);
        const auto close = line.find(')', pos);
        if (close == std::string::npos) throw ParseError("unterminated crossing", line_no);
        std::vector<std::string> tokens;
        std::istringstream fields(line.substr(pos + 1, close - pos - 1));
        std::string field;
        while (std::getline(fields, field, ',')) tokens.push_back(trim(field));
        pd.crossings.push_back(make_crossing(tokens, line_no));
        pos = close + 1;
      }
    } else {
      std::istringstream words(line);
      std::string head;
      words >> head;
      if (head != "X") throw ParseError("expected 'X', got '" + head + "'", line_no);
      std::vector<std::string> tokens;
      for (std::string w; words >> w;) tokens.push_back(w);
      pd.crossings.push_back(make_crossing(tokens, line_no));
    }
  }
  std::map<std::string, std::size_t> uses;
  for (const auto& c : pd.crossings)
    for (const auto& s : c.strands) ++uses[s];
  for (const auto& [s, n] : uses)
    if (n != 2) throw StrandCountError(s, n);
  return pd;
}

ArrowPresentation all_A_ribbon_graph(const PDCode& diagram, Smoothing smoothing) {
  struct Pos {
    std::size_t crossing;
    std::size_t index;
    bool operator==(const Pos&) const = default;
  };
  std::map<std::string, std::vector<Pos>> occurrences;
  for (std::size_t i = 0; i < diagram.crossings.size(); ++i)
    for (std::size_t p = 0; p < 4; ++p) occurrences[diagram.crossings[i].strands[p]].push_back({i, p});
  for (const auto& [s, where] : occurrences)
    if (where.size() != 2) throw StrandCountError(s, where.size());

  const bool a_state = smoothing == Smoothing::A;
  auto partner = [&](std::size_t p) -> std::size_t {
    static constexpr std::size_t kA[4] = {1, 0, 3, 2};
    static constexpr std::size_t kB[4] = {3, 2, 1, 0};
    return a_state ? kA[p] : kB[p];
  };
  // counterclockwise arcs: A runs 0->1 and 2->3, B runs 3->0 and 1->2
  auto along = [&](std::size_t from) {
    return a_state ? (from == 0 || from == 2) : (from == 3 || from == 1);
  };

  std::vector<std::array<bool, 4>> used(diagram.crossings.size(), {false, false, false, false});
  std::vector<Curve> curves;
  for (std::size_t i = 0; i < diagram.crossings.size(); ++i) {
    for (std::size_t p = 0; p < 4; ++p) {
      if (used[i][p]) continue;
      Curve curve;
      Pos cur{i, p};
      do {
        const std::size_t q = partner(cur.index);
        used[cur.crossing][cur.index] = used[cur.crossing][q] = true;
        curve.arrows.push_back(
            {std::to_string(cur.crossing + 1), along(cur.index) ? Direction::Along : Direction::Against});
        const Pos exit{cur.crossing, q};
        const auto& where = occurrences.at(diagram.crossings[cur.crossing].strands[q]);
        cur = where[0] == exit ? where[1] : where[0];
      } while (!(cur == Pos{i, p}));
      curves.push_back(std::move(curve));
    }
  }
  ArrowPresentation g = validate(std::move(curves));
  if (!is_orientable(g)) throw OrientabilityViolation("state ribbon graph of a link diagram is not orientable");
  return g;
}

// --- intersection graphs --------------------------------------------------------------

std::size_t IntersectionGraph::index_of(std::string_view label) const {
  const auto it = std::lower_bound(vertices.begin(), vertices.end(), label);
  if (it == vertices.end() || *it != label) throw UnknownLabel(std::string(label));
  return static_cast<std::size_t>(it - vertices.begin());
}

bool IntersectionGraph::adjacent(std::string_view a, std::string_view b) const {
  return adjacency[index_of(a)][index_of(b)];
}

std::vector<std::pair<std::string, std::string>> IntersectionGraph::edges() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacency[i][j]) out.emplace_back(vertices[i], vertices[j]);
  return out;
}

IntersectionGraph intersection_graph(const ArrowPresentation& bouquet) {
  if (bouquet.vertex_count() != 1) throw NotABouquet(bouquet.vertex_count());
  IntersectionGraph ig;
  ig.vertices = bouquet.labels();
  const std::size_t n = ig.vertices.size();
  ig.adjacency.assign(n, std::vector<bool>(n, false));
  std::vector<std::pair<std::size_t, std::size_t>> span(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto [s, t] = bouquet.slots(ig.vertices[i]);
    span[i] = {s.position, t.position};
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto inside = [&](std::size_t p) { return span[i].first < p && p < span[i].second; };
      const bool cross = inside(span[j].first) != inside(span[j].second);
      ig.adjacency[i][j] = ig.adjacency[j][i] = cross;
    }
  }
  return ig;
}

std::optional<std::vector<int>> two_colouring(const IntersectionGraph& graph) {
  const std::size_t n = graph.vertices.size();
  std::vector<int> colour(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t w = 0; w < n; ++w) {
        if (!graph.adjacency[u][w]) continue;
        if (colour[w] == -1) {
          colour[w] = 1 - colour[u];
          queue.push_back(w);
        } else if (colour[w] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

std::optional<std::vector<std::string>> minimal_odd_cycle(const IntersectionGraph& graph) {
  const std::size_t n = graph.vertices.size();
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::size_t best_len = kUnseen;
  std::vector<std::size_t> best;

  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> dist(n, kUnseen), parent(n, kUnseen);
    dist[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t w = 0; w < n; ++w) {
        if (!graph.adjacency[u][w]) continue;
        if (dist[w] == kUnseen) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (dist[w] == dist[u] && u < w) {
          const std::size_t len = 2 * dist[u] + 1;
          if (len >= best_len) continue;
          // s .. u then w .. back to s
          std::vector<std::size_t> left, right;
          for (std::size_t x = u; x != kUnseen; x = parent[x]) left.push_back(x);
          for (std::size_t x = w; x != kUnseen; x = parent[x]) right.push_back(x);
          std::reverse(left.begin(), left.end());
          right.pop_back();  // s
          std::vector<std::size_t> cycle = left;
          cycle.insert(cycle.end(), right.begin(), right.end());
          std::vector<std::size_t> sorted = cycle;
          std::sort(sorted.begin(), sorted.end());
          if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
          best_len = len;
          best = std::move(cycle);
        }
      }
    }
  }
  if (best.empty()) return std::nullopt;

  for (std::size_t i = 0; i < best.size(); ++i)
    for (std::size_t j = i + 2; j < best.size(); ++j) {
      if (i == 0 && j + 1 == best.size()) continue;
      if (graph.adjacency[best[i]][best[j]])
        throw InternalInvariantViolation("shortest odd cycle has a chord");
    }
  std::vector<std::string> out;
  for (std::size_t v : best) out.push_back(graph.vertices[v]);
  return out;
}

// --- plane-biseparations ----------------------------------------------------------------

namespace {

// Edge classes at a vertex: two edges at the vertex share a class when they
// lead into the same component of G - vertex; every loop is its own class.
std::map<std::string, std::size_t> classes_at(const ArrowPresentation& g, std::size_t vertex) {
  if (vertex >= g.vertex_count()) throw UnknownVertex(vertex);
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  const Multigraph m = underlying_multigraph(g);
  const auto incidence = m.incidence();

  std::vector<std::size_t> comp(m.vertex_count, kNone);
  std::size_t next = 0;
  for (std::size_t s = 0; s < m.vertex_count; ++s) {
    if (s == vertex || comp[s] != kNone) continue;
    comp[s] = next;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t ei : incidence[u]) {
        const auto& e = m.edges[ei];
        const std::size_t w = e.u == u ? e.v : e.u;
        if (w == vertex || comp[w] != kNone) continue;
        comp[w] = next;
        queue.push_back(w);
      }
    }
    ++next;
  }

  std::map<std::string, std::size_t> out;
  for (std::size_t ei : incidence[vertex]) {
    const auto& e = m.edges[ei];
    out[e.label] = e.is_loop() ? next++ : comp[e.u == vertex ? e.v : e.u];
  }
  return out;
}

}  // namespace

bool is_separating_vertex(const ArrowPresentation& g, std::size_t vertex) {
  std::set<std::size_t> distinct;
  for (const auto& [label, cls] : classes_at(g, vertex)) distinct.insert(cls);
  return distinct.size() >= 2;
}

bool separates_sides(const ArrowPresentation& g, std::size_t vertex, const LabelSet& a) {
  std::map<std::size_t, unsigned> sides;
  for (const auto& [label, cls] : classes_at(g, vertex)) sides[cls] |= a.contains(label) ? 1U : 2U;
  bool in_a = false, in_rest = false;
  for (const auto& [cls, side] : sides) {
    if (side == 3U) return false;
    (side == 1U ? in_a : in_rest) = true;
  }
  return in_a && in_rest;
}

bool defines_plane_biseparation(const ArrowPresentation& g, const LabelSet& a, SeparationReading reading) {
  for (const auto& label : a)
    if (!g.has_label(label)) throw UnknownLabel(label);
  const LabelSet rest = complement(g, a);
  if (euler_genus(restriction(g, a)) != 0 || euler_genus(restriction(g, rest)) != 0) return false;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    bool in_a = false, in_rest = false;
    for (const auto& arrow : g.curves()[v].arrows) (a.contains(arrow.label) ? in_a : in_rest) = true;
    if (!in_a || !in_rest) continue;
    const bool ok = reading == SeparationReading::SplitsSides ? separates_sides(g, v, a) : is_separating_vertex(g, v);
    if (!ok) return false;
  }
  return true;
}

// --- representability --------------------------------------------------------------------

namespace {

// The operation in G that mirrors `op` applied in G^A to an edge of A.
void pulled_back(ScriptBuilder& b, MinorOp op, const std::string& label, const LabelSet& a) {
  const bool swap = a.contains(label);
  if ((op == MinorOp::DeleteEdge) != swap)
    b.delete_edge(label);
  else
    b.contract_edge(label);
}

std::optional<ExcludedPattern> matches_b3_or_theta(const ArrowPresentation& g) {
  if (g.edge_count() != 3) return std::nullopt;
  if (equivalent(g, build_B(3), 3)) return ExcludedPattern::B3;
  if (equivalent(g, build_theta_t(), 3)) return ExcludedPattern::ThetaT;
  return std::nullopt;
}

// Certificate from an odd cycle C of the intersection graph of G^T.
std::pair<MinorScript, ExcludedPattern> odd_cycle_certificate(const ArrowPresentation& g, const LabelSet& tree,
                                                             const std::vector<std::string>& cycle,
                                                             const SearchLimits& limits) {
  const LabelSet in_cycle(cycle.begin(), cycle.end());
  ScriptBuilder b(g);
  // G^T loses every edge outside C; in G that is a contraction for tree edges
  for (const auto& label : g.labels()) {
    if (in_cycle.contains(label)) continue;
    pulled_back(b, MinorOp::DeleteEdge, label, tree);
  }
  b.delete_isolated_vertices();

  LabelSet a;
  for (const auto& label : cycle)
    if (tree.contains(label)) a.insert(label);

  const std::size_t n = cycle.size();
  if (n == 3) {
    if (auto p = matches_b3_or_theta(b.current())) return {b.script(), *p};
  } else {
    // try each identification of C with e1..en of B_n
    const MinorScript chain = contraction_chain_Bn(n);
    for (int reflect = 0; reflect < 2; ++reflect) {
      for (std::size_t r = 0; r < n; ++r) {
        auto image = [&](const std::string& e) {
          const std::size_t i = std::stoul(e.substr(1)) - 1;
          const std::size_t idx = reflect ? (r + n - i % n) % n : (r + i) % n;
          return cycle[idx];
        };
        ScriptBuilder trial = b;
        for (const auto& step : chain.steps) pulled_back(trial, step.op, image(step.label), a);
        if (auto p = matches_b3_or_theta(trial.current())) return {trial.script(), *p};
      }
    }
  }

  // fall back to search on the reduced graph
  for (ExcludedPattern p : {ExcludedPattern::B3, ExcludedPattern::ThetaT}) {
    if (auto script = has_minor(b.current(), build_pattern(p), limits)) {
      ScriptBuilder full = b;
      full.append(*script);
      return {full.script(), p};
    }
  }
  throw InternalInvariantViolation("odd interlacement cycle gave no B3 or theta_t minor");
}

}  // namespace

Verdict represents_link(const ArrowPresentation& g, const RepresentOptions& options) {
  Verdict verdict;
  if (!is_orientable(g)) {
    if (options.extract_certificate) {
      verdict.certificate = bbar1_certificate(g);
      verdict.certificate_pattern = ExcludedPattern::Bbar1;
    }
    return verdict;
  }

  const LabelSet tree = spanning_forest(g);
  const ArrowPresentation b = partial_dual(g, tree);
  const ComponentPartition parts = component_partition(b);
  if (b.vertex_count() != parts.count())
    throw InternalInvariantViolation("partial dual of a spanning forest is not a union of bouquets");

  LabelSet chosen;
  for (std::size_t c = 0; c < parts.count(); ++c) {
    const ArrowPresentation bouquet = sub_presentation(b, parts.curves[c]);
    const IntersectionGraph ig = intersection_graph(bouquet);
    const auto colour = two_colouring(ig);
    if (!colour) {
      verdict.odd_cycle = minimal_odd_cycle(ig);
      if (!verdict.odd_cycle) throw InternalInvariantViolation("non-bipartite graph without odd cycle");
      if (options.extract_certificate) {
        auto [script, pattern] = odd_cycle_certificate(g, tree, *verdict.odd_cycle, options.limits);
        verdict.certificate = std::move(script);
        verdict.certificate_pattern = pattern;
      }
      return verdict;
    }
    for (std::size_t i = 0; i < ig.vertices.size(); ++i)
      if ((*colour)[i] == 0) chosen.insert(ig.vertices[i]);
  }

  LabelSet witness = symmetric_difference(tree, chosen);
  if (euler_genus(partial_dual(g, witness)) != 0)
    throw InternalInvariantViolation("bipartite interlacement gave a non-plane partial dual");
  verdict.representable = true;
  verdict.witness = std::move(witness);
  return verdict;
}

std::optional<LabelSet> brute_force_plane_dual(const ArrowPresentation& g, std::size_t max_edges) {
  const std::vector<std::string> labels = g.labels();
  const std::size_t m = labels.size();
  if (m > max_edges) throw SizeBoundExceeded("brute_force_plane_dual edges", m, max_edges);

  using Candidate = std::vector<std::string>;
  auto subset = [&](std::size_t mask) {
    Candidate out;
    for (std::size_t i = 0; i < m; ++i)
      if ((mask >> i) & 1U) out.push_back(labels[i]);
    return out;
  };
  const std::size_t total = std::size_t{1} << m;
  const std::size_t workers = m >= 8 ? std::max<std::size_t>(1, std::thread::hardware_concurrency()) : 1;

  std::vector<std::optional<Candidate>> best(workers);
  auto scan = [&](std::size_t w) {
    for (std::size_t mask = w; mask < total; mask += workers) {
      Candidate c = subset(mask);
      if (best[w] && !(c < *best[w])) continue;
      if (euler_genus(partial_dual(g, LabelSet(c.begin(), c.end()))) == 0) best[w] = std::move(c);
    }
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(scan, w);
  }

  std::optional<Candidate> winner;
  for (auto& c : best)
    if (c && (!winner || *c < *winner)) winner = std::move(c);
  if (!winner) return std::nullopt;
  return LabelSet(winner->begin(), winner->end());
}

}  // namespace ribbonforge
