#include "ribbonforge/acceptance.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "ribbonforge/arp_format.hpp"
#include "ribbonforge/canonical.hpp"
#include "ribbonforge/edit_ops.hpp"
#include "ribbonforge/enumeration.hpp"
#include "ribbonforge/errors.hpp"
#include "ribbonforge/link_bridge.hpp"
#include "ribbonforge/minors.hpp"
#include "ribbonforge/surface.hpp"

namespace ribbonforge::acceptance {

namespace {

std::vector<ArrowPresentation> universe(std::size_t max_edges, bool connected = false) {
  EnumerationFilter f;
  f.max_edges = max_edges;
  f.connected_only = connected;
  return enumerate_all(f);
}

std::vector<LabelSet> all_subsets(const ArrowPresentation& g) {
  const auto labels = g.labels();
  std::vector<LabelSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << labels.size()); ++mask) {
    LabelSet a;
    for (std::size_t i = 0; i < labels.size(); ++i)
      if ((mask >> i) & 1U) a.insert(labels[i]);
    out.push_back(std::move(a));
  }
  return out;
}

std::string show_set(const LabelSet& a) {
  std::string s = "{";
  for (const auto& l : a) s += (s.size() > 1 ? "," : "") + l;
  return s + "}";
}

std::string show_graph(const ArrowPresentation& g) {
  std::string s = to_arp(g);
  for (auto& c : s)
    if (c == '\n') c = '/';
  if (!s.empty() && s.back() == '/') s.pop_back();
  return "[" + s + "]";
}

// Counts failures and keeps the first few descriptions.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_++ < 3) examples_ += (examples_.empty() ? "" : "; ") + what;
  }
  std::size_t checks() const { return checks_; }
  std::size_t failures() const { return failures_; }
  std::string summary(const std::string& noun) const {
    std::ostringstream out;
    out << failures_ << " mismatches over " << checks_ << " " << noun;
    if (failures_ != 0) out << " (first: " << examples_ << ")";
    return out.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string examples_;
};

struct Outcome {
  bool passed;
  std::string detail;
};

Outcome plane_biseparation_characterization() {
  Tally tally, literal;
  for (const auto& g : universe(4, true)) {
    for (const auto& a : all_subsets(g)) {
      const bool plane = euler_genus(partial_dual(g, a)) == 0;
      tally.check(defines_plane_biseparation(g, a) == plane, show_graph(g) + " A=" + show_set(a));
      literal.check(defines_plane_biseparation(g, a, SeparationReading::AnySeparation) == plane, "");
    }
  }
  return {tally.failures() == 0, tally.summary("(G,A) pairs") + "; reading shared vertices as merely separating: " +
                                     std::to_string(literal.failures()) + " mismatches"};
}

Outcome main_theorem_agreement() {
  Tally tally;
  std::size_t representable = 0;
  for (const auto& g : universe(4)) {
    const Verdict v = represents_link(g);
    const bool brute = brute_force_plane_dual(g).has_value();
    const auto hits = excluded_minor_scan(g);
    tally.check(v.representable == brute && brute == hits.empty(), show_graph(g));
    if (v.representable) {
      ++representable;
      tally.check(v.witness && euler_genus(partial_dual(g, *v.witness)) == 0, "witness " + show_graph(g));
    } else {
      tally.check(v.certificate && v.certificate_pattern &&
                      equivalent(replay(*v.certificate, g), build_pattern(*v.certificate_pattern)),
                  "certificate " + show_graph(g));
    }
    for (const auto& hit : hits)
      tally.check(equivalent(replay(hit.script, g), build_pattern(hit.pattern)), "scan script " + show_graph(g));
  }
  return {tally.failures() == 0,
          tally.summary("checks") + ", " + std::to_string(representable) + " representable classes"};
}

Outcome theta_b3_duality() {
  const auto b3 = build_B(3);
  const auto theta = build_theta_t();
  Tally tally;
  for (const auto& e : theta.labels())
    tally.check(equivalent(partial_dual(theta, e), b3), "theta^" + e + " is not B3");
  std::set<CanonicalKey> classes;
  for (const auto& a : all_subsets(b3)) classes.insert(canonical_key(partial_dual(b3, a)));
  const std::set<CanonicalKey> expected{canonical_key(b3), canonical_key(theta)};
  tally.check(classes == expected, std::to_string(classes.size()) + " partial-dual classes of B3");
  return {tally.failures() == 0, tally.summary("checks") + ", B3 has " + std::to_string(classes.size()) +
                                     " partial-dual classes"};
}

void identity_checks(const ArrowPresentation& g, std::mt19937_64& rng, bool exhaustive, Tally& tally) {
  const std::string name = show_graph(g);
  const auto summary = surface_summary(g);
  const auto labels = g.labels();

  for (const auto& e : labels) {
    const auto lhs = contract_edge(g, e);
    const auto rhs = delete_edge(partial_dual(g, e), e);
    surface_summary(lhs);
    tally.check(equivalent(lhs, rhs), "G/e != G^e-e " + name + " e=" + e);
  }
  tally.check(partial_dual(g, LabelSet{}) == g, "G^{} != G " + name);

  const auto star = geometric_dual(g);
  const auto star_summary = surface_summary(star);
  tally.check(star_summary.euler_genus == summary.euler_genus, "gamma(G*) " + name);
  tally.check(star_summary.v == summary.f && star_summary.f == summary.v, "v/f swap under G* " + name);

  std::vector<LabelSet> subsets;
  if (exhaustive) {
    subsets = all_subsets(g);
  } else {
    for (int i = 0; i < 4; ++i) {
      LabelSet a;
      for (const auto& l : labels)
        if (rng() & 1U) a.insert(l);
      subsets.push_back(std::move(a));
    }
  }
  for (const auto& a : subsets) {
    const auto ga = partial_dual(g, a);
    const auto sa = surface_summary(ga);
    tally.check(sa.orientable == summary.orientable, "orientability of G^A " + name + " A=" + show_set(a));
    for (const auto& b : subsets) {
      tally.check(equivalent(partial_dual(ga, b), partial_dual(g, symmetric_difference(a, b))),
                  "(G^A)^B " + name + " A=" + show_set(a) + " B=" + show_set(b));
    }
  }

  // random minor script down to nothing; genus never rises
  ArrowPresentation cur = g;
  SurfaceSummary before = summary;
  while (!cur.empty()) {
    MinorStep step;
    if (cur.edge_count() == 0) {
      step = MinorStep::delete_vertex(cur.isolated_vertices().front());
    } else {
      const auto ls = cur.labels();
      const auto& label = ls[rng() % ls.size()];
      step = (rng() & 1U) ? MinorStep::contract_edge(label) : MinorStep::delete_edge(label);
    }
    cur = apply_step(cur, step);
    const auto after = surface_summary(cur);
    tally.check(after.euler_genus <= before.euler_genus && after.genus <= before.genus,
                "genus rose along a minor step " + name);
    before = after;
  }
}

Outcome identity_suite() {
  Tally tally;
  std::mt19937_64 rng(20240611);
  for (const auto& g : universe(3)) identity_checks(g, rng, true, tally);
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto g = random_ribbon_graph(1 + seed % 6, seed);
    identity_checks(g, rng, false, tally);
  }
  return {tally.failures() == 0, std::to_string(tally.failures()) + " failures over " +
                                     std::to_string(tally.checks()) + " checks" +
                                     (tally.failures() ? " (" + tally.summary("checks") + ")" : "")};
}

Outcome bn_chain() {
  Tally tally;
  SearchLimits limits;
  limits.max_edges = 9;
  for (std::size_t n : {5U, 7U, 9U}) {
    const auto bn = build_B(n);
    const auto chain = contraction_chain_Bn(n);
    tally.check(chain.size() == n - 3, "chain length for n=" + std::to_string(n));
    tally.check(equivalent(replay(chain, bn), build_B(3)), "chain end for n=" + std::to_string(n));
    const auto found = has_minor(bn, build_B(3), limits);
    tally.check(found && equivalent(replay(*found, bn), build_B(3), limits.max_edges),
                "has_minor(B" + std::to_string(n) + ", B3)");
  }
  return {tally.failures() == 0, tally.summary("checks") + " for n in {5,7,9}"};
}

std::optional<std::size_t> fixture_circle_count(const std::string& text) {
  const std::string tag = "state_circles_A:";
  const auto at = text.find(tag);
  if (at == std::string::npos) return std::nullopt;
  return std::stoul(text.substr(at + tag.size()));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Outcome link_ingestion(const std::filesystem::path& data) {
  Tally tally;
  std::string counts;
  for (const char* name : {"trefoil", "figure_eight", "hopf"}) {
    const std::string text = read_file(data / (std::string(name) + ".pd"));
    const auto g = all_A_ribbon_graph(parse_pd(text));
    tally.check(is_orientable(g), std::string(name) + " not orientable");
    const auto v = represents_link(g);
    tally.check(v.representable && v.witness && euler_genus(partial_dual(g, *v.witness)) == 0,
                std::string(name) + " witness");
    const auto expected = fixture_circle_count(text);
    tally.check(expected && *expected == g.vertex_count(), std::string(name) + " state circles");
    counts += std::string(counts.empty() ? "" : ", ") + name + " " + std::to_string(g.vertex_count());
  }
  return {tally.failures() == 0, tally.summary("checks") + "; state circles: " + counts};
}

Outcome orientability_characterization() {
  Tally tally;
  SearchLimits blind;
  blind.surface_pruning = false;
  const auto bbar1 = build_Bbar1();
  for (const auto& g : universe(3)) {
    const bool has = has_minor(g, bbar1, blind).has_value();
    tally.check(is_orientable(g) == !has, show_graph(g));
  }
  return {tally.failures() == 0, tally.summary("graphs") + " (unpruned search)"};
}

Outcome genus_excluded_minors() {
  Tally tally;
  SearchLimits blind;
  blind.surface_pruning = false;
  const auto graphs = universe(3);
  std::string sizes;
  for (std::size_t n = 0; n <= 2; ++n) {
    const auto members = b_family_members(n, 3);
    sizes += (sizes.empty() ? "" : ",") + std::to_string(members.size());
    for (const auto& g : graphs) {
      bool has = false;
      for (const auto& m : members) {
        if (m.edge_count() > g.edge_count()) continue;
        if (has_minor(g, m, blind)) {
          has = true;
          break;
        }
      }
      const bool low = euler_genus(g) <= n;
      tally.check(low == !has, "n=" + std::to_string(n) + " " + show_graph(g));
      if (!low) {
        const auto script = genus_excluded_minor(g, n);
        tally.check(in_b_family(replay(script, g), n), "reduction n=" + std::to_string(n) + " " + show_graph(g));
      }
    }
  }
  return {tally.failures() == 0, tally.summary("checks") + "; family sizes " + sizes};
}

Outcome claim_check() {
  Tally tally;
  EnumerationFilter f;
  f.max_edges = 4;
  f.min_edges = 1;
  f.bouquets_only = true;
  std::size_t relevant = 0;
  for (const auto& g : enumerate_all(f)) {
    if (is_orientable(g) || boundary_components(g).count() != 1) continue;
    ++relevant;
    const auto edge = boundary_preserving_edge(g);
    tally.check(edge.has_value(), show_graph(g));
    if (edge) {
      const auto h = delete_edge(g, *edge);
      tally.check(boundary_components(h).count() == 1 && euler_genus(h) + 1 == euler_genus(g),
                  "deletion " + show_graph(g));
    }
    try {
      for (std::size_t target = 0; target < euler_genus(g); ++target) extract_genus_minor(g, target);
    } catch (const ClaimViolation& e) {
      tally.check(false, std::string("claim violated on ") + show_graph(g));
    }
  }
  return {tally.failures() == 0, tally.summary("checks") + " on " + std::to_string(relevant) +
                                     " one-boundary non-orientable bouquets"};
}

Outcome enumeration_integrity(const std::filesystem::path& data) {
  Tally tally;
  std::string counts;
  for (std::size_t n = 0; n <= 3; ++n) {
    EnumerationFilter f;
    f.max_edges = n;
    f.min_edges = n;
    std::set<CanonicalKey> slots, augmented;
    for (const auto& g : enumerate_all(f, EnumerationStrategy::SlotDistribution)) slots.insert(canonical_key(g));
    for (const auto& g : enumerate_all(f, EnumerationStrategy::EdgeAugmentation))
      augmented.insert(canonical_key(g));
    tally.check(slots == augmented, "generators differ at n=" + std::to_string(n));
    counts += (counts.empty() ? "" : ",") + std::to_string(slots.size());
  }

  const auto g = parse_arp(read_file(data / "figure4.arp"));
  std::set<LabelSet> found;
  for (const auto& a : all_subsets(g))
    if (defines_plane_biseparation(g, a)) found.insert(a);
  const std::set<LabelSet> expected{
      {"1", "6", "7"}, {"2", "6", "7"}, {"2", "3", "4", "5", "8"}, {"1", "3", "4", "5", "8"}};
  tally.check(found == expected, "figure 4 fixture gave " + std::to_string(found.size()) + " subsets");
  for (const auto& a : expected) tally.check(euler_genus(partial_dual(g, a)) == 0, "figure 4 " + show_set(a));
  return {tally.failures() == 0, tally.summary("checks") + "; classes per edge count 0..3: " + counts +
                                     "; figure 4 subsets found: " + std::to_string(found.size())};
}

struct Criterion {
  int id;
  const char* title;
  double budget;
  std::function<Outcome(const Options&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "plane-biseparation characterization, connected, <=4 edges", 300,
       [](const Options&) { return plane_biseparation_characterization(); }},
      {2, "representability, partial-dual search and excluded minors agree, <=4 edges", 900,
       [](const Options&) { return main_theorem_agreement(); }},
      {3, "theta_t and B3 are each other's only partial duals", 1,
       [](const Options&) { return theta_b3_duality(); }},
      {4, "identity suite, exhaustive <=3 edges and 1000 random <=6 edges", 120,
       [](const Options&) { return identity_suite(); }},
      {5, "B_n contraction chain to B3, n in {5,7,9}", 60, [](const Options&) { return bn_chain(); }},
      {6, "link diagram ingestion", 1, [](const Options& o) { return link_ingestion(o.data_dir); }},
      {7, "orientable iff no Mobius-bouquet minor, <=3 edges", 60,
       [](const Options&) { return orientability_characterization(); }},
      {8, "Euler genus <= n iff no excluded-family minor, n<=2, <=3 edges", 600,
       [](const Options&) { return genus_excluded_minors(); }},
      {9, "one-boundary non-orientable bouquets have boundary-preserving deletions, <=4 edges", 120,
       [](const Options&) { return claim_check(); }},
      {10, "enumeration generators agree; figure 4 fixture", 60,
       [](const Options& o) { return enumeration_integrity(o.data_dir); }},
  };
  return all;
}

std::string seconds_text(double s) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(s < 10 ? 2 : 0) << s << "s";
  return out.str();
}

}  // namespace

std::vector<CriterionResult> run(const Options& options,
                                 const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> results;
  for (const auto& c : criteria()) {
    if (!options.only.empty() && !options.only.contains(c.id)) continue;
    CriterionResult r{c.id, c.title, false, {}, 0.0, c.budget};
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome o = c.run(options);
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.seconds > r.budget_seconds) {
      r.passed = false;
      r.detail += "; over time budget";
    }
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_line(const CriterionResult& r) {
  return std::string(r.passed ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.title + ": " + r.detail +
         " (" + seconds_text(r.seconds) + " / " + seconds_text(r.budget_seconds) + ")";
}

}  // namespace ribbonforge::acceptance
