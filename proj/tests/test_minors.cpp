#include <doctest.h>

#include "helpers.hpp"
#include "ribbonforge/canonical.hpp"
#include "ribbonforge/edit_ops.hpp"
#include "ribbonforge/enumeration.hpp"
#include "ribbonforge/errors.hpp"
#include "ribbonforge/link_bridge.hpp"
#include "ribbonforge/minors.hpp"
#include "ribbonforge/surface.hpp"

using namespace ribbonforge;
using testing_support::arp;

TEST_CASE("the B_n family") {
  CHECK(build_B(1) == arp("e1 e1"));
  CHECK(boundary_components(build_B(1)).count() == 2);
  // the n = 2 word e2 e1 e1 e2 is two nested loops, a plane bouquet
  CHECK(euler_genus(build_B(2)) == 0);
  CHECK(intersection_graph(build_B(3)).edges().size() == 3);
  CHECK(build_B(3) == arp("e2 e1 e3 e2 e1 e3"));
  CHECK(build_B(5).edge_count() == 5);
  CHECK_THROWS_AS(build_B(0), InvalidArgument);
  // odd members: the interlacement graph is a cycle
  for (std::size_t n : {5U, 7U, 9U}) {
    const auto ig = intersection_graph(build_B(n));
    CHECK(ig.edges().size() == n);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t degree = 0;
      for (std::size_t j = 0; j < n; ++j) degree += ig.adjacency[i][j];
      CHECK(degree == 2);
    }
  }
}

TEST_CASE("fixed excluded patterns") {
  CHECK(build_Bbar1() == arp("a a'"));
  const auto theta = build_theta_t();
  CHECK(theta.vertex_count() == 2);
  CHECK(boundary_components(theta).count() == 1);
  CHECK(euler_genus(theta) == 2);
  for (const auto& e : underlying_multigraph(theta).edges) CHECK_FALSE(e.is_loop());
  CHECK(equivalent(build_pattern(ExcludedPattern::ThetaT), theta));
  CHECK(to_string(ExcludedPattern::Bbar1) == "bbar1");
  CHECK(to_string(ExcludedPattern::B3) == "b3");
  CHECK(to_string(ExcludedPattern::ThetaT) == "theta-t");
}

TEST_CASE("one-step minors") {
  const auto b1 = one_step_minors(build_B(1));
  REQUIRE(b1.size() == 2);
  std::set<std::size_t> vertex_counts;
  for (const auto& m : b1) {
    CHECK(m.minor.edge_count() == 0);
    vertex_counts.insert(m.minor.vertex_count());
  }
  CHECK(vertex_counts == std::set<std::size_t>{1, 2});

  const auto iso = one_step_minors(arp("()"));
  REQUIRE(iso.size() == 1);
  CHECK(iso[0].minor.empty());
  CHECK(iso[0].step.op == MinorOp::DeleteVertex);

  CHECK(one_step_minors(build_B(3)).size() <= 6);
  for (const auto& m : one_step_minors(build_B(3))) CHECK(equivalent(apply_step(build_B(3), m.step), m.minor));
}

TEST_CASE("scripts") {
  CHECK_THROWS_AS(apply_step(arp("a a / ()"), MinorStep::delete_vertex(0)), InvalidScript);
  CHECK(apply_step(arp("a a / ()"), MinorStep::delete_vertex(1)) == arp("a a"));
  CHECK_THROWS_AS(apply_step(arp("()"), MinorStep::delete_vertex(4)), Error);
  ScriptBuilder b(arp("a b / a b"));
  b.contract_edge("a");
  b.delete_edge("b");
  b.delete_isolated_vertices();
  CHECK(b.current().empty());
  CHECK(b.script().size() == 3);
  CHECK(replay(b.script(), arp("a b / a b")).empty());
}

TEST_CASE("has_minor") {
  const auto b5 = build_B(5);
  const auto found = has_minor(b5, build_B(3));
  REQUIRE(found);
  CHECK(equivalent(replay(*found, b5), build_B(3)));
  CHECK_FALSE(has_minor(build_B(1), build_Bbar1()));
  const auto self = has_minor(build_B(3), build_B(3));
  REQUIRE(self);
  CHECK(self->empty());
  CHECK_THROWS_AS(has_minor(build_B(9), build_B(3)), SizeBoundExceeded);
  SearchLimits tight;
  tight.max_states = 3;
  CHECK_THROWS_AS(has_minor(build_B(7), build_theta_t(), tight), SizeBoundExceeded);
}

TEST_CASE("has_minor results do not depend on the thread count") {
  SearchLimits one, many;
  one.threads = 1;
  many.threads = 4;
  for (const auto& g : testing_support::classes_up_to(3)) {
    for (auto p : {ExcludedPattern::Bbar1, ExcludedPattern::B3}) {
      CHECK(has_minor(g, build_pattern(p), one) == has_minor(g, build_pattern(p), many));
    }
  }
}

TEST_CASE("minor scripts compose") {
  const auto b7 = build_B(7);
  const auto to_b5 = has_minor(b7, build_B(5));
  REQUIRE(to_b5);
  const auto mid = replay(*to_b5, b7);
  const auto to_b3 = has_minor(mid, build_B(3));
  REQUIRE(to_b3);
  MinorScript full = *to_b5;
  full.steps.insert(full.steps.end(), to_b3->steps.begin(), to_b3->steps.end());
  CHECK(equivalent(replay(full, b7), build_B(3)));
}

TEST_CASE("B_n contraction chains") {
  for (std::size_t n : {5U, 7U, 9U}) {
    const auto chain = contraction_chain_Bn(n);
    CHECK(chain.size() == n - 3);
    for (const auto& step : chain.steps) CHECK(step.op == MinorOp::ContractEdge);
    CHECK(equivalent(replay(chain, build_B(n)), build_B(3), n));
  }
  CHECK_THROWS_AS(contraction_chain_Bn(3), InvalidArgument);
  CHECK_THROWS_AS(contraction_chain_Bn(6), InvalidArgument);
}

TEST_CASE("without loop contraction the odd B_n are incomparable") {
  SearchLimits weak;
  weak.contract_loops = false;
  CHECK_FALSE(has_minor(build_B(5), build_B(3), weak));
  CHECK_FALSE(has_minor(build_B(3), build_B(5), weak));
  CHECK(has_minor(build_B(5), build_B(3)));
  CHECK_FALSE(has_minor(build_B(3), build_B(5)));
}

TEST_CASE("excluded minor scan") {
  auto patterns = [](const ArrowPresentation& g) {
    std::set<ExcludedPattern> out;
    for (const auto& hit : excluded_minor_scan(g)) {
      CHECK(equivalent(replay(hit.script, g), build_pattern(hit.pattern)));
      out.insert(hit.pattern);
    }
    return out;
  };
  CHECK(patterns(build_Bbar1()) == std::set<ExcludedPattern>{ExcludedPattern::Bbar1});
  CHECK(patterns(build_theta_t()).contains(ExcludedPattern::ThetaT));
  CHECK(patterns(arp("a b a b")).empty());
  CHECK(patterns(build_B(5)).contains(ExcludedPattern::B3));
}

TEST_CASE("Mobius certificates") {
  CHECK_FALSE(bbar1_certificate(build_B(3)));
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto g = random_ribbon_graph(1 + seed % 7, seed);
    const auto cert = bbar1_certificate(g);
    CHECK(cert.has_value() == !is_orientable(g));
    if (cert) CHECK(equivalent(replay(*cert, g), build_Bbar1()));
  }
}

TEST_CASE("excluded family for bounded Euler genus") {
  auto contains = [](const std::vector<ArrowPresentation>& v, const ArrowPresentation& g) {
    for (const auto& x : v)
      if (equivalent(x, g)) return true;
    return false;
  };
  CHECK(contains(b_family_members(0, 1), build_Bbar1()));
  CHECK(contains(b_family_members(0, 2), arp("a b a b")));
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const auto& m : b_family_members(n, 3)) {
      const auto s = surface_summary(m);
      if (s.orientable) CHECK(s.euler_genus % 2 == 0);
      CHECK(s.f == s.k);
      CHECK(s.v == s.k);
      CHECK(in_b_family(m, n));
    }
  }
  CHECK_FALSE(in_b_family(arp("()"), 0));
  CHECK_FALSE(in_b_family(ArrowPresentation{}, 0));
}

TEST_CASE("genus reduction") {
  const auto b2 = arp("a b a b");
  CHECK(euler_genus(replay(extract_genus_minor(b2, 0), b2)) == 0);

  const auto twice = arp("a a' / b b'");
  const auto reduced = replay(extract_genus_minor(twice, 1), twice);
  CHECK(euler_genus(reduced) == 1);
  CHECK(reduced.isolated_vertices().size() == 1);

  const auto g4 = arp("a b a b c d c d");
  REQUIRE(euler_genus(g4) == 4);
  const auto script = extract_genus_minor(g4, 0);
  ArrowPresentation cur = g4;
  for (const auto& step : script.steps) {
    cur = apply_step(cur, step);
    CHECK(euler_genus(cur) % 2 == 0);
  }
  CHECK(euler_genus(cur) == 0);
  CHECK_THROWS_AS(extract_genus_minor(arp("a a"), 0), InvalidArgument);
}

TEST_CASE("genus reduction reaches the excluded family") {
  for (const auto& g : testing_support::classes_up_to(3)) {
    for (std::size_t n = 0; n < euler_genus(g); ++n) {
      const auto m = replay(genus_excluded_minor(g, n), g);
      CHECK(in_b_family(m, n));
    }
  }
}

TEST_CASE("one-boundary non-orientable bouquets have a boundary-preserving deletion") {
  EnumerationFilter f;
  f.max_edges = 4;
  f.min_edges = 1;
  f.bouquets_only = true;
  for (const auto& g : enumerate_all(f)) {
    if (is_orientable(g) || boundary_components(g).count() != 1) continue;
    const auto e = boundary_preserving_edge(g);
    REQUIRE(e);
    CHECK(boundary_components(delete_edge(g, *e)).count() == 1);
  }
}

TEST_CASE("Euler genus and genus never increase along minor steps") {
  for (const auto& g : testing_support::classes_up_to(3)) {
    const auto before = surface_summary(g);
    for (const auto& m : one_step_minors(g)) {
      const auto after = surface_summary(m.minor);
      CHECK(after.euler_genus <= before.euler_genus);
      CHECK(after.genus <= before.genus);
    }
  }
}
