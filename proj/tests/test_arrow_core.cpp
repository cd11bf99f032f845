#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "oracles.hpp"
#include "ribbonforge/arp_format.hpp"
#include "ribbonforge/canonical.hpp"
#include "ribbonforge/edit_ops.hpp"
#include "ribbonforge/enumeration.hpp"
#include "ribbonforge/errors.hpp"
#include "ribbonforge/minors.hpp"
#include "ribbonforge/surface.hpp"

using namespace ribbonforge;
using testing_support::arp;

TEST_CASE("validate accepts well-formed curves and rejects bad labels") {
  CHECK(make_presentation({{"a", "a"}}).edge_count() == 1);
  CHECK(make_presentation({{"a", "b", "a", "b"}}).edge_count() == 2);
  CHECK_THROWS_AS(make_presentation({{"a"}}), LabelCountError);
  CHECK_THROWS_AS(make_presentation({{"a", "a", "a"}}), LabelCountError);
  CHECK_THROWS_AS(validate({Curve{{{"", Direction::Along}, {"", Direction::Along}}}}), EmptyLabelError);
  CHECK_THROWS_AS(make_presentation({{"a-b", "a-b"}}), LabelSyntaxError);
  try {
    make_presentation({{"a"}});
  } catch (const LabelCountError& e) {
    CHECK(e.label() == "a");
    CHECK(e.count() == 1);
  }
}

TEST_CASE("validate rotates each curve to its least rotation") {
  const auto g = arp("b a b a");
  CHECK(g.curves()[0].arrows.front().label == "a");
  CHECK(arp("b a' b a'") == arp("a' b a' b"));
}

TEST_CASE("slots and lookups") {
  const auto g = arp("a b / a b");
  const auto [s, t] = g.slots("a");
  CHECK(s.curve == 0);
  CHECK(t.curve == 1);
  CHECK_THROWS_AS(g.slots("zz"), UnknownLabel);
  CHECK(g.has_label("b"));
  CHECK(arp("() / a a").isolated_vertices() == std::vector<std::size_t>{0});
}

TEST_CASE("underlying multigraph") {
  const auto b3 = build_B(3);
  const auto m3 = underlying_multigraph(b3);
  CHECK(m3.vertex_count == 1);
  CHECK(m3.edges.size() == 3);
  for (const auto& e : m3.edges) CHECK(e.is_loop());

  const auto theta = build_theta_t();
  const auto mt = underlying_multigraph(theta);
  CHECK(mt.vertex_count == 2);
  for (const auto& e : mt.edges) {
    CHECK_FALSE(e.is_loop());
    CHECK(e.u != e.v);
  }

  const auto two = disjoint_union(build_B(1), with_label_prefix(build_B(1), "x"));
  const auto m2 = underlying_multigraph(two);
  CHECK(m2.vertex_count == 2);
  CHECK(m2.edges.size() == 2);
  CHECK(m2.edges[0].u != m2.edges[1].u);
}

TEST_CASE("components") {
  CHECK(component_partition(arp("a b a b")).count() == 1);
  CHECK(component_partition(arp("a a / b b'")).count() == 2);
  const auto p = component_partition(disjoint_union(arp("()"), build_B(3)));
  CHECK(p.count() == 2);
  CHECK(components(arp("a a / b b' / c / c")).size() == 3);
  CHECK_THROWS_AS(disjoint_union(build_B(1), build_B(1)), LabelCountError);
}

TEST_CASE("restriction") {
  CHECK(equivalent(restriction(build_B(3), {"e1"}), build_B(1)));
  const auto g = arp("a b / a b / () ");
  CHECK(restriction(g, g.label_set()) == arp("a b / a b"));
  CHECK(restriction(arp("a b a b"), {}).empty());
  CHECK_THROWS_AS(restriction(g, {"q"}), UnknownLabel);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto r = random_ribbon_graph(5, seed);
    const LabelSet a{"e1", "e3"};
    const auto x = restriction(r, a);
    const auto y = restriction(r, complement(r, a));
    CHECK(x.edge_count() + y.edge_count() == r.edge_count());
    for (const auto& l : r.labels()) CHECK(x.has_label(l) != y.has_label(l));
  }
}

TEST_CASE("spanning trees") {
  CHECK(spanning_tree(build_B(3)).empty());
  const auto theta = build_theta_t();
  CHECK(spanning_tree(theta) == LabelSet{theta.labels().front()});
  CHECK_THROWS_AS(spanning_tree(arp("a a / b b")), NotConnected);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = random_ribbon_graph(6, seed);
    const auto forest = spanning_forest(g);
    CHECK(forest.size() == g.vertex_count() - component_partition(g).count());
    if (component_partition(g).count() == 1) CHECK(spanning_tree(g) == forest);
  }
}

TEST_CASE("canonical key examples") {
  const auto b3 = build_B(3);
  CHECK(canonical_key(b3) == canonical_key(arp("z x y z x y")));
  CHECK(canonical_key(b3) == canonical_key(arp("e1 e3 e2 e1 e3 e2")));
  CHECK(canonical_key(arp("a b a b")) != canonical_key(arp("a a b b")));
  CHECK(canonical_key(arp("a a'")) == canonical_key(arp("a' a")));
  CHECK(equivalent(b3, arp("q r s q r s")));
  CHECK_FALSE(equivalent(b3, arp("a b a c b c")));
  CHECK_FALSE(equivalent(arp("a b a b"), build_theta_t()));
  CHECK_THROWS_AS(canonical_key(build_B(9)), SizeBoundExceeded);
  CHECK_NOTHROW(canonical_key(build_B(9), 9));
}

TEST_CASE("reorienting an edge disc gives an equivalent presentation") {
  CHECK(equivalent(arp("a b a b"), arp("a' b a' b")));
  CHECK(equivalent(arp("a / a"), arp("a' / a'")));
  CHECK_FALSE(equivalent(arp("a a"), arp("a a'")));
}

TEST_CASE("canonical key agrees with brute-force group enumeration") {
  const auto classes = testing_support::classes_up_to(3);
  std::set<std::string> brute;
  for (const auto& g : classes) brute.insert(oracle::brute_key(g));
  CHECK(brute.size() == classes.size());

  // raw configurations: key equality must match oracle equality
  std::map<std::string, CanonicalKey> seen;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const auto g = random_ribbon_graph(1 + seed % 3, seed);
    const auto b = oracle::brute_key(g);
    const auto k = canonical_key(g);
    auto [it, fresh] = seen.try_emplace(b, k);
    CHECK(it->second == k);
  }
  std::set<CanonicalKey> keys;
  for (const auto& [b, k] : seen) keys.insert(k);
  CHECK(keys.size() == seen.size());
}

TEST_CASE("canonical key is constant on orbits") {
  std::mt19937_64 rng(7);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto g = random_ribbon_graph(1 + seed % 6, seed);
    const auto key = canonical_key(g);
    for (int i = 0; i < 3; ++i) CHECK(canonical_key(oracle::random_group_action(g, rng)) == key);
  }
}

TEST_CASE("decode_key round-trips") {
  for (const auto& g : testing_support::classes_up_to(3)) {
    const auto key = canonical_key(g);
    CHECK(canonical_key(decode_key(key)) == key);
    CHECK(equivalent(canonical_form(g), g));
  }
}

TEST_CASE("equivalent graphs share surface summaries") {
  std::mt19937_64 rng(11);
  for (const auto& g : testing_support::classes_up_to(3)) {
    const auto h = oracle::random_group_action(g, rng);
    REQUIRE(equivalent(g, h));
    CHECK(surface_summary(g) == surface_summary(h));
  }
}

TEST_CASE("arp format") {
  CHECK(to_arp(arp("a b' a b")) == "a b a b'\n");
  CHECK(to_arp(arp("()")) == "()\n");
  CHECK(to_arp(ArrowPresentation{}).empty());
  CHECK(parse_arp("# comment\n\na a\n").edge_count() == 1);
  CHECK_THROWS_AS(parse_arp("a () a"), ParseError);
  CHECK_THROWS_AS(parse_arp("a''  a"), Error);
  const auto records = parse_arp_records("a a\n\nb b'\n\n\n() \n");
  REQUIRE(records.size() == 3);
  CHECK(records[2].vertex_count() == 1);
  for (const auto& g : testing_support::classes_up_to(3)) CHECK(parse_arp(to_arp(g)) == g);
}
