#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "ribbonforge/edit_ops.hpp"
#include "ribbonforge/enumeration.hpp"
#include "ribbonforge/errors.hpp"
#include "ribbonforge/minors.hpp"
#include "ribbonforge/surface.hpp"

using namespace ribbonforge;
using testing_support::arp;

TEST_CASE("boundary counts of small bouquets") {
  CHECK(boundary_components(arp("a a")).count() == 2);
  CHECK(boundary_components(arp("a a'")).count() == 1);
  CHECK(boundary_components(arp("a b a b")).count() == 1);
  CHECK(boundary_components(arp("()")).count() == 1);
  CHECK(boundary_components(ArrowPresentation{}).count() == 0);
}

TEST_CASE("boundary walks cover every arrow end exactly once") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = random_ribbon_graph(5, seed);
    const auto walks = boundary_components(g);
    std::size_t ends = 0;
    for (const auto& w : walks.walks) ends += w.size();
    CHECK(ends == 4 * g.edge_count());
    for (const auto& label : g.labels()) {
      auto [x, y] = free_side_walks(g, walks, label);
      CHECK(x < walks.count());
      CHECK(y < walks.count());
    }
  }
}

TEST_CASE("boundary count matches signed-rotation face tracing") {
  for (const auto& g : testing_support::classes_up_to(4)) CHECK(boundary_components(g).count() == oracle::face_count(g));
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto g = random_ribbon_graph(1 + seed % 8, seed);
    CHECK(boundary_components(g).count() == oracle::face_count(g));
  }
}

TEST_CASE("boundary count equals the vertex count of the dual") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto g = random_ribbon_graph(1 + seed % 7, seed);
    CHECK(boundary_components(g).count() == geometric_dual(g).vertex_count());
  }
}

TEST_CASE("twists and orientability") {
  CHECK(is_orientable(arp("a a")));
  CHECK_FALSE(is_orientable(arp("a a'")));
  CHECK(is_orientable(arp("a / a")));
  CHECK(is_orientable(arp("a / a'")));
  CHECK(is_twisted(arp("a a'"), "a"));
  CHECK_FALSE(is_twisted(arp("a b a b"), "a"));
  // a twisted non-loop edge can be untwisted by flipping a vertex, a
  // twisted cycle cannot
  CHECK(is_orientable(arp("a b / a b")));
  CHECK_FALSE(is_orientable(arp("a b / a' b")));
}

TEST_CASE("surface summaries") {
  const auto b3 = surface_summary(build_B(3));
  CHECK(b3 == SurfaceSummary{1, 3, 2, 1, 2, 1, true});
  const auto theta = surface_summary(build_theta_t());
  CHECK(theta == SurfaceSummary{2, 3, 1, 1, 2, 1, true});
  CHECK(surface_summary(arp("()")) == SurfaceSummary{1, 0, 1, 1, 0, 0, true});
  const auto mobius = surface_summary(arp("a a'"));
  CHECK(mobius.euler_genus == 1);
  CHECK(mobius.genus == 1);
  CHECK_FALSE(mobius.orientable);
  CHECK(surface_summary(arp("a b a b / c c")).k == 2);
  CHECK(surface_summary(arp("a b a b / c d c d")).euler_genus == 4);
}

TEST_CASE("plane graphs") {
  CHECK(is_plane(arp("a a")));
  CHECK_FALSE(is_plane(arp("a b a b")));
  CHECK(is_plane(arp("a b / b c / c a")));
  CHECK(is_plane(arp("a / a b / b")));
}

TEST_CASE("Euler genus of enumerated graphs is consistent") {
  for (const auto& g : testing_support::classes_up_to(4)) {
    const auto s = surface_summary(g);
    CHECK(2 * s.k + s.e == s.v + s.f + s.euler_genus);
    if (s.orientable) CHECK(s.euler_genus % 2 == 0);
    CHECK(s.genus == (s.orientable ? s.euler_genus / 2 : s.euler_genus));
  }
}
