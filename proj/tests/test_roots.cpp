#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "lieprop/diagram.hpp"
#include "lieprop/lie_type.hpp"
#include "lieprop/linalg.hpp"
#include "lieprop/root_system.hpp"
#include "lieprop/subsystem.hpp"
#include "lieprop/weyl.hpp"

using namespace lieprop;

namespace {

RootVector root(std::vector<int> c) { return RootVector{std::move(c)}; }

}  // namespace

TEST_CASE("positive root counts agree with the classification") {
  struct Case {
    Family family;
    int rank;
    std::size_t positive;
  };
  const std::vector<Case> cases = {
      {Family::A, 1, 1},   {Family::A, 4, 10},  {Family::B, 3, 9},   {Family::C, 4, 16},
      {Family::D, 5, 20},  {Family::E, 6, 36},  {Family::E, 7, 63},  {Family::E, 8, 120},
      {Family::F, 4, 24},  {Family::G, 2, 6},
  };
  for (const auto& c : cases) {
    const RootSystem sys(make_type(c.family, c.rank));
    CAPTURE(to_string(sys.type()));
    CHECK(sys.positive_roots().size() == c.positive);
    CHECK(sys.roots().size() == 2 * c.positive);
    CHECK(positive_root_count(sys.type()) == static_cast<int>(c.positive));
  }
}

TEST_CASE("highest roots in simple-root coordinates") {
  // Exceptional E_n: chain nodes first, then the branch node.
  CHECK(RootSystem(make_type(Family::A, 3)).highest_root() == root({1, 1, 1}));
  CHECK(RootSystem(make_type(Family::B, 4)).highest_root() == root({1, 2, 2, 2}));
  CHECK(RootSystem(make_type(Family::C, 4)).highest_root() == root({2, 2, 2, 1}));
  CHECK(RootSystem(make_type(Family::D, 5)).highest_root() == root({1, 2, 2, 1, 1}));
  CHECK(RootSystem(make_type(Family::E, 6)).highest_root() == root({1, 2, 3, 2, 1, 2}));
  CHECK(RootSystem(make_type(Family::E, 7)).highest_root() == root({2, 3, 4, 3, 2, 1, 2}));
  CHECK(RootSystem(make_type(Family::E, 8)).highest_root() == root({2, 4, 6, 5, 4, 3, 2, 3}));
  CHECK(RootSystem(make_type(Family::F, 4)).highest_root() == root({2, 3, 4, 2}));
  CHECK(RootSystem(make_type(Family::G, 2)).highest_root() == root({3, 2}));
}

TEST_CASE("orbit of a regular point has the order of the Weyl group") {
  for (const auto& t : {make_type(Family::A, 3), make_type(Family::B, 3), make_type(Family::C, 3),
                        make_type(Family::D, 4), make_type(Family::G, 2), make_type(Family::F, 4),
                        make_type(Family::A, 4)}) {
    const RootSystem sys(t);
    CAPTURE(to_string(t));
    const auto orbit = weyl_orbit(sys, to_rational(regular_dominant_point(sys)));
    CHECK(static_cast<long long>(orbit.size()) == weyl_group_order(t));
  }
  CHECK(weyl_group_order(make_type(Family::E, 6)) == 51840);
  CHECK(weyl_group_order(make_type(Family::E, 8)) == 696729600);
}

TEST_CASE("minus w0 acts on simple roots by the expected diagram symmetry") {
  CHECK(minus_w0_node_map(make_type(Family::A, 4)) == std::vector<int>{3, 2, 1, 0});
  CHECK(minus_w0_node_map(make_type(Family::D, 5)) == std::vector<int>{0, 1, 2, 4, 3});
  CHECK(minus_w0_node_map(make_type(Family::D, 4)) == std::vector<int>{0, 1, 2, 3});
  CHECK(minus_w0_node_map(make_type(Family::E, 6)) == std::vector<int>{4, 3, 2, 1, 0, 5});
  CHECK(minus_w0_node_map(make_type(Family::E, 7)) == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
  CHECK(minus_w0_node_map(make_type(Family::B, 3)) == std::vector<int>{0, 1, 2});
}

TEST_CASE("longest element sends the positive system to the negative one") {
  for (const auto& t : {make_type(Family::A, 3), make_type(Family::C, 3), make_type(Family::G, 2)}) {
    const RootSystem sys(t);
    const WeylElement w0 = longest_element(sys);
    CHECK(static_cast<int>(w0.word.size()) == positive_root_count(t));
    for (const auto& r : sys.positive_roots()) {
      const RatVec image = w0.apply(sys, to_rational(r.coeffs));
      for (const auto& x : image) CHECK(x <= Rational(0));
    }
  }
}

TEST_CASE("each orbit meets the closed dominant chamber exactly once") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(-3, 3);
  for (const auto& t : {make_type(Family::A, 3), make_type(Family::B, 3), make_type(Family::C, 4),
                        make_type(Family::D, 4), make_type(Family::G, 2), make_type(Family::F, 4)}) {
    const RootSystem sys(t);
    for (int trial = 0; trial < 10; ++trial) {
      RatVec v(sys.rank());
      for (auto& x : v) x = coord(rng);
      int dominant = 0;
      for (const auto& p : weyl_orbit(sys, v))
        if (is_dominant(sys, p)) ++dominant;
      CHECK(dominant == 1);
      CHECK(is_dominant(sys, dominant_representative(sys, v)));
    }
  }
}

TEST_CASE("closed symmetric subsystems") {
  const RootSystem a2(make_type(Family::A, 2));
  CHECK(is_closed_symmetric(a2, {root({1, 0}), root({-1, 0})}));
  CHECK_FALSE(is_closed_symmetric(a2, {root({1, 0})}));
  CHECK_FALSE(is_closed_symmetric(a2, {root({1, 0}), root({-1, 0}), root({0, 1}), root({0, -1})}));

  // A1 inside A2 has nothing orthogonal to it.
  CHECK(orthogonal_complement(a2, closed_subsystem(a2, {root({1, 0})})).empty());

  const RootSystem b3(make_type(Family::B, 3));
  const Subsystem sub = closed_subsystem(b3, {b3.simple_root(0)});
  const Subsystem perp = orthogonal_complement(b3, sub);
  CHECK_FALSE(perp.empty());
  CHECK(is_closed_symmetric(b3, perp.roots));

  CHECK_THROWS_AS(closed_subsystem(a2, {root({2, 0})}), std::invalid_argument);
}

TEST_CASE("orthogonal complements are always closed and symmetric") {
  for (const auto& t : {make_type(Family::C, 4), make_type(Family::D, 5), make_type(Family::F, 4),
                        make_type(Family::E, 6)}) {
    const RootSystem sys(t);
    for (int i = 0; i < sys.rank(); ++i) {
      const Subsystem perp = orthogonal_complement(sys, closed_subsystem(sys, {sys.simple_root(i)}));
      CHECK(is_closed_symmetric(sys, perp.roots));
    }
  }
}

TEST_CASE("short D3 inside C3 is stable under reflections but not closed") {
  const RootSystem c3(make_type(Family::C, 3));
  // e1 - e2, e2 - e3, e2 + e3.
  const std::vector<RootVector> gens = {root({1, 0, 0}), root({0, 1, 0}), root({0, 1, 1})};
  const Subsystem refl = reflection_subsystem(c3, gens);
  CHECK(refl.size() == 12);
  CHECK_FALSE(is_closed_symmetric(c3, refl.roots));
  CHECK(subsystem_type_name(subsystem_components(c3, refl)) == "A3");
  CHECK(subsystem_type_name(subsystem_components(c3, closed_subsystem(c3, gens))) == "C3");
}

TEST_CASE("extended diagram of A_n is a cycle") {
  const ExtendedDiagram edd = extended_diagram(RootSystem(make_type(Family::A, 4)));
  REQUIRE(edd.nodes.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    int degree = 0;
    for (std::size_t j = 0; j < 5; ++j) degree += edd.adjacent(i, j);
    CHECK(degree == 2);
  }
}

TEST_CASE("extended node of E8 attaches to the far end of the long arm") {
  const RootSystem e8(make_type(Family::E, 8));
  const ExtendedDiagram edd = extended_diagram(e8);
  std::vector<int> neighbours;
  for (std::size_t j = 1; j < edd.nodes.size(); ++j)
    if (edd.adjacent(0, j)) neighbours.push_back(static_cast<int>(j) - 1);
  CHECK(neighbours == std::vector<int>{6});
}

TEST_CASE("type names parse and reject aliases") {
  CHECK(parse_lie_type("E6") == make_type(Family::E, 6));
  CHECK(parse_lie_type("B4") == make_type(Family::B, 4));
  CHECK_THROWS_AS(make_type(Family::D, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_type(Family::E, 5), std::invalid_argument);
  CHECK(isomorphic_types(make_type(Family::B, 2), make_type(Family::C, 2)));
}

TEST_CASE("decompose_diagram identifies components") {
  const RootSystem d5(make_type(Family::D, 5));
  const auto comps = decompose_diagram(d5.gram());
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].type == make_type(Family::D, 5));
}
