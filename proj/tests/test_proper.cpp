#include <doctest.h>

#include <set>
#include <string>

#include "lieprop/catalog.hpp"
#include "lieprop/cone.hpp"
#include "lieprop/proper.hpp"
#include "lieprop/subsystem.hpp"

using namespace lieprop;

namespace {

RootVector root(std::vector<int> c) { return RootVector{std::move(c)}; }

const RootSystem& restricted_of(const std::string& name) { return restricted_root_system(catalog_lookup(name)); }

}  // namespace

TEST_CASE("rank-one H: no exactly on rank one forms and the three exceptions") {
  std::set<std::string> no, expected;
  for (const auto& f : Catalog::builtin().forms()) {
    if (decide_rank_one({f.name}).admits == Admits::no) no.insert(f.name);
    if (f.real_rank() == 1 || f.name == "sl(3,R)" || f.name == "su*(6)" || f.name == "E6^IV") expected.insert(f.name);
  }
  CHECK(no == expected);
  std::set<std::string> listed;
  for (const auto& id : rank_one_exceptions()) listed.insert(id.name);
  CHECK(listed == expected);
}

TEST_CASE("rank-one verdicts carry their evidence") {
  const ProperVerdict no = decide_rank_one(parse_form_name("su*6"));
  CHECK(no.admits == Admits::no);
  CHECK(no.criterion == Criterion::rank_one);
  CHECK(no.generators.size() == 1);

  const ProperVerdict yes = decide_rank_one(parse_form_name("sl4R"));
  CHECK(yes.admits == Admits::yes);
  CHECK(yes.generators.size() == 2);
}

TEST_CASE("orthogonality criterion on small restricted systems") {
  const RootSystem& a2 = restricted_of("sl(3,R)");
  const ProperVerdict und = orthogonality_criterion(parse_form_name("sl3R"), closed_subsystem(a2, {root({1, 0})}));
  CHECK(und.admits == Admits::undetermined);
  CHECK_FALSE(und.orthogonal_root.has_value());

  const ProperVerdict empty = orthogonality_criterion(parse_form_name("sl3R"), Subsystem{});
  CHECK(empty.admits == Admits::yes);

  const RootSystem& a3 = restricted_of("sl(4,R)");
  const Subsystem a1 = closed_subsystem(a3, {root({1, 0, 0})});
  const ProperVerdict yes = orthogonality_criterion(parse_form_name("sl4R"), a1);
  REQUIRE(yes.admits == Admits::yes);
  REQUIRE(yes.orthogonal_root.has_value());
  for (const auto& r : a1.roots) CHECK(a3.pairing(*yes.orthogonal_root, r) == 0);
}

TEST_CASE("orthogonality criterion rejects subsets that are not closed") {
  const RootSystem& a2 = restricted_of("sl(3,R)");
  CHECK_THROWS_AS(orthogonality_criterion(parse_form_name("sl3R"), Subsystem{{root({1, 0})}}), std::invalid_argument);
  const Subsystem not_closed{{root({1, 0}), root({-1, 0}), root({0, 1}), root({0, -1})}};
  CHECK_FALSE(is_closed_symmetric(a2, not_closed.roots));
  CHECK_THROWS_AS(orthogonality_criterion(parse_form_name("sl3R"), not_closed), std::invalid_argument);
}

TEST_CASE("white subsets of su*(10): lambda0 is orthogonal to lambda2, lambda3") {
  const ProperVerdict v = white_subset_criterion(parse_form_name("su*10"), {1, 2});
  REQUIRE(v.admits == Admits::yes);
  CHECK(v.extended_node == 0);
  CHECK(*v.orthogonal_root == root({-1, -1, -1, -1}));

  const ProperVerdict by_nodes = white_subset_criterion_nodes(parse_form_name("su*10"), {3, 5});
  CHECK(by_nodes.admits == Admits::yes);
  CHECK_THROWS_AS(white_subset_criterion_nodes(parse_form_name("su*10"), {0}), std::invalid_argument);
}

TEST_CASE("orbit test for the principal vector agrees with orthogonality on split forms") {
  // Every simple-root subset of each restricted system up to rank 4.
  for (const char* name : {"sl(4,R)", "sl(5,R)", "so(3,4)", "sp(6,R)", "so(4,4)", "F4^I", "G2^*"}) {
    CAPTURE(name);
    const RealForm& g = catalog_lookup(name);
    const RootSystem& sys = restricted_root_system(g);
    const int r = sys.rank();
    for (int mask = 0; mask < (1 << r); ++mask) {
      std::vector<RootVector> gens;
      for (int k = 0; k < r; ++k)
        if (mask >> k & 1) gens.push_back(sys.simple_root(k));
      const Subsystem sub = closed_subsystem(sys, gens);
      const ProperVerdict orth = orthogonality_criterion({g.name}, sub);
      if (orth.admits != Admits::yes) continue;
      CAPTURE(mask);
      const ProperVerdict ok = okuda_check({g.name}, subsystem_span(sub), principal_restricted_vector(g));
      CHECK(ok.admits == Admits::yes);
    }
  }
}

TEST_CASE("orbit test says no when a_h is everything") {
  const RealForm& g = catalog_lookup("sl(3,R)");
  const RatMat all = {{1, 0}, {0, 1}};
  CHECK(okuda_check({g.name}, all, principal_restricted_vector(g)).admits == Admits::no);
}

TEST_CASE("Kobayashi test at the extremes") {
  const RatMat line = {{1, 1}};
  CHECK(kobayashi_check(parse_form_name("sl3R"), {}, line));
  CHECK_FALSE(kobayashi_check(parse_form_name("sl3R"), {{1, 0}, {0, 1}}, line));
  // The orbit of lambda1 + lambda2 is the root set: it meets the line through
  // lambda1 but not the line through 2 lambda1 - lambda2.
  CHECK(kobayashi_check(parse_form_name("sl3R"), {{2, -1}}, {{1, 1}}));
  CHECK_FALSE(kobayashi_check(parse_form_name("sl3R"), {{1, 0}}, {{1, 1}}));
}

TEST_CASE("subgroup closure passes yes down and refuses anything else") {
  const ProperVerdict yes = white_subset_criterion(parse_form_name("su*10"), {1, 2});
  const ProperVerdict down = subgroup_closure(yes);
  CHECK(down.admits == Admits::yes);
  CHECK(down.criterion == Criterion::subgroup_closure);
  CHECK(subgroup_closure(yes, {"su(2)", "su(2)", "su*(6)"}, {"su*(6)"}).admits == Admits::yes);
  CHECK_THROWS_AS(subgroup_closure(yes, {"su(2)", "su*(6)"}, {"su(2)", "su(2)"}), std::invalid_argument);
  CHECK_THROWS_AS(subgroup_closure(decide_rank_one(parse_form_name("su*6"))), std::invalid_argument);
}
