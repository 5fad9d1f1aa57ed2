#include <doctest.h>

#include <string>

#include "lieprop/catalog.hpp"
#include "lieprop/cone.hpp"
#include "lieprop/examples_gen.hpp"
#include "lieprop/nilpotent.hpp"
#include "lieprop/proper.hpp"
#include "lieprop/render.hpp"

using namespace lieprop;

namespace {

bool contains(const std::string& haystack, const std::string& needle) { return haystack.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("Satake diagrams as text") {
  const std::string su10 = satake_text(catalog_lookup("su*(10)").satake);
  CHECK(contains(su10, "●──○──●──○──●──○──●──○──●"));
  const std::string e6 = satake_text(catalog_lookup("E6^IV").satake);
  CHECK(contains(e6, "○──●──●──●──○"));
  CHECK(contains(e6, "│"));
  CHECK(contains(satake_text(catalog_lookup("su(2,3)").satake), "arrows: 1<->4 2<->3"));
  CHECK(contains(satake_text(catalog_lookup("sp(6,R)").satake), "<="));
  CHECK(contains(satake_text(catalog_lookup("so(3,4)").satake), "=>"));
}

TEST_CASE("dot and latex renderings mark arrows and colours") {
  const std::string dot = satake_dot(catalog_lookup("su(2,3)").satake, "su(2,3)");
  CHECK(contains(dot, "graph \"su(2,3)\""));
  CHECK(contains(dot, "a1 -- a4 [style=dashed"));
  CHECK(contains(satake_dot(catalog_lookup("su*(6)").satake, "x"), "fillcolor=black"));
  CHECK_FALSE(satake_latex(catalog_lookup("E6^IV").satake).empty());
  const LieType a3 = parse_classical_algebra("sl4");
  CHECK(contains(orbit_table_latex(a3, orbit_table(a3)), "\\mathrm{diag} (2,0,0,-2)"));
}

TEST_CASE("small formatting helpers") {
  CHECK(diag_string({3, 1, -1, -3}) == "diag(3,1,-1,-3)");
  CHECK(weights_inline(weighted_from_ints({2, 0, 2})) == "2 0 2");
}

TEST_CASE("JSON round trips") {
  const RealForm& g = catalog_lookup("so*(10)");
  CHECK(real_form_from_json(to_json(g)).satake == g.satake);
  CHECK(real_form_from_json(to_json(g)).restricted == g.restricted);
  CHECK(satake_from_json(to_json(g.satake)) == g.satake);

  const auto w = weighted_from_ints({1, 0, 2});
  CHECK(weighted_from_json(to_json(w)) == w);
  CHECK(rational_from_json(rational_json(Rational(-3, 4))) == Rational(-3, 4));

  const PartitionLabel p = parse_partition("[4^2]^II");
  CHECK(partition_from_json(to_json(p)) == p);

  const LieType d4 = parse_classical_algebra("so8");
  for (const auto& row : orbit_table(d4)) CHECK(orbit_row_from_json(to_json(row)) == row);

  const ProperVerdict v = white_subset_criterion(parse_form_name("su*10"), {1, 2});
  const ProperVerdict back = verdict_from_json(to_json(v));
  CHECK(back.admits == v.admits);
  CHECK(back.criterion == v.criterion);
  CHECK(back.orthogonal_root == v.orthogonal_root);
  CHECK(back.extended_node == v.extended_node);
  CHECK(back.note == v.note);

  for (const auto& r : parabolic_procedure(parse_form_name("su*10"))) {
    const ExampleRecord b = record_from_json(to_json(r));
    CHECK(b.h == r.h);
    CHECK(b.h_components == r.h_components);
    CHECK(b.generators == r.generators);
    CHECK(b.restricted_subset == r.restricted_subset);
    CHECK(b.witness == r.witness);
    CHECK(b.witness_node == r.witness_node);
  }

  const BPlusCone cone = b_plus_basis(catalog_lookup("E6^IV").satake);
  const BPlusCone cone_back = cone_from_json(to_json(cone));
  CHECK(cone_back.dimension == cone.dimension);
  CHECK(cone_back.generators == cone.generators);

  const ListCheck c{"split", "fam", "inst", true, CheckStatus::skipped, "skipped: embedding unspecified"};
  const ListCheck cb = list_check_from_json(to_json(c));
  CHECK(cb.instance == c.instance);
  CHECK(cb.status == c.status);
  CHECK(cb.exceptional);
}

TEST_CASE("verdict and report text") {
  const std::string t = verdict_text(white_subset_criterion(parse_form_name("su*10"), {1, 2}));
  CHECK(contains(t, "verdict: yes"));
  CHECK(contains(t, "lambda0"));
  const std::string report = list_report_text(verify_published_lists(4));
  CHECK(contains(report, "Summary:"));
}
