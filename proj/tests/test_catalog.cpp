#include <doctest.h>

#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "lieprop/catalog.hpp"
#include "lieprop/lie_type.hpp"
#include "lieprop/satake.hpp"

using namespace lieprop;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string restricted(const std::string& name) { return to_string(catalog_lookup(name).restricted.restricted_type); }

}  // namespace

TEST_CASE("form names normalize to catalog keys") {
  const std::map<std::string, std::string> cases = {
      {"su*10", "su*(10)"},   {"su*(10)", "su*(10)"}, {"so5,5", "so(5,5)"},   {"sl4R", "sl(4,R)"},
      {"sl(4,R)", "sl(4,R)"}, {"sp6R", "sp(6,R)"},    {"E6^IV", "E6^IV"},     {"e6iv", "E6^IV"},
      {"su23", "su(2,3)"},    {"so*10", "so*(10)"},   {"G2", "G2^*"},         {"sp(1,2)", "sp(1,2)"},
  };
  for (const auto& [in, want] : cases) {
    CAPTURE(in);
    CHECK(parse_form_name(in).name == want);
  }
}

TEST_CASE("low-dimensional coincidences resolve to one entry") {
  CHECK(parse_form_name("su(1,1)").name == "sl(2,R)");
  CHECK(parse_form_name("sp(2,R)").name == "sl(2,R)");
  CHECK(parse_form_name("so(1,2)").name == "sl(2,R)");
  CHECK(parse_form_name("so(3,3)").name == "sl(4,R)");
  CHECK(parse_form_name("so(2,4)").name == "su(2,2)");
  CHECK(parse_form_name("so(1,5)").name == "su*(4)");
  CHECK(parse_form_name("so*(6)").name == "su(1,3)");
}

TEST_CASE("malformed and non-simple names are rejected") {
  for (const char* bad : {"bogus", "so(1,3)", "so(2,2)", "so(5,3)", "su(0,4)", "E9", "sl(1,R)", ""}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_form_name(bad), std::invalid_argument);
  }
}

TEST_CASE("restricted root systems follow the standard classification") {
  const std::map<std::string, std::string> cases = {
      {"sl(5,R)", "A4"},  {"su*(10)", "A4"}, {"su(2,5)", "BC2"}, {"su(3,3)", "C3"},   {"so(2,7)", "B2"},
      {"so(4,4)", "D4"},  {"sp(8,R)", "C4"}, {"sp(1,3)", "BC1"}, {"sp(2,2)", "C2"},   {"so*(8)", "C2"},
      {"so*(10)", "BC2"}, {"E6^I", "E6"},    {"E6^II", "F4"},    {"E6^III", "BC2"},   {"E6^IV", "A2"},
      {"E7^V", "E7"},     {"E7^VI", "F4"},   {"E7^VII", "C3"},   {"E8^VIII", "E8"},   {"E8^IX", "F4"},
      {"F4^I", "F4"},     {"F4^II", "BC1"},  {"G2^*", "G2"},
  };
  for (const auto& [name, type] : cases) {
    CAPTURE(name);
    CHECK(restricted(name) == type);
  }
}

TEST_CASE("every catalog entry is consistent") {
  for (const auto& f : Catalog::builtin().forms()) {
    CAPTURE(f.name);
    CHECK_NOTHROW(f.satake.validate());
    CHECK(f.restricted.restriction.size() == static_cast<std::size_t>(f.satake.rank()));
    int white = 0;
    for (int i = 0; i < f.satake.rank(); ++i) {
      const int r = f.restricted.restriction[i];
      if (f.satake.is_black(i)) {
        CHECK(r == -1);
      } else {
        ++white;
        CHECK(r >= 0);
        CHECK(r < f.real_rank());
        if (f.satake.partner[i] >= 0) CHECK(f.restricted.restriction[f.satake.partner[i]] == r);
      }
    }
    CHECK(white >= f.real_rank());
    CHECK(parse_form_name(f.name).name == f.name);
  }
}

TEST_CASE("identify_real_form recovers each entry from its Satake diagram") {
  for (const auto& f : Catalog::builtin().forms()) {
    CAPTURE(f.name);
    CHECK(identify_real_form(f.satake) == f.name);
  }
}

TEST_CASE("Satake validation rejects inconsistent arrows") {
  SatakeDiagram s{make_type(Family::A, 3), std::vector<NodeColor>(3, NodeColor::white), {2, -1, 0}};
  CHECK_NOTHROW(s.validate());
  s.partner = {1, 0, -1};
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s.partner = {2, -1, -1};
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s.partner = {2, -1, 0};
  s.colors[0] = NodeColor::black;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
}

TEST_CASE("catalog parser reports the offending line") {
  const std::string text = "sl(2,R) | A1 | 0 | - | A1 | 1:1\nbroken line\n";
  try {
    parse_catalog(text);
    FAIL("expected a parse error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("embedded catalog matches the data file and its recorded checksum") {
  const std::string file = slurp(LIEPROP_CATALOG_PATH);
  CHECK(embedded_catalog_text() == file);
  std::istringstream golden(slurp(std::string(LIEPROP_GOLDEN_DIR) + "/catalog.fnv1a"));
  std::string want;
  golden >> want;
  std::ostringstream got;
  got << std::hex << catalog_checksum(file);
  CHECK(got.str() == want);
}

TEST_CASE("real rank and compact names") {
  CHECK(real_rank(parse_form_name("su*10")) == 4);
  CHECK(real_rank(parse_form_name("so(3,8)")) == 3);
  CHECK(compact_form_name(make_type(Family::A, 2)) == "su(3)");
  CHECK(compact_form_name(make_type(Family::C, 3)) == "sp(3)");
}
