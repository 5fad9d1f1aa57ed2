// Acceptance run: one PASS/FAIL line per criterion on stdout.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lieprop/catalog.hpp"
#include "lieprop/cone.hpp"
#include "lieprop/examples_gen.hpp"
#include "lieprop/nilpotent.hpp"
#include "lieprop/parabolic.hpp"
#include "lieprop/proper.hpp"
#include "lieprop/render.hpp"
#include "lieprop/spanning.hpp"
#include "lieprop/subsystem.hpp"
#include "lieprop/weyl.hpp"

using namespace lieprop;

namespace {

std::map<std::string, std::string>& details() {
  static std::map<std::string, std::string> d;
  return d;
}

void detail(const std::string& text) { details()[""] = text; }

class CriterionLine : public doctest::IReporter {
 public:
  explicit CriterionLine(const doctest::ContextOptions&) {}

  void report_query(const doctest::QueryData&) override {}
  void test_run_start() override {}
  void test_run_end(const doctest::TestRunStats& stats) override {
    std::cout << stats.numTestCasesPassingFilters - stats.numTestCasesFailed << "/"
              << stats.numTestCasesPassingFilters << " criteria passed\n";
  }
  void test_case_start(const doctest::TestCaseData& data) override {
    name_ = data.m_name;
    details().erase("");
  }
  void test_case_reenter(const doctest::TestCaseData&) override {}
  void test_case_end(const doctest::CurrentTestCaseStats& stats) override {
    const bool ok = stats.testCaseSuccess && !threw_;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name_;
    const auto it = details().find("");
    if (it != details().end() && !it->second.empty()) std::cout << "  (" << it->second << ")";
    std::cout << "\n";
    threw_ = false;
  }
  void test_case_exception(const doctest::TestCaseException& e) override {
    threw_ = true;
    details()[""] = std::string("exception: ") + e.error_string.c_str();
  }
  void subcase_start(const doctest::SubcaseSignature&) override {}
  void subcase_end() override {}
  void log_assert(const doctest::AssertData& a) override {
    if (!a.m_failed) return;
    std::lock_guard lock(mu_);
    std::cerr << "  " << a.m_file << ":" << a.m_line << ": " << a.m_expr;
    if (a.m_decomp.size() > 0) std::cerr << "  [" << a.m_decomp.c_str() << "]";
    std::cerr << "\n";
  }
  void log_message(const doctest::MessageData&) override {}
  void test_case_skipped(const doctest::TestCaseData&) override {}

 private:
  std::string name_;
  bool threw_ = false;
  std::mutex mu_;
};

DOCTEST_REGISTER_REPORTER("criteria", 1, CriterionLine);

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fixed(double x) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(2);
  s << x;
  return s.str();
}

std::vector<int> ints(const std::string& csv) {
  std::vector<int> out;
  std::istringstream in(csv);
  std::string cell;
  while (std::getline(in, cell, ',')) out.push_back(std::stoi(cell));
  return out;
}

std::vector<int> ints(const WeightedDynkinDiagram& w) {
  std::vector<int> out;
  for (const auto& x : w.weights) out.push_back(static_cast<int>(x.numerator()));
  return out;
}

std::string slurp(const std::string& file) {
  std::ifstream in(std::string(LIEPROP_GOLDEN_DIR) + "/" + file);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> golden_rows(const std::string& file) {
  std::istringstream in(slurp(file));
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::istringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, '\t')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

// Closed forms for the families whose a-hyperbolic rank is below the real rank.
std::optional<int> reduced_rank_formula(const std::string& name) {
  std::smatch m;
  static const std::regex sl(R"(sl\((\d+),R\))"), star(R"(su\*\((\d+)\))"), so(R"(so\((\d+),(\d+)\))");
  if (std::regex_match(name, m, sl)) return std::stoi(m[1]) / 2;
  if (std::regex_match(name, m, star)) return std::stoi(m[1]) / 4;
  if (std::regex_match(name, m, so) && m[1] == m[2] && std::stoi(m[1]) % 2 == 1 && std::stoi(m[1]) >= 5)
    return std::stoi(m[1]) - 1;
  if (name == "E6^I") return 4;
  if (name == "E6^IV") return 1;
  return std::nullopt;
}

}  // namespace

TEST_CASE("1. a-hyperbolic rank of every catalog entry") {
  const auto t0 = std::chrono::steady_clock::now();
  // The explicit small cases first.
  for (int k = 1; k <= 4; ++k) {
    CHECK(a_hyperbolic_rank(parse_form_name("sl(" + std::to_string(2 * k) + ",R)")) == k);
    CHECK(a_hyperbolic_rank(parse_form_name("sl(" + std::to_string(2 * k + 1) + ",R)")) == k);
    CHECK(a_hyperbolic_rank(parse_form_name("su*(" + std::to_string(4 * k) + ")")) == k);
    CHECK(a_hyperbolic_rank(parse_form_name("su*(" + std::to_string(4 * k + 2) + ")")) == k);
  }
  for (int k = 2; k <= 4; ++k) {
    const std::string n = std::to_string(2 * k + 1);
    CHECK(a_hyperbolic_rank(parse_form_name("so(" + n + "," + n + ")")) == 2 * k);
  }
  CHECK(a_hyperbolic_rank(parse_form_name("E6^I")) == 4);
  CHECK(a_hyperbolic_rank(parse_form_name("E6^IV")) == 1);
  int reduced = 0, equal = 0;
  for (const auto& f : Catalog::builtin().forms()) {
    CAPTURE(f.name);
    const auto formula = reduced_rank_formula(f.name);
    const int got = a_hyperbolic_rank({f.name});
    CHECK(got == formula.value_or(f.real_rank()));
    (got == f.real_rank() ? equal : reduced) += 1;
  }
  const double secs = seconds_since(t0);
  CHECK(secs < 10.0);
  detail(std::to_string(Catalog::builtin().forms().size()) + " forms, " + std::to_string(reduced) +
         " below real rank, " + fixed(secs) + " s");
}

TEST_CASE("2. sl(4,C) orbit table, cell for cell") {
  const LieType a3 = parse_classical_algebra("sl4");
  const auto rows = orbit_table(a3);
  const auto want = golden_rows("sl4_orbits.tsv");
  REQUIRE(rows.size() == 5);
  REQUIRE(want.size() == 5);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CAPTURE(want[i][0]);
    CHECK(to_string(rows[i].label) == want[i][0]);
    CHECK(rows[i].eigenvalues == ints(want[i][1]));
    CHECK(rows[i].profile.entries == ints(want[i][2]));
    CHECK(ints(rows[i].weights) == ints(want[i][3]));
  }
  CHECK(orbit_table_text(a3, rows) == slurp("orbits_sl4.txt"));
  detail("5 rows");
}

TEST_CASE("3. sp(6,C) orbit table, cell for cell") {
  const LieType c3 = parse_classical_algebra("sp6");
  const auto rows = orbit_table(c3);
  const auto want = golden_rows("sp6_orbits.tsv");
  REQUIRE(rows.size() == 8);
  REQUIRE(want.size() == 8);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CAPTURE(want[i][0]);
    CHECK(to_string(rows[i].label) == want[i][0]);
    CHECK(rows[i].profile.entries == ints(want[i][1]));
    CHECK(ints(rows[i].weights) == ints(want[i][2]));
  }
  CHECK(orbit_table_text(c3, rows) == slurp("orbits_sp6.txt"));
  detail("8 rows");
}

TEST_CASE("4. orbit counts and label sets") {
  auto labels = [](const char* alg) {
    std::set<std::string> out;
    for (const auto& p : enumerate_orbits(parse_classical_algebra(alg))) out.insert(to_string(p));
    return out;
  };
  CHECK(labels("sl4") == std::set<std::string>{"[4]", "[3,1]", "[2^2]", "[2,1^2]", "[1^4]"});
  CHECK(labels("so7") ==
        std::set<std::string>{"[7]", "[5,1^2]", "[3,1^4]", "[3,2^2]", "[3^2,1]", "[2^2,1^3]", "[1^7]"});
  CHECK(labels("sp6") == std::set<std::string>{"[6]", "[4,2]", "[4,1^2]", "[3^2]", "[2^3]", "[2^2,1^2]",
                                               "[2,1^4]", "[1^6]"});
  CHECK(labels("so8") == std::set<std::string>{"[7,1]", "[5,3]", "[4^2]^I", "[4^2]^II", "[5,1^3]", "[3^2,1^2]",
                                               "[3,2^2,1]", "[2^4]^I", "[2^4]^II", "[3,1^5]", "[2^2,1^4]",
                                               "[1^8]"});
  CHECK(enumerate_orbits(parse_classical_algebra("sl4")).size() == 5);
  CHECK(enumerate_orbits(parse_classical_algebra("so7")).size() == 7);
  CHECK(enumerate_orbits(parse_classical_algebra("sp6")).size() == 8);
  CHECK(enumerate_orbits(parse_classical_algebra("so8")).size() == 12);
  detail("5, 7, 8, 12");
}

TEST_CASE("5. E6^IV cone") {
  const BPlusCone cone = b_plus_basis(catalog_lookup("E6^IV").satake);
  CHECK(cone.dimension == 1);
  REQUIRE(cone.generators.size() == 1);
  // Proportional to (1,0,0,0,1,0): the only nonzero entries are equal and sit on the end nodes.
  const auto& w = cone.generators[0].weights;
  CHECK(w[0] != Rational(0));
  CHECK(w == RatVec{w[0], 0, 0, 0, w[0], 0});
  detail("generator " + to_string(w));
}

TEST_CASE("6. rank-one subgroups: the exceptional set") {
  std::set<std::string> no, expected, listed;
  for (const auto& f : Catalog::builtin().forms()) {
    if (decide_rank_one({f.name}).admits == Admits::no) no.insert(f.name);
    if (f.real_rank() == 1 || f.name == "sl(3,R)" || f.name == "su*(6)" || f.name == "E6^IV") expected.insert(f.name);
  }
  for (const auto& id : rank_one_exceptions()) listed.insert(id.name);
  CHECK(no == expected);
  CHECK(listed == expected);
  detail(std::to_string(no.size()) + " forms answer no");
}

TEST_CASE("7. su*(10) parabolic walkthrough") {
  const RealFormId id = parse_form_name("su*10");
  const RealForm& g = catalog_lookup(id);
  // The diagram: black odd nodes, white even nodes, restricted system A4.
  CHECK(satake_text(g.satake).find("●──○──●──○──●──○──●──○──●") != std::string::npos);
  CHECK(to_string(g.restricted.restricted_type) == "A4");
  const auto records = parabolic_procedure(id);
  const auto it = std::find_if(records.begin(), records.end(),
                               [](const ExampleRecord& r) { return r.restricted_subset == std::vector<int>{1, 2}; });
  REQUIRE(it != records.end());
  CHECK(it->extended_node_rule);
  CHECK(it->witness_node == 0);
  CHECK(it->witness == RootVector{{-1, -1, -1, -1}});
  // White nodes a2 and a8 restrict outside C and are deleted.
  CHECK(it->deleted_nodes == std::vector<int>{1, 7});
  CHECK(it->h_components == std::vector<std::string>{"su(2)", "su(2)", "su*(6)"});
  CHECK(reverify(*it));

  const ProperVerdict v = white_subset_criterion(id, {1, 2});
  REQUIRE(v.admits == Admits::yes);
  const ProperVerdict sub = subgroup_closure(v, it->h_components, {"su*(6)"});
  CHECK(sub.admits == Admits::yes);
  CHECK(sub.criterion == Criterion::subgroup_closure);
  detail("C = {l2,l3}, gamma = l0, H = " + it->h + ", then SU*(10)/SU*(6)");
}

TEST_CASE("8. spanning nilpotent families") {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::string> names = {"E6^I"};
  for (int n = 2; n <= 7; ++n) names.push_back("sl(" + std::to_string(n) + ",R)");
  for (int n = 2; n <= 6; ++n) names.push_back("so(" + std::to_string(n) + "," + std::to_string(n + 1) + ")");
  for (int n = 2; n <= 6; ++n) names.push_back("sp(" + std::to_string(2 * n) + ",R)");
  for (int n = 4; n <= 6; ++n) names.push_back("so(" + std::to_string(n) + "," + std::to_string(n) + ")");
  for (int n = 2; n <= 5; ++n) names.push_back("su*(" + std::to_string(2 * n) + ")");
  for (int p = 1; p <= 4; ++p)
    for (int q = p; p + q <= 8; ++q)
      if (p + q >= 3) names.push_back(parse_form_name("su(" + std::to_string(p) + "," + std::to_string(q) + ")").name);
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  for (const auto& name : names) {
    CAPTURE(name);
    const RealForm& g = catalog_lookup(name);
    REQUIRE(has_spanning_family(g));
    const auto family = spanning_family({g.name});
    for (const auto& m : family) {
      CHECK(matches(m.diagram, g.satake));
      CHECK(is_iota_fixed(m.diagram, g.satake.type));
    }
    CHECK(spanning_dimension(family) == a_hyperbolic_rank({g.name}));
  }
  const double secs = seconds_since(t0);
  CHECK(secs < 60.0);
  detail(std::to_string(names.size()) + " forms, " + fixed(secs) + " s");
}

TEST_CASE("9. published example lists") {
  const auto checks = verify_published_lists(8);
  const auto families = summarize(checks);
  int split_classical = 0, parabolic_classical = 0, failed = 0;
  std::vector<std::string> skipped;
  for (const auto& f : families) {
    CAPTURE(f.family);
    const bool classical = !f.exceptional;
    if (classical) {
      CHECK(f.status() == CheckStatus::pass);
      CHECK(f.failed == 0);
      CHECK(f.skipped == 0);
    }
    if (f.status() == CheckStatus::fail) ++failed;
    if (classical && f.status() == CheckStatus::pass && f.list == "split") ++split_classical;
    if (classical && f.status() == CheckStatus::pass && f.list == "parabolic") ++parabolic_classical;
  }
  for (const auto& c : checks) {
    if (c.status != CheckStatus::skipped) continue;
    CHECK(c.exceptional);
    CHECK(c.detail.rfind("skipped: embedding unspecified", 0) == 0);
    skipped.push_back(c.instance);
  }
  CHECK(split_classical >= 9);
  CHECK(parabolic_classical == 5);
  CHECK(failed == 0);
  std::string skip_list;
  for (const auto& s : skipped) skip_list += (skip_list.empty() ? "" : ", ") + s;
  detail(std::to_string(split_classical) + " split and " + std::to_string(parabolic_classical) +
         " parabolic classical families pass; skipped: " + (skip_list.empty() ? "none" : skip_list));
}

TEST_CASE("10. orthogonality against the orbit test on random split pairs") {
  std::vector<std::string> forms;
  for (const auto& f : Catalog::builtin().forms())
    if (f.is_split() && f.satake.rank() <= 5) forms.push_back(f.name);
  std::mt19937 rng(20240601);
  int yes = 0, disagreements = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const RealForm& g = catalog_lookup(forms[rng() % forms.size()]);
    const RootSystem& sys = restricted_root_system(g);
    const auto& pos = sys.positive_roots();
    std::vector<RootVector> gens;
    const int count = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < count; ++k) gens.push_back(pos[rng() % pos.size()]);
    const Subsystem sub = closed_subsystem(sys, gens);
    const ProperVerdict orth = orthogonality_criterion({g.name}, sub);
    if (orth.admits != Admits::yes) continue;
    ++yes;
    const ProperVerdict ok = okuda_check({g.name}, subsystem_span(sub), principal_restricted_vector(g));
    if (ok.admits != Admits::yes) {
      ++disagreements;
      CAPTURE(g.name);
      CHECK(ok.admits == Admits::yes);
    }
  }
  CHECK(disagreements == 0);
  CHECK(yes > 0);
  detail("200 pairs, " + std::to_string(yes) + " certified, " + std::to_string(disagreements) + " disagreements");
}

TEST_CASE("11. iota-invariant diagrams are antipodal") {
  std::vector<const RealForm*> forms;
  for (const auto& f : Catalog::builtin().forms())
    if (f.real_rank() <= 4) forms.push_back(&f);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(0, 3);
  int checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const RealForm& g = *forms[rng() % forms.size()];
    const BPlusCone cone = b_plus_basis(g.satake);
    RatVec weights(g.satake.rank(), Rational(0));
    for (const auto& gen : cone.generators) {
      const int c = coeff(rng);
      for (std::size_t i = 0; i < weights.size(); ++i) weights[i] += c * gen.weights[i];
    }
    const WeightedDynkinDiagram w{weights};
    REQUIRE(matches(w, g.satake));
    REQUIRE(is_iota_fixed(w, g.satake.type));
    const RatVec h = restricted_vector(g, w);
    RatVec minus = h;
    for (auto& x : minus) x = -x;
    const auto orbit = weyl_orbit(restricted_root_system(g), h);
    CAPTURE(g.name);
    CHECK(orbit.count(minus) == 1);
    ++checked;
  }
  detail(std::to_string(checked) + " diagrams over " + std::to_string(forms.size()) + " forms");
}

int main(int argc, char** argv) {
  doctest::Context context;
  context.setOption("reporters", "criteria");
  context.setOption("order-by", "file");
  context.applyCommandLine(argc, argv);
  const int rc = context.run();
  if (context.shouldExit()) return rc;
  return rc;
}
