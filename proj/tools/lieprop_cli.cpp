// Command-line front end. Exit codes: 0 success or "yes", 2 error, 3 "no",
// 4 "undetermined".

#include <CLI11.hpp>

#include <iostream>
#include <regex>
#include <set>
#include <string>

#include "lieprop/catalog.hpp"
#include "lieprop/cone.hpp"
#include "lieprop/examples_gen.hpp"
#include "lieprop/nilpotent.hpp"
#include "lieprop/proper.hpp"
#include "lieprop/render.hpp"

using namespace lieprop;

namespace {

constexpr int kExitError = 2;
constexpr int kExitNo = 3;
constexpr int kExitUndetermined = 4;

int verdict_exit(const ProperVerdict& v) {
  switch (v.admits) {
    case Admits::yes:
      return 0;
    case Admits::no:
      return kExitNo;
    case Admits::undetermined:
      break;
  }
  return kExitUndetermined;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  throw std::invalid_argument("format '" + format + "' is not available for this command");
}

int cmd_forms_list(const std::string& format) {
  require_format(format, {"text", "json"});
  const auto& forms = Catalog::builtin().forms();
  if (format == "json") {
    json a = json::array();
    for (const auto& f : forms) a.push_back(to_json(f));
    std::cout << a.dump(2) << "\n";
    return 0;
  }
  std::printf("%-12s %-5s %-10s %-9s %s\n", "name", "type", "restricted", "real rank", "a-hyp rank");
  for (const auto& f : forms)
    std::printf("%-12s %-5s %-10s %-9d %d\n", f.name.c_str(), to_string(f.satake.type).c_str(),
                to_string(f.restricted.restricted_type).c_str(), f.real_rank(), b_plus_basis(f.satake).dimension);
  std::cout << forms.size() << " real forms\n";
  return 0;
}

int cmd_forms_show(const std::string& name, const std::string& format) {
  const RealForm& f = catalog_lookup(name);
  if (format == "json") {
    std::cout << to_json(f).dump(2) << "\n";
  } else if (format == "dot") {
    std::cout << satake_dot(f.satake, f.name);
  } else if (format == "latex") {
    std::cout << satake_latex(f.satake);
  } else {
    require_format(format, {"text"});
    std::cout << f.name << "  (complex type " << to_string(f.satake.type) << ")\n" << satake_text(f.satake);
    std::cout << "restricted root system: " << to_string(f.restricted.restricted_type) << "\nrestriction:";
    for (int i = 0; i < f.satake.rank(); ++i)
      if (f.restricted.restriction[i] >= 0)
        std::cout << " a" << i + 1 << "->l" << f.restricted.restriction[i] + 1;
    std::cout << "\nreal rank: " << f.real_rank() << "\na-hyperbolic rank: " << b_plus_basis(f.satake).dimension << "\n";
  }
  return 0;
}

int cmd_orbits(const std::string& algebra, const std::string& format) {
  const LieType t = parse_classical_algebra(algebra);
  const auto rows = orbit_table(t);
  if (format == "json") {
    json a = json::array();
    for (const auto& r : rows) a.push_back(to_json(r));
    std::cout << json{{"algebra", to_string(t)}, {"orbits", a}}.dump(2) << "\n";
  } else if (format == "latex") {
    std::cout << orbit_table_latex(t, rows);
  } else {
    require_format(format, {"text"});
    std::cout << orbit_table_text(t, rows);
  }
  return 0;
}

int cmd_ahyp(const std::string& name, const std::string& format) {
  const RealForm& f = catalog_lookup(name);
  const BPlusCone cone = b_plus_basis(f.satake);
  if (format == "json") {
    json j = to_json(cone);
    j["name"] = f.name;
    j["real_rank"] = f.real_rank();
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  require_format(format, {"text"});
  std::cout << f.name << "\nreal rank: " << f.real_rank() << "\na-hyperbolic rank: " << cone.dimension
            << "\ngenerators:\n";
  for (const auto& g : cone.generators) std::cout << "  " << to_string(g) << "\n";
  return 0;
}

// "l2,l3" (restricted simple roots) or "a4,a6" (white Satake nodes), 1-based.
std::pair<char, std::set<int>> parse_node_list(const std::string& text) {
  std::set<int> out;
  char kind = 0;
  static const std::regex item(R"(^\s*([la])(\d+)\s*$)");
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const std::string tok = text.substr(start, end - start);
    start = end + 1;
    if (tok.empty()) continue;
    std::smatch m;
    if (!std::regex_match(tok, m, item)) throw std::invalid_argument("malformed node '" + tok + "'");
    const char k = m[1].str()[0];
    if (kind && kind != k) throw std::invalid_argument("mix of restricted (l) and Satake (a) nodes");
    kind = k;
    out.insert(std::stoi(m[2]) - 1);
  }
  return {kind ? kind : 'l', out};
}

// "[TYPE:]gen,gen,..." where each generator is a sum such as "l1+2l2".
Subsystem parse_subsystem(const RootSystem& sys, const std::string& text, std::string* expected_type) {
  std::string body = text;
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    *expected_type = text.substr(0, colon);
    body = text.substr(colon + 1);
  }
  std::vector<RootVector> gens;
  static const std::regex term(R"(([+-]?)(\d*)l(\d+))");
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t end = body.find(',', start);
    if (end == std::string::npos) end = body.size();
    const std::string tok = body.substr(start, end - start);
    start = end + 1;
    if (tok.empty()) continue;
    RootVector r{std::vector<int>(sys.rank(), 0)};
    std::size_t covered = 0;
    for (auto it = std::sregex_iterator(tok.begin(), tok.end(), term); it != std::sregex_iterator(); ++it) {
      const int k = std::stoi((*it)[3]) - 1;
      if (k < 0 || k >= sys.rank()) throw std::invalid_argument("restricted root index out of range in '" + tok + "'");
      int c = (*it)[2].length() ? std::stoi((*it)[2]) : 1;
      if ((*it)[1] == "-") c = -c;
      r.coeffs[k] += c;
      covered += it->length();
    }
    if (covered != tok.size()) throw std::invalid_argument("malformed generator '" + tok + "'");
    if (!sys.is_root(r)) throw std::invalid_argument("'" + tok + "' is not a restricted root");
    gens.push_back(r);
  }
  return closed_subsystem(sys, gens);
}

int print_verdict(const ProperVerdict& v, const std::string& format) {
  if (format == "json") {
    std::cout << to_json(v).dump(2) << "\n";
  } else {
    require_format(format, {"text"});
    std::cout << verdict_text(v);
  }
  return verdict_exit(v);
}

int cmd_examples_generate(const std::string& name, int depth, const std::string& format) {
  const RealFormId id = parse_form_name(name);
  const RealForm& f = catalog_lookup(id);
  std::vector<ExampleRecord> records;
  if (f.is_split()) records = split_case_generate(id, depth);
  for (auto& r : parabolic_procedure(id)) records.push_back(std::move(r));
  if (format == "json") {
    json a = json::array();
    for (const auto& r : records) a.push_back(to_json(r));
    std::cout << a.dump(2) << "\n";
  } else {
    require_format(format, {"text"});
    std::cout << records_text(records);
  }
  return 0;
}

int cmd_examples_verify(int max_rank, const std::string& format) {
  const auto checks = verify_published_lists(max_rank);
  if (format == "json") {
    json a = json::array();
    for (const auto& c : checks) a.push_back(to_json(c));
    std::cout << a.dump(2) << "\n";
  } else {
    require_format(format, {"text"});
    std::cout << list_report_text(checks);
  }
  for (const auto& s : summarize(checks))
    if (s.status() == CheckStatus::fail) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real simple Lie algebras: nilpotent orbits, a-hyperbolic ranks and proper SL(2,R)-actions"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "text, json, dot or latex")
      ->check(CLI::IsMember({"text", "json", "dot", "latex"}));

  auto* forms = app.add_subcommand("forms", "catalog of real forms");
  forms->require_subcommand(1);
  auto* forms_list = forms->add_subcommand("list", "list all real forms");
  auto* forms_show = forms->add_subcommand("show", "show one Satake diagram");
  std::string form_name;
  forms_show->add_option("name", form_name, "real form, e.g. su*10, so5,5, E6^IV")->required();

  auto* orbits = app.add_subcommand("orbits", "nilpotent orbit table of a classical complex algebra");
  std::string algebra;
  orbits->add_option("algebra", algebra, "e.g. sl4, sp6, so7, so8")->required();

  auto* ahyp = app.add_subcommand("ahyp", "a-hyperbolic rank and cone generators");
  ahyp->add_option("form", form_name, "real form")->required();

  auto* proper = app.add_subcommand("proper", "proper SL(2,R)-actions on G/H");
  proper->require_subcommand(1);
  auto* check = proper->add_subcommand("check", "decide for one G/H");
  std::string g_name, h_subsystem, h_white;
  bool h_rank1 = false, with_okuda = false;
  check->add_option("--g", g_name, "real form of G")->required();
  auto* o_rank1 = check->add_flag("--h-rank1", h_rank1, "H reductive of real rank one");
  auto* o_sub = check->add_option("--h-subsystem", h_subsystem, "restricted subsystem, e.g. A2:l1,l2");
  auto* o_white = check->add_option("--h-white", h_white, "restricted simple roots l2,l3 or white nodes a4,a6");
  o_rank1->excludes(o_sub)->excludes(o_white);
  o_sub->excludes(o_white);
  check->add_flag("--okuda", with_okuda, "with --h-subsystem: also run the orbit test for the principal vector");

  auto* examples = app.add_subcommand("examples", "homogeneous spaces with proper actions");
  examples->require_subcommand(1);
  auto* generate = examples->add_subcommand("generate", "generate certified examples for G");
  int depth = 1, max_rank = 8;
  generate->add_option("--g", g_name, "real form of G")->required();
  generate->add_option("--depth", depth, "extended-diagram levels for split forms")->check(CLI::Range(0, 4));
  auto* verify = examples->add_subcommand("verify-paper", "check the published example lists");
  verify->add_option("--max-rank", max_rank, "largest complex rank instantiated")->check(CLI::Range(2, 8));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (forms_list->parsed()) return cmd_forms_list(format);
    if (forms_show->parsed()) return cmd_forms_show(form_name, format);
    if (orbits->parsed()) return cmd_orbits(algebra, format);
    if (ahyp->parsed()) return cmd_ahyp(form_name, format);
    if (check->parsed()) {
      const RealFormId g = parse_form_name(g_name);
      if (h_rank1) return print_verdict(decide_rank_one(g), format);
      if (!h_white.empty()) {
        const auto [kind, nodes] = parse_node_list(h_white);
        return print_verdict(kind == 'a' ? white_subset_criterion_nodes(g, nodes) : white_subset_criterion(g, nodes),
                             format);
      }
      if (!h_subsystem.empty()) {
        const RealForm& f = catalog_lookup(g);
        const RootSystem& sys = restricted_root_system(f);
        std::string expected;
        const Subsystem sub = parse_subsystem(sys, h_subsystem, &expected);
        const std::string actual = subsystem_type_name(subsystem_components(sys, sub));
        if (!expected.empty() && expected != actual)
          throw std::invalid_argument("generators span " + actual + ", not " + expected);
        const ProperVerdict v = orthogonality_criterion(g, sub);
        const int code = print_verdict(v, format);
        if (with_okuda) {
          const ProperVerdict o = okuda_check(g, subsystem_span(sub), principal_restricted_vector(f), orbit_cap_from_env());
          std::cout << (format == "json" ? to_json(o).dump(2) + "\n" : "\n" + verdict_text(o));
        }
        return code;
      }
      throw std::invalid_argument("give one of --h-rank1, --h-subsystem or --h-white");
    }
    if (generate->parsed()) return cmd_examples_generate(g_name, depth, format);
    if (verify->parsed()) return cmd_examples_verify(max_rank, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
