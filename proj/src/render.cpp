#include "lieprop/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "lieprop/diagram.hpp"
#include "lieprop/parabolic.hpp"

namespace lieprop {

namespace {

const char* const kWhite = "○";
const char* const kBlack = "●";

struct Layout {
  std::vector<int> chain;
  int branch = -1;  // node drawn on the fork line
  int attach = -1;  // chain position it hangs from
};

Layout layout_of(const LieType& t) {
  Layout l;
  const int n = t.rank;
  if ((t.family == Family::D && n >= 4) || t.family == Family::E) {
    for (int i = 0; i + 1 < n; ++i) l.chain.push_back(i);
    l.branch = n - 1;
    l.attach = t.family == Family::D ? n - 3 : 2;
  } else {
    for (int i = 0; i < n; ++i) l.chain.push_back(i);
  }
  return l;
}

// One display column per cell.
using Line = std::vector<std::string>;

void put(Line& line, std::size_t col, const std::string& text) {
  // Multibyte symbols occupy one cell; ASCII text one cell per byte.
  std::vector<std::string> glyphs;
  for (std::size_t i = 0; i < text.size();) {
    std::size_t len = 1;
    const auto c = static_cast<unsigned char>(text[i]);
    if (c >= 0xF0) len = 4;
    else if (c >= 0xE0) len = 3;
    else if (c >= 0xC0) len = 2;
    glyphs.push_back(text.substr(i, len));
    i += len;
  }
  if (line.size() < col + glyphs.size()) line.resize(col + glyphs.size(), " ");
  for (std::size_t k = 0; k < glyphs.size(); ++k) line[col + k] = glyphs[k];
}

std::string join(const Line& line) {
  std::string s;
  for (const auto& g : line) s += g;
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

std::string bond(const IntMat& cartan, int left, int right, std::size_t width) {
  const int a = -cartan[left][right], b = -cartan[right][left];
  if (a == 0) return std::string(width, ' ');
  auto repeat = [](const std::string& g, std::size_t k) {
    std::string s;
    for (std::size_t i = 0; i < k; ++i) s += g;
    return s;
  };
  if (a == b) return repeat("─", width);
  const std::string body = std::max(a, b) == 2 ? "=" : "≡";
  // The arrow points at the short root; a > b means the left root is long.
  return a > b ? repeat(body, width - 1) + ">" : "<" + repeat(body, width - 1);
}

std::string diagram_art(const LieType& t, const std::vector<std::string>& symbols, const std::vector<std::string>& above,
                        const std::vector<std::string>& below) {
  const Layout l = layout_of(t);
  const IntMat cartan = cartan_from_gram(simple_root_gram(t));
  std::size_t widest = 1;
  for (const auto& v : {above, below})
    for (const auto& s : v) widest = std::max(widest, s.size());
  const std::size_t step = std::max<std::size_t>(3, widest + 1);
  Line top, mid, bottom;
  for (std::size_t k = 0; k < l.chain.size(); ++k) {
    const int node = l.chain[k];
    if (!above.empty()) put(top, k * step, above[node]);
    put(mid, k * step, symbols[node]);
    if (k + 1 < l.chain.size()) put(mid, k * step + 1, bond(cartan, node, l.chain[k + 1], step - 1));
    if (!below.empty()) put(bottom, k * step, below[node]);
  }
  std::string out;
  if (!above.empty()) out += join(top) + "\n";
  out += join(mid) + "\n";
  if (!below.empty()) out += join(bottom) + "\n";
  if (l.branch >= 0) {
    Line stem, fork;
    const std::size_t col = static_cast<std::size_t>(l.attach) * step;
    put(stem, col, "│");
    put(fork, col, symbols[l.branch]);
    const std::string& tag = !below.empty() ? below[l.branch] : above[l.branch];
    put(fork, col + 2, tag);
    out += join(stem) + "\n" + join(fork) + "\n";
  }
  return out;
}

}  // namespace

std::string satake_text(const SatakeDiagram& s) {
  std::vector<std::string> symbols, numbers;
  for (int i = 0; i < s.rank(); ++i) {
    symbols.push_back(s.is_black(i) ? kBlack : kWhite);
    numbers.push_back(std::to_string(i + 1));
  }
  std::string out = diagram_art(s.type, symbols, {}, numbers);
  std::string arrows;
  for (int i = 0; i < s.rank(); ++i)
    if (s.partner[i] > i) arrows += (arrows.empty() ? "" : " ") + std::to_string(i + 1) + "<->" + std::to_string(s.partner[i] + 1);
  if (!arrows.empty()) out += "arrows: " + arrows + "\n";
  return out;
}

std::string weighted_text(const WeightedDynkinDiagram& w, const LieType& t) {
  if (static_cast<int>(w.size()) != t.rank) throw std::invalid_argument("weighted diagram does not fit the type");
  std::vector<std::string> symbols(t.rank, kWhite), weights;
  for (const auto& q : w.weights) weights.push_back(to_string(q));
  return diagram_art(t, symbols, weights, {});
}

std::string satake_dot(const SatakeDiagram& s, const std::string& name) {
  std::ostringstream out;
  const IntMat cartan = cartan_from_gram(simple_root_gram(s.type));
  out << "graph \"" << name << "\" {\n  node [shape=circle, label=\"\", width=0.25];\n";
  for (int i = 0; i < s.rank(); ++i)
    out << "  a" << i + 1 << " [xlabel=\"" << i + 1 << "\", style=filled, fillcolor=" << (s.is_black(i) ? "black" : "white")
        << "];\n";
  for (int i = 0; i < s.rank(); ++i)
    for (int j = i + 1; j < s.rank(); ++j) {
      if (cartan[i][j] == 0) continue;
      const int lace = std::max(-cartan[i][j], -cartan[j][i]);
      out << "  a" << i + 1 << " -- a" << j + 1;
      if (lace > 1) out << " [label=\"" << lace << "\", penwidth=" << lace << "]";
      out << ";\n";
    }
  for (int i = 0; i < s.rank(); ++i)
    if (s.partner[i] > i)
      out << "  a" << i + 1 << " -- a" << s.partner[i] + 1 << " [style=dashed, dir=both, constraint=false];\n";
  out << "}\n";
  return out.str();
}

namespace {

std::string latex_bond(const IntMat& cartan, int left, int right) {
  const int a = -cartan[left][right], b = -cartan[right][left];
  if (a == b) return "\\ar@{-}[r]";
  const std::string body = std::max(a, b) == 2 ? "=" : "3";
  return a > b ? "\\ar@{" + body + ">}[r]" : "\\ar@{<" + body + "}[r]";
}

std::string latex_row(const LieType& t, const std::vector<std::string>& cells) {
  const Layout l = layout_of(t);
  const IntMat cartan = cartan_from_gram(simple_root_gram(t));
  std::string row;
  for (std::size_t k = 0; k < l.chain.size(); ++k) {
    if (k) row += "&";
    row += cells[l.chain[k]];
    if (k + 1 < l.chain.size()) row += " " + latex_bond(cartan, l.chain[k], l.chain[k + 1]);
  }
  return row;
}

}  // namespace

std::string satake_latex(const SatakeDiagram& s) {
  std::vector<std::string> cells;
  for (int i = 0; i < s.rank(); ++i) cells.push_back(s.is_black(i) ? "{\\bullet}" : "{\\circ}");
  const Layout l = layout_of(s.type);
  std::string out = "\\xymatrix@1@R=2pt@!C=3pt{\n" + latex_row(s.type, cells);
  if (l.branch >= 0) {
    out += " \\\\\n";
    for (int k = 0; k < l.attach; ++k) out += "&";
    out += cells[l.branch] + " \\ar@{-}[u]";
  }
  out += " }";
  std::string arrows;
  for (int i = 0; i < s.rank(); ++i)
    if (s.partner[i] > i)
      arrows += (arrows.empty() ? "" : ", ") + std::string("\\alpha_{") + std::to_string(i + 1) + "}\\leftrightarrow\\alpha_{" +
                std::to_string(s.partner[i] + 1) + "}";
  if (!arrows.empty()) out += "\\quad " + arrows;
  return out + "\n";
}

std::string weights_inline(const WeightedDynkinDiagram& w) {
  std::string out;
  for (const auto& q : w.weights) out += (out.empty() ? "" : " ") + to_string(q);
  return out;
}

std::string diag_string(const std::vector<int>& entries) {
  std::string out = "diag(";
  for (std::size_t i = 0; i < entries.size(); ++i) out += (i ? "," : "") + std::to_string(entries[i]);
  return out + ")";
}

std::vector<OrbitRow> orbit_table(const LieType& t) {
  std::vector<OrbitRow> rows;
  for (const auto& p : enumerate_orbits(t))
    rows.push_back({p, eigenvalue_strings(p), diagonal_profile(p, t), weighted_dynkin(p, t)});
  return rows;
}

std::string orbit_table_text(const LieType& t, const std::vector<OrbitRow>& rows) {
  const bool with_h = t.family == Family::A;
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"Orbit"};
  if (with_h) header.push_back("H");
  header.push_back("H~");
  header.push_back("Weighted diagram");
  cells.push_back(header);
  for (const auto& r : rows) {
    std::vector<std::string> line{"O_" + to_string(r.label)};
    if (with_h) line.push_back(diag_string(r.eigenvalues));
    line.push_back(diag_string(r.profile.entries));
    line.push_back(weights_inline(r.weights));
    cells.push_back(line);
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : cells)
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  std::string out = "Nilpotent orbits for " + complex_form_name(t) + "\n";
  for (const auto& line : cells) {
    std::string s;
    for (std::size_t c = 0; c < line.size(); ++c) {
      s += line[c];
      if (c + 1 < line.size()) s += std::string(width[c] - line[c].size() + 2, ' ');
    }
    out += s + "\n";
  }
  return out;
}

std::string orbit_table_latex(const LieType& t, const std::vector<OrbitRow>& rows) {
  const bool with_h = t.family == Family::A;
  const int cols = with_h ? 4 : 3;
  std::string algebra = complex_form_name(t);
  const auto comma = algebra.find(",C)");
  const std::string base = algebra.substr(0, algebra.find('('));
  const std::string arg = algebra.substr(algebra.find('(') + 1, comma - algebra.find('(') - 1);
  std::string out = "\\begin{tabular}{|" + std::string(with_h ? "c|c|c|c|" : "c|c|c|") + "}\n\\hline\n";
  out += "\\multicolumn{" + std::to_string(cols) + "}{|c|}{Nilpotent orbits for $\\mathfrak{" + base + "}(" + arg +
         ",\\mathbb{C})$} \\\\\n\\hline\n";
  out += with_h ? "Orbit & $H_{[d_1,\\ldots,d_n]}$ & $\\tilde{H}_{[d_1,\\ldots,d_n]}$ & Weighted Dynkin diagram \\\\\n"
                : "Orbit & $\\tilde{H}$ & Weighted Dynkin diagram \\\\\n";
  out += "\\hline\n";
  auto diag = [](const std::vector<int>& e) {
    std::string s = "$\\mathrm{diag} (";
    for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
    return s + ")$";
  };
  std::vector<std::string> circles(t.rank, "{\\circ}");
  for (const auto& r : rows) {
    out += "$O_{" + to_string(r.label) + "}$ & ";
    if (with_h) out += diag(r.eigenvalues) + " & ";
    out += diag(r.profile.entries) + " & $\\xymatrix@1@R=2pt@!C=3pt{\n";
    std::string top;
    const Layout l = layout_of(t);
    for (std::size_t k = 0; k < l.chain.size(); ++k) top += (k ? " & " : "") + to_string(r.weights.weights[l.chain[k]]);
    out += top + " \\\\\n" + latex_row(t, circles) + " }$ \\\\\n\\hline\n";
  }
  return out + "\\end{tabular}\n";
}

std::string verdict_text(const ProperVerdict& v) {
  std::string out = "verdict: " + to_string(v.admits) + "\ncriterion: " + to_string(v.criterion) + "\n";
  if (v.orthogonal_root) {
    out += "orthogonal root: ";
    if (v.extended_node) out += "lambda" + std::to_string(*v.extended_node) + " = ";
    out += to_string(to_rational(v.orthogonal_root->coeffs)) + "\n";
  }
  for (const auto& g : v.generators) out += "generator: " + to_string(g) + "\n";
  if (v.orbit_diagram) out += "orbit diagram: " + to_string(*v.orbit_diagram) + "\n";
  if (v.meeting_point) out += "meets a_h at: " + to_string(*v.meeting_point) + "\n";
  if (!v.note.empty()) out += "note: " + v.note + "\n";
  return out;
}

std::string records_text(const std::vector<ExampleRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    out += r.g + " / " + r.h + "  [" + r.method + "]  subsystem " + r.subsystem_type;
    if (!r.restricted_subset.empty()) {
      out += "  C={";
      for (std::size_t i = 0; i < r.restricted_subset.size(); ++i)
        out += (i ? "," : "") + std::string("l") + std::to_string(r.restricted_subset[i] + 1);
      out += "}";
    }
    out += "  gamma=";
    if (r.witness_node) out += "l" + std::to_string(*r.witness_node) + "=";
    out += to_string(to_rational(r.witness.coeffs));
    if (r.method == "parabolic" && !r.extended_node_rule) out += "  (complement found by search)";
    out += "\n";
  }
  out += std::to_string(records.size()) + " records\n";
  return out;
}

std::string list_report_text(const std::vector<ListCheck>& checks) {
  std::string out;
  for (const auto& c : checks) out += "[" + to_string(c.status) + "] " + c.instance + ": " + c.detail + "\n";
  out += "\nFamilies:\n";
  int pass = 0, fail = 0, skip = 0, classical_pass = 0;
  for (const auto& s : summarize(checks)) {
    out += "  [" + to_string(s.status()) + "] " + s.list + (s.exceptional ? " exceptional: " : " classical: ") + s.family +
           " (" + std::to_string(s.passed) + " passed, " + std::to_string(s.failed) + " failed, " +
           std::to_string(s.skipped) + " skipped)\n";
    switch (s.status()) {
      case CheckStatus::pass:
        ++pass;
        if (!s.exceptional) ++classical_pass;
        break;
      case CheckStatus::fail:
        ++fail;
        break;
      case CheckStatus::skipped:
        ++skip;
        break;
    }
  }
  out += "\nSummary: " + std::to_string(pass) + " families passed (" + std::to_string(classical_pass) + " classical), " +
         std::to_string(fail) + " failed, " + std::to_string(skip) + " skipped\n";
  return out;
}

// ---- JSON ----

json rational_json(const Rational& q) {
  if (q.denominator() == 1) return q.numerator();
  return to_string(q);
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  const auto s = j.get<std::string>();
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(std::stoll(s));
  return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

namespace {

json vec_json(const RatVec& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(rational_json(q));
  return a;
}

RatVec vec_from_json(const json& j) {
  RatVec v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

json root_json(const RootVector& r) { return r.coeffs; }
RootVector root_from_json(const json& j) { return {j.get<std::vector<int>>()}; }

template <class E>
E enum_from(const std::string& s, std::initializer_list<E> values) {
  for (E e : values)
    if (to_string(e) == s) return e;
  throw std::invalid_argument("unknown value '" + s + "'");
}

}  // namespace

json to_json(const WeightedDynkinDiagram& w) { return vec_json(w.weights); }
WeightedDynkinDiagram weighted_from_json(const json& j) { return {vec_from_json(j)}; }

json to_json(const SatakeDiagram& s) {
  std::string colors;
  json arrows = json::array();
  for (int i = 0; i < s.rank(); ++i) {
    colors += s.is_black(i) ? '1' : '0';
    if (s.partner[i] > i) arrows.push_back({i + 1, s.partner[i] + 1});
  }
  return {{"type", to_string(s.type)}, {"colors", colors}, {"arrows", arrows}};
}

SatakeDiagram satake_from_json(const json& j) {
  SatakeDiagram s;
  s.type = parse_lie_type(j.at("type").get<std::string>());
  for (char c : j.at("colors").get<std::string>()) s.colors.push_back(c == '1' ? NodeColor::black : NodeColor::white);
  s.partner.assign(s.colors.size(), -1);
  for (const auto& a : j.at("arrows")) {
    const int x = a.at(0).get<int>() - 1, y = a.at(1).get<int>() - 1;
    s.partner.at(x) = y;
    s.partner.at(y) = x;
  }
  s.validate();
  return s;
}

json to_json(const RealForm& f) {
  json restriction = json::array();
  for (int k : f.restricted.restriction) restriction.push_back(k < 0 ? json(nullptr) : json(k + 1));
  return {{"name", f.name},
          {"satake", to_json(f.satake)},
          {"restricted_type", to_string(f.restricted.restricted_type)},
          {"restriction", restriction},
          {"real_rank", f.real_rank()},
          {"a_hyperbolic_rank", b_plus_basis(f.satake).dimension},
          {"split", f.is_split()}};
}

RealForm real_form_from_json(const json& j) {
  RealForm f;
  f.name = j.at("name").get<std::string>();
  f.satake = satake_from_json(j.at("satake"));
  f.restricted.restricted_type = parse_lie_type(j.at("restricted_type").get<std::string>());
  for (const auto& k : j.at("restriction")) f.restricted.restriction.push_back(k.is_null() ? -1 : k.get<int>() - 1);
  return f;
}

json to_json(const PartitionLabel& p) {
  json tag = p.tag == OrbitTag::none ? json(nullptr) : json(p.tag == OrbitTag::I ? "I" : "II");
  return {{"label", to_string(p)}, {"parts", p.parts}, {"tag", tag}};
}

PartitionLabel partition_from_json(const json& j) {
  PartitionLabel p{j.at("parts").get<std::vector<int>>(), OrbitTag::none};
  const auto& tag = j.at("tag");
  if (!tag.is_null()) p.tag = tag.get<std::string>() == "I" ? OrbitTag::I : OrbitTag::II;
  return p;
}

json to_json(const OrbitRow& r) {
  return {{"orbit", to_json(r.label)},
          {"H", r.eigenvalues},
          {"profile", r.profile.entries},
          {"weights", to_json(r.weights)}};
}

OrbitRow orbit_row_from_json(const json& j) {
  return {partition_from_json(j.at("orbit")), j.at("H").get<std::vector<int>>(),
          {j.at("profile").get<std::vector<int>>()}, weighted_from_json(j.at("weights"))};
}

json to_json(const ProperVerdict& v) {
  json j = {{"admits", to_string(v.admits)}, {"criterion", to_string(v.criterion)}};
  j["orthogonal_root"] = v.orthogonal_root ? root_json(*v.orthogonal_root) : json(nullptr);
  j["extended_node"] = v.extended_node ? json(*v.extended_node) : json(nullptr);
  json gens = json::array();
  for (const auto& g : v.generators) gens.push_back(to_json(g));
  j["generators"] = gens;
  j["orbit_diagram"] = v.orbit_diagram ? to_json(*v.orbit_diagram) : json(nullptr);
  j["meeting_point"] = v.meeting_point ? vec_json(*v.meeting_point) : json(nullptr);
  j["note"] = v.note;
  return j;
}

ProperVerdict verdict_from_json(const json& j) {
  ProperVerdict v;
  v.admits = enum_from<Admits>(j.at("admits").get<std::string>(), {Admits::yes, Admits::no, Admits::undetermined});
  v.criterion = enum_from<Criterion>(j.at("criterion").get<std::string>(),
                                     {Criterion::rank_one, Criterion::orthogonality, Criterion::okuda,
                                      Criterion::kobayashi, Criterion::subgroup_closure});
  if (!j.at("orthogonal_root").is_null()) v.orthogonal_root = root_from_json(j.at("orthogonal_root"));
  if (!j.at("extended_node").is_null()) v.extended_node = j.at("extended_node").get<int>();
  for (const auto& g : j.at("generators")) v.generators.push_back(weighted_from_json(g));
  if (!j.at("orbit_diagram").is_null()) v.orbit_diagram = weighted_from_json(j.at("orbit_diagram"));
  if (!j.at("meeting_point").is_null()) v.meeting_point = vec_from_json(j.at("meeting_point"));
  v.note = j.at("note").get<std::string>();
  return v;
}

json to_json(const ExampleRecord& r) {
  json gens = json::array();
  for (const auto& g : r.generators) gens.push_back(root_json(g));
  return {{"g", r.g},
          {"h", r.h},
          {"h_components", r.h_components},
          {"method", r.method},
          {"subsystem_type", r.subsystem_type},
          {"generators", gens},
          {"restricted_subset", r.restricted_subset},
          {"deleted_nodes", r.deleted_nodes},
          {"criterion", to_string(r.criterion)},
          {"witness", root_json(r.witness)},
          {"witness_node", r.witness_node ? json(*r.witness_node) : json(nullptr)},
          {"extended_node_rule", r.extended_node_rule}};
}

ExampleRecord record_from_json(const json& j) {
  ExampleRecord r;
  r.g = j.at("g").get<std::string>();
  r.h = j.at("h").get<std::string>();
  r.h_components = j.at("h_components").get<std::vector<std::string>>();
  r.method = j.at("method").get<std::string>();
  r.subsystem_type = j.at("subsystem_type").get<std::string>();
  for (const auto& g : j.at("generators")) r.generators.push_back(root_from_json(g));
  r.restricted_subset = j.at("restricted_subset").get<std::vector<int>>();
  r.deleted_nodes = j.at("deleted_nodes").get<std::vector<int>>();
  r.criterion = enum_from<Criterion>(j.at("criterion").get<std::string>(),
                                     {Criterion::rank_one, Criterion::orthogonality, Criterion::okuda,
                                      Criterion::kobayashi, Criterion::subgroup_closure});
  r.witness = root_from_json(j.at("witness"));
  if (!j.at("witness_node").is_null()) r.witness_node = j.at("witness_node").get<int>();
  r.extended_node_rule = j.at("extended_node_rule").get<bool>();
  return r;
}

json to_json(const ListCheck& c) {
  return {{"list", c.list},         {"family", c.family}, {"instance", c.instance},
          {"exceptional", c.exceptional}, {"status", to_string(c.status)}, {"detail", c.detail}};
}

ListCheck list_check_from_json(const json& j) {
  return {j.at("list").get<std::string>(),
          j.at("family").get<std::string>(),
          j.at("instance").get<std::string>(),
          j.at("exceptional").get<bool>(),
          enum_from<CheckStatus>(j.at("status").get<std::string>(),
                                 {CheckStatus::pass, CheckStatus::fail, CheckStatus::skipped}),
          j.at("detail").get<std::string>()};
}

json to_json(const BPlusCone& c) {
  json gens = json::array();
  for (const auto& g : c.generators) gens.push_back(to_json(g));
  return {{"dimension", c.dimension}, {"generators", gens}};
}

BPlusCone cone_from_json(const json& j) {
  BPlusCone c;
  c.dimension = j.at("dimension").get<int>();
  for (const auto& g : j.at("generators")) c.generators.push_back(weighted_from_json(g));
  return c;
}

}  // namespace lieprop
