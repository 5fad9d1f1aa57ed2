#include "lieprop/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lieprop/diagram.hpp"

namespace lieprop {

LieType RestrictedRootDatum::reduced_type() const {
  if (restricted_type.family != Family::BC) return restricted_type;
  return restricted_type.rank == 1 ? LieType{Family::A, 1} : LieType{Family::B, restricted_type.rank};
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::pair<int, int> parse_pair(const std::string& token, char sep, int rank) {
  const auto pos = token.find(sep);
  if (pos == std::string::npos) throw std::invalid_argument("malformed pair '" + token + "'");
  int a = 0, b = 0;
  try {
    a = std::stoi(token.substr(0, pos));
    b = std::stoi(token.substr(pos + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed pair '" + token + "'");
  }
  if (a < 1 || a > rank) throw std::invalid_argument("node " + std::to_string(a) + " out of range");
  return {a - 1, b - 1};
}

RealForm parse_record(const std::string& line) {
  const auto fields = split(line, '|');
  if (fields.size() != 6) throw std::invalid_argument("expected 6 fields, found " + std::to_string(fields.size()));
  RealForm f;
  f.name = fields[0];
  if (f.name.empty()) throw std::invalid_argument("empty name");
  SatakeDiagram& s = f.satake;
  s.type = parse_lie_type(fields[1]);
  if (s.type.family == Family::BC) throw std::invalid_argument("BC is not a complex type");
  const int n = s.type.rank;
  if (static_cast<int>(fields[2].size()) != n) throw std::invalid_argument("colors do not match rank");
  for (char c : fields[2]) {
    if (c != '0' && c != '1') throw std::invalid_argument("colors must be a bitstring");
    s.colors.push_back(c == '1' ? NodeColor::black : NodeColor::white);
  }
  s.partner.assign(n, -1);
  if (fields[3] != "-")
    for (const auto& tok : words(fields[3])) {
      auto [a, b] = parse_pair(tok, '-', n);
      if (b < 0 || b >= n) throw std::invalid_argument("arrow endpoint out of range");
      if (s.partner[a] >= 0 || s.partner[b] >= 0) throw std::invalid_argument("node has two arrows");
      s.partner[a] = b;
      s.partner[b] = a;
    }
  s.validate();

  RestrictedRootDatum& r = f.restricted;
  r.restricted_type = parse_lie_type(fields[4]);
  r.restriction.assign(n, -1);
  const int m = r.restricted_type.rank;
  for (const auto& tok : words(fields[5])) {
    auto [node, k] = parse_pair(tok, ':', n);
    if (k < 0 || k >= m) throw std::invalid_argument("restricted index out of range in '" + tok + "'");
    if (s.is_black(node)) throw std::invalid_argument("black node in restriction map");
    if (r.restriction[node] >= 0) throw std::invalid_argument("node restricted twice");
    r.restriction[node] = k;
  }
  std::set<int> hit;
  for (int i = 0; i < n; ++i) {
    if (!s.is_black(i) && r.restriction[i] < 0) throw std::invalid_argument("white node without restriction");
    if (s.partner[i] >= 0 && r.restriction[i] != r.restriction[s.partner[i]])
      throw std::invalid_argument("arrow-joined nodes restrict differently");
    if (r.restriction[i] >= 0) hit.insert(r.restriction[i]);
  }
  if (static_cast<int>(hit.size()) != m) throw std::invalid_argument("restriction map is not surjective");
  return f;
}

std::string lower(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

std::string upper(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

[[noreturn]] void reject(std::string_view text, const std::string& why) {
  throw std::invalid_argument("'" + std::string(text) + "': " + why);
}

std::string pq(const std::string& kind, int p, int q) {
  return kind + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

std::string canonical_two_param(std::string_view text, const std::string& kind, int p, int q) {
  if (p > q) reject(text, "write the smaller index first, as " + pq(kind, q, p));
  if (p == 0) reject(text, "compact form; only noncompact forms are catalogued");
  if (kind == "su") {
    if (p == 1 && q == 1) return "sl(2,R)";
    return pq(kind, p, q);
  }
  if (kind == "sp") return pq(kind, p, q);
  // so(p,q)
  const int n = p + q;
  if (n < 3) reject(text, "not simple");
  if (n == 3) return "sl(2,R)";
  if (n == 4) reject(text, p == 1 ? "complex simple algebra viewed as real; not catalogued" : "not simple");
  if (n == 6) {
    if (p == 1) return "su*(4)";
    if (p == 2) return "su(2,2)";
    return "sl(4,R)";
  }
  return pq(kind, p, q);
}

int to_int(const std::string& s) { return std::stoi(s); }

}  // namespace

RealFormId parse_form_name(std::string_view text) {
  const std::string s = lower(text);
  std::smatch m;
  static const std::regex exceptional(R"(^([efg])([2-8])\^?(i|ii|iii|iv|v|vi|vii|viii|ix|\*)?$)");
  static const std::regex sl_r(R"(^sl\(?(\d+),?r\)?$)");
  static const std::regex star(R"(^(su|so)\*\(?(\d+)\)?$)");
  static const std::regex sp_r(R"(^sp\(?(\d+),?r\)?$)");
  static const std::regex two(R"(^(su|so|sp)\(?(\d+),(\d+)\)?$)");
  static const std::regex two_digits(R"(^(su|so|sp)(\d)(\d)$)");

  if (std::regex_match(s, m, exceptional)) {
    const std::string fam = upper(m[1].str()), rank = m[2].str(), tag = m[3].str();
    if (fam == "G" && rank == "2" && (tag.empty() || tag == "*")) return {"G2^*"};
    static const std::map<std::string, std::set<std::string>> allowed = {
        {"E6", {"I", "II", "III", "IV"}}, {"E7", {"V", "VI", "VII"}}, {"E8", {"VIII", "IX"}}, {"F4", {"I", "II"}}};
    auto it = allowed.find(fam + rank);
    if (it == allowed.end() || !it->second.count(upper(tag)))
      reject(text, "unknown exceptional real form");
    return {fam + rank + "^" + upper(tag)};
  }
  if (std::regex_match(s, m, sl_r)) {
    const int n = to_int(m[1]);
    if (n < 2) reject(text, "sl(n,R) needs n >= 2");
    return {"sl(" + std::to_string(n) + ",R)"};
  }
  if (std::regex_match(s, m, star)) {
    const std::string kind = m[1];
    const int n = to_int(m[2]);
    if (n % 2 != 0) reject(text, kind + "*(n) needs n even");
    if (kind == "su") {
      if (n < 4) reject(text, "compact form; only noncompact forms are catalogued");
      return {"su*(" + std::to_string(n) + ")"};
    }
    if (n < 6) reject(text, "not simple");
    if (n == 6) return {"su(1,3)"};
    return {"so*(" + std::to_string(n) + ")"};
  }
  if (std::regex_match(s, m, sp_r)) {
    const int n = to_int(m[1]);
    if (n % 2 != 0 || n < 2) reject(text, "sp(n,R) needs n even and positive");
    if (n == 2) return {"sl(2,R)"};
    return {"sp(" + std::to_string(n) + ",R)"};
  }
  if (std::regex_match(s, m, two) || std::regex_match(s, m, two_digits))
    return {canonical_two_param(text, m[1], to_int(m[2]), to_int(m[3]))};
  reject(text, "unrecognized real form name");
}

std::vector<RealForm> parse_catalog(std::string_view text) {
  std::vector<RealForm> out;
  std::set<std::string> names;
  int lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string line = trim(text.substr(start, end - start));
    ++lineno;
    start = end + 1;
    if (line.empty() || line[0] == '#') continue;
    try {
      RealForm f = parse_record(line);
      if (!names.insert(f.name).second) throw std::invalid_argument("duplicate name " + f.name);
      out.push_back(std::move(f));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("catalog line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::uint64_t catalog_checksum(std::string_view text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

Catalog::Catalog(std::vector<RealForm> forms) : forms_(std::move(forms)) {}

const Catalog& Catalog::builtin() {
  static const Catalog instance(parse_catalog(embedded_catalog_text()));
  return instance;
}

const RealForm* Catalog::find(std::string_view canonical_name) const {
  for (const auto& f : forms_)
    if (f.name == canonical_name) return &f;
  return nullptr;
}

const RealForm& Catalog::lookup(const RealFormId& id) const {
  if (const RealForm* f = find(id.name)) return *f;
  throw std::invalid_argument("'" + id.name + "' is not in the catalog");
}

const RealForm& catalog_lookup(const RealFormId& id) { return Catalog::builtin().lookup(id); }

const RealForm& catalog_lookup(std::string_view text) { return catalog_lookup(parse_form_name(text)); }

int real_rank(const RealFormId& id) { return catalog_lookup(id).real_rank(); }

std::string compact_form_name(const LieType& t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A:
      return "su(" + std::to_string(n + 1) + ")";
    case Family::B:
      return "so(" + std::to_string(2 * n + 1) + ")";
    case Family::C:
      return "sp(" + std::to_string(n) + ")";
    case Family::D:
      return "so(" + std::to_string(2 * n) + ")";
    case Family::E:
    case Family::F:
    case Family::G:
      return lower(to_string(t));
    case Family::BC:
      break;
  }
  throw std::invalid_argument("no compact form for " + to_string(t));
}

std::string identify_real_form(const SatakeDiagram& s) {
  if (s.white_nodes().empty()) return compact_form_name(s.type);
  // An exact match wins, so triality twins such as so*(8) and so(2,6) keep their names.
  for (const auto& f : Catalog::builtin().forms())
    if (f.satake == s) return f.name;
  const IntMat cartan = cartan_from_gram(simple_root_gram(s.type));
  Decoration deco;
  for (int i = 0; i < s.rank(); ++i) deco.color.push_back(s.is_black(i) ? 1 : 0);
  deco.partner = s.partner;
  // Same family first so that, e.g., a split C2 is named sp(4,R) rather than so(2,3).
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& f : Catalog::builtin().forms()) {
      const SatakeDiagram& t = f.satake;
      const bool same = t.type == s.type;
      if (pass == 0 ? !same : (same || !isomorphic_types(t.type, s.type))) continue;
      Decoration other;
      for (int i = 0; i < t.rank(); ++i) other.color.push_back(t.is_black(i) ? 1 : 0);
      other.partner = t.partner;
      if (!diagram_isomorphisms(cartan, deco, cartan_from_gram(simple_root_gram(t.type)), other, 1).empty())
        return f.name;
    }
  throw std::invalid_argument("Satake diagram of type " + to_string(s.type) + " matches no catalog entry");
}

}  // namespace lieprop
