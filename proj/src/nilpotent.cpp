#include "lieprop/nilpotent.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <regex>
#include <stdexcept>

namespace lieprop {

int PartitionLabel::sum() const {
  int s = 0;
  for (int d : parts) s += d;
  return s;
}

std::string to_string(const PartitionLabel& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.parts.size();) {
    std::size_t j = i;
    while (j < p.parts.size() && p.parts[j] == p.parts[i]) ++j;
    if (i) out += ",";
    out += std::to_string(p.parts[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  out += "]";
  if (p.tag == OrbitTag::I) out += "^I";
  if (p.tag == OrbitTag::II) out += "^II";
  return out;
}

PartitionLabel parse_partition(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  PartitionLabel p;
  static const std::regex tagged(R"(^\[?([0-9,^]+)\]?(\^(I|II|i|ii))?$)");
  std::smatch m;
  if (!std::regex_match(s, m, tagged)) throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
  const std::string tag = m[3].str();
  if (tag == "I" || tag == "i") p.tag = OrbitTag::I;
  if (tag == "II" || tag == "ii") p.tag = OrbitTag::II;
  static const std::regex part(R"((\d+)(\^(\d+))?)");
  const std::string body = m[1].str();
  std::size_t covered = 0, tokens = 0;
  for (auto it = std::sregex_iterator(body.begin(), body.end(), part); it != std::sregex_iterator(); ++it) {
    const int value = std::stoi((*it)[1]);
    const int mult = (*it)[3].matched ? std::stoi((*it)[3]) : 1;
    if (value <= 0 || mult <= 0) throw std::invalid_argument("partition parts must be positive");
    p.parts.insert(p.parts.end(), mult, value);
    covered += it->length();
    ++tokens;
  }
  const auto commas = static_cast<std::size_t>(std::count(body.begin(), body.end(), ','));
  if (p.parts.empty() || covered + commas != body.size() || tokens != commas + 1)
    throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
  std::sort(p.parts.rbegin(), p.parts.rend());
  return p;
}

int natural_dimension(const LieType& t) {
  switch (t.family) {
    case Family::A:
      return t.rank + 1;
    case Family::B:
      return 2 * t.rank + 1;
    case Family::C:
    case Family::D:
      return 2 * t.rank;
    default:
      throw std::invalid_argument("nilpotent orbit tables cover classical types only, not " + to_string(t));
  }
}

LieType parse_classical_algebra(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  static const std::regex named(R"(^(sl|so|sp)\(?(\d+)(,c)?\)?$)");
  std::smatch m;
  if (std::regex_match(s, m, named)) {
    const std::string kind = m[1];
    const int n = std::stoi(m[2]);
    LieType t;
    if (kind == "sl") {
      t = {Family::A, n - 1};
    } else if (kind == "sp") {
      if (n % 2) throw std::invalid_argument("sp(n) needs n even");
      t = {Family::C, n / 2};
    } else {
      t = n % 2 ? LieType{Family::B, (n - 1) / 2} : LieType{Family::D, n / 2};
    }
    t.validate();
    return t;
  }
  LieType t = parse_lie_type(text);
  natural_dimension(t);
  return t;
}

namespace {

std::map<int, int> multiplicities(const std::vector<int>& parts) {
  std::map<int, int> m;
  for (int d : parts) ++m[d];
  return m;
}

}  // namespace

bool is_very_even(const std::vector<int>& parts) {
  if (parts.empty()) return false;
  for (auto [d, k] : multiplicities(parts))
    if (d % 2 || k % 2) return false;
  return true;
}

bool is_valid_label(const LieType& t, const PartitionLabel& p) {
  if (p.parts.empty() || !std::is_sorted(p.parts.rbegin(), p.parts.rend()) || p.parts.back() <= 0) return false;
  if (p.sum() != natural_dimension(t)) return false;
  const auto mult = multiplicities(p.parts);
  auto parity_rule = [&](int part_parity) {
    for (auto [d, k] : mult)
      if (d % 2 == part_parity && k % 2) return false;
    return true;
  };
  switch (t.family) {
    case Family::A:
      return p.tag == OrbitTag::none;
    case Family::B:
      return p.tag == OrbitTag::none && parity_rule(0);
    case Family::C:
      return p.tag == OrbitTag::none && parity_rule(1);
    case Family::D:
      return parity_rule(0) && (is_very_even(p.parts) == (p.tag != OrbitTag::none));
    default:
      return false;
  }
}

std::vector<PartitionLabel> enumerate_orbits(const LieType& t, int n_ambient) {
  t.validate();
  if (n_ambient != natural_dimension(t))
    throw std::invalid_argument("ambient size " + std::to_string(n_ambient) + " does not fit " + to_string(t));
  std::vector<PartitionLabel> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      PartitionLabel p{parts, OrbitTag::none};
      if (t.family == Family::D && is_very_even(parts)) {
        for (OrbitTag tag : {OrbitTag::I, OrbitTag::II}) {
          p.tag = tag;
          out.push_back(p);
        }
      } else if (is_valid_label(t, p)) {
        out.push_back(p);
      }
      return;
    }
    for (int d = std::min(remaining, max_part); d >= 1; --d) {
      parts.push_back(d);
      rec(remaining - d, d);
      parts.pop_back();
    }
  };
  rec(n_ambient, n_ambient);
  return out;
}

std::vector<PartitionLabel> enumerate_orbits(const LieType& t) { return enumerate_orbits(t, natural_dimension(t)); }

std::vector<int> eigenvalue_strings(const PartitionLabel& p) {
  std::vector<int> out;
  for (int d : p.parts)
    for (int v = d - 1; v >= 1 - d; v -= 2) out.push_back(v);
  return out;
}

namespace {

void require_valid(const PartitionLabel& p, const LieType& t) {
  if (!is_valid_label(t, p)) throw std::invalid_argument(to_string(p) + " is not an orbit label for " + to_string(t));
}

// The largest half of the eigenvalues, sorted descending.
std::vector<int> half_profile(const PartitionLabel& p, const LieType& t) {
  auto all = eigenvalue_strings(p);
  std::sort(all.rbegin(), all.rend());
  all.resize(t.rank);
  return all;
}

}  // namespace

DiagonalProfile diagonal_profile(const PartitionLabel& p, const LieType& t) {
  require_valid(p, t);
  DiagonalProfile out;
  if (t.family == Family::A) {
    out.entries = eigenvalue_strings(p);
    std::sort(out.entries.rbegin(), out.entries.rend());
    return out;
  }
  const auto h = half_profile(p, t);
  if (t.family == Family::B) out.entries.push_back(0);
  out.entries.insert(out.entries.end(), h.begin(), h.end());
  for (int x : h) out.entries.push_back(-x);
  return out;
}

WeightedDynkinDiagram weighted_dynkin(const PartitionLabel& p, const LieType& t) {
  require_valid(p, t);
  const int n = t.rank;
  std::vector<int> w(n);
  if (t.family == Family::A) {
    const auto h = diagonal_profile(p, t).entries;
    for (int i = 0; i < n; ++i) w[i] = h[i] - h[i + 1];
    return weighted_from_ints(w);
  }
  const auto h = half_profile(p, t);
  for (int i = 0; i + 1 < n; ++i) w[i] = h[i] - h[i + 1];
  switch (t.family) {
    case Family::B:
      w[n - 1] = h[n - 1];
      break;
    case Family::C:
      w[n - 1] = 2 * h[n - 1];
      break;
    case Family::D:
      if (p.tag == OrbitTag::none) {
        w[n - 2] = h[n - 2] - h[n - 1];
        w[n - 1] = h[n - 2] + h[n - 1];
      } else {
        // Very even labels: the fork carries (a, 2-a) with a = 0 when 4 | n,
        // and the second orbit of the pair swaps the fork.
        const int a = n % 4 == 0 ? 0 : 2;
        w[n - 2] = p.tag == OrbitTag::I ? a : 2 - a;
        w[n - 1] = p.tag == OrbitTag::I ? 2 - a : a;
      }
      break;
    default:
      break;
  }
  return weighted_from_ints(w);
}

}  // namespace lieprop
