#include "lieprop/lie_type.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace lieprop {

void LieType::validate() const {
  auto fail = [&](const char* why) {
    throw std::invalid_argument("invalid Lie type " + to_string(*this) + ": " + why);
  };
  switch (family) {
    case Family::A:
      if (rank < 1) fail("rank must be >= 1");
      break;
    case Family::B:
    case Family::C:
      if (rank < 2) fail("rank must be >= 2");
      break;
    case Family::D:
      if (rank < 4) fail("rank must be >= 4 (D2, D3 are aliases)");
      break;
    case Family::E:
      if (rank < 6 || rank > 8) fail("rank must be 6, 7 or 8");
      break;
    case Family::F:
      if (rank != 4) fail("rank must be 4");
      break;
    case Family::G:
      if (rank != 2) fail("rank must be 2");
      break;
    case Family::BC:
      if (rank < 1) fail("rank must be >= 1");
      break;
  }
}

bool LieType::is_classical() const {
  return family == Family::A || family == Family::B || family == Family::C || family == Family::D;
}

LieType make_type(Family f, int rank) {
  LieType t{f, rank};
  t.validate();
  return t;
}

std::string to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
    case Family::BC: return "BC";
  }
  return "?";
}

std::string to_string(const LieType& t) { return to_string(t.family) + std::to_string(t.rank); }

LieType parse_lie_type(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  Family f;
  std::size_t pos = 1;
  if (s.rfind("BC", 0) == 0) {
    f = Family::BC;
    pos = 2;
  } else if (!s.empty()) {
    switch (s[0]) {
      case 'A': f = Family::A; break;
      case 'B': f = Family::B; break;
      case 'C': f = Family::C; break;
      case 'D': f = Family::D; break;
      case 'E': f = Family::E; break;
      case 'F': f = Family::F; break;
      case 'G': f = Family::G; break;
      default: throw std::invalid_argument("unknown Lie type '" + std::string(text) + "'");
    }
  } else {
    throw std::invalid_argument("empty Lie type");
  }
  const std::string digits = s.substr(pos);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw std::invalid_argument("unknown Lie type '" + std::string(text) + "'");
  return make_type(f, std::stoi(digits));
}

bool isomorphic_types(const LieType& a, const LieType& b) {
  if (a == b) return true;
  auto low = [](LieType t) {
    if ((t.family == Family::C) && t.rank == 2) t.family = Family::B;
    return t;
  };
  return low(a) == low(b);
}

int positive_root_count(const LieType& t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::BC: return n == 1 ? 1 : n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

long long weyl_group_order(const LieType& t) {
  auto fact = [](int n) {
    long long r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
  };
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return fact(n + 1);
    case Family::B:
    case Family::C:
    case Family::BC: return n == 1 ? 2 : (1LL << n) * fact(n);
    case Family::D: return (1LL << (n - 1)) * fact(n);
    case Family::E: return n == 6 ? 51840LL : n == 7 ? 2903040LL : 696729600LL;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

std::vector<std::vector<int>> simple_root_gram(const LieType& t) {
  t.validate();
  const int n = t.rank;
  std::vector<int> len2(n, 2);
  std::vector<std::pair<int, int>> edges;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) edges.emplace_back(i, i + 1);
  };
  switch (t.family) {
    case Family::A:
      chain(n);
      break;
    case Family::B:
    case Family::BC:
      chain(n);
      if (n >= 2)
        for (int i = 0; i + 1 < n; ++i) len2[i] = 4;
      break;
    case Family::C:
      chain(n);
      len2[n - 1] = 4;
      break;
    case Family::D:
      chain(n - 1);
      edges.emplace_back(n - 3, n - 1);
      break;
    case Family::E:
      chain(n - 1);
      edges.emplace_back(2, n - 1);
      break;
    case Family::F:
      chain(4);
      len2[0] = len2[1] = 4;
      break;
    case Family::G:
      chain(2);
      len2[1] = 6;
      break;
  }
  std::vector<std::vector<int>> gram(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) gram[i][i] = len2[i];
  for (auto [i, j] : edges) gram[i][j] = gram[j][i] = -std::max(len2[i], len2[j]) / 2;
  return gram;
}

}  // namespace lieprop
