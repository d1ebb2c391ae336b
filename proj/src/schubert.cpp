#include "resonance/schubert.hpp"

#include <cctype>
#include <stdexcept>

namespace resonance {

BigInt ChowClass::coefficient(int a, int b) const {
  auto it = coef.find({a, b});
  return it == coef.end() ? BigInt(0) : it->second;
}

ChowClass chow_zero(int k) {
  if (k < 2) throw std::invalid_argument("Grassmannian of lines needs k >= 2");
  return ChowClass{k, {}};
}

ChowClass schubert_class(int k, int a, int b) {
  ChowClass x = chow_zero(k);
  if (!(k - 2 >= a && a >= b && b >= 0))
    throw std::invalid_argument("Schubert class needs k-2 >= a >= b >= 0");
  x.coef[{a, b}] = 1;
  return x;
}

ChowClass chow_add(const ChowClass& x, const ChowClass& y) {
  if (x.k != y.k) throw std::invalid_argument("mixed Grassmannians");
  ChowClass r = x;
  for (const auto& [ab, c] : y.coef) {
    auto& v = r.coef[ab];
    v += c;
    if (v == 0) r.coef.erase(ab);
  }
  return r;
}

ChowClass pieri(int s, const ChowClass& x) {
  if (s < 0) throw std::invalid_argument("special class degree must be >= 0");
  if (s == 0) return x;
  ChowClass r = chow_zero(x.k);
  for (const auto& [ab, coef] : x.coef) {
    auto [a, b] = ab;
    int total = a + b + s;
    for (int c = a; c <= x.k - 2; ++c) {
      int d = total - c;
      if (d < b || d > a || d > c) continue;
      auto& v = r.coef[{c, d}];
      v += coef;
      if (v == 0) r.coef.erase({c, d});
    }
  }
  return r;
}

std::string chow_to_string(const ChowClass& x) {
  if (x.coef.empty()) return "0";
  std::string out;
  // Highest class first reads better: iterate in reverse map order.
  for (auto it = x.coef.rbegin(); it != x.coef.rend(); ++it) {
    if (!out.empty()) out += " + ";
    const auto& [ab, c] = *it;
    if (c != 1) out += c.str() + "*";
    out += "W(" + std::to_string(ab.first) + "," + std::to_string(ab.second) + ")";
  }
  return out;
}

ChowClass parse_schubert_expr(int k, const std::string& expr) {
  // Grammar: factor ('*' factor)*, factor = s(INT) ('^' INT)?
  std::string s;
  for (char c : expr)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty Schubert expression");
  ChowClass acc = schubert_class(k, 0, 0);
  size_t i = 0;
  auto read_int = [&]() {
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("bad Schubert expression: " + expr);
    int v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      v = v * 10 + (s[i++] - '0');
    return v;
  };
  while (true) {
    if (i >= s.size() || s[i] != 's')
      throw std::invalid_argument("bad Schubert expression: " + expr);
    ++i;
    if (i >= s.size() || s[i] != '(')
      throw std::invalid_argument("bad Schubert expression: " + expr);
    ++i;
    int deg = read_int();
    if (i >= s.size() || s[i] != ')')
      throw std::invalid_argument("bad Schubert expression: " + expr);
    ++i;
    int exp = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      exp = read_int();
    }
    for (int t = 0; t < exp; ++t) acc = pieri(deg, acc);
    if (i == s.size()) break;
    if (s[i] != '*')
      throw std::invalid_argument("bad Schubert expression: " + expr);
    ++i;
  }
  return acc;
}

int carrier_dimension(int dim_complex, int depth) {
  if (dim_complex < 0 || depth < 1)
    throw std::invalid_argument("carrier dimension needs dim >= 0, depth >= 1");
  return dim_complex - depth + 2;
}

DegreeResult carrier_degree(int k, const std::vector<int>& codims, int depth) {
  if (k < 2) throw std::invalid_argument("Grassmannian of lines needs k >= 2");
  if (depth < 1 || depth > k - 1)
    throw std::invalid_argument("depth must lie in [1, k-1]");
  int sum = 0;
  for (int c : codims) {
    if (c < 1) throw std::invalid_argument("directrix codimension must be >= 1");
    sum += c;
  }
  int s = 2 * (k - 2) - sum - depth + 1;
  if (s < 0)
    throw std::domain_error("overdetermined data: expected dimension of the "
                            "line family is negative");
  ChowClass acc = schubert_class(k, 0, 0);
  for (int c : codims) acc = pieri(c, acc);
  acc = pieri(s, acc);
  DegreeResult r;
  r.sigma = {k - 2, k - 1 - depth};
  r.s = s;
  r.degree = acc.coefficient(r.sigma.first, r.sigma.second);
  r.product = std::move(acc);
  return r;
}

}  // namespace resonance
