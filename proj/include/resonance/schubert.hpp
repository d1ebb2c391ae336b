#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace resonance {

using BigInt = boost::multiprecision::cpp_int;

// Integer combination of Schubert classes W(a,b), k-2 >= a >= b >= 0, in the
// Chow ring of the Grassmannian of lines of P^(k-1). Zero coefficients are
// never stored.
struct ChowClass {
  int k = 0;
  std::map<std::pair<int, int>, BigInt> coef;

  bool is_zero() const { return coef.empty(); }
  BigInt coefficient(int a, int b) const;
  bool operator==(const ChowClass& o) const { return k == o.k && coef == o.coef; }
};

ChowClass chow_zero(int k);
ChowClass schubert_class(int k, int a, int b);  // validates k-2 >= a >= b >= 0
ChowClass chow_add(const ChowClass& x, const ChowClass& y);

// Pieri rule: multiply by the special class W(s,0). The product of W(a,b)
// with W(s,0) is the sum of W(c,d) with c+d = a+b+s and
// k-2 >= c >= a >= d >= b.
ChowClass pieri(int s, const ChowClass& x);

std::string chow_to_string(const ChowClass& x);  // "3*W(3,1) + 2*W(2,2)"
// Product expressions in special classes: "s(1)^4 * s(2)".
ChowClass parse_schubert_expr(int k, const std::string& expr);

// Dimension of a carrier swept by a dim_complex-parameter family of lines
// whose deepest point has the given depth.
int carrier_dimension(int dim_complex, int depth);

// Expected degree of the carrier: the complex of lines meeting directrices
// of the given codimensions (inside P^(k-1)) is cut by special classes; the
// leftover dimension s = 2(k-2) - sum(codims) - depth + 1 is spent on one
// more special class, and the degree is the coefficient of
// W(k-2, k-1-depth) in the product. Throws std::domain_error when s < 0
// (overdetermined data).
struct DegreeResult {
  BigInt degree;
  std::pair<int, int> sigma;  // the class whose coefficient is reported
  int s = 0;                  // leftover special exponent
  ChowClass product;
};
DegreeResult carrier_degree(int k, const std::vector<int>& codims, int depth);

}  // namespace resonance
