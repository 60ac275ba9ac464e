#pragma once

#include <string>
#include <vector>

namespace gorcone {

// exponent vector; the ambient variable count is exps.size()
struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}
  static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

  int nvars() const { return static_cast<int>(e.size()); }
  int degree() const;
  bool is_one() const;

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }
};

Monomial mul(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b); // a | b
Monomial quotient(const Monomial& b, const Monomial& a); // b / a, requires divides(a,b)
Monomial lcm(const Monomial& a, const Monomial& b);

// graded reverse lexicographic order, x1 > x2 > ... > xn
// returns +1 if a > b, 0 if equal, -1 if a < b
int degrevlex_cmp(const Monomial& a, const Monomial& b);

// local order used for tangent cone computations: smaller total degree is
// larger (1 is the largest monomial); ties broken reverse lexicographically
// scanning x1 first, so precedence runs x4 > x3 > x2 > x1
int local_order_cmp(const Monomial& a, const Monomial& b);

std::string monomial_to_string(const Monomial& m, int first_var_index = 1);

} // namespace gorcone
