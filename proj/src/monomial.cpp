#include "gorcone/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace gorcone {

int Monomial::degree() const {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Monomial mul(const Monomial& a, const Monomial& b) {
  assert(a.nvars() == b.nvars());
  Monomial r = a;
  for (int i = 0; i < b.nvars(); ++i) r.e[i] += b.e[i];
  return r;
}

bool divides(const Monomial& a, const Monomial& b) {
  assert(a.nvars() == b.nvars());
  for (int i = 0; i < a.nvars(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  assert(divides(a, b));
  Monomial r = b;
  for (int i = 0; i < a.nvars(); ++i) r.e[i] -= a.e[i];
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  assert(a.nvars() == b.nvars());
  Monomial r = a;
  for (int i = 0; i < b.nvars(); ++i) r.e[i] = std::max(r.e[i], b.e[i]);
  return r;
}

int degrevlex_cmp(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  // revlex tie break: the one with smaller exponent in the last differing
  // position (scanning from the end) is larger
  for (int i = a.nvars() - 1; i >= 0; --i) {
    int d = a.e[i] - b.e[i];
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

int local_order_cmp(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? 1 : -1;
  // ties broken reverse lexicographically scanning x1 first: the monomial
  // with the smaller exponent in the first differing position is larger.
  // equivalently, degree-anticompatible revlex with x4 > x3 > x2 > x1.
  for (int i = 0; i < a.nvars(); ++i) {
    int d = a.e[i] - b.e[i];
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

std::string monomial_to_string(const Monomial& m, int first_var_index) {
  if (m.is_one()) return "1";
  std::string s;
  for (int i = 0; i < m.nvars(); ++i) {
    if (m.e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(first_var_index + i);
    if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
  }
  return s;
}

} // namespace gorcone
