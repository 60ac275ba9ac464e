#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "gorcone/modmat.hpp"

namespace gorcone {

// integer linear form k + sum c[t] * u_t over 8 formal exponent parameters
struct LinForm {
  long k = 0;
  std::array<long, 8> c{};

  bool operator==(const LinForm& o) const { return k == o.k && c == o.c; }
  bool operator<(const LinForm& o) const {
    if (k != o.k) return k < o.k;
    return c < o.c;
  }
};

LinForm lf_const(long k);
LinForm lf_sym(int idx, long coeff = 1);
LinForm operator+(const LinForm& a, const LinForm& b);
LinForm operator-(const LinForm& a, const LinForm& b);
bool lf_is_zero(const LinForm& a);
// every coefficient and the constant nonnegative (so the form is >= 0 for all
// admissible parameter values)
bool lf_nonneg_coeffwise(const LinForm& a);
long lf_eval(const LinForm& a, const std::array<long, 8>& vals);
std::string lf_to_string(const LinForm& a, const std::vector<std::string>& names);

// monomial in x2, x3, x4 with symbolic exponents
struct SymMonomial {
  std::array<LinForm, 3> e;

  bool operator==(const SymMonomial& o) const { return e == o.e; }
  bool operator<(const SymMonomial& o) const { return e < o.e; }
};

SymMonomial sym_mul(const SymMonomial& a, const SymMonomial& b);
SymMonomial sym_div(const SymMonomial& a, const SymMonomial& b); // no check

// known inequalities u_first <= u_second between formal exponents, used to
// settle comparisons that are not decidable coefficientwise
struct CmpFacts {
  std::vector<std::pair<int, int>> le;
};

// certify a <= b for all admissible parameter values by substituting each
// fact's larger side for positive occurrences of its smaller side; sound but
// deliberately not complete
bool lf_le_under(const LinForm& a, const LinForm& b, const CmpFacts& facts);

// coordinatewise max; throws std::logic_error when neither direction of a
// comparison can be certified from the facts
SymMonomial sym_lcm(const SymMonomial& a, const SymMonomial& b,
                    const CmpFacts& facts);

// coordinatewise max over several monomials; a coordinate's value is any
// entry that dominates all the others, so association order never matters
SymMonomial sym_lcm_many(const std::vector<SymMonomial>& ms,
                         const CmpFacts& facts);

// sparse matrix whose entries are +-1 times a symbolic monomial
struct MonoEntry {
  int sign = 0; // +1 or -1
  SymMonomial m;
};

struct MonMatrix {
  int rows = 0, cols = 0;
  std::map<std::pair<int, int>, MonoEntry> entries; // keys are 1-based

  void set(int r, int c, int sign, const SymMonomial& m);
  const MonoEntry* get(int r, int c) const;
};

// signed sum of symbolic monomials, combined by exponent triple
using SymPoly = std::map<SymMonomial, long>;

void sympoly_add(SymPoly& p, const SymMonomial& m, long coeff);

// matrix product entries as symbolic polynomials; true iff all cancel
bool compose_is_zero(const MonMatrix& a, const MonMatrix& b);

// determinant of the kept-rows x kept-cols submatrix via permutation
// expansion, returned as a combined symbolic polynomial
SymPoly sym_minor(const MonMatrix& m, const std::vector<int>& keep_rows,
                  const std::vector<int>& keep_cols);

// numeric instantiation at parameter values and a point of F_p^3
std::vector<std::vector<u64>> eval_matrix(const MonMatrix& m,
                                          const std::array<long, 8>& vals,
                                          const std::array<u64, 3>& point,
                                          u64 p);

} // namespace gorcone
