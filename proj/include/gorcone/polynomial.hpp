#pragma once

#include <vector>

#include "gorcone/errors.hpp"
#include "gorcone/ints.hpp"
#include "gorcone/monomial.hpp"

namespace gorcone {

struct Term {
  Rat c;
  Monomial m;
};

// sparse polynomial over Q; terms kept combined, nonzero, degrevlex-descending
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}
  static Polynomial from_terms(int nvars, std::vector<Term> ts);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  int degree() const;     // max total degree of a term; -1 when zero
  int low_degree() const; // min total degree of a term; -1 when zero

  bool operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && terms_same(o);
  }

 private:
  bool terms_same(const Polynomial& o) const;
  int nvars_ = 0;
  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial sub(const Polynomial& a, const Polynomial& b);
Polynomial mul_term(const Polynomial& p, const Rat& c, const Monomial& m);
Polynomial neg(const Polynomial& p);

// sum of the terms of minimal total degree
Polynomial lowest_form(const Polynomial& p);

// drop a variable (substitute 0 for it), shrinking the exponent vector
Polynomial substitute_zero(const Polynomial& p, int var); // var is 1-based

using MonCmp = int (*)(const Monomial&, const Monomial&);

// largest term w.r.t. cmp; throws ZeroPolynomial on zero input
const Term& leading_term(const Polynomial& p, MonCmp cmp);

Polynomial spoly(const Polynomial& f, const Polynomial& g, MonCmp cmp);

// weak normal form with respect to a local order; the working basis may
// temporarily absorb intermediate remainders so the reduction terminates
Polynomial mora_normal_form(const Polynomial& f,
                            const std::vector<Polynomial>& G, MonCmp cmp);

// all pairwise s-polynomials reduce to zero
bool is_standard_basis(const std::vector<Polynomial>& G, MonCmp cmp);

// grow G with normal forms of non-reducing s-polynomials until every pair
// reduces to zero; the result generates the same ideal in the localization
std::vector<Polynomial> standard_basis_complete(std::vector<Polynomial> G,
                                                MonCmp cmp, int max_added = 128);

std::string polynomial_to_string(const Polynomial& p, int first_var_index = 1);

} // namespace gorcone
