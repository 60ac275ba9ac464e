#include "gorcone/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace gorcone {

Polynomial Polynomial::from_terms(int nvars, std::vector<Term> ts) {
  std::map<std::vector<int>, Rat> acc;
  for (auto& t : ts) {
    assert(t.m.nvars() == nvars);
    acc[t.m.e] += t.c;
  }
  Polynomial p(nvars);
  for (auto& [e, c] : acc)
    if (c != 0) p.terms_.push_back({c, Monomial(e)});
  std::sort(p.terms_.begin(), p.terms_.end(), [](const Term& a, const Term& b) {
    return degrevlex_cmp(a.m, b.m) > 0;
  });
  return p;
}

bool Polynomial::terms_same(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].c != o.terms_[i].c || terms_[i].m != o.terms_[i].m)
      return false;
  return true;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.m.degree());
  return d;
}

int Polynomial::low_degree() const {
  if (terms_.empty()) return -1;
  int d = terms_[0].m.degree();
  for (const auto& t : terms_) d = std::min(d, t.m.degree());
  return d;
}

Polynomial add(const Polynomial& a, const Polynomial& b) {
  std::vector<Term> ts = a.terms();
  for (const auto& t : b.terms()) ts.push_back(t);
  return Polynomial::from_terms(a.nvars(), std::move(ts));
}

Polynomial sub(const Polynomial& a, const Polynomial& b) {
  std::vector<Term> ts = a.terms();
  for (const auto& t : b.terms()) ts.push_back({-t.c, t.m});
  return Polynomial::from_terms(a.nvars(), std::move(ts));
}

Polynomial neg(const Polynomial& p) {
  std::vector<Term> ts;
  for (const auto& t : p.terms()) ts.push_back({-t.c, t.m});
  return Polynomial::from_terms(p.nvars(), std::move(ts));
}

Polynomial mul_term(const Polynomial& p, const Rat& c, const Monomial& m) {
  std::vector<Term> ts;
  for (const auto& t : p.terms()) ts.push_back({t.c * c, mul(t.m, m)});
  return Polynomial::from_terms(p.nvars(), std::move(ts));
}

Polynomial lowest_form(const Polynomial& p) {
  int d = p.low_degree();
  std::vector<Term> ts;
  for (const auto& t : p.terms())
    if (t.m.degree() == d) ts.push_back(t);
  return Polynomial::from_terms(p.nvars(), std::move(ts));
}

Polynomial substitute_zero(const Polynomial& p, int var) {
  std::vector<Term> ts;
  for (const auto& t : p.terms()) {
    if (t.m.e[var - 1] > 0) continue;
    std::vector<int> e;
    for (int i = 0; i < p.nvars(); ++i)
      if (i != var - 1) e.push_back(t.m.e[i]);
    ts.push_back({t.c, Monomial(e)});
  }
  return Polynomial::from_terms(p.nvars() - 1, std::move(ts));
}

const Term& leading_term(const Polynomial& p, MonCmp cmp) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "leading term of zero");
  const Term* best = &p.terms()[0];
  for (const auto& t : p.terms())
    if (cmp(t.m, best->m) > 0) best = &t;
  return *best;
}

Polynomial spoly(const Polynomial& f, const Polynomial& g, MonCmp cmp) {
  const Term& lf = leading_term(f, cmp);
  const Term& lg = leading_term(g, cmp);
  Monomial m = lcm(lf.m, lg.m);
  Polynomial a = mul_term(f, Rat(1) / lf.c, quotient(m, lf.m));
  Polynomial b = mul_term(g, Rat(1) / lg.c, quotient(m, lg.m));
  return sub(a, b);
}

namespace {

int ecart(const Polynomial& p, MonCmp cmp) {
  return p.degree() - leading_term(p, cmp).m.degree();
}

} // namespace

Polynomial mora_normal_form(const Polynomial& f,
                            const std::vector<Polynomial>& G, MonCmp cmp) {
  Polynomial h = f;
  std::vector<Polynomial> T = G;
  while (!h.is_zero()) {
    const Term& lh = leading_term(h, cmp);
    int best = -1, best_ecart = 0;
    for (size_t i = 0; i < T.size(); ++i) {
      if (T[i].is_zero()) continue;
      if (!divides(leading_term(T[i], cmp).m, lh.m)) continue;
      int e = ecart(T[i], cmp);
      if (best < 0 || e < best_ecart) {
        best = static_cast<int>(i);
        best_ecart = e;
      }
    }
    if (best < 0) break;
    Polynomial g = T[best]; // copy before T may grow
    if (best_ecart > ecart(h, cmp)) T.push_back(h);
    const Term& lg = leading_term(g, cmp);
    h = sub(h, mul_term(g, lh.c / lg.c, quotient(lh.m, lg.m)));
  }
  return h;
}

bool is_standard_basis(const std::vector<Polynomial>& G, MonCmp cmp) {
  for (size_t i = 0; i < G.size(); ++i)
    for (size_t j = i + 1; j < G.size(); ++j) {
      Polynomial s = spoly(G[i], G[j], cmp);
      if (s.is_zero()) continue;
      if (!mora_normal_form(s, G, cmp).is_zero()) return false;
    }
  return true;
}

std::vector<Polynomial> standard_basis_complete(std::vector<Polynomial> G,
                                                MonCmp cmp, int max_added) {
  // each j pairs with every i < j once it becomes the sweep front, so all
  // pairs among the final basis get processed exactly once
  size_t front = 0;
  int added = 0;
  while (front < G.size()) {
    size_t j = front++;
    for (size_t i = 0; i < j; ++i) {
      Polynomial s = spoly(G[i], G[j], cmp);
      if (s.is_zero()) continue;
      Polynomial r = mora_normal_form(s, G, cmp);
      if (r.is_zero()) continue;
      // every added remainder has a lead divisible by no current lead, so
      // the lead-term ideal grows strictly and the loop must stabilize
      r = mul_term(r, Rat(1) / leading_term(r, cmp).c, Monomial::one(r.nvars()));
      G.push_back(r);
      if (++added > max_added)
        throw std::logic_error("standard basis completion did not stabilize");
    }
  }
  return G;
}

std::string polynomial_to_string(const Polynomial& p, int first_var_index) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& t : p.terms()) {
    Rat c = t.c;
    if (s.empty()) {
      if (c < 0) {
        s += "-";
        c = -c;
      }
    } else {
      s += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    bool unit = (c == 1) && !t.m.is_one();
    if (!unit) s += c.str();
    if (!t.m.is_one()) {
      if (!unit) s += "*";
      s += monomial_to_string(t.m, first_var_index);
    }
  }
  return s;
}

} // namespace gorcone
