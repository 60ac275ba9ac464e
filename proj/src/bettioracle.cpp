#include "gorcone/bettioracle.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "gorcone/errors.hpp"

namespace gorcone {

MonomialIdeal make_monomial_ideal(int nvars, std::vector<Monomial> gens) {
  std::vector<Monomial> mins;
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) {
              return a.degree() < b.degree();
            });
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& m : mins)
      if (divides(m, g)) {
        redundant = true;
        break;
      }
    if (!redundant) mins.push_back(g);
  }
  return {nvars, std::move(mins)};
}

bool ideal_contains(const MonomialIdeal& I, const Monomial& m) {
  for (const auto& g : I.gens)
    if (divides(g, m)) return true;
  return false;
}

namespace {

// subsets of {0..n-1} of size k in lexicographic order
std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  if (k > n) return out;
  while (true) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  if (k == 0) out = {{}};
  return out;
}

// chain basis in one multidegree: subsets J with b - e_J >= 0 and the
// complement monomial outside I
std::vector<std::vector<int>> chain_basis(const MonomialIdeal& I, int j,
                                          const Multidegree& b) {
  std::vector<std::vector<int>> basis;
  for (const auto& J : subsets_of_size(I.nvars, j)) {
    Monomial m{std::vector<int>(b)};
    bool ok = true;
    for (int v : J) {
      if (--m.e[v] < 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (ideal_contains(I, m)) continue;
    basis.push_back(J);
  }
  return basis;
}

long differential_rank(const MonomialIdeal& I, int j, const Multidegree& b,
                       u64 p) {
  // map from degree-b chains in homological position j to position j-1
  if (j <= 0) return 0;
  auto dom = chain_basis(I, j, b);
  auto cod = chain_basis(I, j - 1, b);
  if (dom.empty() || cod.empty()) return 0;
  std::map<std::vector<int>, int> cod_index;
  for (size_t i = 0; i < cod.size(); ++i) cod_index[cod[i]] = static_cast<int>(i);
  std::vector<std::vector<u64>> mat(cod.size(), std::vector<u64>(dom.size(), 0));
  for (size_t c = 0; c < dom.size(); ++c) {
    const auto& J = dom[c];
    for (size_t t = 0; t < J.size(); ++t) {
      std::vector<int> J2;
      for (size_t s = 0; s < J.size(); ++s)
        if (s != t) J2.push_back(J[s]);
      // target monomial is b - e_{J2}; it lies in I iff the basis element is
      // absent from the codomain
      auto it = cod_index.find(J2);
      if (it == cod_index.end()) continue;
      u64 v = (t % 2 == 0) ? 1 : p - 1;
      mat[it->second][c] = v;
    }
  }
  return rank_mod_p(std::move(mat), p);
}

} // namespace

long koszul_homology_dim(const MonomialIdeal& I, int i, const Multidegree& b,
                         u64 p) {
  long dim = static_cast<long>(chain_basis(I, i, b).size());
  return dim - differential_rank(I, i, b, p) - differential_rank(I, i + 1, b, p);
}

std::vector<BettiEntry> multigraded_betti(const MonomialIdeal& I, u64 p) {
  std::set<std::vector<int>> degrees;
  size_t k = I.gens.size();
  if (k > 20)
    throw Error(Errc::InvalidInput, "too many generators for subset scan");
  for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
    Monomial l = Monomial::one(I.nvars);
    for (size_t t = 0; t < k; ++t)
      if (mask & (size_t{1} << t)) l = lcm(l, I.gens[t]);
    degrees.insert(l.e);
  }
  std::vector<BettiEntry> out;
  for (const auto& d : degrees)
    for (int i = 0; i <= I.nvars; ++i) {
      long v = koszul_homology_dim(I, i, d, p);
      if (v != 0) out.push_back({i, d, v});
    }
  return out;
}

std::vector<long> total_betti_p(const MonomialIdeal& I, u64 p) {
  std::vector<long> tot(I.nvars + 1, 0);
  for (const auto& e : multigraded_betti(I, p)) tot[e.i] += e.dim;
  while (tot.size() > 1 && tot.back() == 0) tot.pop_back();
  return tot;
}

OracleBetti total_betti(const MonomialIdeal& I) {
  OracleBetti r;
  r.betti = total_betti_p(I, 32003);
  r.char_agree = (r.betti == total_betti_p(I, 2));
  return r;
}

namespace {

long choose(long n, long k) {
  if (k < 0 || n < 0 || n < k) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

} // namespace

std::vector<long> hilbert_function(const MonomialIdeal& I, int maxdeg) {
  std::vector<long> hf(maxdeg + 1, 0);
  size_t k = I.gens.size();
  if (k > 20)
    throw Error(Errc::InvalidInput, "too many generators for subset scan");
  for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
    Monomial l = Monomial::one(I.nvars);
    int sign = 1;
    for (size_t t = 0; t < k; ++t)
      if (mask & (size_t{1} << t)) {
        l = lcm(l, I.gens[t]);
        sign = -sign;
      }
    int dl = l.degree();
    for (int d = dl; d <= maxdeg; ++d)
      hf[d] += sign * choose(d - dl + I.nvars - 1, I.nvars - 1);
  }
  return hf;
}

bool euler_consistent(const MonomialIdeal& I, const Multidegree& b, u64 p) {
  long chain = 0, hom = 0;
  for (int i = 0; i <= I.nvars; ++i) {
    long sgn = (i % 2 == 0) ? 1 : -1;
    chain += sgn * static_cast<long>(chain_basis(I, i, b).size());
    hom += sgn * koszul_homology_dim(I, i, b, p);
  }
  return chain == hom;
}

long monomial_quotient_length(const MonomialIdeal& I) {
  // finite iff every variable has a pure power among the generators
  for (int v = 0; v < I.nvars; ++v) {
    bool has = false;
    for (const auto& g : I.gens) {
      bool pure = g.e[v] > 0;
      for (int w = 0; w < I.nvars && pure; ++w)
        if (w != v && g.e[w] > 0) pure = false;
      if (pure) {
        has = true;
        break;
      }
    }
    if (!has)
      throw Error(Errc::DimensionMismatch,
                  "monomial quotient is not finite dimensional");
  }
  long count = 0;
  std::set<std::vector<int>> seen;
  std::queue<Monomial> q;
  q.push(Monomial::one(I.nvars));
  seen.insert(q.front().e);
  while (!q.empty()) {
    Monomial m = q.front();
    q.pop();
    if (ideal_contains(I, m)) continue;
    ++count;
    for (int v = 0; v < I.nvars; ++v) {
      Monomial m2 = m;
      ++m2.e[v];
      if (seen.insert(m2.e).second) q.push(m2);
    }
  }
  return count;
}

// ---- groebner backend over F_p ----

namespace {

struct RevCmp {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return degrevlex_cmp(a, b) > 0;
  }
};

using PPoly = std::map<Monomial, u64, RevCmp>; // leading term first

PPoly ppoly_from(const Polynomial& f, u64 p) {
  PPoly out;
  for (const auto& t : f.terms()) {
    Rat c = t.c;
    Int num = boost::multiprecision::numerator(c);
    Int den = boost::multiprecision::denominator(c);
    u64 n = static_cast<u64>(to_long(((num % p) + p) % p));
    u64 d = static_cast<u64>(to_long(((den % p) + p) % p));
    u64 v = mulmod(n, invmod(d, p), p);
    if (v) out[t.m] = v;
  }
  return out;
}

void ppoly_axpy(PPoly& f, u64 c, const Monomial& shift, const PPoly& g, u64 p) {
  // f += c * shift * g
  for (const auto& [m, v] : g) {
    Monomial m2 = mul(m, shift);
    u64& slot = f[m2];
    slot = (slot + mulmod(c, v, p)) % p;
    if (!slot) f.erase(m2);
  }
}

PPoly normal_form(PPoly f, const std::vector<PPoly>& G, u64 p) {
  PPoly r;
  while (!f.empty()) {
    auto lead = *f.begin();
    bool reduced = false;
    for (const auto& g : G) {
      if (g.empty()) continue;
      const Monomial& lg = g.begin()->first;
      if (!divides(lg, lead.first)) continue;
      // g is monic
      ppoly_axpy(f, negmod(lead.second, p), quotient(lead.first, lg), g, p);
      reduced = true;
      break;
    }
    if (!reduced) {
      r[lead.first] = lead.second;
      f.erase(lead.first);
    }
  }
  return r;
}

void make_monic(PPoly& f, u64 p) {
  if (f.empty()) return;
  u64 inv = invmod(f.begin()->second, p);
  for (auto& [m, v] : f) v = mulmod(v, inv, p);
}

std::vector<PPoly> groebner(std::vector<Polynomial> input, int nvars, u64 p) {
  (void)nvars;
  std::vector<PPoly> G;
  for (const auto& f : input) {
    PPoly g = ppoly_from(f, p);
    if (!g.empty()) {
      make_monic(g, p);
      G.push_back(std::move(g));
    }
  }
  std::queue<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < G.size(); ++i)
    for (size_t j = i + 1; j < G.size(); ++j) pairs.push({i, j});
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop();
    const Monomial& li = G[i].begin()->first;
    const Monomial& lj = G[j].begin()->first;
    Monomial l = lcm(li, lj);
    if (l == mul(li, lj)) continue; // coprime leads
    PPoly s;
    ppoly_axpy(s, 1, quotient(l, li), G[i], p);
    ppoly_axpy(s, p - 1, quotient(l, lj), G[j], p);
    PPoly r = normal_form(std::move(s), G, p);
    if (r.empty()) continue;
    make_monic(r, p);
    G.push_back(std::move(r));
    for (size_t t = 0; t + 1 < G.size(); ++t) pairs.push({t, G.size() - 1});
  }
  return G;
}

} // namespace

ArtinianBetti artinian_betti_p(const std::vector<Polynomial>& gens, int nvars,
                               u64 p) {
  auto G = groebner(gens, nvars, p);

  std::vector<Monomial> lts;
  for (const auto& g : G)
    if (!g.empty()) lts.push_back(g.begin()->first);
  MonomialIdeal lead = make_monomial_ideal(nvars, lts);

  // staircase of standard monomials
  std::vector<Monomial> basis;
  {
    std::set<std::vector<int>> seen;
    std::queue<Monomial> q;
    q.push(Monomial::one(nvars));
    seen.insert(q.front().e);
    const long cap = 1000000;
    while (!q.empty()) {
      Monomial m = q.front();
      q.pop();
      if (ideal_contains(lead, m)) continue;
      basis.push_back(m);
      if (static_cast<long>(basis.size()) > cap)
        throw Error(Errc::DimensionMismatch, "quotient too large or infinite");
      for (int v = 0; v < nvars; ++v) {
        Monomial m2 = m;
        ++m2.e[v];
        if (seen.insert(m2.e).second) q.push(m2);
      }
    }
    // finiteness: each variable needs a pure power leading term
    for (int v = 0; v < nvars; ++v) {
      bool has = false;
      for (const auto& g : lead.gens) {
        bool pure = g.e[v] > 0;
        for (int w = 0; w < nvars && pure; ++w)
          if (w != v && g.e[w] > 0) pure = false;
        if (pure) has = true;
      }
      if (!has)
        throw Error(Errc::DimensionMismatch,
                    "quotient is not finite dimensional");
    }
  }
  long L = static_cast<long>(basis.size());
  std::map<std::vector<int>, int> index;
  for (long s = 0; s < L; ++s) index[basis[s].e] = static_cast<int>(s);

  // multiplication matrices
  std::vector<std::vector<std::vector<u64>>> X(
      nvars, std::vector<std::vector<u64>>(L, std::vector<u64>(L, 0)));
  for (long s = 0; s < L; ++s)
    for (int v = 0; v < nvars; ++v) {
      Monomial m2 = basis[s];
      ++m2.e[v];
      PPoly f;
      f[m2] = 1;
      PPoly nf = normal_form(std::move(f), G, p);
      for (const auto& [m, c] : nf) {
        auto it = index.find(m.e);
        if (it == index.end())
          throw std::logic_error("normal form left the staircase");
        X[v][it->second][s] = c;
      }
    }

  // homology of the exterior-power complex on the multiplication operators
  auto subsets = [&](int k) { return subsets_of_size(nvars, k); };
  auto boundary = [&](int j) {
    auto dom = subsets(j);
    auto cod = subsets(j - 1);
    std::map<std::vector<int>, int> cidx;
    for (size_t t = 0; t < cod.size(); ++t) cidx[cod[t]] = static_cast<int>(t);
    std::vector<std::vector<u64>> mat(cod.size() * L,
                                      std::vector<u64>(dom.size() * L, 0));
    for (size_t d = 0; d < dom.size(); ++d) {
      const auto& J = dom[d];
      for (size_t t = 0; t < J.size(); ++t) {
        std::vector<int> J2;
        for (size_t s2 = 0; s2 < J.size(); ++s2)
          if (s2 != t) J2.push_back(J[s2]);
        int ci = cidx[J2];
        u64 sgn = (t % 2 == 0) ? 1 : p - 1;
        for (long r = 0; r < L; ++r)
          for (long c = 0; c < L; ++c) {
            u64 v = X[J[t]][r][c];
            if (!v) continue;
            auto& slot = mat[ci * L + r][d * L + c];
            slot = (slot + mulmod(sgn, v, p)) % p;
          }
      }
    }
    return mat;
  };

  ArtinianBetti out;
  out.length = L;
  std::vector<long> ranks(nvars + 2, 0);
  for (int j = 1; j <= nvars; ++j) ranks[j] = rank_mod_p(boundary(j), p);
  for (int i = 0; i <= nvars; ++i) {
    long dim = L * choose(nvars, i);
    out.betti.push_back(dim - ranks[i] - ranks[i + 1]);
  }
  while (out.betti.size() > 1 && out.betti.back() == 0) out.betti.pop_back();

  int maxdeg = 0;
  for (const auto& m : basis) maxdeg = std::max(maxdeg, m.degree());
  out.degree_histogram.assign(maxdeg + 1, 0);
  for (const auto& m : basis) ++out.degree_histogram[m.degree()];
  return out;
}

ArtinianOracle artinian_betti(const std::vector<Polynomial>& gens, int nvars) {
  ArtinianOracle r;
  r.result = artinian_betti_p(gens, nvars, 32003);
  ArtinianBetti alt = artinian_betti_p(gens, nvars, 2);
  r.char_agree = (r.result.betti == alt.betti && r.result.length == alt.length);
  return r;
}

} // namespace gorcone
