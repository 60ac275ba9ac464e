#include "gorcone/linform.hpp"

#include <algorithm>
#include <stdexcept>

namespace gorcone {

LinForm lf_const(long k) {
  LinForm f;
  f.k = k;
  return f;
}

LinForm lf_sym(int idx, long coeff) {
  LinForm f;
  f.c[idx] = coeff;
  return f;
}

LinForm operator+(const LinForm& a, const LinForm& b) {
  LinForm r = a;
  r.k += b.k;
  for (int i = 0; i < 8; ++i) r.c[i] += b.c[i];
  return r;
}

LinForm operator-(const LinForm& a, const LinForm& b) {
  LinForm r = a;
  r.k -= b.k;
  for (int i = 0; i < 8; ++i) r.c[i] -= b.c[i];
  return r;
}

bool lf_is_zero(const LinForm& a) {
  if (a.k != 0) return false;
  return std::all_of(a.c.begin(), a.c.end(), [](long v) { return v == 0; });
}

bool lf_nonneg_coeffwise(const LinForm& a) {
  if (a.k < 0) return false;
  return std::all_of(a.c.begin(), a.c.end(), [](long v) { return v >= 0; });
}

long lf_eval(const LinForm& a, const std::array<long, 8>& vals) {
  long r = a.k;
  for (int i = 0; i < 8; ++i) r += a.c[i] * vals[i];
  return r;
}

std::string lf_to_string(const LinForm& a,
                         const std::vector<std::string>& names) {
  std::string s;
  for (int i = 0; i < 8; ++i) {
    if (a.c[i] == 0) continue;
    if (!s.empty()) s += a.c[i] > 0 ? "+" : "-";
    else if (a.c[i] < 0) s += "-";
    long m = std::abs(a.c[i]);
    if (m != 1) s += std::to_string(m) + "*";
    s += names[i];
  }
  if (a.k != 0 || s.empty()) {
    if (!s.empty()) s += a.k >= 0 ? "+" : "-";
    else if (a.k < 0) s += "-";
    s += std::to_string(std::abs(a.k));
  }
  return s;
}

SymMonomial sym_mul(const SymMonomial& a, const SymMonomial& b) {
  SymMonomial r;
  for (int i = 0; i < 3; ++i) r.e[i] = a.e[i] + b.e[i];
  return r;
}

SymMonomial sym_div(const SymMonomial& a, const SymMonomial& b) {
  SymMonomial r;
  for (int i = 0; i < 3; ++i) r.e[i] = a.e[i] - b.e[i];
  return r;
}

bool lf_le_under(const LinForm& a, const LinForm& b, const CmpFacts& facts) {
  LinForm d = a - b;
  // replace smaller sides by larger ones while that raises the bound; the
  // fact list is tiny and acyclic, so a fixed cap is plenty
  for (int rounds = 0; rounds < 16; ++rounds) {
    if (d.k <= 0 &&
        std::all_of(d.c.begin(), d.c.end(), [](long v) { return v <= 0; }))
      return true;
    bool applied = false;
    for (const auto& [x, y] : facts.le) {
      if (d.c[x] > 0) {
        d.c[y] += d.c[x];
        d.c[x] = 0;
        applied = true;
      }
    }
    if (!applied) return false;
  }
  return false;
}

namespace {

LinForm lf_max(const LinForm& a, const LinForm& b, const CmpFacts& facts) {
  if (lf_le_under(a, b, facts)) return b;
  if (lf_le_under(b, a, facts)) return a;
  throw std::logic_error("exponent comparison not resolvable in this regime");
}

} // namespace

SymMonomial sym_lcm(const SymMonomial& a, const SymMonomial& b,
                    const CmpFacts& facts) {
  SymMonomial r;
  for (int i = 0; i < 3; ++i) r.e[i] = lf_max(a.e[i], b.e[i], facts);
  return r;
}

SymMonomial sym_lcm_many(const std::vector<SymMonomial>& ms,
                         const CmpFacts& facts) {
  if (ms.empty()) throw std::logic_error("lcm of nothing");
  SymMonomial r;
  for (int i = 0; i < 3; ++i) {
    bool found = false;
    for (const auto& cand : ms) {
      bool dom = true;
      for (const auto& other : ms)
        if (!lf_le_under(other.e[i], cand.e[i], facts)) {
          dom = false;
          break;
        }
      if (dom) {
        r.e[i] = cand.e[i];
        found = true;
        break;
      }
    }
    if (!found)
      throw std::logic_error("exponent comparison not resolvable in this regime");
  }
  return r;
}

void MonMatrix::set(int r, int c, int sign, const SymMonomial& m) {
  entries[{r, c}] = MonoEntry{sign, m};
}

const MonoEntry* MonMatrix::get(int r, int c) const {
  auto it = entries.find({r, c});
  return it == entries.end() ? nullptr : &it->second;
}

void sympoly_add(SymPoly& p, const SymMonomial& m, long coeff) {
  auto it = p.find(m);
  if (it == p.end()) {
    if (coeff != 0) p[m] = coeff;
    return;
  }
  it->second += coeff;
  if (it->second == 0) p.erase(it);
}

bool compose_is_zero(const MonMatrix& a, const MonMatrix& b) {
  if (a.cols != b.rows) return false;
  for (int r = 1; r <= a.rows; ++r)
    for (int c = 1; c <= b.cols; ++c) {
      SymPoly acc;
      for (int k = 1; k <= a.cols; ++k) {
        const MonoEntry* x = a.get(r, k);
        const MonoEntry* y = b.get(k, c);
        if (!x || !y) continue;
        sympoly_add(acc, sym_mul(x->m, y->m), x->sign * y->sign);
      }
      if (!acc.empty()) return false;
    }
  return true;
}

SymPoly sym_minor(const MonMatrix& m, const std::vector<int>& keep_rows,
                  const std::vector<int>& keep_cols) {
  int k = static_cast<int>(keep_rows.size());
  if (k != static_cast<int>(keep_cols.size()))
    throw std::logic_error("minor must be square");
  std::vector<int> perm(k);
  for (int i = 0; i < k; ++i) perm[i] = i;
  SymPoly acc;
  do {
    int sgn = 1;
    // parity by inversion count
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) sgn = -sgn;
    SymMonomial prod;
    int coef = sgn;
    bool zero = false;
    for (int i = 0; i < k && !zero; ++i) {
      const MonoEntry* e = m.get(keep_rows[i], keep_cols[perm[i]]);
      if (!e) {
        zero = true;
        break;
      }
      coef *= e->sign;
      prod = sym_mul(prod, e->m);
    }
    if (!zero) sympoly_add(acc, prod, coef);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

std::vector<std::vector<u64>> eval_matrix(const MonMatrix& m,
                                          const std::array<long, 8>& vals,
                                          const std::array<u64, 3>& point,
                                          u64 p) {
  std::vector<std::vector<u64>> out(m.rows, std::vector<u64>(m.cols, 0));
  for (const auto& [rc, ent] : m.entries) {
    u64 v = 1;
    for (int i = 0; i < 3; ++i) {
      long e = lf_eval(ent.m.e[i], vals);
      if (e < 0) throw std::logic_error("negative exponent at instantiation");
      v = mulmod(v, powmod(point[i] % p, static_cast<u64>(e), p), p);
    }
    if (ent.sign < 0) v = negmod(v, p);
    out[rc.first - 1][rc.second - 1] = v;
  }
  return out;
}

} // namespace gorcone
