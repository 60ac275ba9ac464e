#include "gorcone/toric.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gorcone {

const char* case_name(CaseTag t) {
  switch (t) {
    case CaseTag::C1a: return "1a";
    case CaseTag::C1b: return "1b";
    case CaseTag::C2a: return "2a";
    case CaseTag::C2b: return "2b";
    case CaseTag::C3a: return "3a";
    case CaseTag::C3b: return "3b";
  }
  return "?";
}

CaseTag case_from_name(const std::string& s) {
  if (s == "1a") return CaseTag::C1a;
  if (s == "1b") return CaseTag::C1b;
  if (s == "2a") return CaseTag::C2a;
  if (s == "2b") return CaseTag::C2b;
  if (s == "3a") return CaseTag::C3a;
  if (s == "3b") return CaseTag::C3b;
  throw Error(Errc::InvalidInput, "unknown case name " + s);
}

namespace {

const CaseShape kShapes[6] = {
    // 1a
    {CaseTag::C1a,
     {{{3, 4}, {1, 4}, {1, 2}, {2, 3}}},
     {{{2, 1}, {4, 3}}},
     {{{3, 2}, {1, 4}}}},
    // 1b
    {CaseTag::C1b,
     {{{3, 4}, {1, 3}, {2, 4}, {1, 2}}},
     {{{2, 1}, {3, 4}}},
     {{{4, 2}, {1, 3}}}},
    // 2a
    {CaseTag::C2a,
     {{{2, 3}, {3, 4}, {1, 4}, {1, 2}}},
     {{{4, 1}, {2, 3}}},
     {{{1, 2}, {3, 4}}}},
    // 2b
    {CaseTag::C2b,
     {{{2, 3}, {1, 4}, {2, 4}, {1, 3}}},
     {{{4, 1}, {3, 2}}},
     {{{1, 3}, {2, 4}}}},
    // 3a
    {CaseTag::C3a,
     {{{2, 4}, {1, 3}, {1, 4}, {2, 3}}},
     {{{3, 1}, {4, 2}}},
     {{{2, 3}, {1, 4}}}},
    // 3b
    {CaseTag::C3b,
     {{{2, 4}, {3, 4}, {1, 2}, {1, 3}}},
     {{{1, 2}, {4, 3}}},
     {{{3, 1}, {2, 4}}}},
};

int case_idx(CaseTag t) { return static_cast<int>(t); }

std::vector<char> reach_table(long bound, const std::vector<long>& gens) {
  std::vector<char> ok(bound + 1, 0);
  ok[0] = 1;
  for (long v = 1; v <= bound; ++v)
    for (long g : gens)
      if (g <= v && ok[v - g]) {
        ok[v] = 1;
        break;
      }
  return ok;
}

} // namespace

const CaseShape& case_shape(CaseTag t) { return kShapes[case_idx(t)]; }

const std::array<CaseTag, 6>& all_cases() {
  static const std::array<CaseTag, 6> cs = {CaseTag::C1a, CaseTag::C1b,
                                            CaseTag::C2a, CaseTag::C2b,
                                            CaseTag::C3a, CaseTag::C3b};
  return cs;
}

std::array<std::array<int, 2>, 8> sym_pairs(CaseTag t) {
  const CaseShape& sh = case_shape(t);
  std::array<std::array<int, 2>, 8> out;
  int k = 0;
  for (int i = 1; i <= 4; ++i)
    for (int v : sh.rhs[i - 1]) out[k++] = {i, v};
  return out;
}

int sym_index(CaseTag t, int i, int j) {
  auto ps = sym_pairs(t);
  for (int k = 0; k < 8; ++k)
    if (ps[k][0] == i && ps[k][1] == j) return k;
  throw std::logic_error("exponent slot not present in this case");
}

std::array<long, 8> BresinskyModel::sym_values() const {
  auto ps = sym_pairs(tag);
  std::array<long, 8> out{};
  for (int k = 0; k < 8; ++k) out[k] = a[ps[k][0]][ps[k][1]];
  return out;
}

Int sdegree(const Semigroup& S, const Monomial& m) {
  Int d = 0;
  for (int i = 0; i < m.nvars(); ++i) d += Int(m.e[i]) * S.gens()[i];
  return d;
}

long minimal_alpha(const Semigroup& S, int i) {
  std::vector<long> others;
  for (int j = 1; j <= 4; ++j)
    if (j != i) others.push_back(S.n(j));
  long ni = S.n(i);
  for (long cap = 64; cap <= (1L << 22); cap *= 4) {
    auto ok = reach_table(cap * ni, others);
    for (long a = 1; a <= cap; ++a)
      if (ok[a * ni]) return a;
  }
  throw std::logic_error("no multiple of a generator reachable from the others");
}

namespace {

// the strict inequalities forced by n1 < n2 < n3 < n4 on any matching table;
// they must hold automatically, so a violation marks a non-match
bool ordering_ok(CaseTag t, const AlphaTable& a) {
  switch (t) {
    case CaseTag::C1a:
      return a[1][1] > a[1][3] + a[1][4] && a[4][4] < a[4][2] + a[4][3] &&
             a[3][3] < a[3][1] + a[3][2];
    case CaseTag::C1b:
      return a[1][1] > a[1][3] + a[1][4] && a[4][4] < a[4][1] + a[4][2];
    case CaseTag::C2a:
      return a[1][1] > a[1][2] + a[1][3] && a[2][2] > a[2][3] + a[2][4] &&
             a[4][4] < a[4][1] + a[4][2];
    case CaseTag::C2b:
      return a[1][1] > a[1][2] + a[1][3] && a[4][4] < a[4][1] + a[4][3];
    case CaseTag::C3a:
      return a[1][1] > a[1][2] + a[1][4] && a[4][4] < a[4][2] + a[4][3];
    case CaseTag::C3b:
      return a[1][1] > a[1][2] + a[1][4] && a[2][2] > a[2][3] + a[2][4] &&
             a[3][3] < a[3][1] + a[3][2] && a[4][4] < a[4][1] + a[4][3];
  }
  return false;
}

// a_i = sum of the two tail exponents of x_i across the other rows
bool identities_ok(const CaseShape& sh, const AlphaTable& a) {
  for (int v = 1; v <= 4; ++v) {
    long sum = 0;
    int uses = 0;
    for (int i = 1; i <= 4; ++i)
      for (int w : sh.rhs[i - 1])
        if (w == v) {
          sum += a[i][v];
          ++uses;
        }
    if (uses != 2 || sum != a[v][v]) return false;
  }
  return true;
}

bool f5_balanced(const Semigroup& S, const CaseShape& sh, const AlphaTable& a) {
  Int lhs = 0, rhs = 0;
  for (auto [u, v] : sh.f5_plus) lhs += Int(a[u][v]) * S.gens()[v - 1];
  for (auto [u, v] : sh.f5_minus) rhs += Int(a[u][v]) * S.gens()[v - 1];
  return lhs == rhs;
}

Monomial power(int nvars, int var, long e) {
  Monomial m = Monomial::one(nvars);
  m.e[var - 1] = static_cast<int>(e);
  return m;
}

} // namespace

BresinskyModel classify_bresinsky(const Semigroup& S) {
  if (!S.is_symmetric())
    throw Error(Errc::NotSymmetric, "semigroup is not symmetric");

  std::array<long, 4> alpha;
  for (int i = 1; i <= 4; ++i) alpha[i - 1] = minimal_alpha(S, i);

  struct Match {
    CaseTag tag;
    AlphaTable a;
    bool operator<(const Match& o) const {
      if (tag != o.tag) return tag < o.tag;
      return a < o.a;
    }
  };
  std::set<Match> matches;

  for (CaseTag t : all_cases()) {
    const CaseShape& sh = case_shape(t);
    // candidate tail exponents per row
    std::array<std::vector<std::array<long, 2>>, 4> cand;
    bool feasible = true;
    for (int i = 1; i <= 4 && feasible; ++i) {
      int j = sh.rhs[i - 1][0], k = sh.rhs[i - 1][1];
      Int target = Int(alpha[i - 1]) * S.gens()[i - 1];
      for (long ej = 1; ej <= alpha[j - 1] - 1; ++ej) {
        Int rem = target - Int(ej) * S.gens()[j - 1];
        if (rem <= 0) break;
        if (rem % S.gens()[k - 1] != 0) continue;
        long ek = to_long(rem / S.gens()[k - 1]);
        if (ek >= 1 && ek <= alpha[k - 1] - 1) cand[i - 1].push_back({ej, ek});
      }
      if (cand[i - 1].empty()) feasible = false;
    }
    if (!feasible) continue;

    for (const auto& c1 : cand[0])
      for (const auto& c2 : cand[1])
        for (const auto& c3 : cand[2])
          for (const auto& c4 : cand[3]) {
            AlphaTable a{};
            const std::array<std::array<long, 2>, 4> pick = {c1, c2, c3, c4};
            for (int i = 1; i <= 4; ++i) {
              a[i][i] = alpha[i - 1];
              a[i][sh.rhs[i - 1][0]] = pick[i - 1][0];
              a[i][sh.rhs[i - 1][1]] = pick[i - 1][1];
            }
            if (!identities_ok(sh, a)) continue;
            if (!ordering_ok(t, a)) continue;
            if (!f5_balanced(S, sh, a)) continue;
            matches.insert({t, a});
          }
  }

  if (matches.empty())
    throw Error(Errc::CompleteIntersection,
                "no five-generator template matches; the defining ideal is a "
                "complete intersection");
  if (matches.size() > 1) {
    std::string names;
    for (const auto& m : matches) {
      if (!names.empty()) names += ",";
      names += case_name(m.tag);
    }
    throw Error(Errc::AmbiguousClassification,
                "multiple template matches: " + names);
  }

  const Match& m = *matches.begin();
  BresinskyModel M{S, m.tag, alpha, m.a, {}};
  const CaseShape& sh = case_shape(m.tag);
  for (int i = 1; i <= 4; ++i) {
    int j = sh.rhs[i - 1][0], k = sh.rhs[i - 1][1];
    Binomial b;
    b.plus = power(4, i, m.a[i][i]);
    b.minus = mul(power(4, j, m.a[i][j]), power(4, k, m.a[i][k]));
    M.f[i - 1] = b;
  }
  Binomial f5;
  f5.plus = Monomial::one(4);
  f5.minus = Monomial::one(4);
  for (auto [u, v] : sh.f5_plus) f5.plus = mul(f5.plus, power(4, v, m.a[u][v]));
  for (auto [u, v] : sh.f5_minus)
    f5.minus = mul(f5.minus, power(4, v, m.a[u][v]));
  M.f[4] = f5;
  return M;
}

} // namespace gorcone
