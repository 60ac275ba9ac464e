#include "gorcone/tangentcone.hpp"

namespace gorcone {

Polynomial to_polynomial(const Binomial& b, int nvars) {
  return Polynomial::from_terms(nvars, {{Rat(1), b.plus}, {Rat(-1), b.minus}});
}

namespace {

Monomial power(int nvars, int var, long e) {
  Monomial m = Monomial::one(nvars);
  m.e[var - 1] = static_cast<int>(e);
  return m;
}

Monomial prod3(int v1, long e1, int v2, long e2, int v3, long e3) {
  Monomial m = Monomial::one(4);
  m.e[v1 - 1] += static_cast<int>(e1);
  m.e[v2 - 1] += static_cast<int>(e2);
  m.e[v3 - 1] += static_cast<int>(e3);
  return m;
}

} // namespace

CMReport tangent_cone_cm(const BresinskyModel& M) {
  const AlphaTable& a = M.a;
  CMReport r;
  r.oracle_cm = M.S.tangent_cone_cm_oracle();

  switch (M.tag) {
    case CaseTag::C1a:
      r.covered = true;
      r.theorem_cm = a[2][2] <= a[2][1] + a[2][4];
      r.clause = "1a";
      break;
    case CaseTag::C3a:
      r.covered = true;
      r.theorem_cm =
          a[2][2] <= a[2][1] + a[2][3] && a[3][3] <= a[3][1] + a[3][4];
      r.clause = "3a";
      break;
    case CaseTag::C1b: {
      bool c1 = a[2][2] <= a[2][1] + a[2][3];
      bool c2 = a[4][2] + a[1][3] <= a[2][1] + a[3][4];
      bool deep_a = a[3][3] + a[1][3] <=
                    a[1][1] + a[3][2] + a[3][4] - a[1][4];
      if (a[3][2] < a[4][2] && a[1][4] <= a[3][4]) {
        r.covered = true;
        r.theorem_cm = c1 && c2 && deep_a;
        r.clause = "1b(i)";
      } else if (a[4][2] <= a[3][2]) {
        bool b1 = a[3][4] < a[1][4] &&
                  a[3][3] + a[1][3] <=
                      a[2][1] + a[3][2] - a[4][2] + 2 * a[3][4];
        bool b2 = a[1][4] <= a[3][4] && deep_a;
        r.covered = true;
        r.theorem_cm = c1 && c2 && (b1 || b2);
        r.clause = "1b(ii)";
      } else {
        r.covered = false;
        r.clause = "1b uncovered";
      }
      break;
    }
    case CaseTag::C2a: {
      bool c1 = a[3][3] <= a[3][1] + a[3][4];
      bool c2 = a[1][2] + a[3][4] <= a[4][1] + a[2][3];
      bool deep_a = a[2][2] + a[1][2] <=
                    a[1][1] + a[2][3] - a[1][3] + a[2][4];
      if (a[2][4] < a[3][4] && a[1][3] <= a[2][3]) {
        r.covered = true;
        r.theorem_cm = c1 && c2 && deep_a;
        r.clause = "2a(i)";
      } else if (a[3][4] <= a[2][4]) {
        bool b1 = a[2][3] < a[1][3] &&
                  a[2][2] + a[1][2] <=
                      a[4][1] + 2 * a[2][3] + a[2][4] - a[3][4];
        bool b2 = a[1][3] <= a[2][3] && deep_a;
        r.covered = true;
        r.theorem_cm = c1 && c2 && (b1 || b2);
        r.clause = "2a(ii)";
      } else {
        r.covered = false;
        r.clause = "2a uncovered";
      }
      break;
    }
    case CaseTag::C2b: {
      bool c1 = a[2][2] <= a[2][1] + a[2][4];
      bool deep_a = a[3][3] + a[1][3] <=
                    a[1][1] + a[3][2] - a[1][2] + a[3][4];
      if (a[3][4] < a[2][4] && a[1][2] <= a[3][2]) {
        r.covered = true;
        r.theorem_cm = c1 && deep_a;
        r.clause = "2b(i)";
      } else if (a[2][4] <= a[3][4]) {
        bool b1 = a[3][2] < a[1][2] &&
                  a[3][3] + a[1][3] <=
                      a[4][1] + 2 * a[3][2] + a[3][4] - a[2][4];
        bool b2 = a[1][2] <= a[3][2] && deep_a;
        r.covered = true;
        r.theorem_cm = c1 && (b1 || b2);
        r.clause = "2b(ii)";
      } else {
        r.covered = false;
        r.clause = "2b uncovered";
      }
      break;
    }
    case CaseTag::C3b: {
      bool c1 = a[1][2] + a[4][3] <= a[3][1] + a[2][4];
      bool deep_a = a[2][2] + a[1][2] <=
                    a[1][1] + a[2][3] + a[2][4] - a[1][4];
      if (a[2][3] < a[4][3] && a[1][4] <= a[2][4]) {
        r.covered = true;
        r.theorem_cm = c1 && deep_a;
        r.clause = "3b(i)";
      } else if (a[4][3] <= a[2][3]) {
        bool b1 = a[2][4] < a[1][4] &&
                  a[2][2] + a[1][2] <=
                      a[3][1] + 2 * a[2][4] + a[2][3] - a[4][3];
        bool b2 = a[1][4] <= a[2][4] && deep_a;
        r.covered = true;
        r.theorem_cm = c1 && (b1 || b2);
        r.clause = "3b(ii)";
      } else {
        r.covered = false;
        r.clause = "3b uncovered";
      }
      break;
    }
  }

  r.agree = !r.covered || (r.theorem_cm == r.oracle_cm);
  r.cm = r.covered ? r.theorem_cm : r.oracle_cm;
  return r;
}

std::optional<Binomial> sixth_generator(const BresinskyModel& M) {
  const AlphaTable& a = M.a;
  Binomial b;
  switch (M.tag) {
    case CaseTag::C1a:
    case CaseTag::C3a:
      return std::nullopt;
    case CaseTag::C1b:
      b.plus = power(4, 3, a[3][3] + a[1][3]);
      if (a[1][4] <= a[3][4])
        b.minus = prod3(1, a[1][1], 2, a[3][2], 4, a[3][4] - a[1][4]);
      else if (a[4][2] <= a[3][2])
        b.minus = prod3(1, a[2][1], 2, a[3][2] - a[4][2], 4, 2 * a[3][4]);
      else
        return std::nullopt;
      return b;
    case CaseTag::C2a:
      b.plus = power(4, 2, a[2][2] + a[1][2]);
      if (a[1][3] <= a[2][3])
        b.minus = prod3(1, a[1][1], 3, a[2][3] - a[1][3], 4, a[2][4]);
      else if (a[3][4] <= a[2][4])
        b.minus = prod3(1, a[4][1], 3, 2 * a[2][3], 4, a[2][4] - a[3][4]);
      else
        return std::nullopt;
      return b;
    case CaseTag::C2b:
      b.plus = power(4, 3, a[3][3] + a[1][3]);
      if (a[1][2] <= a[3][2])
        b.minus = prod3(1, a[1][1], 2, a[3][2] - a[1][2], 4, a[3][4]);
      else if (a[2][4] <= a[3][4])
        b.minus = prod3(1, a[4][1], 2, 2 * a[3][2], 4, a[3][4] - a[2][4]);
      else
        return std::nullopt;
      return b;
    case CaseTag::C3b:
      b.plus = power(4, 2, a[2][2] + a[1][2]);
      if (a[1][4] <= a[2][4])
        b.minus = prod3(1, a[1][1], 3, a[2][3], 4, a[2][4] - a[1][4]);
      else if (a[4][3] <= a[2][3])
        b.minus = prod3(1, a[3][1], 3, a[2][3] - a[4][3], 4, 2 * a[2][4]);
      else
        return std::nullopt;
      return b;
  }
  return std::nullopt;
}

bool exponent_corner(const BresinskyModel& M) {
  const AlphaTable& a = M.a;
  switch (M.tag) {
    case CaseTag::C1a:
    case CaseTag::C3a:
      return false;
    case CaseTag::C1b:
      return a[3][4] < a[1][4] && a[3][2] < a[4][2];
    case CaseTag::C2a:
      return a[2][3] < a[1][3] && a[2][4] < a[3][4];
    case CaseTag::C2b:
      return a[3][2] < a[1][2] && a[3][4] < a[2][4];
    case CaseTag::C3b:
      return a[2][4] < a[1][4] && a[2][3] < a[4][3];
  }
  return false;
}

std::vector<Polynomial> standard_basis_candidate(const BresinskyModel& M) {
  std::vector<Polynomial> G;
  for (const auto& b : M.f) G.push_back(to_polynomial(b, 4));
  if (auto f6 = sixth_generator(M)) G.push_back(to_polynomial(*f6, 4));
  return G;
}

std::vector<Polynomial> tangent_cone_gens(const std::vector<Polynomial>& basis) {
  std::vector<Polynomial> out;
  for (const auto& g : basis) out.push_back(lowest_form(g));
  return out;
}

std::vector<Polynomial> project_x1_polys(const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) out.push_back(substitute_zero(g, 1));
  return out;
}

std::vector<Monomial> project_x1(const std::vector<Polynomial>& gens) {
  std::vector<Monomial> out;
  for (const auto& p : project_x1_polys(gens)) {
    if (p.is_zero()) continue;
    if (p.terms().size() != 1)
      throw Error(Errc::NonMonomialProjection,
                  "projected generator is not a monomial: " +
                      polynomial_to_string(p, 2));
    out.push_back(p.terms()[0].m);
  }
  return out;
}

} // namespace gorcone
