#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gorcone/analyze.hpp"
#include "gorcone/resolution.hpp"

using namespace gorcone;

namespace {

BresinskyModel model_of(long a, long b, long c, long d) {
  Semigroup s = Semigroup::create({Int(a), Int(b), Int(c), Int(d)});
  return classify_bresinsky(s);
}

const std::array<std::pair<CaseTag, bool>, 6> all_shapes = {{
    {CaseTag::C1b, true},
    {CaseTag::C2a, true},
    {CaseTag::C2a, false},
    {CaseTag::C2b, true},
    {CaseTag::C3b, true},
    {CaseTag::C3b, false},
}};

// random exponent assignment compatible with a regime's inequalities
std::array<long, 8> random_valid(const CmpFacts& facts, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(1, 6);
  std::array<long, 8> v{};
  for (long& x : v) x = d(rng);
  for (auto [lo, hi] : facts.le)
    if (v[lo] > v[hi]) v[lo] = v[hi];
  return v;
}

bool product_is_zero_at(const MonMatrix& a, const MonMatrix& b,
                        const std::array<long, 8>& vals,
                        const std::array<u64, 3>& pt, u64 p) {
  auto ea = eval_matrix(a, vals, pt, p);
  auto eb = eval_matrix(b, vals, pt, p);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < b.cols; ++j) {
      u64 s = 0;
      for (int k = 0; k < a.cols; ++k)
        s = (s + mulmod(ea[i][k], eb[k][j], p)) % p;
      if (s != 0) return false;
    }
  return true;
}

} // namespace

TEST_CASE("shape tables exist exactly where matrices are carried") {
  for (auto [t, va] : all_shapes) {
    const ResShape& sh = res_shape(t, va);
    CHECK(sh.tag == t);
    CHECK(sh.variant_a == va);
    // every cycle vertex pair along the walk is a stored pair column
    for (const auto& walk : sh.cycles) {
      int m = static_cast<int>(walk.size());
      for (int q = 0; q < m; ++q) {
        int lo = std::min(walk[q], walk[(q + 1) % m]);
        int hi = std::max(walk[q], walk[(q + 1) % m]);
        bool found = false;
        for (const auto& pr : sh.pairs)
          if (pr[0] == lo && pr[1] == hi) found = true;
        CHECK(found);
      }
    }
  }
  CHECK_THROWS_AS(res_shape(CaseTag::C1b, false), Error);
  CHECK_THROWS_AS(res_shape(CaseTag::C2b, false), Error);
  CHECK_THROWS_AS(res_shape(CaseTag::C1a, true), Error);
  CHECK_THROWS_AS(res_shape(CaseTag::C3a, true), Error);
}

TEST_CASE("differentials compose to zero symbolically") {
  for (auto [t, va] : all_shapes) {
    INFO(case_name(t) << (va ? "/A" : "/B"));
    FreeComplex c = build_resolution(t, va);
    CHECK(c.phi1.rows == 1);
    CHECK(c.phi1.cols == 6);
    CHECK(c.phi2.rows == 6);
    CHECK(c.phi2.cols == 8);
    CHECK(c.phi3.rows == 8);
    CHECK(c.phi3.cols == 3);
    CHECK(compose_is_zero(c.phi1, c.phi2));
    CHECK(compose_is_zero(c.phi2, c.phi3));
  }
}

TEST_CASE("pair columns divide out the generator lcm") {
  for (auto [t, va] : all_shapes) {
    const ResShape& sh = res_shape(t, va);
    FreeComplex c = build_resolution(t, va);
    for (int col = 1; col <= 8; ++col) {
      auto [i, j] = sh.pairs[col - 1];
      const MonoEntry* ei = c.phi2.get(i, col);
      const MonoEntry* ej = c.phi2.get(j, col);
      REQUIRE(ei != nullptr);
      REQUIRE(ej != nullptr);
      CHECK(ei->sign == 1);
      CHECK(ej->sign == -1);
      // entry * own generator = the pair's lcm on both rows
      CHECK(sym_mul(ei->m, sh.gstar[i - 1]) == sym_mul(ej->m, sh.gstar[j - 1]));
      // no other row is populated in a pair column
      for (int r = 1; r <= 6; ++r)
        if (r != i && r != j) CHECK(c.phi2.get(r, col) == nullptr);
    }
  }
}

TEST_CASE("composition vanishes numerically on random valid exponents") {
  const u64 p = 2147483647ULL;
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<u64> pd(1, p - 1);
  for (auto [t, va] : all_shapes) {
    INFO(case_name(t) << (va ? "/A" : "/B"));
    const ResShape& sh = res_shape(t, va);
    FreeComplex c = build_resolution(t, va);
    int trials = va ? 100 : 25; // the displayed family plus the flipped one
    for (int n = 0; n < trials; ++n) {
      std::array<long, 8> vals = random_valid(sh.facts, rng);
      // all matrix exponents must instantiate nonnegatively in the regime
      for (const auto& [rc, e] : c.phi2.entries)
        for (int k = 0; k < 3; ++k) CHECK(lf_eval(e.m.e[k], vals) >= 0);
      for (const auto& [rc, e] : c.phi3.entries)
        for (int k = 0; k < 3; ++k) CHECK(lf_eval(e.m.e[k], vals) >= 0);
      std::array<u64, 3> pt = {pd(rng), pd(rng), pd(rng)};
      CHECK(product_is_zero_at(c.phi1, c.phi2, vals, pt, p));
      CHECK(product_is_zero_at(c.phi2, c.phi3, vals, pt, p));
      CHECK(rank_mod_p(eval_matrix(c.phi1, vals, pt, p), p) == 1);
      CHECK(rank_mod_p(eval_matrix(c.phi2, vals, pt, p), p) == 5);
      CHECK(rank_mod_p(eval_matrix(c.phi3, vals, pt, p), p) == 3);
    }
  }
}

TEST_CASE("pure power minor certificates hold") {
  for (CaseTag t : {CaseTag::C1b, CaseTag::C2a, CaseTag::C2b, CaseTag::C3b}) {
    INFO(case_name(t));
    FreeComplex c = build_resolution(t, true);
    std::set<int> vars2, vars3;
    for (const MinorCert& cert : minor_certs_phi2(t)) {
      std::string why;
      CHECK_MESSAGE(check_minor_cert(c.phi2, cert, &why), why);
      vars2.insert(cert.var);
    }
    for (const MinorCert& cert : minor_certs_phi3(t)) {
      std::string why;
      CHECK_MESSAGE(check_minor_cert(c.phi3, cert, &why), why);
      vars3.insert(cert.var);
    }
    // depth certificates: two variables at the middle step, three at the last
    CHECK(vars2.size() >= 2);
    CHECK(vars3.size() == 3);
  }
}

TEST_CASE("exhaustive minor search supports the depth conditions") {
  for (auto [t, va] : all_shapes) {
    INFO(case_name(t) << (va ? "/A" : "/B"));
    FreeComplex c = build_resolution(t, va);
    std::set<int> vars2, vars3;
    for (const MinorCert& m : find_pure_power_minors(c.phi2, 5))
      vars2.insert(m.var);
    for (const MinorCert& m : find_pure_power_minors(c.phi3, 3))
      vars3.insert(m.var);
    CHECK(vars2.size() >= 2);
    CHECK(vars3.size() == 3);
  }
}

TEST_CASE("certificate exponents match the closed forms") {
  // the known expressions tie the certificate exponents to the critical
  // exponents of the instance
  BresinskyModel m1 = model_of(9, 19, 20, 41);
  REQUIRE(m1.tag == CaseTag::C1b);
  auto v1 = m1.sym_values();
  auto c2 = minor_certs_phi2(CaseTag::C1b);
  REQUIRE(c2.size() == 2);
  CHECK(c2[0].var == 3);
  CHECK(lf_eval(c2[0].exp, v1) == 2 * m1.alpha[2] + 3 * m1.a[1][3]);
  CHECK(c2[1].var == 4);
  CHECK(lf_eval(c2[1].exp, v1) == 2 * m1.alpha[3] + m1.a[1][4]);

  BresinskyModel m2 = model_of(6, 11, 13, 20);
  REQUIRE(m2.tag == CaseTag::C2a);
  auto v2 = m2.sym_values();
  auto c3 = minor_certs_phi3(CaseTag::C2a);
  REQUIRE(c3.size() == 3);
  CHECK(c3[0].var == 2);
  CHECK(lf_eval(c3[0].exp, v2) == m2.alpha[1] + 2 * m2.a[1][2]);
  CHECK(c3[1].var == 3);
  CHECK(lf_eval(c3[1].exp, v2) == m2.alpha[2] + m2.a[1][3]);
  CHECK(c3[2].var == 4);
  CHECK(lf_eval(c3[2].exp, v2) == m2.alpha[3] + m2.a[3][4]);
}

TEST_CASE("verification passes on instances of every carried regime") {
  struct Fixture {
    std::array<long, 4> g;
    CaseTag tag;
    bool variant_a;
  };
  const Fixture fixtures[] = {
      {{9, 19, 20, 41}, CaseTag::C1b, true},
      {{6, 11, 13, 20}, CaseTag::C2a, true},
      {{14, 16, 19, 29}, CaseTag::C2a, false},
      {{10, 16, 17, 31}, CaseTag::C2a, false},
      {{9, 22, 23, 35}, CaseTag::C2b, true},
      {{6, 7, 10, 11}, CaseTag::C3b, true},
      {{14, 24, 33, 39}, CaseTag::C3b, false},
  };
  for (const Fixture& f : fixtures) {
    INFO(f.g[0] << "," << f.g[1] << "," << f.g[2] << "," << f.g[3]);
    BresinskyModel m = model_of(f.g[0], f.g[1], f.g[2], f.g[3]);
    REQUIRE(m.tag == f.tag);
    CHECK(variant_a_of(m) == f.variant_a);
    REQUIRE(resolution_supported(m));
    ExactnessReport r = verify_resolution(m, 7);
    CHECK(r.complex_ok);
    CHECK(r.ranks == std::array<long, 3>{1, 5, 3});
    CHECK(r.ranks[1] == 5); // the middle rank really is 5, not 1
    CHECK(r.rank_condition_ok);
    CHECK(r.grade2_ok);
    CHECK(r.grade3_ok);
    CHECK(r.minimal);
    CHECK(r.exact);
  }
}

TEST_CASE("resolution support boundary") {
  // matrix regime, variant A: supported
  CHECK(resolution_supported(model_of(9, 19, 20, 41)));
  CHECK(resolution_supported(model_of(6, 11, 13, 20)));
  // flipped variant of a case with displayed matrices: supported
  CHECK(resolution_supported(model_of(14, 16, 19, 29)));
  // no matrices outside the matrix-bearing regime
  BresinskyModel m58 = model_of(5, 6, 7, 8);
  CHECK(!matrix_bearing(m58));
  CHECK(!resolution_supported(m58));
  // no matrices on the exponent corner
  BresinskyModel mc = model_of(17, 21, 31, 32);
  CHECK(matrix_bearing(mc));
  CHECK(!resolution_supported(mc));
  // no table for the flipped variant of this case
  BresinskyModel mb = model_of(14, 15, 16, 33);
  REQUIRE(mb.tag == CaseTag::C1b);
  CHECK(matrix_bearing(mb));
  CHECK(!variant_a_of(mb));
  CHECK(!resolution_supported(mb));
  // a-cases never carry matrices
  CHECK(!matrix_bearing(model_of(7, 10, 12, 16)));
}

TEST_CASE("betti prediction by regime") {
  using BS = std::vector<std::vector<long>>;
  CHECK(betti_from_theorem(model_of(7, 10, 12, 16)) == BS{{1, 5, 6, 2}});
  CHECK(betti_from_theorem(model_of(7, 8, 9, 13)) == BS{{1, 5, 6, 2}});
  CHECK(betti_from_theorem(model_of(6, 11, 13, 20)) == BS{{1, 6, 8, 3}});
  CHECK(betti_from_theorem(model_of(6, 7, 10, 11)) == BS{{1, 6, 8, 3}});
  CHECK(betti_from_theorem(model_of(9, 19, 20, 41)) == BS{{1, 6, 8, 3}});
  CHECK(betti_from_theorem(model_of(5, 6, 7, 8)) ==
        BS{{1, 5, 5, 1}, {1, 5, 6, 2}});
  // no prediction on the exponent corner
  CHECK(betti_from_theorem(model_of(17, 21, 31, 32)).empty());
  CHECK(betti_from_theorem(model_of(13, 14, 16, 18)).empty());
}
