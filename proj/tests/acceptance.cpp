// acceptance gate: runs one desk-scale scan plus the pinned fixtures and
// prints exactly one PASS/FAIL line per criterion; exits nonzero on any FAIL

#include <array>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gorcone/analyze.hpp"
#include "gorcone/bettioracle.hpp"
#include "gorcone/resolution.hpp"
#include "gorcone/semigroup.hpp"
#include "gorcone/toric.hpp"

using namespace gorcone;
using nlohmann::json;

namespace {

int failures = 0;

void report(int idx, bool ok, const std::string& text) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", idx, text.c_str());
  if (!ok) ++failures;
}

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

bool record_cm(const json& r) { return r["cm"]["value"].get<bool>(); }
bool record_corner(const json& r) { return r["cm"]["corner"].get<bool>(); }

std::vector<long> record_oracle(const json& r) {
  return r["betti"]["oracle"].get<std::vector<long>>();
}

// the regimes whose explicit matrices exist: the paired cases always, the
// remaining two only when the third diagonal exponent dominates its row
bool record_matrix_regime(const json& r) {
  std::string c = r["case"].get<std::string>();
  if (c == "2a" || c == "3b") return true;
  if (c != "1b" && c != "2b") return false;
  long a3 = r["alpha"][2].get<long>();
  long a32 = r["exponents"]["a32"].get<long>();
  long a34 = r["exponents"]["a34"].get<long>();
  return a3 > a32 + a34;
}

BresinskyModel model_of(std::array<long, 4> gens) {
  return classify_bresinsky(Semigroup::create(
      {Int(gens[0]), Int(gens[1]), Int(gens[2]), Int(gens[3])}));
}

std::string betti_str(const std::vector<long>& b) {
  std::string s = "(";
  for (size_t i = 0; i < b.size(); ++i)
    s += (i ? "," : "") + std::to_string(b[i]);
  return s + ")";
}

} // namespace

int main() {
  // one shared scan feeds criteria 1, 2, 4, 5 and the agreement half of 6
  ScanOptions opt;
  opt.max_n4 = 40;
  opt.jobs = 4;
  std::ostringstream out;
  auto t0 = std::chrono::steady_clock::now();
  ScanSummary sum = scan(opt, out);
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();

  std::vector<json> recs;
  {
    std::istringstream in(out.str());
    std::string line;
    while (std::getline(in, line)) recs.push_back(json::parse(line));
  }

  // criterion 1: desk-scale wall time, the oracle trichotomy on every
  // cohen-macaulay instance the clause grid covers, zero anomalies
  {
    const std::vector<std::vector<long>> allowed = {
        {1, 5, 5, 1}, {1, 5, 6, 2}, {1, 6, 8, 3}};
    long covered = 0;
    long off = 0;
    for (const json& r : recs) {
      if (!record_cm(r) || record_corner(r)) continue;
      ++covered;
      std::vector<long> ob = record_oracle(r);
      bool in_set = false;
      for (const auto& a : allowed)
        if (ob == a) in_set = true;
      if (!in_set) ++off;
    }
    bool ok = secs < 600.0 && covered > 0 && off == 0 &&
              sum.anomaly_count == 0;
    char buf[320];
    std::snprintf(buf, sizeof buf,
                  "scan to generator bound 40 took %.1fs; all %ld "
                  "cohen-macaulay cones inside the clause grid have oracle "
                  "betti in {(1,5,5,1),(1,5,6,2),(1,6,8,3)}; anomalies %ld; "
                  "%ld cohen-macaulay cones on the exponent corner carry no "
                  "prediction and are tallied separately",
                  secs, covered, sum.anomaly_count, sum.corner_cm_count);
    report(1, ok, buf);
  }

  // criterion 2: per-case oracle values, exact equality
  {
    long n_a = 0, n_pair = 0, n_heavy = 0, bad = 0;
    for (const json& r : recs) {
      if (!record_cm(r) || record_corner(r)) continue;
      std::string c = r["case"].get<std::string>();
      std::vector<long> ob = record_oracle(r);
      if (c == "1a" || c == "3a") {
        ++n_a;
        if (ob != std::vector<long>{1, 5, 6, 2}) ++bad;
      } else if (c == "2a" || c == "3b") {
        ++n_pair;
        if (ob != std::vector<long>{1, 6, 8, 3}) ++bad;
      } else if (record_matrix_regime(r)) {
        ++n_heavy;
        if (ob != std::vector<long>{1, 6, 8, 3}) ++bad;
      }
    }
    bool ok = bad == 0 && n_a > 0 && n_pair > 0 && n_heavy > 0;
    char buf[320];
    std::snprintf(buf, sizeof buf,
                  "oracle equals (1,5,6,2) on all %ld instances of cases "
                  "1a/3a, (1,6,8,3) on all %ld of 2a/3b and on all %ld "
                  "dominant-diagonal instances of 1b/2b; %ld mismatches",
                  n_a, n_pair, n_heavy, bad);
    report(2, ok, buf);
  }

  // criterion 3: both compositions vanish symbolically for every matrix
  // table and numerically at 100 random admissible exponent choices per
  // displayed family
  {
    bool ok = true;
    const std::array<CaseTag, 4> fams = {CaseTag::C1b, CaseTag::C2a,
                                         CaseTag::C2b, CaseTag::C3b};
    for (CaseTag t : fams)
      for (bool va : {true, false}) {
        if (!va && (t == CaseTag::C1b || t == CaseTag::C2b)) continue;
        FreeComplex c = build_resolution(t, va);
        ok = ok && compose_is_zero(c.phi1, c.phi2) &&
             compose_is_zero(c.phi2, c.phi3);
      }
    const u64 p = 2147483647ULL;
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<u64> pd(1, p - 1);
    long trials = 0;
    for (CaseTag t : fams) {
      const ResShape& sh = res_shape(t, true);
      FreeComplex c = build_resolution(t, true);
      for (int n = 0; n < 100; ++n) {
        std::array<long, 8> vals = random_valid(sh.facts, rng);
        std::array<u64, 3> pt = {pd(rng), pd(rng), pd(rng)};
        ok = ok && product_is_zero_at(c.phi1, c.phi2, vals, pt, p) &&
             product_is_zero_at(c.phi2, c.phi3, vals, pt, p);
        ++trials;
      }
    }
    char buf[320];
    std::snprintf(buf, sizeof buf,
                  "phi1*phi2 and phi2*phi3 vanish symbolically for every "
                  "matrix table and numerically in %ld random trials "
                  "(100 per family)",
                  trials);
    report(3, ok, buf);
  }

  // criterion 4: ranks and depth certificates on every scanned matrix
  // instance, plus closed-form certificate exponents on pinned instances
  {
    long nres = 0, bad = 0;
    bool mid5 = true;
    for (const json& r : recs) {
      if (!r.contains("resolution")) continue;
      ++nres;
      const json& x = r["resolution"];
      bool fine = x["complex"].get<bool>() &&
                  x["ranks"] == json::array({1, 5, 3}) &&
                  x["rank_condition"].get<bool>() &&
                  x["depth2"].get<bool>() && x["depth3"].get<bool>() &&
                  x["minimal"].get<bool>() && x["exact"].get<bool>();
      if (!fine) ++bad;
      if (x["ranks"][1].get<long>() != 5) mid5 = false;
    }
    bool certs_ok = true;
    {
      BresinskyModel M = model_of({9, 19, 20, 41}); // dominant-diagonal 1b
      std::array<long, 8> v = M.sym_values();
      certs_ok = certs_ok && M.tag == CaseTag::C1b && resolution_supported(M);
      for (const MinorCert& c : minor_certs_phi2(CaseTag::C1b)) {
        long e = lf_eval(c.exp, v);
        if (c.var == 3) certs_ok = certs_ok && e == 2 * M.alpha[2] + 3 * M.a[1][3];
        if (c.var == 4) certs_ok = certs_ok && e == 2 * M.alpha[3] + M.a[1][4];
      }
    }
    {
      BresinskyModel M = model_of({6, 11, 13, 20}); // case 2a
      std::array<long, 8> v = M.sym_values();
      certs_ok = certs_ok && M.tag == CaseTag::C2a && resolution_supported(M);
      for (const MinorCert& c : minor_certs_phi3(CaseTag::C2a)) {
        long e = lf_eval(c.exp, v);
        if (c.var == 2) certs_ok = certs_ok && e == M.alpha[1] + 2 * M.a[1][2];
        if (c.var == 3) certs_ok = certs_ok && e == M.alpha[2] + M.a[1][3];
        if (c.var == 4) certs_ok = certs_ok && e == M.alpha[3] + M.a[3][4];
      }
    }
    bool ok = nres > 0 && bad == 0 && mid5 && certs_ok;
    char buf[320];
    std::snprintf(buf, sizeof buf,
                  "ranks (1,5,3) with sums 6 and 8, pure-power depth "
                  "certificates, minimality and exactness on all %ld matrix "
                  "instances; certificate exponents match their closed forms "
                  "on the pinned instances; measured middle rank is 5 on "
                  "every instance, never 1",
                  nres);
    report(4, ok, buf);
  }

  // criterion 5: the candidate basis is closed under s-polynomial reduction
  // on every covered cohen-macaulay instance, and projection yields exactly
  // six monomial generators throughout the matrix regimes
  {
    long ncm = 0, nproj = 0, bad = 0;
    for (const json& r : recs) {
      if (!record_cm(r) || record_corner(r)) continue;
      ++ncm;
      if (!r["standard_basis"].get<bool>()) ++bad;
      if (record_matrix_regime(r)) {
        ++nproj;
        if (!r["projection_monomial"].get<bool>() ||
            r["tangent_cone"].size() != 6)
          ++bad;
      }
    }
    bool ok = ncm > 0 && nproj > 0 && bad == 0;
    char buf[320];
    std::snprintf(buf, sizeof buf,
                  "all s-polynomials reduce to zero on all %ld covered "
                  "cohen-macaulay instances; projecting out the first "
                  "variable leaves exactly 6 monomial generators on all %ld "
                  "matrix-regime instances",
                  ncm, nproj);
    report(5, ok, buf);
  }

  // criterion 6: homology oracle self-tests and characteristic agreement
  {
    MonomialIdeal xyz = make_monomial_ideal(
        3, {Monomial({1, 0, 0}), Monomial({0, 1, 0}), Monomial({0, 0, 1})});
    MonomialIdeal xy =
        make_monomial_ideal(2, {Monomial({1, 0}), Monomial({0, 1})});
    MonomialIdeal principal = make_monomial_ideal(3, {Monomial({2, 0, 0})});
    OracleBetti b3 = total_betti(xyz);
    OracleBetti b2 = total_betti(xy);
    OracleBetti b1 = total_betti(principal);
    long char_bad = 0;
    for (const json& r : recs)
      for (const json& a : r["anomalies"])
        if (a.get<std::string>() == "char-disagreement") ++char_bad;
    bool ok = b3.betti == std::vector<long>{1, 3, 3, 1} && b3.char_agree &&
              b2.betti == std::vector<long>{1, 2, 1} && b2.char_agree &&
              b1.betti == std::vector<long>{1, 1} && b1.char_agree &&
              char_bad == 0;
    char buf[320];
    std::snprintf(buf, sizeof buf,
                  "(x,y,z) -> %s, (x,y) -> %s, principal -> %s; F_2 and "
                  "F_32003 agree on every oracle call of the scan "
                  "(%ld disagreements)",
                  betti_str(b3.betti).c_str(), betti_str(b2.betti).c_str(),
                  betti_str(b1.betti).c_str(), char_bad);
    report(6, ok, buf);
  }

  // criterion 7: the pinned end-to-end fixture
  {
    AnalyzeResult r = analyze({5, 6, 7, 8}, 0);
    bool expo_ok = true;
    for (const auto& [name, v] : r.exponents)
      if (v != (name == "a41" ? 2 : 1)) expo_ok = false;
    bool member = r.betti_oracle == std::vector<long>{1, 5, 5, 1} ||
                  r.betti_oracle == std::vector<long>{1, 5, 6, 2};
    bool ok = r.ok && r.case_tag == "1b" &&
              r.alpha == std::array<long, 4>{3, 2, 2, 2} && expo_ok &&
              r.cm && !r.corner && r.anomalies.empty() &&
              r.betti_oracle == std::vector<long>{1, 5, 5, 1} && member;
    char buf[320];
    std::snprintf(buf, sizeof buf,
                  "analyze(5,6,7,8): case %s, alpha (%ld,%ld,%ld,%ld), a41=2 "
                  "with all other off-diagonal exponents 1, cohen-macaulay; "
                  "pinned oracle betti %s is in {(1,5,5,1),(1,5,6,2)}",
                  r.case_tag.c_str(), r.alpha[0], r.alpha[1], r.alpha[2],
                  r.alpha[3], betti_str(r.betti_oracle).c_str());
    report(7, ok, buf);
  }

  return failures == 0 ? 0 : 1;
}
