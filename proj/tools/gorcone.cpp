#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "gorcone/analyze.hpp"
#include "gorcone/errors.hpp"

namespace {

void print_human(const gorcone::AnalyzeResult& r) {
  std::cout << "generators: " << r.gens[0] << " " << r.gens[1] << " "
            << r.gens[2] << " " << r.gens[3] << "\n";
  if (!r.error.empty()) {
    std::cout << "error: " << r.message << "\n";
    return;
  }
  std::cout << "symmetric: " << (r.symmetric ? "yes" : "no") << "\n";
  std::cout << "case: " << r.case_tag << "\n";
  std::cout << "alpha:";
  for (long a : r.alpha) std::cout << " " << a;
  std::cout << "\nexponents:";
  for (const auto& [k, v] : r.exponents) std::cout << " " << k << "=" << v;
  std::cout << "\ntangent cone cohen-macaulay: " << (r.cm ? "yes" : "no")
            << "  (clause " << r.cm_clause << ", oracle "
            << (r.cm_oracle ? "yes" : "no") << ")\n";
  if (r.cm) {
    std::cout << "standard basis verified: "
              << (r.standard_basis_ok ? "yes" : "no") << "\n";
    std::cout << "tangent cone generators (x1 set to zero):\n";
    for (const auto& s : r.tangent_cone) std::cout << "  " << s << "\n";
    std::cout << "quotient length: " << r.quotient_length << "\n";
    std::cout << "betti (oracle):";
    for (long b : r.betti_oracle) std::cout << " " << b;
    std::cout << "\nbetti (predicted):";
    for (long b : r.betti_theorem) std::cout << " " << b;
    std::cout << "\nbetti match: " << (r.betti_match ? "yes" : "no") << "\n";
    if (r.resolution_applicable) {
      std::cout << "resolution exact: " << (r.exactness.exact ? "yes" : "no")
                << "  (";
      for (size_t i = 0; i < r.exactness.notes.size(); ++i)
        std::cout << (i ? "; " : "") << r.exactness.notes[i];
      std::cout << ")\n";
    }
  }
  if (!r.anomalies.empty()) {
    std::cout << "anomalies:";
    for (const auto& a : r.anomalies) std::cout << " " << a;
    std::cout << "\n";
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"tangent cones of gorenstein monomial curves in A^4"};
  app.require_subcommand(1);

  std::array<long, 4> gens{};
  std::uint64_t seed = 0;
  bool as_json = false;

  auto add_gens = [&](CLI::App* sub) {
    sub->add_option("gens", gens, "four semigroup generators")->required();
  };

  CLI::App* an = app.add_subcommand(
      "analyze", "classify one semigroup and check its tangent cone");
  add_gens(an);
  an->add_option("--seed", seed, "seed for randomized rank checks");
  an->add_flag("--json", as_json, "emit one json object instead of text");

  long max_gen = 40;
  int jobs = 1;
  bool emit_all = false;
  std::string out_path;
  CLI::App* sc = app.add_subcommand(
      "scan", "sweep all increasing generator quadruples up to a bound");
  sc->add_option("--max-gen", max_gen, "largest generator value")
      ->check(CLI::Range(4L, 200L));
  sc->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 64));
  sc->add_option("--seed", seed, "seed for randomized rank checks");
  sc->add_option("--out", out_path, "write per-instance json lines here");
  sc->add_flag("--all", emit_all, "emit every tuple, not just classified ones");

  CLI::App* be = app.add_subcommand(
      "betti", "betti numbers of the tangent cone from the homology oracle");
  add_gens(be);

  CLI::App* vr = app.add_subcommand(
      "verify-resolution", "check the explicit resolution for one instance");
  add_gens(vr);
  vr->add_option("--seed", seed, "seed for randomized rank checks");

  CLI11_PARSE(app, argc, argv);

  if (an->parsed()) {
    gorcone::AnalyzeResult r = gorcone::analyze(gens, seed);
    if (as_json)
      std::cout << gorcone::analyze_to_json(r) << "\n";
    else
      print_human(r);
    return gorcone::exit_code_for(r);
  }

  if (sc->parsed()) {
    gorcone::ScanOptions opt;
    opt.max_n4 = max_gen;
    opt.jobs = jobs;
    opt.seed = seed;
    opt.emit_all = emit_all;
    gorcone::ScanSummary s;
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "cannot open " << out_path << "\n";
        return 1;
      }
      s = gorcone::scan(opt, out);
    } else {
      s = gorcone::scan(opt, std::cout);
    }
    std::cout << gorcone::summary_to_json(s) << "\n";
    return s.anomaly_count > 0 ? 2 : 0;
  }

  if (be->parsed()) {
    gorcone::AnalyzeResult r = gorcone::analyze(gens, seed);
    if (!r.error.empty()) {
      std::cerr << "error: " << r.message << "\n";
      return 1;
    }
    if (!r.cm) {
      std::cerr << "error: tangent cone is not cohen-macaulay, the betti "
                   "certificate does not apply\n";
      return 1;
    }
    if (r.betti_oracle.empty()) {
      std::cerr << "error: oracle did not produce betti numbers\n";
      return gorcone::exit_code_for(r);
    }
    std::cout << "betti:";
    for (long b : r.betti_oracle) std::cout << " " << b;
    std::cout << "\n";
    return gorcone::exit_code_for(r);
  }

  if (vr->parsed()) {
    gorcone::AnalyzeResult r = gorcone::analyze(gens, seed);
    if (!r.error.empty()) {
      std::cerr << "error: " << r.message << "\n";
      return 1;
    }
    if (!r.cm) {
      std::cerr << "error: " << gorcone::errc_name(gorcone::Errc::NotCohenMacaulay)
                << ": the explicit resolution applies only to cohen-macaulay "
                   "tangent cones\n";
      return 1;
    }
    if (!r.resolution_applicable) {
      std::cerr << "error: no matrix form is defined for this instance (case "
                << r.case_tag << ")\n";
      return 1;
    }
    std::cout << "complex: " << (r.exactness.complex_ok ? "ok" : "FAIL")
              << "\n";
    std::cout << "ranks: " << r.exactness.ranks[0] << " "
              << r.exactness.ranks[1] << " " << r.exactness.ranks[2]
              << " (required 1 5 3): "
              << (r.exactness.rank_condition_ok ? "ok" : "FAIL") << "\n";
    std::cout << "depth certificate for the middle map: "
              << (r.exactness.grade2_ok ? "ok" : "FAIL") << "\n";
    std::cout << "depth certificate for the last map: "
              << (r.exactness.grade3_ok ? "ok" : "FAIL") << "\n";
    std::cout << "minimal: " << (r.exactness.minimal ? "yes" : "no") << "\n";
    std::cout << "exact: " << (r.exactness.exact ? "yes" : "no") << "\n";
    std::cout << "notes:";
    for (const auto& n : r.exactness.notes) std::cout << " [" << n << "]";
    std::cout << "\n";
    return gorcone::exit_code_for(r);
  }

  return 0;
}
