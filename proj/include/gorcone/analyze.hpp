#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "gorcone/resolution.hpp"
#include "gorcone/tangentcone.hpp"

namespace gorcone {

struct StageTiming {
  std::string name;
  double ms = 0;
};

struct AnalyzeResult {
  std::array<long, 4> gens{};
  std::uint64_t seed = 0;

  bool ok = false;    // pipeline ran to the end without a validation error
  std::string error;  // error code name when ok is false
  std::string message;

  bool symmetric = false;
  std::string case_tag;
  std::array<long, 4> alpha{};
  std::vector<std::pair<std::string, long>> exponents;

  bool cm = false;
  bool cm_covered = false;
  bool cm_theorem = false;
  bool cm_oracle = false;
  std::string cm_clause;
  bool corner = false; // instance sits on the exponent corner with no
                       // sixth generator template

  bool standard_basis_ok = false;
  int basis_size = 0;
  bool projection_monomial = false;
  std::vector<std::string> tangent_cone; // projected generators, printable
  long quotient_length = -1;

  std::vector<std::vector<long>> betti_candidates;
  std::vector<long> betti_theorem;
  std::vector<long> betti_oracle;
  bool betti_match = false;
  bool hilbert_match = false;

  bool resolution_applicable = false;
  ExactnessReport exactness;

  std::vector<std::string> anomalies;
  std::vector<StageTiming> timings;
};

AnalyzeResult analyze(const std::array<long, 4>& gens, std::uint64_t seed);

std::string analyze_to_json(const AnalyzeResult& r);

// 0 fine, 1 validation error, 2 anomaly
int exit_code_for(const AnalyzeResult& r);

struct ScanOptions {
  long max_n4 = 40;
  int jobs = 1;
  std::uint64_t seed = 0;
  bool emit_all = false; // also emit lines for non-classified candidates
};

struct ScanSummary {
  long tuples = 0;          // strictly increasing 4-tuples examined
  long valid = 0;           // minimally 4-generated, gcd 1
  long symmetric = 0;
  long complete_intersection = 0;
  long classified = 0;
  long cm_count = 0;
  long noncm_count = 0;
  long corner_cm_count = 0; // cohen-macaulay cones outside the clause grid
  long anomaly_count = 0;
  std::map<std::string, long> by_case;
  std::map<std::string, long> by_betti;
  std::vector<std::string> corner_cm_gens;
  std::vector<std::string> anomaly_gens;
};

// writes one json line per classified instance to out (all candidates with
// emit_all); returns counters
ScanSummary scan(const ScanOptions& opt, std::ostream& out);

std::string summary_to_json(const ScanSummary& s);

} // namespace gorcone
