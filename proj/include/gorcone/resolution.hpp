#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gorcone/linform.hpp"
#include "gorcone/toric.hpp"

namespace gorcone {

// structural data behind the explicit matrices in one exponent regime of a
// case with a length-3 resolution: projected generators, pair syzygies as
// index pairs, second syzygies as closed walks on the generator indices, and
// the exponent inequalities valid throughout the regime
struct ResShape {
  CaseTag tag;
  bool variant_a;
  std::array<SymMonomial, 6> gstar;
  std::array<std::array<int, 2>, 8> pairs; // {i, j} with i < j
  std::array<std::vector<int>, 3> cycles;  // vertex walks, wrap at the end
  CmpFacts facts;
};

// throws UnsupportedRegime when no matrix table exists for that regime
const ResShape& res_shape(CaseTag t, bool variant_a);

struct FreeComplex {
  CaseTag tag;
  bool variant_a;
  MonMatrix phi1; // 1 x 6
  MonMatrix phi2; // 6 x 8
  MonMatrix phi3; // 8 x 3
};

FreeComplex build_resolution(CaseTag t, bool variant_a);

// variant flag an instance falls in
bool variant_a_of(const BresinskyModel& M);

// whether the instance is in a regime where a length-3 matrix resolution is
// predicted at all
bool matrix_bearing(const BresinskyModel& M);

// matrix_bearing, and the engine carries a verified table for the instance's
// variant; excludes the exponent corner, whose sixth generator is not given
// by a template
bool resolution_supported(const BresinskyModel& M);

struct MinorCert {
  int var; // 2, 3, or 4
  LinForm exp;
  std::vector<int> keep_rows, keep_cols;
};

// hand-picked certificates valid in variant A (pinned in tests)
std::vector<MinorCert> minor_certs_phi2(CaseTag t);
std::vector<MinorCert> minor_certs_phi3(CaseTag t);

// a certificate holds iff the minor collapses to a single +-1 pure power of
// its variable with the claimed exponent
bool check_minor_cert(const MonMatrix& m, const MinorCert& cert,
                      std::string* why = nullptr);

// exhaustive search for pure-power k x k minors; returns one certificate per
// variable found
std::vector<MinorCert> find_pure_power_minors(const MonMatrix& m, int k);

struct ExactnessReport {
  bool complex_ok = false;
  std::array<long, 3> ranks{};
  bool rank_condition_ok = false;
  bool grade2_ok = false; // pure powers of two distinct variables in I(phi2)
  bool grade3_ok = false; // pure powers of all three variables in I(phi3)
  bool minimal = false;   // no unit entries anywhere
  bool exact = false;
  std::vector<std::string> notes;
};

// build the complex for the instance's variant, check it is a complex, check
// the rank and depth conditions numerically and symbolically
ExactnessReport verify_resolution(const BresinskyModel& M, std::uint64_t seed);

// predicted total Betti numbers; two candidates on the boundary regime where
// only the homology oracle can split them
std::vector<std::vector<long>> betti_from_theorem(const BresinskyModel& M);

} // namespace gorcone
