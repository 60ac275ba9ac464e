#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gorcone/polynomial.hpp"
#include "gorcone/toric.hpp"

namespace gorcone {

// verdict on Cohen-Macaulayness of the tangent cone
struct CMReport {
  bool covered = false;    // the per-case inequality grid covers this corner
  bool theorem_cm = false; // grid verdict, meaningful when covered
  bool oracle_cm = false;  // order-jump scan verdict, always computed
  bool cm = false;         // grid verdict when covered, else oracle verdict
  bool agree = true;       // grid and oracle coincide whenever both speak
  std::string clause;      // which branch of the grid decided
};

CMReport tangent_cone_cm(const BresinskyModel& M);

Polynomial to_polynomial(const Binomial& b, int nvars);

// sixth generator needed for a standard basis in the b-cases; empty for the
// a-cases and on the exponent corner where neither template applies
std::optional<Binomial> sixth_generator(const BresinskyModel& M);

// true when a b-case instance sits on the exponent corner with no sixth
// generator template; coincides with the grid's uncovered region
bool exponent_corner(const BresinskyModel& M);

// f1..f5 plus the sixth generator when present
std::vector<Polynomial> standard_basis_candidate(const BresinskyModel& M);

// lowest forms of the given generators
std::vector<Polynomial> tangent_cone_gens(const std::vector<Polynomial>& basis);

// kill x1 in each generator; entries stay aligned with the input (zero
// polynomials kept in place)
std::vector<Polynomial> project_x1_polys(const std::vector<Polynomial>& gens);

// the projected generators as monomials, zeros dropped; throws
// NonMonomialProjection if any projected generator keeps two terms
std::vector<Monomial> project_x1(const std::vector<Polynomial>& gens);

} // namespace gorcone
