#pragma once

#include <array>
#include <string>
#include <vector>

#include "gorcone/monomial.hpp"
#include "gorcone/semigroup.hpp"

namespace gorcone {

enum class CaseTag { C1a, C1b, C2a, C2b, C3a, C3b };

const char* case_name(CaseTag t);
CaseTag case_from_name(const std::string& s);

// plus - minus
struct Binomial {
  Monomial plus, minus;
};

// a[i][j] = exponent of x_j in the tail of f_i (1-based, 0 row/col unused);
// diagonal a[i][i] holds the critical exponent of x_i itself
using AlphaTable = std::array<std::array<long, 5>, 5>;

// shape data for one of the six template cases: f_i = x_i^{a_i} - x_j^{a_ij} x_k^{a_ik}
struct CaseShape {
  CaseTag tag;
  std::array<std::array<int, 2>, 4> rhs; // rhs[i-1] = {j, k}, j < k
  // fifth generator: product over plus of x_v^{a[u][v]} minus same over minus
  std::array<std::array<int, 2>, 2> f5_plus;  // {u, v} meaning exponent a[u][v] on x_v
  std::array<std::array<int, 2>, 2> f5_minus;
};

const CaseShape& case_shape(CaseTag t);
const std::array<CaseTag, 6>& all_cases();

// the 8 off-diagonal exponent slots of a case, ordered by (i, j) lexicographically
std::array<std::array<int, 2>, 8> sym_pairs(CaseTag t);
int sym_index(CaseTag t, int i, int j);

struct BresinskyModel {
  Semigroup S;
  CaseTag tag;
  std::array<long, 4> alpha; // alpha[i-1] = a_i
  AlphaTable a;
  std::array<Binomial, 5> f; // f1..f5 over 4 variables

  std::array<long, 8> sym_values() const; // exponents in sym_pairs order
};

// least a >= 1 with a*n_i in the semigroup of the other three generators
long minimal_alpha(const Semigroup& S, int i);

// match the symmetric non-complete-intersection templates; throws
// NotSymmetric / CompleteIntersection / AmbiguousClassification
BresinskyModel classify_bresinsky(const Semigroup& S);

// S-degree of a monomial: sum e_i * n_i
Int sdegree(const Semigroup& S, const Monomial& m);

} // namespace gorcone
