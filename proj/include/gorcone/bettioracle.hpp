#pragma once

#include <map>
#include <vector>

#include "gorcone/modmat.hpp"
#include "gorcone/monomial.hpp"
#include "gorcone/polynomial.hpp"

namespace gorcone {

struct MonomialIdeal {
  int nvars = 0;
  std::vector<Monomial> gens; // minimal: no generator divides another
};

MonomialIdeal make_monomial_ideal(int nvars, std::vector<Monomial> gens);
bool ideal_contains(const MonomialIdeal& I, const Monomial& m);

using Multidegree = std::vector<int>;

// dim_k of the i-th homology of the exterior-power complex on the variables
// with coefficients in R/I, in multidegree b, over F_p
long koszul_homology_dim(const MonomialIdeal& I, int i, const Multidegree& b,
                         u64 p);

struct BettiEntry {
  int i;
  Multidegree b;
  long dim;
};

// all nonzero graded pieces; candidate degrees are subset lcms of the gens
std::vector<BettiEntry> multigraded_betti(const MonomialIdeal& I, u64 p);

std::vector<long> total_betti_p(const MonomialIdeal& I, u64 p);

struct OracleBetti {
  std::vector<long> betti;
  bool char_agree = false; // computed at 32003 and 2 with equal results
};

OracleBetti total_betti(const MonomialIdeal& I);

// hilbert function of R/I by inclusion-exclusion over subset lcms
std::vector<long> hilbert_function(const MonomialIdeal& I, int maxdeg);

// alternating sums of chain and homology dimensions agree in one multidegree
bool euler_consistent(const MonomialIdeal& I, const Multidegree& b, u64 p);

// number of monomials outside I; throws DimensionMismatch when infinite
long monomial_quotient_length(const MonomialIdeal& I);

// backend for homogeneous (possibly non-monomial) input: groebner basis over
// F_p, finite staircase, multiplication matrices, homology of the module
struct ArtinianBetti {
  std::vector<long> betti;
  long length = 0;
  std::vector<long> degree_histogram; // staircase counts per degree
};

ArtinianBetti artinian_betti_p(const std::vector<Polynomial>& gens, int nvars,
                               u64 p);

struct ArtinianOracle {
  ArtinianBetti result;
  bool char_agree = false;
};

ArtinianOracle artinian_betti(const std::vector<Polynomial>& gens, int nvars);

} // namespace gorcone
