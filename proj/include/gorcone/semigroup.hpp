#pragma once

#include <array>
#include <vector>

#include "gorcone/errors.hpp"
#include "gorcone/ints.hpp"

namespace gorcone {

// numerical semigroup with 4 minimal generators n1 < n2 < n3 < n4
class Semigroup {
 public:
  // validates: positivity, strict increase after sorting, gcd 1, minimality
  static Semigroup create(std::array<Int, 4> gens);

  const std::array<Int, 4>& gens() const { return gens_; }
  long n(int i) const; // i in 1..4

  // apery_[r] = least element of S congruent to r mod n1
  const std::vector<Int>& apery() const { return apery_; }
  const Int& frobenius() const { return frobenius_; }
  bool is_symmetric() const { return symmetric_; }
  Int gap_count() const { return gap_count_; }

  bool contains(const Int& x) const;
  std::vector<Int> gaps() const;

  // ord(s): longest factorization of s over the generators, -1 if s not in S
  long max_order(const Int& s) const;
  std::vector<long> orders_upto(long bound) const;

  // true iff the associated graded ring of k[[t^S]] is Cohen-Macaulay,
  // decided by scanning for order jumps ord(s + n1) > ord(s) + 1 up to a
  // bound past which jumps are impossible
  bool tangent_cone_cm_oracle() const;

  // hilbert function of the associated graded ring: counts of s with ord(s)=d
  std::vector<long> graded_hilbert(int maxdeg) const;

 private:
  Semigroup() = default;

  std::array<Int, 4> gens_;
  std::vector<Int> apery_;
  Int frobenius_;
  Int gap_count_;
  bool symmetric_ = false;
};

} // namespace gorcone
