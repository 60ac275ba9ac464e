#pragma once

#include <cstdint>
#include <vector>

namespace gorcone {

using u64 = std::uint64_t;

inline u64 mulmod(u64 a, u64 b, u64 p) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p);
}

inline u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

inline u64 negmod(u64 a, u64 p) { return a ? p - a : 0; }

// destructive gaussian elimination
inline long rank_mod_p(std::vector<std::vector<u64>> m, u64 p) {
  long rows = static_cast<long>(m.size());
  long cols = rows ? static_cast<long>(m[0].size()) : 0;
  long rank = 0;
  for (long c = 0; c < cols && rank < rows; ++c) {
    long piv = -1;
    for (long r = rank; r < rows; ++r)
      if (m[r][c] % p != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    u64 inv = invmod(m[rank][c] % p, p);
    for (long j = c; j < cols; ++j) m[rank][j] = mulmod(m[rank][j] % p, inv, p);
    for (long r = 0; r < rows; ++r) {
      if (r == rank) continue;
      u64 f = m[r][c] % p;
      if (!f) continue;
      for (long j = c; j < cols; ++j)
        m[r][j] = (m[r][j] + mulmod(f, negmod(m[rank][j], p), p)) % p;
    }
    ++rank;
  }
  return rank;
}

} // namespace gorcone
