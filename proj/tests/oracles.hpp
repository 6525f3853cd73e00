#pragma once

// Slow, independent reference computations used to check the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "isolat/group.hpp"

namespace oracle {

// Every subset containing the identity and closed under multiplication; for
// a finite group these are exactly the subgroups. Only for order <= 16.
inline std::vector<std::uint32_t> subgroups_by_subsets(const isolat::Group& g) {
  const int n = g.order();
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 1; mask < (1u << n); mask += 2) {
    bool closed = true;
    for (int a = 0; a < n && closed; ++a) {
      if (!(mask >> a & 1)) continue;
      for (int b = 0; b < n; ++b) {
        if ((mask >> b & 1) && !(mask >> g.mul(a, b) & 1)) {
          closed = false;
          break;
        }
      }
    }
    if (closed) out.push_back(mask);
  }
  return out;
}

// Dihedral group of order 2n as pairs (k, s) meaning x^k y^s, with its own
// multiplication rule y x = x^-1 y.
struct Dihedral {
  int n;
  int order() const { return 2 * n; }
  int mul(int a, int b) const {
    int ka = a % n, sa = a / n, kb = b % n, sb = b / n;
    int k = sa ? (ka - kb + n) % n : (ka + kb) % n;
    return ((sa + sb) % 2) * n + k;
  }
  int elem_order(int a) const {
    int x = a, k = 1;
    while (x != 0) {
      x = mul(x, a);
      ++k;
    }
    return k;
  }
};

// Subgroups of a dihedral group: <x^d> and <x^d, x^i y> for d | n, built
// directly as element sets, deduplicated.
inline std::set<std::vector<int>> dihedral_subgroups(const Dihedral& d) {
  std::set<std::vector<int>> out;
  auto close = [&](std::vector<int> gens) {
    std::set<int> s{0};
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> cur(s.begin(), s.end());
      for (int a : cur)
        for (int b : gens)
          if (s.insert(d.mul(a, b)).second) grew = true;
    }
    return std::vector<int>(s.begin(), s.end());
  };
  for (int k = 1; k <= d.n; ++k) {
    if (d.n % k) continue;
    out.insert(close({k % d.n}));
    for (int i = 0; i < k; ++i) out.insert(close({k % d.n, d.n + i}));
  }
  return out;
}

// Isomorphism type key good enough for subgroups of dihedral groups (which
// are all cyclic or dihedral): order plus element-order histogram.
inline std::pair<int, std::map<int, int>> dihedral_subgroup_key(const Dihedral& d,
                                                                const std::vector<int>& h) {
  std::map<int, int> hist;
  for (int a : h) ++hist[d.elem_order(a)];
  return {static_cast<int>(h.size()), hist};
}

inline std::uint64_t divisor_count(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t d = 1; d <= n; ++d) c += (n % d == 0);
  return c;
}

inline std::uint64_t divisor_sum(std::uint64_t n) {
  std::uint64_t s = 0;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) s += d;
  return s;
}

// Partitions of n into parts of size at most m.
inline std::uint64_t partitions(int n, int m) {
  if (n == 0) return 1;
  std::uint64_t c = 0;
  for (int k = std::min(n, m); k >= 1; --k) c += partitions(n - k, k);
  return c;
}

inline std::uint64_t partitions(int n) { return partitions(n, n); }

}  // namespace oracle
