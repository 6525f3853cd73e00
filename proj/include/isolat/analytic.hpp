#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "isolat/group.hpp"
#include "isolat/poset.hpp"

namespace isolat {

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive

  int sum() const;
  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

// Abelian group type: per prime, the partition of the Sylow subgroup.
struct AbelianType {
  std::map<int, Partition> per_prime;

  std::uint64_t order() const;
  friend bool operator==(const AbelianType&, const AbelianType&) = default;
};

// Canonicalizes parts (descending, zeros dropped) and validates primes.
AbelianType make_abelian_type(const std::map<int, std::vector<int>>& parts);

// Type of an abelian spec (Cyclic, Abelian, or a Product of those) without
// materializing it. Throws Unresolvable for anything else.
AbelianType abelian_type_of(const GroupSpec& spec);

struct Arithmetic {
  std::uint64_t tau = 0;
  std::uint64_t sigma = 0;
  std::vector<std::uint64_t> partition_counts;  // pi(0..n)
};

Arithmetic arithmetic(std::uint64_t n);
std::uint64_t tau(std::uint64_t n);
std::uint64_t sigma(std::uint64_t n);

// Iso of an abelian group straight from its type: per prime the partitions
// contained in the type, ordered componentwise; primes combine as a product.
Poset abelian_iso_poset(const AbelianType& type);

// Divisors of n ordered by divisibility.
Poset divisor_lattice(std::uint64_t n);

struct DihedralCounts {
  std::uint64_t subgroup_count = 0;   // tau(n) + sigma(n)
  std::uint64_t iso_class_count = 0;  // 2 tau(n) for odd n > 1, 2 tau(n) - 1 for even n, 2 at n = 1
  // The parity-swapped variant (2 tau - 1 for odd, 2 tau for even), kept so
  // reports can show where it disagrees with the census.
  std::uint64_t swapped_case_count = 0;
  bool swapped_differs = false;
};

DihedralCounts dihedral_counts(std::uint64_t n);

// Iso(D_2n) is a lattice iff n is odd or a power of two.
bool dihedral_is_lattice(std::uint64_t n);

// Iso(G) is a chain iff G is a cyclic p-group, an elementary abelian
// p-group, non-abelian of order p^3 and exponent p, or Q8.
bool is_chain_group(const Group& g);
bool is_chain_group(const GroupSpec& spec, const Caps& caps = {});

// Two non-isomorphic groups of order n with isomorphic Iso posets. Throws
// SquareFreeOrder when n has no square factor.
std::pair<GroupSpec, GroupSpec> twin_pair(std::uint64_t n);

// Modular group M(p^a), a >= 3, as a metacyclic spec.
GroupSpec modular_group(int p, int a);

}  // namespace isolat
