#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "isolat/bitset.hpp"
#include "isolat/errors.hpp"

namespace isolat {

// Element index inside a concrete group. Element 0 is always the identity.
using Elem = std::uint16_t;

struct Caps {
  int table_cap = 5000;            // largest order we materialize
  int validate_cap = 512;          // full group-axiom check up to this order
  std::size_t subgroup_cap = 200000;
};

// A permutation of points 0..degree-1, image[i] is where i goes.
struct Permutation {
  std::vector<int> image;

  int degree() const { return static_cast<int>(image.size()); }
  static Permutation identity(int degree);
  // Applies *this first, then `next`.
  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

// Disjoint-cycle notation over points 1..degree, e.g. "(1 2)(3 4)". "()" is
// the identity.
Permutation parse_cycles(const std::string& text, int degree);
std::string format_cycles(const Permutation& p);

// ---------------------------------------------------------------------------
// Group specifications

struct GroupSpec;

namespace spec {
struct Cyclic { int n; };
struct Abelian { std::vector<int> factors; };
struct Dihedral { int order; };
struct Dicyclic { int order; };
struct Semidihedral { int order; };
struct Symmetric { int degree; };
struct Alternating { int degree; };
// <a, b | a^m = b^n = 1, b a b^-1 = a^r>
struct Metacyclic { int m; int n; int r; };
struct Heisenberg { int p; };
struct Perm { int degree; std::vector<Permutation> generators; };
struct Product { std::vector<GroupSpec> factors; };
struct CatalogRef { int order; int index; };
}  // namespace spec

struct GroupSpec {
  using Variant = std::variant<spec::Cyclic, spec::Abelian, spec::Dihedral, spec::Dicyclic,
                               spec::Semidihedral, spec::Symmetric, spec::Alternating,
                               spec::Metacyclic, spec::Heisenberg, spec::Perm, spec::Product,
                               spec::CatalogRef>;
  Variant node;

  template <class T>
  GroupSpec(T t) : node(std::move(t)) {}  // NOLINT(google-explicit-constructor)
  GroupSpec() : node(spec::Cyclic{1}) {}

  template <class T>
  const T* as() const { return std::get_if<T>(&node); }
};

// Canonical textual form, e.g. "D12", "Z2xZ6", "ZM(7,3,2)".
std::string to_string(const GroupSpec& spec);

// Throws InvalidSpec when a variant invariant is violated.
void validate(const GroupSpec& spec);

// Mathematical order of the described group (no materialization). Perm
// specs are closed to find their order. CatalogRef returns its declared order.
std::uint64_t spec_order(const GroupSpec& spec);

// ---------------------------------------------------------------------------

class Group {
 public:
  Group() = default;

  // Builds a group from a full multiplication table (row-major, order x order).
  // Element 0 must be the identity. Throws InvalidSpec if the table does not
  // describe a group.
  static Group from_table(int order, std::vector<Elem> table, GroupSpec spec,
                          std::vector<std::string> element_names, const Caps& caps = {});

  // Same, but skips axiom validation: for tables that are known restrictions
  // of a valid group.
  static Group from_trusted_table(int order, std::vector<Elem> table, GroupSpec spec,
                                  std::vector<std::string> element_names);

  int order() const { return order_; }
  Elem identity() const { return 0; }
  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  Elem commutator(Elem a, Elem b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  int element_order(Elem a) const { return element_order_[a]; }

  const GroupSpec& spec() const { return spec_; }
  const std::vector<std::string>& element_names() const { return names_; }
  const std::vector<Elem>& table() const { return table_; }

  // A short generating sequence chosen greedily (each element enlarges the
  // generated subgroup as much as possible; ties go to the smallest index).
  const std::vector<Elem>& generators() const { return generators_; }

 private:
  void finish();

  int order_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<int> element_order_;
  std::vector<Elem> generators_;
  GroupSpec spec_;
  std::vector<std::string> names_;
};

struct GroupInvariants {
  int order = 0;
  int exponent = 0;
  std::map<int, int> element_order_histogram;
  bool abelian = false;
  // prime -> partition (descending), present iff abelian
  std::optional<std::map<int, std::vector<int>>> abelian_type;
  int center_order = 0;
  int derived_subgroup_order = 0;
  bool solvable = false;

  friend bool operator==(const GroupInvariants&, const GroupInvariants&) = default;
};

Group construct(const GroupSpec& spec, const Caps& caps = {});
Group direct_product(const Group& a, const Group& b, const Caps& caps = {});
GroupInvariants invariants(const Group& g);

// Applies a relabeling (perm[old] = new, perm[0] must be 0).
Group relabel(const Group& g, std::span<const Elem> perm);

// ---------------------------------------------------------------------------
// Subset-level machinery shared by the subgroup and isomorphism modules.

// A subgroup of a parent group held as members plus a generating list.
struct SubgroupData {
  BitSet bits;
  std::vector<Elem> elems;
  std::vector<Elem> gens;

  std::size_t order() const { return elems.size(); }
};

SubgroupData trivial_subgroup(const Group& g);
// <H, x>; returns H unchanged if x already lies in it.
SubgroupData extend_subgroup(const Group& g, const SubgroupData& h, Elem x);
SubgroupData generate(const Group& g, std::span<const Elem> gens);

// Invariants of the subgroup (elems, gens) computed through the parent table.
GroupInvariants subset_invariants(const Group& g, const SubgroupData& h, bool with_solvable);

// Partition per prime from the element-order histogram of an abelian group.
std::map<int, std::vector<int>> abelian_type_from_histogram(int order,
                                                            const std::map<int, int>& histogram);

std::vector<std::pair<int, int>> factorize(std::uint64_t n);  // (prime, exponent), ascending
bool is_prime(std::uint64_t n);

}  // namespace isolat
