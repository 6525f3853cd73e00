#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isolat/bitset.hpp"
#include "isolat/isomorphism.hpp"
#include "isolat/subgroups.hpp"

namespace isolat {

// Finite poset held as an order matrix (up-sets and down-sets as bit rows)
// with its Hasse diagram.
class Poset {
 public:
  Poset() = default;

  // Throws std::invalid_argument unless `leq` is reflexive, antisymmetric and
  // transitive.
  static Poset from_relation(std::vector<std::string> labels,
                             const std::function<bool(std::size_t, std::size_t)>& leq);

  static Poset chain(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return up_[a].test(b); }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }

  const BitSet& up_set(std::size_t a) const { return up_[a]; }
  const BitSet& down_set(std::size_t a) const { return down_[a]; }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t a) const { return labels_[a]; }

  // Cover edges (lower, upper), sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& hasse() const { return hasse_; }
  const std::vector<std::size_t>& upper_covers(std::size_t a) const { return upper_[a]; }
  const std::vector<std::size_t>& lower_covers(std::size_t a) const { return lower_[a]; }

  std::optional<std::size_t> bottom() const;
  std::optional<std::size_t> top() const;

  // Greatest lower bound / least upper bound if it exists.
  std::optional<std::size_t> meet(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> join(std::size_t a, std::size_t b) const;

  // Longest chain below each element, counted in edges.
  std::vector<std::size_t> ranks() const;

  Poset induced(const std::vector<std::size_t>& elements) const;

 private:
  std::vector<std::string> labels_;
  std::vector<BitSet> up_, down_;
  std::vector<std::pair<std::size_t, std::size_t>> hasse_;
  std::vector<std::vector<std::size_t>> upper_, lower_;
};

// Iso(G): isomorphism classes of subgroups, ordered by "some member of A is
// contained in some member of B".
struct IsoPoset {
  Poset poset;
  std::vector<std::vector<std::size_t>> classes;  // subgroup ids per element
  std::vector<std::size_t> representative;        // smallest subgroup id
  std::vector<Fingerprint> class_fingerprint;
};

// Names groups for display labels: abelian groups by invariant factors,
// others by matching against registered reference groups of the same order,
// falling back to "grp(n,#k)" where k counts unrecognized fingerprints.
// Keeps an internal cache; not safe for concurrent use.
class GroupNamer {
 public:
  GroupNamer();
  void add_reference(std::string name, Group g);
  std::string name(const Group& g, const Fingerprint& fp);

 private:
  struct Ref {
    std::string name;
    Group group;
    Fingerprint fp;
  };
  std::vector<Ref> refs_;
  std::vector<std::pair<Fingerprint, std::string>> anonymous_;
  bool builtins_loaded_ = false;
  void load_builtins(int order);
  std::vector<int> builtin_orders_;
};

std::string abelian_name(const std::map<int, std::vector<int>>& type);

IsoPoset build_iso_poset(const SubgroupLattice& l, GroupNamer* namer = nullptr);

// C(G): conjugacy classes of subgroups under the same "contained in some
// conjugate" order.
Poset conjugacy_class_poset(const SubgroupLattice& l);

// The subgroup lattice itself as a Poset (labels are subgroup orders).
Poset lattice_poset(const SubgroupLattice& l);

struct PropertyWitness {
  std::string kind;  // no_meet, no_join, incomparable, modular_law, distributive_law, no_complement
  std::vector<std::size_t> elements;
};

struct PropertyReport {
  bool is_lattice = false;
  bool is_chain = false;
  bool is_modular = false;
  bool is_distributive = false;
  bool is_complemented = false;
  std::size_t height = 0;  // longest chain, in edges
  std::optional<PropertyWitness> lattice_witness;
  std::optional<PropertyWitness> chain_witness;
  std::optional<PropertyWitness> modular_witness;
  std::optional<PropertyWitness> distributive_witness;
  std::optional<PropertyWitness> complemented_witness;
  // N5 (bottom, a, b, c, top) with a < b when not modular; M3 (bottom, x, y,
  // z, top) when modular but not distributive.
  std::optional<std::array<std::size_t, 5>> forbidden_sublattice;
};

// Throws NotBounded when the poset lacks a bottom or a top.
PropertyReport properties(const Poset& p);

// Re-derives every witness in the report from the order matrix alone.
bool revalidate(const Poset& p, const PropertyReport& r);

enum class Shape { N5, M3 };

// Least (lexicographic) embedded sublattice of the given shape. Throws
// NotALattice when p is not a lattice.
std::optional<std::array<std::size_t, 5>> find_sublattice(const Poset& p, Shape shape);

// Componentwise order; element (i, j) has index i * p2.size() + j.
Poset product(const Poset& p1, const Poset& p2, std::size_t cap = 100000);

struct PosetIsoResult {
  bool isomorphic = false;
  std::optional<std::vector<std::size_t>> witness;  // witness[a] in p2
};

PosetIsoResult poset_isomorphic(const Poset& p1, const Poset& p2);
bool verify_poset_isomorphism(const Poset& p1, const Poset& p2,
                              const std::vector<std::size_t>& map);

// Induced subposet on the classes with exactly one member (Sol(G)).
Poset solitary_subposet(const IsoPoset& ip);

struct PqResult {
  bool holds = true;
  // (cyclic subgroup id, non-abelian subgroup id) of the same order pq
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

PqResult pq_property(const SubgroupLattice& l);

// Stable digest input: labels and the order matrix as bit rows.
std::string canonical_text(const Poset& p);

}  // namespace isolat
