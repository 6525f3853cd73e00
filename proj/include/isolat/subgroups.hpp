#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "isolat/bitset.hpp"
#include "isolat/group.hpp"

namespace isolat {

struct SubgroupSet {
  BitSet members;
  std::size_t order = 0;
  std::vector<Elem> elements;    // ascending
  std::vector<Elem> generators;  // a generating list found during enumeration
};

// L(G): every subgroup of a group, sorted by (order, member bit-vector), with
// inclusion order, Hasse edges and conjugacy data. Id 0 is the trivial
// subgroup and the last id is G itself.
class SubgroupLattice {
 public:
  const Group& parent() const { return *parent_; }
  std::shared_ptr<const Group> parent_ptr() const { return parent_; }

  std::size_t size() const { return subgroups_.size(); }
  std::size_t top() const { return subgroups_.size() - 1; }
  const SubgroupSet& subgroup(std::size_t id) const { return subgroups_[id]; }
  const std::vector<SubgroupSet>& subgroups() const { return subgroups_; }

  // Inclusion: subgroup a is contained in subgroup b.
  bool leq(std::size_t a, std::size_t b) const {
    return subgroups_[a].order <= subgroups_[b].order &&
           subgroups_[a].members.subset_of(subgroups_[b].members);
  }

  // Cover edges (lower id, upper id), sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& hasse() const { return hasse_; }
  const std::vector<std::size_t>& upper_covers(std::size_t id) const { return upper_[id]; }
  const std::vector<std::size_t>& lower_covers(std::size_t id) const { return lower_[id]; }

  bool is_normal(std::size_t id) const { return normal_[id]; }
  std::size_t conjugacy_class(std::size_t id) const { return conj_class_[id]; }
  std::size_t conjugacy_class_count() const { return conj_class_count_; }

  std::optional<std::size_t> find(const BitSet& members) const;
  std::size_t meet(std::size_t a, std::size_t b) const;
  std::size_t join(std::size_t a, std::size_t b) const;

  SubgroupData data(std::size_t id) const;

  friend SubgroupLattice enumerate_subgroups(const Group& g, const Caps& caps);
  friend SubgroupLattice make_lattice(std::shared_ptr<const Group> parent,
                                      std::vector<SubgroupSet> subgroups);

 private:
  void finish();

  std::shared_ptr<const Group> parent_;
  std::vector<SubgroupSet> subgroups_;
  std::unordered_map<BitSet, std::size_t, BitSetHash> index_;
  std::vector<std::pair<std::size_t, std::size_t>> hasse_;
  std::vector<std::vector<std::size_t>> upper_, lower_;
  std::vector<bool> normal_;
  std::vector<std::size_t> conj_class_;
  std::size_t conj_class_count_ = 0;
};

// Cyclic seeds plus join closure to a fixpoint. Throws
// SubgroupCountCapExceeded past caps.subgroup_cap subgroups.
SubgroupLattice enumerate_subgroups(const Group& g, const Caps& caps = {});

// Rebuilds a lattice from a stored subgroup list (used by the cache). The
// list must already be in canonical id order; order data is recomputed.
SubgroupLattice make_lattice(std::shared_ptr<const Group> parent,
                             std::vector<SubgroupSet> subgroups);

struct LatticeMeta {
  std::size_t frattini_id = 0;
  bool is_clt = false;
  bool jordan_dedekind = false;
  std::vector<std::size_t> minimal_normal_ids;
};

LatticeMeta lattice_meta(const SubgroupLattice& l);

// The subgroup as a standalone group: elements reindexed in ascending parent
// order (so the identity stays at 0). Its spec is the right regular
// permutation representation of the subgroup's generators.
Group subgroup_as_group(const SubgroupLattice& l, std::size_t id);

// Sylow p-subgroup ids (one per conjugacy class is enough for most callers;
// this returns all of them).
std::vector<std::size_t> sylow_subgroups(const SubgroupLattice& l, int p);

// A subgroup K with H ∩ K = 1 and <H, K> = G, if one exists.
std::optional<std::size_t> lattice_complement(const SubgroupLattice& l, std::size_t id);

}  // namespace isolat
