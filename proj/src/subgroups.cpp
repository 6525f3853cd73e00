#include "isolat/subgroups.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace isolat {

namespace {

// Elements x for which <x> is a distinct cyclic subgroup, smallest generator
// of each.
std::vector<SubgroupData> cyclic_seeds(const Group& g) {
  std::vector<SubgroupData> seeds;
  std::unordered_map<BitSet, std::size_t, BitSetHash> seen;
  for (int x = 1; x < g.order(); ++x) {
    SubgroupData c = trivial_subgroup(g);
    c.gens.push_back(static_cast<Elem>(x));
    Elem p = static_cast<Elem>(x);
    while (p != 0) {
      c.bits.set(p);
      c.elems.push_back(p);
      p = g.mul(p, static_cast<Elem>(x));
    }
    if (seen.emplace(c.bits, seeds.size()).second) seeds.push_back(std::move(c));
  }
  return seeds;
}

// Computes <H, C> for every cyclic seed C not inside H, skipping seeds whose
// generator lies in a right coset H g already tried.
template <class Sink>
void for_each_extension(const Group& g, const SubgroupData& h,
                        const std::vector<SubgroupData>& seeds, Sink&& sink) {
  BitSet tried(static_cast<std::size_t>(g.order()));
  for (const auto& c : seeds) {
    Elem x = c.gens[0];
    if (h.bits.test(x) || tried.test(x)) continue;
    for (Elem e : h.elems) tried.set(g.mul(e, x));
    sink(extend_subgroup(g, h, x));
  }
}

}  // namespace

std::optional<std::size_t> SubgroupLattice::find(const BitSet& members) const {
  auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SubgroupData SubgroupLattice::data(std::size_t id) const {
  const auto& s = subgroups_[id];
  return SubgroupData{s.members, s.elements, s.generators};
}

std::size_t SubgroupLattice::meet(std::size_t a, std::size_t b) const {
  return *find(subgroups_[a].members & subgroups_[b].members);
}

std::size_t SubgroupLattice::join(std::size_t a, std::size_t b) const {
  if (leq(a, b)) return b;
  if (leq(b, a)) return a;
  SubgroupData k = data(a);
  for (Elem x : subgroups_[b].generators) k = extend_subgroup(*parent_, k, x);
  return *find(k.bits);
}

void SubgroupLattice::finish() {
  const Group& g = *parent_;
  const std::size_t n = subgroups_.size();
  index_.clear();
  for (std::size_t i = 0; i < n; ++i) {
    auto& s = subgroups_[i];
    if (g.order() % static_cast<int>(s.order) != 0)
      throw std::logic_error("subgroup order does not divide the group order");
    index_.emplace(s.members, i);
  }
  if (subgroups_.front().order != 1 || subgroups_.back().order != static_cast<std::size_t>(g.order()))
    throw std::logic_error("lattice must start at the trivial subgroup and end at G");

  // Upper covers: minimal members of {<H, C>} over cyclic seeds.
  auto seeds = cyclic_seeds(g);
  upper_.assign(n, {});
  lower_.assign(n, {});
  hasse_.clear();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> ext;
    for_each_extension(g, data(i), seeds, [&](SubgroupData k) { ext.push_back(index_.at(k.bits)); });
    std::sort(ext.begin(), ext.end());
    ext.erase(std::unique(ext.begin(), ext.end()), ext.end());
    for (std::size_t a : ext) {
      bool minimal = true;
      for (std::size_t b : ext)
        if (b != a && leq(b, a)) {
          minimal = false;
          break;
        }
      if (minimal) {
        upper_[i].push_back(a);
        lower_[a].push_back(i);
        hasse_.emplace_back(i, a);
      }
    }
  }
  std::sort(hasse_.begin(), hasse_.end());
  for (auto& v : lower_) std::sort(v.begin(), v.end());

  // Conjugacy classes via orbits under the parent's generators.
  normal_.assign(n, false);
  conj_class_.assign(n, n);
  conj_class_count_ = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (conj_class_[i] != n) continue;
    std::vector<std::size_t> orbit{i};
    conj_class_[i] = conj_class_count_;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (Elem s : g.generators()) {
        BitSet image(static_cast<std::size_t>(g.order()));
        for (Elem x : subgroups_[orbit[k]].elements) image.set(g.conj(s, x));
        std::size_t j = index_.at(image);
        if (conj_class_[j] == n) {
          conj_class_[j] = conj_class_count_;
          orbit.push_back(j);
        }
      }
    }
    if (orbit.size() == 1) normal_[i] = true;
    ++conj_class_count_;
  }
}

SubgroupLattice make_lattice(std::shared_ptr<const Group> parent,
                             std::vector<SubgroupSet> subgroups) {
  SubgroupLattice l;
  l.parent_ = std::move(parent);
  l.subgroups_ = std::move(subgroups);
  for (std::size_t i = 1; i < l.subgroups_.size(); ++i) {
    const auto& a = l.subgroups_[i - 1];
    const auto& b = l.subgroups_[i];
    if (a.order > b.order || (a.order == b.order && !lex_less(a.members, b.members)))
      throw std::invalid_argument("stored subgroups are not in canonical order");
  }
  l.finish();
  return l;
}

SubgroupLattice enumerate_subgroups(const Group& g, const Caps& caps) {
  std::vector<SubgroupData> list;
  std::unordered_map<BitSet, std::size_t, BitSetHash> seen;
  auto add = [&](SubgroupData d) {
    if (seen.emplace(d.bits, list.size()).second) {
      list.push_back(std::move(d));
      if (list.size() > caps.subgroup_cap)
        throw SubgroupCountCapExceeded(to_string(g.spec()) + " has more than " +
                                       std::to_string(caps.subgroup_cap) + " subgroups");
    }
  };
  add(trivial_subgroup(g));
  auto seeds = cyclic_seeds(g);
  for (const auto& c : seeds) add(c);
  for (std::size_t i = 0; i < list.size(); ++i) {
    SubgroupData h = list[i];
    for_each_extension(g, h, seeds, [&](SubgroupData k) { add(std::move(k)); });
  }

  std::vector<std::size_t> order(list.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (list[a].order() != list[b].order()) return list[a].order() < list[b].order();
    return lex_less(list[a].bits, list[b].bits);
  });
  std::vector<SubgroupSet> sorted;
  sorted.reserve(list.size());
  for (std::size_t i : order) {
    auto& d = list[i];
    SubgroupSet s;
    s.members = std::move(d.bits);
    s.order = d.elems.size();
    s.elements = std::move(d.elems);
    std::sort(s.elements.begin(), s.elements.end());
    s.generators = std::move(d.gens);
    sorted.push_back(std::move(s));
  }
  SubgroupLattice l;
  l.parent_ = std::make_shared<const Group>(g);
  l.subgroups_ = std::move(sorted);
  l.finish();
  return l;
}

LatticeMeta lattice_meta(const SubgroupLattice& l) {
  LatticeMeta meta;
  const std::size_t n = l.size();
  const std::size_t top = l.top();

  BitSet phi = l.subgroup(top).members;
  for (std::size_t m : l.lower_covers(top)) phi &= l.subgroup(m).members;
  meta.frattini_id = *l.find(phi);

  std::vector<bool> has_order(static_cast<std::size_t>(l.parent().order()) + 1, false);
  for (const auto& s : l.subgroups()) has_order[s.order] = true;
  meta.is_clt = true;
  for (int d = 1; d <= l.parent().order(); ++d)
    if (l.parent().order() % d == 0 && !has_order[static_cast<std::size_t>(d)]) meta.is_clt = false;

  // Graded iff shortest and longest cover paths from the bottom agree everywhere.
  std::vector<std::size_t> lo(n, 0), hi(n, 0);
  meta.jordan_dedekind = true;
  for (std::size_t i = 1; i < n; ++i) {
    lo[i] = SIZE_MAX;
    for (std::size_t j : l.lower_covers(i)) {
      lo[i] = std::min(lo[i], lo[j] + 1);
      hi[i] = std::max(hi[i], hi[j] + 1);
    }
    if (lo[i] != hi[i]) meta.jordan_dedekind = false;
  }

  for (std::size_t i = 1; i < n; ++i) {
    if (!l.is_normal(i)) continue;
    bool minimal = true;
    for (std::size_t j = 1; j < i && minimal; ++j)
      if (l.is_normal(j) && l.leq(j, i)) minimal = false;
    if (minimal) meta.minimal_normal_ids.push_back(i);
  }
  return meta;
}

Group subgroup_as_group(const SubgroupLattice& l, std::size_t id) {
  const Group& g = l.parent();
  const auto& s = l.subgroup(id);
  const std::size_t k = s.order;
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < k; ++i) local[s.elements[i]] = static_cast<int>(i);
  std::vector<Elem> table(k * k);
  std::vector<std::string> names(k);
  for (std::size_t i = 0; i < k; ++i) {
    names[i] = g.element_names()[s.elements[i]];
    for (std::size_t j = 0; j < k; ++j)
      table[i * k + j] = static_cast<Elem>(local[g.mul(s.elements[i], s.elements[j])]);
  }
  spec::Perm regular{static_cast<int>(k), {}};
  for (Elem x : s.generators) {
    Permutation p;
    p.image.resize(k);
    for (std::size_t i = 0; i < k; ++i) p.image[i] = local[g.mul(s.elements[i], x)];
    regular.generators.push_back(std::move(p));
  }
  return Group::from_trusted_table(static_cast<int>(k), std::move(table), regular, std::move(names));
}

std::vector<std::size_t> sylow_subgroups(const SubgroupLattice& l, int p) {
  std::size_t pa = 1;
  int n = l.parent().order();
  while (n % p == 0) {
    n /= p;
    pa *= static_cast<std::size_t>(p);
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < l.size(); ++i)
    if (l.subgroup(i).order == pa) out.push_back(i);
  return out;
}

std::optional<std::size_t> lattice_complement(const SubgroupLattice& l, std::size_t id) {
  const auto& h = l.subgroup(id);
  for (std::size_t k = 0; k < l.size(); ++k) {
    const auto& s = l.subgroup(k);
    BitSet common = h.members & s.members;
    if (common.count() != 1) continue;
    if (l.join(id, k) == l.top()) return k;
  }
  return std::nullopt;
}

}  // namespace isolat
