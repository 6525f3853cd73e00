#include <algorithm>
#include <map>
#include <stdexcept>

#include "isolat/poset.hpp"

namespace isolat {

std::string abelian_name(const std::map<int, std::vector<int>>& type) {
  // Invariant factors d_1 | d_2 | ...: the i-th largest part of every prime
  // contributes to the i-th largest factor.
  std::size_t width = 0;
  for (const auto& [p, parts] : type) width = std::max(width, parts.size());
  if (width == 0) return "1";
  std::vector<long long> factors(width, 1);
  for (const auto& [p, parts] : type)
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (int k = 0; k < parts[i]; ++k) factors[i] *= p;
  std::string out;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    if (!out.empty()) out += "x";
    out += "Z" + std::to_string(*it);
  }
  return out;
}

// ---------------------------------------------------------------------------

GroupNamer::GroupNamer() = default;

void GroupNamer::add_reference(std::string name, Group g) {
  Fingerprint fp = fingerprint(g);
  refs_.push_back(Ref{std::move(name), std::move(g), std::move(fp)});
}

void GroupNamer::load_builtins(int order) {
  if (std::find(builtin_orders_.begin(), builtin_orders_.end(), order) != builtin_orders_.end())
    return;
  builtin_orders_.push_back(order);
  std::vector<std::pair<std::string, GroupSpec>> specs;
  if (order == 6) specs.emplace_back("S3", spec::Symmetric{3});
  if (order == 12) specs.emplace_back("A4", spec::Alternating{4});
  if (order == 24) specs.emplace_back("S4", spec::Symmetric{4});
  if (order == 60) specs.emplace_back("A5", spec::Alternating{5});
  if (order == 120) specs.emplace_back("S5", spec::Symmetric{5});
  if (order % 2 == 0 && order >= 6) specs.emplace_back("D" + std::to_string(order), spec::Dihedral{order});
  if (order % 4 == 0 && order >= 8) specs.emplace_back("Q" + std::to_string(order), spec::Dicyclic{order});
  auto f = factorize(static_cast<std::uint64_t>(order));
  if (f.size() == 1) {
    auto [p, a] = f[0];
    if (p == 2 && a >= 4) specs.emplace_back("SD" + std::to_string(order), spec::Semidihedral{order});
    if (a >= 3 && !(p == 2 && a == 3)) {
      int m = order / p, r = 1 + order / (p * p);
      specs.emplace_back("M" + std::to_string(order), spec::Metacyclic{m, p, r});
    }
    if (a == 3 && p > 2) specs.emplace_back("Heis(" + std::to_string(p) + ")", spec::Heisenberg{p});
  }
  for (auto& [name, s] : specs) add_reference(name, construct(s));
}

std::string GroupNamer::name(const Group& g, const Fingerprint& fp) {
  if (fp.abelian) return abelian_name(*fp.abelian_type);
  load_builtins(g.order());
  for (const auto& r : refs_)
    if (r.fp == fp && is_isomorphic(r.group, g).isomorphic) return r.name;
  int seen = 0;
  for (const auto& r : refs_)
    if (r.group.order() == g.order() && r.name.rfind("grp(", 0) == 0) ++seen;
  std::string name = "grp(" + std::to_string(g.order()) + ",#" + std::to_string(seen + 1) + ")";
  add_reference(name, g);
  return name;
}

// ---------------------------------------------------------------------------

namespace {

// Order on classes: A <= B iff some member of A lies in some member of B.
// Down-sets of subgroups are accumulated along cover edges, so containment
// is taken from L(G) itself; transitivity of the class relation is then
// checked by the Poset constructor rather than imposed.
std::vector<BitSet> class_down_sets(const SubgroupLattice& l,
                                    const std::vector<std::size_t>& class_of,
                                    std::size_t nclasses) {
  std::vector<BitSet> below(l.size(), BitSet(nclasses));
  for (std::size_t k = 0; k < l.size(); ++k) {
    below[k].set(class_of[k]);
    for (std::size_t h : l.lower_covers(k)) below[k] |= below[h];
  }
  std::vector<BitSet> down(nclasses, BitSet(nclasses));
  for (std::size_t k = 0; k < l.size(); ++k) down[class_of[k]] |= below[k];
  return down;
}

}  // namespace

IsoPoset build_iso_poset(const SubgroupLattice& l, GroupNamer* namer) {
  GroupNamer local;
  if (!namer) namer = &local;
  const Group& g = l.parent();
  const std::size_t n = l.size();

  std::vector<Fingerprint> fps(n);
  for (std::size_t i = 0; i < n; ++i) fps[i] = fingerprint_from(subset_invariants(g, l.data(i), false));

  std::map<std::size_t, Group> materialized;
  auto group_of = [&](std::size_t id) -> const Group& {
    auto it = materialized.find(id);
    if (it == materialized.end()) it = materialized.emplace(id, subgroup_as_group(l, id)).first;
    return it->second;
  };

  IsoPoset ip;
  std::vector<std::size_t> class_of(n);
  std::map<Fingerprint, std::vector<std::size_t>> buckets;
  for (std::size_t id = 0; id < n; ++id) {
    auto& bucket = buckets[fps[id]];
    std::optional<std::size_t> found;
    for (std::size_t c : bucket) {
      std::size_t rep = ip.representative[c];
      if (fps[id].abelian || is_isomorphic(group_of(rep), group_of(id)).isomorphic) {
        found = c;
        break;
      }
    }
    if (!found) {
      found = ip.classes.size();
      bucket.push_back(*found);
      ip.classes.emplace_back();
      ip.representative.push_back(id);
      ip.class_fingerprint.push_back(fps[id]);
    }
    ip.classes[*found].push_back(id);
    class_of[id] = *found;
  }
  for (auto& [id, grp] : materialized)
    if (std::find(ip.representative.begin(), ip.representative.end(), id) == ip.representative.end())
      grp = Group();

  const std::size_t m = ip.classes.size();
  auto down = class_down_sets(l, class_of, m);
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < m; ++c) labels.push_back(namer->name(group_of(ip.representative[c]), ip.class_fingerprint[c]));
  ip.poset = Poset::from_relation(std::move(labels),
                                  [&](std::size_t a, std::size_t b) { return down[b].test(a); });

  // Isotone order map [H] -> |H|.
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (a != b && ip.poset.leq(a, b)) {
        auto oa = l.subgroup(ip.representative[a]).order, ob = l.subgroup(ip.representative[b]).order;
        if (oa >= ob || ob % oa != 0) throw std::logic_error("class order is not isotone");
      }
  return ip;
}

Poset conjugacy_class_poset(const SubgroupLattice& l) {
  const std::size_t m = l.conjugacy_class_count();
  std::vector<std::size_t> class_of(l.size());
  std::vector<std::size_t> rep(m, SIZE_MAX);
  for (std::size_t i = 0; i < l.size(); ++i) {
    class_of[i] = l.conjugacy_class(i);
    rep[class_of[i]] = std::min(rep[class_of[i]], i);
  }
  auto down = class_down_sets(l, class_of, m);
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < m; ++c)
    labels.push_back("C" + std::to_string(l.subgroup(rep[c]).order) + "." + std::to_string(c));
  return Poset::from_relation(std::move(labels),
                              [&](std::size_t a, std::size_t b) { return down[b].test(a); });
}

Poset lattice_poset(const SubgroupLattice& l) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < l.size(); ++i)
    labels.push_back("H" + std::to_string(i) + "|" + std::to_string(l.subgroup(i).order));
  return Poset::from_relation(std::move(labels),
                              [&](std::size_t a, std::size_t b) { return l.leq(a, b); });
}

Poset solitary_subposet(const IsoPoset& ip) {
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < ip.classes.size(); ++c)
    if (ip.classes[c].size() == 1) keep.push_back(c);
  return ip.poset.induced(keep);
}

PqResult pq_property(const SubgroupLattice& l) {
  PqResult res;
  const Group& g = l.parent();
  auto primes = factorize(static_cast<std::uint64_t>(g.order()));
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      const std::size_t pq = static_cast<std::size_t>(primes[i].first) * static_cast<std::size_t>(primes[j].first);
      std::optional<std::size_t> cyclic, nonabelian;
      for (std::size_t id = 0; id < l.size(); ++id) {
        const auto& s = l.subgroup(id);
        if (s.order != pq) continue;
        bool is_cyclic = std::any_of(s.elements.begin(), s.elements.end(), [&](Elem x) {
          return static_cast<std::size_t>(g.element_order(x)) == pq;
        });
        if (is_cyclic) {
          if (!cyclic) cyclic = id;
        } else if (!nonabelian) {
          // order pq and not cyclic: abelian would force cyclic, so non-abelian
          nonabelian = id;
        }
      }
      if (cyclic && nonabelian) {
        res.holds = false;
        if (!res.witness) res.witness = std::make_pair(*cyclic, *nonabelian);
      }
    }
  return res;
}

}  // namespace isolat
