#include "isolat/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "isolat/errors.hpp"

namespace isolat {

Poset Poset::from_relation(std::vector<std::string> labels,
                           const std::function<bool(std::size_t, std::size_t)>& leq) {
  Poset p;
  const std::size_t n = labels.size();
  p.labels_ = std::move(labels);
  p.up_.assign(n, BitSet(n));
  p.down_.assign(n, BitSet(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (leq(a, b)) {
        p.up_[a].set(b);
        p.down_[b].set(a);
      }
  for (std::size_t a = 0; a < n; ++a) {
    if (!p.up_[a].test(a)) throw std::invalid_argument("order relation is not reflexive");
    for (std::size_t b = a + 1; b < n; ++b)
      if (p.up_[a].test(b) && p.up_[b].test(a))
        throw std::invalid_argument("order relation is not antisymmetric");
    bool transitive = true;
    p.up_[a].for_each([&](std::size_t b) {
      if (!p.up_[b].subset_of(p.up_[a])) transitive = false;
    });
    if (!transitive) throw std::invalid_argument("order relation is not transitive");
  }
  p.upper_.assign(n, {});
  p.lower_.assign(n, {});
  for (std::size_t a = 0; a < n; ++a) {
    BitSet strict = p.up_[a];
    strict.reset(a);
    strict.for_each([&](std::size_t c) {
      if ((strict & p.down_[c]).count() == 1) {
        p.upper_[a].push_back(c);
        p.lower_[c].push_back(a);
        p.hasse_.emplace_back(a, c);
      }
    });
  }
  std::sort(p.hasse_.begin(), p.hasse_.end());
  for (auto& v : p.lower_) std::sort(v.begin(), v.end());
  return p;
}

Poset Poset::chain(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return from_relation(std::move(labels), [](std::size_t a, std::size_t b) { return a <= b; });
}

std::optional<std::size_t> Poset::bottom() const {
  for (std::size_t a = 0; a < size(); ++a)
    if (up_[a].count() == size()) return a;
  return std::nullopt;
}

std::optional<std::size_t> Poset::top() const {
  for (std::size_t a = 0; a < size(); ++a)
    if (down_[a].count() == size()) return a;
  return std::nullopt;
}

std::optional<std::size_t> Poset::meet(std::size_t a, std::size_t b) const {
  BitSet lb = down_[a] & down_[b];
  std::optional<std::size_t> out;
  lb.for_each([&](std::size_t m) {
    if (!out && lb.subset_of(down_[m])) out = m;
  });
  return out;
}

std::optional<std::size_t> Poset::join(std::size_t a, std::size_t b) const {
  BitSet ub = up_[a] & up_[b];
  std::optional<std::size_t> out;
  ub.for_each([&](std::size_t m) {
    if (!out && ub.subset_of(up_[m])) out = m;
  });
  return out;
}

std::vector<std::size_t> Poset::ranks() const {
  std::vector<std::size_t> order(size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return down_[a].count() < down_[b].count(); });
  std::vector<std::size_t> rank(size(), 0);
  for (std::size_t a : order)
    for (std::size_t c : lower_[a]) rank[a] = std::max(rank[a], rank[c] + 1);
  return rank;
}

Poset Poset::induced(const std::vector<std::size_t>& elements) const {
  std::vector<std::string> labels;
  for (auto e : elements) labels.push_back(labels_[e]);
  return from_relation(std::move(labels), [&](std::size_t a, std::size_t b) {
    return leq(elements[a], elements[b]);
  });
}

std::string canonical_text(const Poset& p) {
  std::ostringstream os;
  os << p.size() << "\n";
  for (const auto& l : p.labels()) os << l << "\n";
  for (std::size_t a = 0; a < p.size(); ++a) os << p.up_set(a).to_hex() << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Lattice properties

namespace {

struct MeetJoin {
  std::size_t n;
  std::vector<std::optional<std::size_t>> meet, join;
  std::size_t m(std::size_t a, std::size_t b) const { return *meet[a * n + b]; }
  std::size_t j(std::size_t a, std::size_t b) const { return *join[a * n + b]; }
};

MeetJoin meet_join_tables(const Poset& p) {
  MeetJoin t{p.size(), {}, {}};
  t.meet.resize(t.n * t.n);
  t.join.resize(t.n * t.n);
  for (std::size_t a = 0; a < t.n; ++a)
    for (std::size_t b = a; b < t.n; ++b) {
      t.meet[a * t.n + b] = t.meet[b * t.n + a] = p.meet(a, b);
      t.join[a * t.n + b] = t.join[b * t.n + a] = p.join(a, b);
    }
  return t;
}

bool is_lattice(const Poset& p) {
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (!p.meet(a, b) || !p.join(a, b)) return false;
  return true;
}

}  // namespace

PropertyReport properties(const Poset& p) {
  auto bot = p.bottom();
  auto top = p.top();
  if (!bot || !top) throw NotBounded("poset lacks a bottom or a top element");
  const std::size_t n = p.size();
  PropertyReport r;
  auto rank = p.ranks();
  r.height = rank.empty() ? 0 : *std::max_element(rank.begin(), rank.end());

  r.is_chain = true;
  for (std::size_t a = 0; a < n && r.is_chain; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (!p.comparable(a, b)) {
        r.is_chain = false;
        r.chain_witness = PropertyWitness{"incomparable", {a, b}};
        break;
      }

  auto t = meet_join_tables(p);
  // Missing meets are reported ahead of missing joins.
  r.is_lattice = true;
  for (std::size_t a = 0; a < n && r.is_lattice; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (!t.meet[a * n + b]) {
        r.is_lattice = false;
        r.lattice_witness = PropertyWitness{"no_meet", {a, b}};
        break;
      }
  for (std::size_t a = 0; a < n && r.is_lattice; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (!t.join[a * n + b]) {
        r.is_lattice = false;
        r.lattice_witness = PropertyWitness{"no_join", {a, b}};
        break;
      }
  if (!r.is_lattice) {
    r.modular_witness = r.distributive_witness = r.complemented_witness = r.lattice_witness;
    return r;
  }

  r.is_modular = true;
  for (std::size_t a = 0; a < n && r.is_modular; ++a)
    for (std::size_t b = 0; b < n && r.is_modular; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (!p.leq(a, c)) continue;
        if (t.j(a, t.m(b, c)) != t.m(t.j(a, b), c)) {
          r.is_modular = false;
          r.modular_witness = PropertyWitness{"modular_law", {a, b, c}};
          break;
        }
      }
  r.is_distributive = true;
  for (std::size_t a = 0; a < n && r.is_distributive; ++a)
    for (std::size_t b = 0; b < n && r.is_distributive; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t.m(a, t.j(b, c)) != t.j(t.m(a, b), t.m(a, c))) {
          r.is_distributive = false;
          r.distributive_witness = PropertyWitness{"distributive_law", {a, b, c}};
          break;
        }
  r.is_complemented = true;
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b)
      found = t.m(a, b) == *bot && t.j(a, b) == *top;
    if (!found) {
      r.is_complemented = false;
      r.complemented_witness = PropertyWitness{"no_complement", {a}};
      break;
    }
  }
  if (!r.is_modular) {
    r.forbidden_sublattice = find_sublattice(p, Shape::N5);
    if (!r.forbidden_sublattice) throw std::logic_error("non-modular lattice without an N5");
  } else if (!r.is_distributive) {
    r.forbidden_sublattice = find_sublattice(p, Shape::M3);
    if (!r.forbidden_sublattice) throw std::logic_error("non-distributive modular lattice without an M3");
  }
  return r;
}

bool revalidate(const Poset& p, const PropertyReport& r) {
  auto bot = p.bottom();
  auto top = p.top();
  if (!bot || !top) return false;
  auto check = [&](const std::optional<PropertyWitness>& w, bool flag) {
    if (flag) return !w.has_value();
    if (!w) return false;
    const auto& e = w->elements;
    for (auto x : e)
      if (x >= p.size()) return false;
    if (w->kind == "no_meet") return e.size() == 2 && !p.meet(e[0], e[1]);
    if (w->kind == "no_join") return e.size() == 2 && !p.join(e[0], e[1]);
    if (w->kind == "incomparable") return e.size() == 2 && !p.comparable(e[0], e[1]);
    if (w->kind == "modular_law") {
      if (e.size() != 3 || !p.leq(e[0], e[2])) return false;
      auto bc = p.meet(e[1], e[2]);
      auto ab = p.join(e[0], e[1]);
      if (!bc || !ab) return true;
      auto lhs = p.join(e[0], *bc);
      auto rhs = p.meet(*ab, e[2]);
      return lhs != rhs;
    }
    if (w->kind == "distributive_law") {
      if (e.size() != 3) return false;
      auto bc = p.join(e[1], e[2]);
      auto ab = p.meet(e[0], e[1]);
      auto ac = p.meet(e[0], e[2]);
      if (!bc || !ab || !ac) return true;
      return p.meet(e[0], *bc) != p.join(*ab, *ac);
    }
    if (w->kind == "no_complement") {
      if (e.size() != 1) return false;
      for (std::size_t b = 0; b < p.size(); ++b)
        if (p.meet(e[0], b) == bot && p.join(e[0], b) == top) return false;
      return true;
    }
    return false;
  };
  bool ok = check(r.lattice_witness, r.is_lattice) && check(r.chain_witness, r.is_chain);
  if (r.is_lattice) {
    ok = ok && check(r.modular_witness, r.is_modular) &&
         check(r.distributive_witness, r.is_distributive) &&
         check(r.complemented_witness, r.is_complemented);
  } else {
    ok = ok && !r.is_modular && !r.is_distributive && !r.is_complemented &&
         r.modular_witness && r.distributive_witness && r.complemented_witness;
  }
  if (r.forbidden_sublattice) {
    const auto& f = *r.forbidden_sublattice;
    bool n5 = !r.is_modular;
    if (n5) {
      ok = ok && p.less(f[1], f[2]) && !p.comparable(f[1], f[3]) && !p.comparable(f[2], f[3]) &&
           p.meet(f[1], f[3]) == f[0] && p.meet(f[2], f[3]) == f[0] && p.join(f[1], f[3]) == f[4] &&
           p.join(f[2], f[3]) == f[4];
    } else {
      for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
          ok = ok && !p.comparable(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)]) &&
               p.meet(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)]) == f[0] &&
               p.join(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)]) == f[4];
    }
  }
  // implication chain
  ok = ok && (!r.is_chain || r.is_distributive) && (!r.is_distributive || r.is_modular) &&
       (!r.is_modular || r.is_lattice) && (!r.is_complemented || r.is_lattice);
  return ok;
}

std::optional<std::array<std::size_t, 5>> find_sublattice(const Poset& p, Shape shape) {
  if (!is_lattice(p)) throw NotALattice("sublattice search needs a lattice");
  const std::size_t n = p.size();
  auto t = meet_join_tables(p);
  std::optional<std::array<std::size_t, 5>> best;
  auto offer = [&](std::array<std::size_t, 5> cand) {
    if (!best || cand < *best) best = cand;
  };
  if (shape == Shape::N5) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (!p.less(a, b)) continue;
        for (std::size_t c = 0; c < n; ++c) {
          if (p.comparable(a, c) || p.comparable(b, c)) continue;
          std::size_t lo = t.m(a, c), hi = t.j(a, c);
          if (t.m(b, c) == lo && t.j(b, c) == hi) offer({lo, a, b, c, hi});
        }
      }
  } else {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y) {
        if (p.comparable(x, y)) continue;
        std::size_t lo = t.m(x, y), hi = t.j(x, y);
        for (std::size_t z = y + 1; z < n; ++z) {
          if (p.comparable(x, z) || p.comparable(y, z)) continue;
          if (t.m(x, z) == lo && t.m(y, z) == lo && t.j(x, z) == hi && t.j(y, z) == hi)
            offer({lo, x, y, z, hi});
        }
      }
  }
  return best;
}

Poset product(const Poset& p1, const Poset& p2, std::size_t cap) {
  const std::size_t n2 = p2.size();
  if (p1.size() * n2 > cap) throw OrderCapExceeded("product poset above size cap");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < p1.size(); ++i)
    for (std::size_t j = 0; j < n2; ++j)
      labels.push_back("(" + p1.label(i) + "," + p2.label(j) + ")");
  return Poset::from_relation(std::move(labels), [&](std::size_t a, std::size_t b) {
    return p1.leq(a / n2, b / n2) && p2.leq(a % n2, b % n2);
  });
}

// ---------------------------------------------------------------------------
// Poset isomorphism

bool verify_poset_isomorphism(const Poset& p1, const Poset& p2,
                              const std::vector<std::size_t>& map) {
  const std::size_t n = p1.size();
  if (p2.size() != n || map.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (auto y : map) {
    if (y >= n || hit[y]) return false;
    hit[y] = true;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (p1.leq(a, b) != p2.leq(map[a], map[b])) return false;
  return true;
}

namespace {

using Signature = std::array<std::size_t, 5>;

std::vector<Signature> signatures(const Poset& p) {
  auto rank = p.ranks();
  std::vector<Signature> out(p.size());
  for (std::size_t a = 0; a < p.size(); ++a)
    out[a] = {rank[a], p.down_set(a).count(), p.up_set(a).count(), p.upper_covers(a).size(),
              p.lower_covers(a).size()};
  return out;
}

}  // namespace

PosetIsoResult poset_isomorphic(const Poset& p1, const Poset& p2) {
  PosetIsoResult res;
  const std::size_t n = p1.size();
  if (p2.size() != n || p1.hasse().size() != p2.hasse().size()) return res;
  auto s1 = signatures(p1), s2 = signatures(p2);
  {
    auto a = s1, b = s2;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return res;
  }
  // Assign elements of p1 in increasing rank order so order constraints bite early.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return s1[a][0] < s1[b][0]; });
  std::vector<std::size_t> map(n, SIZE_MAX);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> assign = [&](std::size_t k) {
    if (k == n) return true;
    std::size_t a = order[k];
    for (std::size_t b = 0; b < n; ++b) {
      if (used[b] || s1[a] != s2[b]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        std::size_t u = order[i];
        ok = p1.leq(a, u) == p2.leq(b, map[u]) && p1.leq(u, a) == p2.leq(map[u], b);
      }
      if (!ok) continue;
      map[a] = b;
      used[b] = true;
      if (assign(k + 1)) return true;
      used[b] = false;
      map[a] = SIZE_MAX;
    }
    return false;
  };
  if (!assign(0)) return res;
  if (!verify_poset_isomorphism(p1, p2, map))
    throw std::logic_error("poset isomorphism search produced an invalid witness");
  res.isomorphic = true;
  res.witness = std::move(map);
  return res;
}

}  // namespace isolat
