#include "isolat/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

namespace isolat {

namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::string power_name(const std::string& sym, int k) {
  if (k == 0) return "";
  if (k == 1) return sym;
  return sym + "^" + std::to_string(k);
}

std::string word_name(const std::string& a, int i, const std::string& b, int j) {
  std::string s = power_name(a, i) + power_name(b, j);
  return s.empty() ? "1" : s;
}

// Element order counts can be computed once per table.
std::vector<int> compute_element_orders(int n, const std::vector<Elem>& table) {
  std::vector<int> orders(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    int k = 1;
    Elem p = static_cast<Elem>(x);
    while (p != 0) {
      p = table[static_cast<std::size_t>(p) * n + x];
      ++k;
    }
    orders[static_cast<std::size_t>(x)] = k;
  }
  return orders;
}

template <class Mul>
Group build_group(int order, Mul&& mul, GroupSpec spec, std::vector<std::string> names,
                  const Caps& caps) {
  std::vector<Elem> table(static_cast<std::size_t>(order) * order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      table[static_cast<std::size_t>(a) * order + b] = static_cast<Elem>(mul(a, b));
  return Group::from_table(order, std::move(table), std::move(spec), std::move(names), caps);
}

void check_cap(std::uint64_t order, const Caps& caps, const std::string& what) {
  if (order > static_cast<std::uint64_t>(caps.table_cap))
    throw OrderCapExceeded(what + " has order " + std::to_string(order) +
                           " above the table cap " + std::to_string(caps.table_cap));
}

// Closes permutation generators into an element list (identity first).
std::vector<Permutation> close_permutations(int degree, const std::vector<Permutation>& gens,
                                            std::size_t limit) {
  std::vector<Permutation> elems{Permutation::identity(degree)};
  std::map<std::vector<int>, std::size_t> seen{{elems[0].image, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      Permutation p = elems[i].then(g);
      if (seen.emplace(p.image, elems.size()).second) {
        elems.push_back(std::move(p));
        if (elems.size() > limit)
          throw OrderCapExceeded("permutation group exceeds " + std::to_string(limit) +
                                 " elements");
      }
    }
  }
  return elems;
}

Group build_permutation_group(int degree, const std::vector<Permutation>& gens, GroupSpec spec,
                              const Caps& caps) {
  auto elems = close_permutations(degree, gens, static_cast<std::size_t>(caps.table_cap));
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i].image, static_cast<int>(i));
  std::vector<std::string> names;
  names.reserve(elems.size());
  for (const auto& e : elems) names.push_back(format_cycles(e));
  const int n = static_cast<int>(elems.size());
  return build_group(
      n, [&](int a, int b) { return index.at(elems[a].then(elems[b]).image); }, std::move(spec),
      std::move(names), caps);
}

Group build_cyclic(int n, GroupSpec spec, const Caps& caps) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(word_name("a", i, "", 0));
  return build_group(n, [n](int a, int b) { return (a + b) % n; }, std::move(spec),
                     std::move(names), caps);
}

// Split metacyclic Z_m x| Z_n: (i, j)(i', j') = (i + r^j i', j + j'); index i + m j.
Group build_metacyclic(int m, int n, int r, GroupSpec spec, const Caps& caps,
                       const char* a = "a", const char* b = "b") {
  std::vector<int> rpow(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) rpow[static_cast<std::size_t>(j)] = static_cast<int>(powmod(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(j), static_cast<std::uint64_t>(m)));
  std::vector<std::string> names;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i) names.push_back(word_name(a, i, b, j));
  return build_group(
      m * n,
      [&](int x, int y) {
        int i = x % m, j = x / m, i2 = y % m, j2 = y / m;
        int ni = (i + rpow[static_cast<std::size_t>(j)] * i2) % m;
        int nj = (j + j2) % n;
        return ni + m * nj;
      },
      std::move(spec), std::move(names), caps);
}

// <x, y | x^{2m} = 1, y^2 = x^m, y x y^-1 = x^-1>; index k + 2m s.
Group build_dicyclic(int order, GroupSpec spec, const Caps& caps) {
  const int m = order / 4, n = 2 * m;
  std::vector<std::string> names;
  for (int s = 0; s < 2; ++s)
    for (int k = 0; k < n; ++k) names.push_back(word_name("x", k, "y", s));
  return build_group(
      order,
      [=](int a, int b) {
        int k1 = a % n, s1 = a / n, k2 = b % n, s2 = b / n;
        if (s1 == 0) return (k1 + k2) % n + n * s2;
        int k = ((k1 - k2) % n + n) % n;
        if (s2 == 0) return k + n;
        return (k + m) % n;
      },
      std::move(spec), std::move(names), caps);
}

Group build_heisenberg(int p, GroupSpec spec, const Caps& caps) {
  // (a, b, c) ~ [[1, a, c], [0, 1, b], [0, 0, 1]]; index a + p b + p^2 c.
  std::vector<std::string> names;
  for (int c = 0; c < p; ++c)
    for (int b = 0; b < p; ++b)
      for (int a = 0; a < p; ++a)
        names.push_back(a == 0 && b == 0 && c == 0
                            ? "1"
                            : "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                  std::to_string(c) + ")");
  return build_group(
      p * p * p,
      [p](int x, int y) {
        int a1 = x % p, b1 = (x / p) % p, c1 = x / (p * p);
        int a2 = y % p, b2 = (y / p) % p, c2 = y / (p * p);
        int a = (a1 + a2) % p, b = (b1 + b2) % p, c = (c1 + c2 + a1 * b2) % p;
        return a + p * b + p * p * c;
      },
      std::move(spec), std::move(names), caps);
}

Permutation cycle_perm(int degree, std::initializer_list<int> cycle) {
  Permutation p = Permutation::identity(degree);
  std::vector<int> pts(cycle);
  for (std::size_t i = 0; i < pts.size(); ++i)
    p.image[static_cast<std::size_t>(pts[i])] = pts[(i + 1) % pts.size()];
  return p;
}

std::uint64_t factorial(int d) {
  std::uint64_t r = 1;
  for (int i = 2; i <= d; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

bool is_power_of_two(std::uint64_t n) { return n && !(n & (n - 1)); }

}  // namespace

// ---------------------------------------------------------------------------
// Permutations

Permutation Permutation::identity(int degree) {
  Permutation p;
  p.image.resize(static_cast<std::size_t>(degree));
  std::iota(p.image.begin(), p.image.end(), 0);
  return p;
}

Permutation Permutation::then(const Permutation& next) const {
  Permutation r;
  r.image.resize(image.size());
  for (std::size_t i = 0; i < image.size(); ++i)
    r.image[i] = next.image[static_cast<std::size_t>(image[i])];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.image.resize(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) r.image[static_cast<std::size_t>(image[i])] = static_cast<int>(i);
  return r;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image.size(); ++i)
    if (image[i] != static_cast<int>(i)) return false;
  return true;
}

Permutation parse_cycles(const std::string& text, int degree) {
  if (degree < 1) throw InvalidSpec("permutation degree must be positive");
  Permutation p = Permutation::identity(degree);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw InvalidSpec("empty permutation text");
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw InvalidSpec("expected '(' in cycle notation: " + text);
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (i == text.size()) throw InvalidSpec("unterminated cycle: " + text);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw InvalidSpec("unexpected character in cycle notation: " + text);
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      if (v < 1 || v > degree)
        throw InvalidSpec("point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
      if (used[static_cast<std::size_t>(v - 1)])
        throw InvalidSpec("point " + std::to_string(v) + " repeated in " + text);
      used[static_cast<std::size_t>(v - 1)] = true;
      cycle.push_back(v - 1);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      p.image[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
  }
  return p;
}

std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.image.size(), false);
  for (std::size_t i = 0; i < p.image.size(); ++i) {
    if (seen[i] || p.image[i] == static_cast<int>(i)) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(p.image[j]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

// ---------------------------------------------------------------------------
// Specs

std::string to_string(const GroupSpec& s) {
  struct Visitor {
    std::string operator()(const spec::Cyclic& c) const { return "Z" + std::to_string(c.n); }
    std::string operator()(const spec::Abelian& a) const {
      if (a.factors.empty()) return "Z1";
      std::string out;
      for (std::size_t i = 0; i < a.factors.size(); ++i) {
        if (i) out += "x";
        out += "Z" + std::to_string(a.factors[i]);
      }
      return out;
    }
    std::string operator()(const spec::Dihedral& d) const { return "D" + std::to_string(d.order); }
    std::string operator()(const spec::Dicyclic& d) const { return "Q" + std::to_string(d.order); }
    std::string operator()(const spec::Semidihedral& d) const {
      return "SD" + std::to_string(d.order);
    }
    std::string operator()(const spec::Symmetric& d) const { return "S" + std::to_string(d.degree); }
    std::string operator()(const spec::Alternating& d) const {
      return "A" + std::to_string(d.degree);
    }
    std::string operator()(const spec::Metacyclic& m) const {
      return "ZM(" + std::to_string(m.m) + "," + std::to_string(m.n) + "," + std::to_string(m.r) +
             ")";
    }
    std::string operator()(const spec::Heisenberg& h) const {
      return "Heis(" + std::to_string(h.p) + ")";
    }
    std::string operator()(const spec::Perm& p) const {
      std::string out = "Perm(" + std::to_string(p.degree);
      for (const auto& g : p.generators) out += ";" + format_cycles(g);
      return out + ")";
    }
    std::string operator()(const spec::Product& p) const {
      std::string out;
      for (std::size_t i = 0; i < p.factors.size(); ++i) {
        if (i) out += "x";
        std::string f = to_string(p.factors[i]);
        bool compound = p.factors[i].as<spec::Product>() != nullptr ||
                        (p.factors[i].as<spec::Abelian>() != nullptr &&
                         p.factors[i].as<spec::Abelian>()->factors.size() > 1);
        out += compound ? "(" + f + ")" : f;
      }
      return out.empty() ? "Z1" : out;
    }
    std::string operator()(const spec::CatalogRef& c) const {
      return "G(" + std::to_string(c.order) + "," + std::to_string(c.index) + ")";
    }
  };
  return std::visit(Visitor{}, s.node);
}

void validate(const GroupSpec& s) {
  const std::string name = to_string(s);
  auto fail = [&](const std::string& why) { throw InvalidSpec(name + ": " + why); };
  if (auto c = s.as<spec::Cyclic>()) {
    if (c->n < 1) fail("cyclic order must be positive");
  } else if (auto a = s.as<spec::Abelian>()) {
    for (int f : a->factors)
      if (f < 1) fail("invariant factors must be positive");
  } else if (auto d = s.as<spec::Dihedral>()) {
    if (d->order < 2 || d->order % 2) fail("dihedral order must be even and at least 2");
  } else if (auto q = s.as<spec::Dicyclic>()) {
    if (q->order < 4 || q->order % 4) fail("dicyclic order must be a positive multiple of 4");
  } else if (auto sd = s.as<spec::Semidihedral>()) {
    if (sd->order < 16 || !is_power_of_two(static_cast<std::uint64_t>(sd->order)))
      fail("semidihedral order must be 2^k with k >= 4");
  } else if (auto sym = s.as<spec::Symmetric>()) {
    if (sym->degree < 1) fail("degree must be positive");
  } else if (auto alt = s.as<spec::Alternating>()) {
    if (alt->degree < 1) fail("degree must be positive");
  } else if (auto m = s.as<spec::Metacyclic>()) {
    if (m->m < 1 || m->n < 1) fail("m and n must be positive");
    long long r = ((m->r % m->m) + m->m) % m->m;
    if (std::gcd(r, static_cast<long long>(m->m)) != 1 && m->m > 1) fail("gcd(r, m) must be 1");
    if (powmod(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(m->n),
               static_cast<std::uint64_t>(m->m)) != 1 % static_cast<std::uint64_t>(m->m))
      fail("r^n must be 1 mod m");
  } else if (auto h = s.as<spec::Heisenberg>()) {
    if (!is_prime(static_cast<std::uint64_t>(h->p))) fail("p must be prime");
  } else if (auto p = s.as<spec::Perm>()) {
    if (p->degree < 1) fail("degree must be positive");
    for (const auto& g : p->generators) {
      if (g.degree() != p->degree) fail("generator degree mismatch");
      std::vector<bool> hit(static_cast<std::size_t>(p->degree), false);
      for (int v : g.image) {
        if (v < 0 || v >= p->degree || hit[static_cast<std::size_t>(v)]) fail("not a permutation");
        hit[static_cast<std::size_t>(v)] = true;
      }
    }
  } else if (auto pr = s.as<spec::Product>()) {
    for (const auto& f : pr->factors) validate(f);
  } else if (auto c = s.as<spec::CatalogRef>()) {
    if (c->order < 1 || c->index < 1) fail("catalog order and index must be positive");
  }
}

std::uint64_t spec_order(const GroupSpec& s) {
  validate(s);
  if (auto c = s.as<spec::Cyclic>()) return static_cast<std::uint64_t>(c->n);
  if (auto a = s.as<spec::Abelian>()) {
    std::uint64_t r = 1;
    for (int f : a->factors) r *= static_cast<std::uint64_t>(f);
    return r;
  }
  if (auto d = s.as<spec::Dihedral>()) return static_cast<std::uint64_t>(d->order);
  if (auto q = s.as<spec::Dicyclic>()) return static_cast<std::uint64_t>(q->order);
  if (auto sd = s.as<spec::Semidihedral>()) return static_cast<std::uint64_t>(sd->order);
  if (auto sym = s.as<spec::Symmetric>()) return factorial(sym->degree);
  if (auto alt = s.as<spec::Alternating>())
    return alt->degree < 2 ? 1 : factorial(alt->degree) / 2;
  if (auto m = s.as<spec::Metacyclic>())
    return static_cast<std::uint64_t>(m->m) * static_cast<std::uint64_t>(m->n);
  if (auto h = s.as<spec::Heisenberg>()) return ipow(static_cast<std::uint64_t>(h->p), 3);
  if (auto p = s.as<spec::Perm>()) return close_permutations(p->degree, p->generators, 1u << 22).size();
  if (auto pr = s.as<spec::Product>()) {
    std::uint64_t r = 1;
    for (const auto& f : pr->factors) r *= spec_order(f);
    return r;
  }
  return static_cast<std::uint64_t>(s.as<spec::CatalogRef>()->order);
}

// ---------------------------------------------------------------------------
// Group

Group Group::from_trusted_table(int order, std::vector<Elem> table, GroupSpec spec,
                                std::vector<std::string> element_names) {
  Group g;
  g.order_ = order;
  g.table_ = std::move(table);
  g.spec_ = std::move(spec);
  g.names_ = std::move(element_names);
  if (g.names_.size() != static_cast<std::size_t>(order)) {
    g.names_.clear();
    for (int i = 0; i < order; ++i) g.names_.push_back(i == 0 ? "1" : "g" + std::to_string(i));
  }
  g.finish();
  return g;
}

Group Group::from_table(int order, std::vector<Elem> table, GroupSpec spec,
                        std::vector<std::string> element_names, const Caps& caps) {
  const std::string name = to_string(spec);
  if (order < 1) throw InvalidSpec(name + ": empty table");
  if (order > caps.table_cap) throw OrderCapExceeded(name + ": order above table cap");
  const auto n = static_cast<std::size_t>(order);
  if (table.size() != n * n) throw InvalidSpec(name + ": table has wrong size");
  for (std::size_t i = 0; i < n; ++i)
    if (table[i] != i || table[i * n] != i) throw InvalidSpec(name + ": element 0 is not the identity");
  // Latin square: every row and every column is a permutation.
  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t tick = 0;
  for (std::size_t r = 0; r < n; ++r) {
    ++tick;
    for (std::size_t c = 0; c < n; ++c) {
      Elem v = table[r * n + c];
      if (v >= n || stamp[v] == tick) throw InvalidSpec(name + ": row is not a permutation");
      stamp[v] = tick;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    ++tick;
    for (std::size_t r = 0; r < n; ++r) {
      Elem v = table[r * n + c];
      if (stamp[v] == tick) throw InvalidSpec(name + ": column is not a permutation");
      stamp[v] = tick;
    }
  }
  auto at = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(table[a * n + b]); };
  if (order <= caps.validate_cap) {
    // Light's associativity test over a magma generating set.
    std::vector<std::size_t> gens;
    std::vector<bool> reached(n, false);
    reached[0] = true;
    std::vector<std::size_t> frontier{0};
    for (std::size_t x = 0; x < n; ++x) {
      if (reached[x]) continue;
      gens.push_back(x);
      std::vector<std::size_t> all;
      for (std::size_t i = 0; i < n; ++i)
        if (reached[i]) all.push_back(i);
      for (std::size_t i = 0; i < all.size(); ++i)
        for (auto s : gens) {
          auto y = at(all[i], s);
          if (!reached[y]) {
            reached[y] = true;
            all.push_back(y);
          }
        }
    }
    for (auto s : gens)
      for (std::size_t x = 0; x < n; ++x) {
        auto xs = at(x, s);
        for (std::size_t y = 0; y < n; ++y)
          if (at(xs, y) != at(x, at(s, y))) throw InvalidSpec(name + ": table is not associative");
      }
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int t = 0; t < 20000; ++t) {
      auto a = pick(rng), b = pick(rng), c = pick(rng);
      if (at(at(a, b), c) != at(a, at(b, c))) throw InvalidSpec(name + ": table is not associative");
    }
  }
  return from_trusted_table(order, std::move(table), std::move(spec), std::move(element_names));
}

void Group::finish() {
  const auto n = static_cast<std::size_t>(order_);
  inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a * n + b] == 0) {
        inverse_[a] = static_cast<Elem>(b);
        break;
      }
  element_order_ = compute_element_orders(order_, table_);

  // Greedy generating sequence.
  generators_.clear();
  SubgroupData h = trivial_subgroup(*this);
  while (h.order() < n) {
    Elem best = 0;
    std::size_t best_size = 0;
    if (n <= 1024) {
      for (std::size_t x = 0; x < n; ++x) {
        if (h.bits.test(x)) continue;
        auto k = extend_subgroup(*this, h, static_cast<Elem>(x)).order();
        if (k > best_size) {
          best_size = k;
          best = static_cast<Elem>(x);
          if (k == n) break;
        }
      }
    } else {
      int best_order = 0;
      for (std::size_t x = 0; x < n; ++x)
        if (!h.bits.test(x) && element_order_[x] > best_order) {
          best_order = element_order_[x];
          best = static_cast<Elem>(x);
        }
    }
    h = extend_subgroup(*this, h, best);
    generators_.push_back(best);
  }
}

// ---------------------------------------------------------------------------
// Subgroup machinery

SubgroupData trivial_subgroup(const Group& g) {
  SubgroupData h{BitSet(static_cast<std::size_t>(g.order())), {0}, {}};
  h.bits.set(0);
  return h;
}

SubgroupData extend_subgroup(const Group& g, const SubgroupData& h, Elem x) {
  if (h.bits.test(x)) return h;
  SubgroupData k = h;
  k.gens.push_back(x);
  // Union of right cosets H r, closed under right multiplication by generators.
  std::vector<Elem> reps{0};
  auto add_coset = [&](Elem r) {
    for (std::size_t i = 0; i < h.elems.size(); ++i) {
      Elem e = g.mul(h.elems[i], r);
      k.bits.set(e);
      k.elems.push_back(e);
    }
    reps.push_back(r);
  };
  add_coset(x);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (Elem s : k.gens) {
      Elem e = g.mul(reps[i], s);
      if (!k.bits.test(e)) add_coset(e);
    }
  }
  return k;
}

SubgroupData generate(const Group& g, std::span<const Elem> gens) {
  SubgroupData h = trivial_subgroup(g);
  for (Elem x : gens) h = extend_subgroup(g, h, x);
  return h;
}

std::map<int, std::vector<int>> abelian_type_from_histogram(int order,
                                                            const std::map<int, int>& histogram) {
  std::map<int, std::vector<int>> type;
  for (auto [p, alpha] : factorize(static_cast<std::uint64_t>(order))) {
    // c_k = #{x : x^{p^k} = 1} = p^{sum_i min(lambda_i, k)}
    std::vector<int> e(static_cast<std::size_t>(alpha) + 1, 0);
    for (int k = 1; k <= alpha; ++k) {
      std::uint64_t pk = ipow(static_cast<std::uint64_t>(p), k);
      std::uint64_t c = 0;
      for (auto [o, cnt] : histogram)
        if (pk % static_cast<std::uint64_t>(o) == 0) c += static_cast<std::uint64_t>(cnt);
      int lg = 0;
      while (c > 1) {
        c /= static_cast<std::uint64_t>(p);
        ++lg;
      }
      e[static_cast<std::size_t>(k)] = lg;
    }
    // parts >= k: e_k - e_{k-1}
    std::vector<int> parts;
    for (int k = alpha; k >= 1; --k) {
      int at_least_k = e[static_cast<std::size_t>(k)] - e[static_cast<std::size_t>(k - 1)];
      int at_least_k1 = k < alpha ? e[static_cast<std::size_t>(k + 1)] - e[static_cast<std::size_t>(k)] : 0;
      for (int t = 0; t < at_least_k - at_least_k1; ++t) parts.push_back(k);
    }
    type[p] = parts;
  }
  return type;
}

GroupInvariants subset_invariants(const Group& g, const SubgroupData& h, bool with_solvable) {
  GroupInvariants inv;
  inv.order = static_cast<int>(h.order());
  inv.exponent = 1;
  for (Elem x : h.elems) {
    int o = g.element_order(x);
    ++inv.element_order_histogram[o];
    inv.exponent = std::lcm(inv.exponent, o);
  }
  inv.abelian = true;
  for (std::size_t i = 0; i < h.gens.size() && inv.abelian; ++i)
    for (std::size_t j = i + 1; j < h.gens.size(); ++j)
      if (g.mul(h.gens[i], h.gens[j]) != g.mul(h.gens[j], h.gens[i])) {
        inv.abelian = false;
        break;
      }
  inv.center_order = 0;
  for (Elem x : h.elems) {
    bool central = true;
    for (Elem s : h.gens)
      if (g.mul(x, s) != g.mul(s, x)) {
        central = false;
        break;
      }
    if (central) ++inv.center_order;
  }
  auto derived = [&](const SubgroupData& k) {
    // Normal closure in K of the commutators of K's generators.
    SubgroupData d = trivial_subgroup(g);
    for (std::size_t i = 0; i < k.gens.size(); ++i)
      for (std::size_t j = i + 1; j < k.gens.size(); ++j)
        d = extend_subgroup(g, d, g.commutator(k.gens[i], k.gens[j]));
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < d.gens.size(); ++i)
        for (Elem s : k.gens) {
          Elem c = g.conj(s, d.gens[i]);
          if (!d.bits.test(c)) {
            d = extend_subgroup(g, d, c);
            changed = true;
          }
        }
    }
    return d;
  };
  SubgroupData d = derived(h);
  inv.derived_subgroup_order = static_cast<int>(d.order());
  if (with_solvable) {
    std::size_t prev = h.order();
    while (d.order() > 1 && d.order() < prev) {
      prev = d.order();
      d = derived(d);
    }
    inv.solvable = d.order() == 1;
  }
  if (inv.abelian) inv.abelian_type = abelian_type_from_histogram(inv.order, inv.element_order_histogram);
  return inv;
}

GroupInvariants invariants(const Group& g) {
  SubgroupData all;
  all.bits = BitSet(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) {
    all.bits.set(static_cast<std::size_t>(i));
    all.elems.push_back(static_cast<Elem>(i));
  }
  all.gens = g.generators();
  return subset_invariants(g, all, true);
}

// ---------------------------------------------------------------------------
// Construction

Group construct(const GroupSpec& s, const Caps& caps) {
  validate(s);
  if (s.as<spec::CatalogRef>())
    throw InvalidSpec(to_string(s) + ": catalog references must be resolved against a catalog");
  if (!s.as<spec::Perm>()) check_cap(spec_order(s), caps, to_string(s));

  if (auto c = s.as<spec::Cyclic>()) return build_cyclic(c->n, s, caps);
  if (auto a = s.as<spec::Abelian>()) {
    Group acc = build_cyclic(1, spec::Cyclic{1}, caps);
    for (int f : a->factors) acc = direct_product(acc, build_cyclic(f, spec::Cyclic{f}, caps), caps);
    return Group::from_trusted_table(acc.order(), acc.table(), s, acc.element_names());
  }
  if (auto d = s.as<spec::Dihedral>()) {
    int n = d->order / 2;
    return build_metacyclic(n, 2, n - 1, s, caps, "x", "y");
  }
  if (auto q = s.as<spec::Dicyclic>()) return build_dicyclic(q->order, s, caps);
  if (auto sd = s.as<spec::Semidihedral>()) {
    int n = sd->order / 2;
    return build_metacyclic(n, 2, n / 2 - 1, s, caps, "x", "y");
  }
  if (auto sym = s.as<spec::Symmetric>()) {
    int d = sym->degree;
    std::vector<Permutation> gens;
    if (d >= 2) gens.push_back(cycle_perm(d, {0, 1}));
    if (d >= 3) {
      Permutation c = Permutation::identity(d);
      for (int i = 0; i < d; ++i) c.image[static_cast<std::size_t>(i)] = (i + 1) % d;
      gens.push_back(c);
    }
    return build_permutation_group(d, gens, s, caps);
  }
  if (auto alt = s.as<spec::Alternating>()) {
    int d = alt->degree;
    std::vector<Permutation> gens;
    for (int i = 2; i < d; ++i) gens.push_back(cycle_perm(d, {0, 1, i}));
    return build_permutation_group(d, gens, s, caps);
  }
  if (auto m = s.as<spec::Metacyclic>()) {
    int r = ((m->r % m->m) + m->m) % m->m;
    return build_metacyclic(m->m, m->n, r, s, caps);
  }
  if (auto h = s.as<spec::Heisenberg>()) return build_heisenberg(h->p, s, caps);
  if (auto p = s.as<spec::Perm>()) return build_permutation_group(p->degree, p->generators, s, caps);
  const auto& factors = s.as<spec::Product>()->factors;
  Group acc = build_cyclic(1, spec::Cyclic{1}, caps);
  for (const auto& f : factors) acc = direct_product(acc, construct(f, caps), caps);
  return Group::from_trusted_table(acc.order(), acc.table(), s, acc.element_names());
}

Group direct_product(const Group& a, const Group& b, const Caps& caps) {
  std::uint64_t n = static_cast<std::uint64_t>(a.order()) * static_cast<std::uint64_t>(b.order());
  std::vector<GroupSpec> factors;
  for (const Group* g : {&a, &b}) {
    if (auto p = g->spec().as<spec::Product>())
      factors.insert(factors.end(), p->factors.begin(), p->factors.end());
    else if (!(g->spec().as<spec::Cyclic>() && g->spec().as<spec::Cyclic>()->n == 1))
      factors.push_back(g->spec());
  }
  GroupSpec spec = factors.size() == 1 ? factors[0] : GroupSpec(spec::Product{factors});
  check_cap(n, caps, to_string(spec));
  const int nb = b.order();
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < a.order(); ++i)
    for (int j = 0; j < nb; ++j) {
      if (a.order() == 1) names.push_back(b.element_names()[static_cast<std::size_t>(j)]);
      else if (nb == 1) names.push_back(a.element_names()[static_cast<std::size_t>(i)]);
      else
        names.push_back(i == 0 && j == 0 ? "1"
                                         : "(" + a.element_names()[static_cast<std::size_t>(i)] + "," +
                                               b.element_names()[static_cast<std::size_t>(j)] + ")");
    }
  std::vector<Elem> table(static_cast<std::size_t>(n * n));
  const auto nn = static_cast<std::size_t>(n);
  for (std::size_t x = 0; x < nn; ++x)
    for (std::size_t y = 0; y < nn; ++y) {
      auto i = static_cast<Elem>(x / static_cast<std::size_t>(nb)), j = static_cast<Elem>(x % static_cast<std::size_t>(nb));
      auto k = static_cast<Elem>(y / static_cast<std::size_t>(nb)), l = static_cast<Elem>(y % static_cast<std::size_t>(nb));
      table[x * nn + y] = static_cast<Elem>(a.mul(i, k) * nb + b.mul(j, l));
    }
  return Group::from_trusted_table(static_cast<int>(n), std::move(table), std::move(spec),
                                   std::move(names));
}

Group relabel(const Group& g, std::span<const Elem> perm) {
  const auto n = static_cast<std::size_t>(g.order());
  if (perm.size() != n || perm[0] != 0) throw InvalidSpec("relabeling must fix the identity");
  std::vector<Elem> table(n * n);
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    names[perm[a]] = g.element_names()[a];
    for (std::size_t b = 0; b < n; ++b)
      table[static_cast<std::size_t>(perm[a]) * n + perm[b]] = perm[g.mul(static_cast<Elem>(a), static_cast<Elem>(b))];
  }
  return Group::from_table(g.order(), std::move(table), g.spec(), std::move(names));
}

// ---------------------------------------------------------------------------

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<int, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<int, int>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(static_cast<int>(p), e);
  }
  if (n > 1) out.emplace_back(static_cast<int>(n), 1);
  return out;
}

}  // namespace isolat
