#include "isolat/analytic.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace isolat {

int Partition::sum() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

std::uint64_t AbelianType::order() const {
  std::uint64_t n = 1;
  for (const auto& [p, part] : per_prime)
    for (int k = 0; k < part.sum(); ++k) n *= static_cast<std::uint64_t>(p);
  return n;
}

AbelianType make_abelian_type(const std::map<int, std::vector<int>>& parts) {
  AbelianType t;
  for (const auto& [p, raw] : parts) {
    if (!is_prime(static_cast<std::uint64_t>(p))) throw InvalidSpec("abelian type over non-prime " + std::to_string(p));
    Partition part;
    for (int x : raw) {
      if (x < 0) throw InvalidSpec("negative part in abelian type");
      if (x > 0) part.parts.push_back(x);
    }
    std::sort(part.parts.rbegin(), part.parts.rend());
    if (!part.parts.empty()) t.per_prime[p] = std::move(part);
  }
  return t;
}

AbelianType abelian_type_of(const GroupSpec& s) {
  std::map<int, std::vector<int>> parts;
  std::function<void(const GroupSpec&)> walk = [&](const GroupSpec& x) {
    std::vector<int> factors;
    if (auto c = x.as<spec::Cyclic>()) factors.push_back(c->n);
    else if (auto a = x.as<spec::Abelian>()) factors = a->factors;
    else if (auto pr = x.as<spec::Product>()) {
      for (const auto& f : pr->factors) walk(f);
      return;
    } else if (auto d = x.as<spec::Dihedral>(); d && d->order <= 4) {
      factors.assign(static_cast<std::size_t>(d->order / 2), 2);
    } else {
      throw Unresolvable(to_string(x) + " is not an abelian specification");
    }
    for (int f : factors) {
      if (f < 1) throw InvalidSpec("invariant factors must be positive");
      for (auto [p, e] : factorize(static_cast<std::uint64_t>(f))) parts[p].push_back(e);
    }
  };
  walk(s);
  return make_abelian_type(parts);
}

std::uint64_t tau(std::uint64_t n) {
  std::uint64_t t = 1;
  for (auto [p, e] : factorize(n)) t *= static_cast<std::uint64_t>(e + 1);
  return t;
}

std::uint64_t sigma(std::uint64_t n) {
  std::uint64_t s = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d)
    if (n % d == 0) s += d + (d * d == n ? 0 : n / d);
  return s;
}

Arithmetic arithmetic(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("arithmetic needs n >= 1");
  Arithmetic a;
  a.tau = tau(n);
  a.sigma = sigma(n);
  // pi(i) by the coin-change recurrence over part sizes.
  a.partition_counts.assign(n + 1, 0);
  a.partition_counts[0] = 1;
  for (std::uint64_t part = 1; part <= n; ++part)
    for (std::uint64_t i = part; i <= n; ++i) a.partition_counts[i] += a.partition_counts[i - part];
  return a;
}

namespace {

// Partitions mu with mu_i <= lambda_i (as padded vectors of lambda's length).
std::vector<std::vector<int>> sub_partitions(const std::vector<int>& lambda) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(lambda.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int cap) {
    if (i == lambda.size()) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= std::min(cap, lambda[i]); ++v) {
      cur[i] = v;
      rec(i + 1, v);
    }
  };
  rec(0, lambda.empty() ? 0 : lambda[0]);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    int sa = 0, sb = 0;
    for (int x : a) sa += x;
    for (int x : b) sb += x;
    if (sa != sb) return sa < sb;
    return a > b;
  });
  return out;
}

}  // namespace

Poset abelian_iso_poset(const AbelianType& type) {
  std::vector<int> primes;
  std::vector<std::vector<std::vector<int>>> per_prime;
  for (const auto& [p, part] : type.per_prime) {
    primes.push_back(p);
    auto subs = sub_partitions(part.parts);
    std::uint64_t bound = 0;
    auto pi = arithmetic(static_cast<std::uint64_t>(std::max(part.sum(), 1))).partition_counts;
    for (int i = 0; i <= part.sum(); ++i) bound += pi[static_cast<std::size_t>(i)];
    if (subs.size() > bound) throw std::logic_error("partition poset exceeds the partition-count bound");
    per_prime.push_back(std::move(subs));
  }
  // Mixed-radix enumeration, first prime most significant.
  std::size_t total = 1;
  for (const auto& s : per_prime) total *= s.size();
  auto digits = [&](std::size_t idx) {
    std::vector<std::size_t> d(per_prime.size());
    for (std::size_t k = per_prime.size(); k-- > 0;) {
      d[k] = idx % per_prime[k].size();
      idx /= per_prime[k].size();
    }
    return d;
  };
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < total; ++i) {
    auto d = digits(i);
    std::map<int, std::vector<int>> t;
    for (std::size_t k = 0; k < primes.size(); ++k) {
      std::vector<int> parts;
      for (int x : per_prime[k][d[k]])
        if (x > 0) parts.push_back(x);
      if (!parts.empty()) t[primes[k]] = parts;
    }
    labels.push_back(abelian_name(t));
  }
  return Poset::from_relation(std::move(labels), [&](std::size_t a, std::size_t b) {
    auto da = digits(a), db = digits(b);
    for (std::size_t k = 0; k < primes.size(); ++k) {
      const auto& x = per_prime[k][da[k]];
      const auto& y = per_prime[k][db[k]];
      for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] > y[i]) return false;
    }
    return true;
  });
}

Poset divisor_lattice(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("divisor lattice needs n >= 1");
  std::vector<std::uint64_t> divs;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) divs.push_back(d);
  std::vector<std::string> labels;
  for (auto d : divs) labels.push_back(std::to_string(d));
  return Poset::from_relation(std::move(labels), [&](std::size_t a, std::size_t b) {
    return divs[b] % divs[a] == 0;
  });
}

DihedralCounts dihedral_counts(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("dihedral counts need n >= 1");
  DihedralCounts c;
  const std::uint64_t t = tau(n);
  c.subgroup_count = t + sigma(n);
  if (n == 1) c.iso_class_count = 2;
  else if (n % 2) c.iso_class_count = 2 * t;
  else c.iso_class_count = 2 * t - 1;
  c.swapped_case_count = n % 2 ? 2 * t - 1 : 2 * t;
  c.swapped_differs = c.swapped_case_count != c.iso_class_count;
  return c;
}

bool dihedral_is_lattice(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("dihedral criterion needs n >= 1");
  return (n % 2 == 1) || (n & (n - 1)) == 0;
}

bool is_chain_group(const Group& g) {
  const int n = g.order();
  if (n == 1) return true;
  auto f = factorize(static_cast<std::uint64_t>(n));
  if (f.size() != 1) return false;
  const auto [p, a] = f[0];
  auto inv = invariants(g);
  if (inv.exponent == n) return true;                 // cyclic p-group
  if (inv.abelian) return inv.exponent == p;          // elementary abelian
  if (a == 3 && inv.exponent == p) return true;       // order p^3, exponent p
  if (n == 8) return inv.element_order_histogram[2] == 1;  // Q8
  return false;
}

bool is_chain_group(const GroupSpec& s, const Caps& caps) {
  validate(s);
  try {
    auto t = abelian_type_of(s);
    if (t.per_prime.empty()) return true;
    if (t.per_prime.size() != 1) return false;
    const auto& parts = t.per_prime.begin()->second.parts;
    return parts.size() == 1 || parts.front() == 1;
  } catch (const Unresolvable&) {
  }
  if (auto h = s.as<spec::Heisenberg>()) return h->p != 2;
  if (auto q = s.as<spec::Dicyclic>()) return q->order == 4 || q->order == 8;
  if (s.as<spec::Semidihedral>()) return false;
  if (auto d = s.as<spec::Dihedral>()) return d->order <= 4;
  if (auto sym = s.as<spec::Symmetric>()) return sym->degree <= 2;
  if (auto alt = s.as<spec::Alternating>()) return alt->degree <= 3;
  if (spec_order(s) > static_cast<std::uint64_t>(caps.table_cap))
    throw Unresolvable(to_string(s) + " is above the table cap and not a recognized family");
  return is_chain_group(construct(s, caps));
}

GroupSpec modular_group(int p, int a) {
  if (a < 3 || !is_prime(static_cast<std::uint64_t>(p))) throw InvalidSpec("M(p^a) needs a prime p and a >= 3");
  int m = 1;
  for (int i = 0; i < a - 1; ++i) m *= p;
  return spec::Metacyclic{m, p, 1 + m / p};
}

std::pair<GroupSpec, GroupSpec> twin_pair(std::uint64_t n) {
  auto f = factorize(n);
  std::size_t base = f.size();
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i].second >= 2 && (base == f.size() || f[i].second > f[base].second)) base = i;
  if (n < 2 || base == f.size()) throw SquareFreeOrder(std::to_string(n) + " is square-free");

  const auto [p, a] = f[base];
  int pa1 = 1;
  for (int i = 0; i < a - 1; ++i) pa1 *= p;
  std::vector<int> rest;  // remaining prime powers, ascending prime
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i == base) continue;
    int q = 1;
    for (int k = 0; k < f[i].second; ++k) q *= f[i].first;
    rest.push_back(q);
  }
  auto extend = [&](GroupSpec g) -> GroupSpec {
    if (rest.empty()) return g;
    if (auto c = g.as<spec::Cyclic>()) {
      std::vector<int> factors{c->n};
      factors.insert(factors.end(), rest.begin(), rest.end());
      return spec::Abelian{factors};
    }
    if (auto ab = g.as<spec::Abelian>()) {
      std::vector<int> factors = ab->factors;
      factors.insert(factors.end(), rest.begin(), rest.end());
      return spec::Abelian{factors};
    }
    std::vector<GroupSpec> factors{g};
    for (int q : rest) factors.emplace_back(spec::Cyclic{q});
    return spec::Product{factors};
  };
  if (a == 2) return {extend(spec::Cyclic{p * p}), extend(spec::Abelian{{p, p}})};
  GroupSpec g1 = p == 2 ? GroupSpec(spec::Dihedral{pa1 * p}) : modular_group(p, a);
  return {extend(g1), extend(spec::Abelian{{pa1, p}})};
}

}  // namespace isolat
