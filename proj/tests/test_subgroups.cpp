#include <set>

#include "doctest.h"
#include "isolat/subgroups.hpp"
#include "oracles.hpp"

using namespace isolat;

namespace {

std::set<std::uint32_t> library_masks(const SubgroupLattice& l) {
  std::set<std::uint32_t> out;
  for (const auto& h : l.subgroups()) {
    std::uint32_t m = 0;
    for (Elem e : h.elements) m |= 1u << e;
    out.insert(m);
  }
  return out;
}

}  // namespace

TEST_CASE("enumeration agrees with the subset-closure oracle") {
  std::vector<GroupSpec> specs = {
      spec::Cyclic{1},       spec::Cyclic{12},      spec::Abelian{{2, 2, 2}}, spec::Abelian{{2, 2, 2, 2}},
      spec::Symmetric{3},    spec::Dihedral{8},     spec::Dicyclic{8},        spec::Dihedral{10},
      spec::Dihedral{12},    spec::Dicyclic{12},    spec::Alternating{4},     spec::Semidihedral{16},
      spec::Dihedral{16},    spec::Dicyclic{16},    spec::Metacyclic{8, 2, 5},
  };
  for (const auto& s : specs) {
    CAPTURE(to_string(s));
    Group g = construct(s);
    auto l = enumerate_subgroups(g);
    auto oracle_masks = oracle::subgroups_by_subsets(g);
    CHECK(l.size() == oracle_masks.size());
    CHECK(library_masks(l) == std::set<std::uint32_t>(oracle_masks.begin(), oracle_masks.end()));
  }
}

TEST_CASE("lattice layout") {
  auto l = enumerate_subgroups(construct(spec::Dihedral{12}));
  REQUIRE(l.size() == 16);
  CHECK(l.subgroup(0).order == 1);
  CHECK(l.subgroup(l.top()).order == 12);
  for (std::size_t i = 1; i < l.size(); ++i) CHECK(l.subgroup(i - 1).order <= l.subgroup(i).order);
  for (std::size_t a = 0; a < l.size(); ++a) {
    for (std::size_t b = 0; b < l.size(); ++b) {
      auto m = l.meet(a, b);
      auto j = l.join(a, b);
      CHECK(l.leq(m, a));
      CHECK(l.leq(m, b));
      CHECK(l.leq(a, j));
      CHECK(l.leq(b, j));
    }
  }
  for (auto [lo, hi] : l.hasse()) {
    CHECK(l.leq(lo, hi));
    for (std::size_t c = 0; c < l.size(); ++c)
      CHECK_FALSE((c != lo && c != hi && l.leq(lo, c) && l.leq(c, hi)));
  }
}

TEST_CASE("normality and conjugacy") {
  auto s3 = enumerate_subgroups(construct(spec::Symmetric{3}));
  std::size_t normal = 0;
  for (std::size_t i = 0; i < s3.size(); ++i) normal += s3.is_normal(i);
  CHECK(normal == 3);
  CHECK(s3.conjugacy_class_count() == 4);
  CHECK(enumerate_subgroups(construct(spec::Symmetric{4})).conjugacy_class_count() == 11);
  CHECK(enumerate_subgroups(construct(spec::Symmetric{4})).size() == 30);
  CHECK(enumerate_subgroups(construct(spec::Alternating{5})).size() == 59);
}

TEST_CASE("lattice metadata") {
  auto sd16 = enumerate_subgroups(construct(spec::Semidihedral{16}));
  auto meta = lattice_meta(sd16);
  CHECK(sd16.subgroup(meta.frattini_id).order == 4);
  CHECK(meta.is_clt);

  auto s4 = lattice_meta(enumerate_subgroups(construct(spec::Symmetric{4})));
  CHECK(s4.is_clt);
  auto a4 = lattice_meta(enumerate_subgroups(construct(spec::Alternating{4})));
  CHECK_FALSE(a4.is_clt);
  CHECK_FALSE(a4.jordan_dedekind);
  CHECK(lattice_meta(enumerate_subgroups(construct(spec::Dihedral{8}))).jordan_dedekind);
}

TEST_CASE("Sylow subgroups, complements and subgroup groups") {
  auto l = enumerate_subgroups(construct(spec::Symmetric{4}));
  CHECK(sylow_subgroups(l, 2).size() == 3);
  CHECK(sylow_subgroups(l, 3).size() == 4);
  for (auto id : sylow_subgroups(l, 2)) CHECK(l.subgroup(id).order == 8);

  auto d8 = enumerate_subgroups(construct(spec::Dihedral{8}));
  std::size_t center = 0;
  for (std::size_t i = 0; i < d8.size(); ++i)
    if (d8.subgroup(i).order == 2 && d8.is_normal(i)) center = i;
  CHECK_FALSE(lattice_complement(d8, center).has_value());
  for (std::size_t i = 0; i < d8.size(); ++i) {
    if (d8.subgroup(i).order != 2 || d8.is_normal(i)) continue;
    auto k = lattice_complement(d8, i);
    REQUIRE(k.has_value());
    CHECK(d8.meet(i, *k) == 0);
    CHECK(d8.join(i, *k) == d8.top());
  }

  for (std::size_t i = 0; i < l.size(); ++i) {
    Group h = subgroup_as_group(l, i);
    CHECK(static_cast<std::size_t>(h.order()) == l.subgroup(i).order);
  }
}

TEST_CASE("subgroup cap") {
  Caps caps;
  caps.subgroup_cap = 10;
  CHECK_THROWS_AS(enumerate_subgroups(construct(spec::Symmetric{4}), caps), SubgroupCountCapExceeded);
}
