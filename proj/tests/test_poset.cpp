#include <set>

#include "doctest.h"
#include "isolat/poset.hpp"
#include "oracles.hpp"

using namespace isolat;

namespace {

Poset pentagon() {
  // 0 < 1 < 2 < 4, 0 < 3 < 4
  const bool rel[5][5] = {{1, 1, 1, 1, 1}, {0, 1, 1, 0, 1}, {0, 0, 1, 0, 1}, {0, 0, 0, 1, 1}, {0, 0, 0, 0, 1}};
  return Poset::from_relation({"0", "a", "b", "c", "1"}, [&](std::size_t x, std::size_t y) { return rel[x][y]; });
}

Poset diamond() {
  return Poset::from_relation({"0", "x", "y", "z", "1"}, [](std::size_t x, std::size_t y) {
    return x == y || x == 0 || y == 4;
  });
}

IsoPoset iso_of(const GroupSpec& s, GroupNamer* namer = nullptr) {
  return build_iso_poset(enumerate_subgroups(construct(s)), namer);
}

std::size_t class_named(const IsoPoset& ip, const std::string& label) {
  for (std::size_t i = 0; i < ip.poset.size(); ++i)
    if (ip.poset.label(i) == label) return i;
  FAIL("no class " << label);
  return 0;
}

}  // namespace

TEST_CASE("from_relation rejects non-orders") {
  CHECK_THROWS_AS(Poset::from_relation({"a", "b"}, [](std::size_t, std::size_t) { return true; }),
                  std::invalid_argument);
  CHECK_THROWS_AS(Poset::from_relation({"a", "b", "c"},
                                       [](std::size_t x, std::size_t y) {
                                         return x == y || (x == 0 && y == 1) || (x == 1 && y == 2);
                                       }),
                  std::invalid_argument);
}

TEST_CASE("chains") {
  auto c = Poset::chain(4);
  CHECK(c.hasse().size() == 3);
  auto r = properties(c);
  CHECK(r.is_chain);
  CHECK(r.is_distributive);
  CHECK(r.height == 3);
  CHECK_FALSE(r.is_complemented);
  CHECK(revalidate(c, r));
  CHECK(properties(Poset::chain(2)).is_complemented);
  CHECK(properties(Poset::chain(1)).is_complemented);
}

TEST_CASE("pentagon and diamond") {
  auto n5 = properties(pentagon());
  CHECK(n5.is_lattice);
  CHECK_FALSE(n5.is_modular);
  CHECK_FALSE(n5.is_distributive);
  CHECK(n5.is_complemented);
  REQUIRE(n5.forbidden_sublattice);
  CHECK(revalidate(pentagon(), n5));
  auto found = find_sublattice(pentagon(), Shape::N5);
  REQUIRE(found);
  CHECK(*found == std::array<std::size_t, 5>{0, 1, 2, 3, 4});
  CHECK_FALSE(find_sublattice(pentagon(), Shape::M3));

  auto m3 = properties(diamond());
  CHECK(m3.is_modular);
  CHECK_FALSE(m3.is_distributive);
  REQUIRE(m3.forbidden_sublattice);
  CHECK(revalidate(diamond(), m3));
  CHECK(find_sublattice(diamond(), Shape::M3));
  CHECK_FALSE(find_sublattice(diamond(), Shape::N5));
}

TEST_CASE("unbounded and non-lattice posets") {
  auto antichain = Poset::from_relation({"a", "b"}, [](std::size_t x, std::size_t y) { return x == y; });
  CHECK_THROWS_AS(properties(antichain), NotBounded);
  // Two incomparable middle pairs: bounded, no join of the lower pair.
  auto bowtie = Poset::from_relation({"0", "a", "b", "c", "d", "1"}, [](std::size_t x, std::size_t y) {
    if (x == y || x == 0 || y == 5) return true;
    return (x == 1 || x == 2) && (y == 3 || y == 4);
  });
  auto r = properties(bowtie);
  CHECK_FALSE(r.is_lattice);
  REQUIRE(r.lattice_witness);
  CHECK(revalidate(bowtie, r));
  CHECK_THROWS_AS(find_sublattice(bowtie, Shape::N5), NotALattice);
}

TEST_CASE("products and poset isomorphism") {
  auto square = product(Poset::chain(2), Poset::chain(2));
  CHECK(square.size() == 4);
  CHECK(square.hasse().size() == 4);
  auto r = poset_isomorphic(square, Poset::from_relation({"0", "a", "b", "1"}, [](std::size_t x, std::size_t y) {
                              return x == y || x == 0 || y == 3;
                            }));
  REQUIRE(r.isomorphic);
  CHECK_FALSE(poset_isomorphic(square, Poset::chain(4)).isomorphic);
  CHECK_FALSE(poset_isomorphic(pentagon(), diamond()).isomorphic);
  auto self = poset_isomorphic(pentagon(), pentagon());
  REQUIRE(self.isomorphic);
  CHECK(verify_poset_isomorphism(pentagon(), pentagon(), *self.witness));
}

TEST_CASE("Iso posets of small groups") {
  CHECK(iso_of(spec::Cyclic{7}).poset.size() == 2);
  CHECK(poset_isomorphic(iso_of(spec::Dicyclic{8}).poset, Poset::chain(4)).isomorphic);
  CHECK(poset_isomorphic(iso_of(spec::Dicyclic{16}).poset, iso_of(spec::Cyclic{16}).poset).isomorphic == false);
  auto a4 = iso_of(spec::Alternating{4});
  CHECK(poset_isomorphic(a4.poset, pentagon()).isomorphic);
  CHECK(iso_of(spec::Dihedral{12}).poset.size() == 7);
  CHECK(iso_of(spec::Dihedral{8}).poset.size() == 5);
  CHECK(iso_of(spec::Dihedral{10}).poset.size() == 4);
}

TEST_CASE("Iso(D_2n) class count matches the dihedral oracle") {
  for (int n = 1; n <= 24; ++n) {
    CAPTURE(n);
    oracle::Dihedral d{n};
    auto subs = oracle::dihedral_subgroups(d);
    std::set<std::pair<int, std::map<int, int>>> keys;
    for (const auto& h : subs) keys.insert(oracle::dihedral_subgroup_key(d, h));
    auto l = enumerate_subgroups(construct(spec::Dihedral{2 * n}));
    CHECK(l.size() == subs.size());
    CHECK(build_iso_poset(l).poset.size() == keys.size());
  }
}

TEST_CASE("Iso(D12) fails to be a lattice at {S3, Z6}") {
  GroupNamer namer;
  namer.add_reference("S3", construct(spec::Symmetric{3}));
  auto ip = iso_of(spec::Dihedral{12}, &namer);
  auto r = properties(ip.poset);
  CHECK_FALSE(r.is_lattice);
  REQUIRE(r.lattice_witness);
  CHECK(r.lattice_witness->kind == "no_meet");
  std::set<std::string> labels;
  for (auto e : r.lattice_witness->elements) labels.insert(ip.poset.label(e));
  CHECK(labels == std::set<std::string>{"S3", "Z6"});
}

TEST_CASE("SD16 contains a diamond") {
  auto ip = iso_of(spec::Semidihedral{16});
  auto r = properties(ip.poset);
  REQUIRE(r.is_lattice);
  CHECK(r.is_modular);
  CHECK_FALSE(r.is_distributive);
  CHECK(find_sublattice(ip.poset, Shape::M3));
}

TEST_CASE("conjugacy poset and lattice poset") {
  auto l = enumerate_subgroups(construct(spec::Symmetric{3}));
  CHECK(conjugacy_class_poset(l).size() == 4);
  auto lp = lattice_poset(l);
  CHECK(lp.size() == 6);
  CHECK(lp.hasse().size() == 8);
}

TEST_CASE("solitary classes of D8") {
  GroupNamer namer;
  auto ip = iso_of(spec::Dihedral{8}, &namer);
  auto sol = solitary_subposet(ip);
  std::set<std::string> labels(sol.labels().begin(), sol.labels().end());
  // The centre is isomorphic to the reflection subgroups, so its class is not
  // a singleton.
  CHECK(labels == std::set<std::string>{"1", "Z4", "D8"});
  CHECK(poset_isomorphic(sol, Poset::chain(3)).isomorphic);
  auto z8 = solitary_subposet(iso_of(spec::Cyclic{8}));
  CHECK(z8.size() == 4);
  CHECK(solitary_subposet(iso_of(spec::Cyclic{1})).size() == 1);
}

TEST_CASE("pq property") {
  CHECK(pq_property(enumerate_subgroups(construct(spec::Symmetric{3}))).holds);
  auto d12 = enumerate_subgroups(construct(spec::Dihedral{12}));
  auto r = pq_property(d12);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness);
  CHECK(d12.subgroup(r.witness->first).order == 6);
  CHECK(d12.subgroup(r.witness->second).order == 6);
}

TEST_CASE("namer labels") {
  GroupNamer namer;
  auto ip = iso_of(spec::Abelian{{2, 4}}, &namer);
  std::set<std::string> labels(ip.poset.labels().begin(), ip.poset.labels().end());
  CHECK(labels == std::set<std::string>{"1", "Z2", "Z4", "Z2xZ2", "Z2xZ4"});
  CHECK(class_named(ip, "Z2xZ4") == ip.poset.size() - 1);
}
