#include "doctest.h"
#include "isolat/analytic.hpp"
#include "isolat/isomorphism.hpp"
#include "oracles.hpp"

using namespace isolat;

TEST_CASE("arithmetic functions") {
  auto a6 = arithmetic(6);
  CHECK(a6.tau == 4);
  CHECK(a6.sigma == 12);
  auto a12 = arithmetic(12);
  CHECK(a12.tau == 6);
  CHECK(a12.sigma == 28);
  auto a3 = arithmetic(3);
  CHECK(a3.partition_counts == std::vector<std::uint64_t>{1, 1, 2, 3});
  for (std::uint64_t n = 1; n <= 200; ++n) {
    CAPTURE(n);
    CHECK(tau(n) == oracle::divisor_count(n));
    CHECK(sigma(n) == oracle::divisor_sum(n));
  }
  auto a20 = arithmetic(20);
  for (int k = 0; k <= 20; ++k) CHECK(a20.partition_counts[k] == oracle::partitions(k));
}

TEST_CASE("abelian types") {
  auto t = abelian_type_of(spec::Product{{spec::Cyclic{2}, spec::Cyclic{6}, spec::Cyclic{18}}});
  CHECK(t.order() == 216);
  CHECK(t.per_prime.at(2).parts == std::vector<int>{1, 1, 1});
  CHECK(t.per_prime.at(3).parts == std::vector<int>{2, 1});
  CHECK(abelian_type_of(spec::Cyclic{7 * 6125}).per_prime.size() == 2);
  CHECK_THROWS_AS(abelian_type_of(spec::Dihedral{8}), Unresolvable);
}

TEST_CASE("analytic Iso of abelian groups agrees with brute force") {
  std::vector<GroupSpec> specs = {
      spec::Cyclic{1},           spec::Cyclic{8},          spec::Abelian{{2, 4}},   spec::Abelian{{2, 2, 2}},
      spec::Abelian{{4, 4}},     spec::Abelian{{2, 6}},    spec::Abelian{{3, 9}},   spec::Abelian{{2, 2, 4}},
      spec::Abelian{{2, 6, 18}}, spec::Abelian{{2, 4, 8}}, spec::Cyclic{360},
  };
  for (const auto& s : specs) {
    CAPTURE(to_string(s));
    auto analytic = abelian_iso_poset(abelian_type_of(s));
    auto brute = build_iso_poset(enumerate_subgroups(construct(s)));
    auto r = poset_isomorphic(analytic, brute.poset);
    REQUIRE(r.isomorphic);
    CHECK(verify_poset_isomorphism(analytic, brute.poset, *r.witness));
  }
}

TEST_CASE("divisor lattice") {
  auto d12 = divisor_lattice(12);
  CHECK(d12.size() == 6);
  CHECK(d12.hasse().size() == 7);
  CHECK(properties(d12).is_distributive);
  auto zm = enumerate_subgroups(construct(spec::Metacyclic{7, 3, 2}));
  CHECK(poset_isomorphic(build_iso_poset(zm).poset, divisor_lattice(21)).isomorphic);
  CHECK(poset_isomorphic(conjugacy_class_poset(zm), divisor_lattice(21)).isomorphic);
}

TEST_CASE("dihedral counts") {
  CHECK(dihedral_counts(4).subgroup_count == 10);
  CHECK(dihedral_counts(4).iso_class_count == 5);
  CHECK(dihedral_counts(5).subgroup_count == 8);
  CHECK(dihedral_counts(5).iso_class_count == 4);
  CHECK(dihedral_counts(6).subgroup_count == 16);
  CHECK(dihedral_counts(6).iso_class_count == 7);
  CHECK(dihedral_counts(1).iso_class_count == 2);
  for (std::uint64_t n = 2; n <= 30; ++n) {
    CAPTURE(n);
    auto c = dihedral_counts(n);
    CHECK(c.swapped_differs);
    CHECK(c.swapped_case_count != c.iso_class_count);
  }
}

TEST_CASE("dihedral lattice criterion") {
  for (std::uint64_t n = 1; n <= 24; ++n) {
    CAPTURE(n);
    auto ip = build_iso_poset(enumerate_subgroups(construct(spec::Dihedral{static_cast<int>(2 * n)})));
    CHECK(properties(ip.poset).is_lattice == dihedral_is_lattice(n));
  }
}

TEST_CASE("chain groups") {
  CHECK(is_chain_group(spec::Cyclic{27}));
  CHECK(is_chain_group(spec::Abelian{{3, 3, 3}}));
  CHECK(is_chain_group(spec::Heisenberg{3}));
  CHECK(is_chain_group(spec::Dicyclic{8}));
  CHECK_FALSE(is_chain_group(spec::Dicyclic{16}));
  CHECK_FALSE(is_chain_group(spec::Dihedral{8}));
  CHECK_FALSE(is_chain_group(spec::Cyclic{6}));
  CHECK_FALSE(is_chain_group(spec::Metacyclic{9, 3, 4}));
}

TEST_CASE("twin pairs") {
  for (std::uint64_t n : {4u, 8u, 9u, 12u, 16u, 18u, 20u, 24u, 27u}) {
    CAPTURE(n);
    auto [a, b] = twin_pair(n);
    auto ga = construct(a);
    auto gb = construct(b);
    CHECK(static_cast<std::uint64_t>(ga.order()) == n);
    CHECK(static_cast<std::uint64_t>(gb.order()) == n);
    CHECK_FALSE(isomorphic(ga, gb));
    CHECK(poset_isomorphic(build_iso_poset(enumerate_subgroups(ga)).poset,
                           build_iso_poset(enumerate_subgroups(gb)).poset)
              .isomorphic);
  }
  CHECK_THROWS_AS(twin_pair(30), SquareFreeOrder);
  CHECK_THROWS_AS(twin_pair(1), SquareFreeOrder);
  CHECK(to_string(twin_pair(27).first) == "ZM(9,3,4)");
}

TEST_CASE("modular groups") {
  auto m16 = construct(modular_group(2, 4));
  CHECK(m16.order() == 16);
  CHECK_FALSE(invariants(m16).abelian);
  CHECK(invariants(m16).exponent == 8);
  CHECK(construct(modular_group(3, 3)).order() == 27);
}
