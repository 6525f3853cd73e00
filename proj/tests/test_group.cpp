#include <numeric>
#include <random>

#include "doctest.h"
#include "isolat/group.hpp"
#include "isolat/isomorphism.hpp"

using namespace isolat;

namespace {

bool is_group_table(const Group& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a) return false;
    if (g.mul(a, g.inv(a)) != 0) return false;
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("cycle notation round trip") {
  auto p = parse_cycles("(1 2 3)(4 5)", 5);
  CHECK(p.image == std::vector<int>{1, 2, 0, 4, 3});
  CHECK(format_cycles(p) == "(1 2 3)(4 5)");
  CHECK(format_cycles(Permutation::identity(4)) == "()");
  CHECK(parse_cycles("()", 3).is_identity());
  CHECK_THROWS_AS(parse_cycles("(1 2)(2 3)", 3), InvalidSpec);
  CHECK_THROWS_AS(parse_cycles("(1 4)", 3), InvalidSpec);
  CHECK_THROWS_AS(parse_cycles("(1 2", 3), InvalidSpec);
}

TEST_CASE("family orders") {
  struct Case {
    GroupSpec spec;
    int order;
  };
  std::vector<Case> cases = {
      {spec::Cyclic{12}, 12},         {spec::Abelian{{2, 4}}, 8},       {spec::Dihedral{12}, 12},
      {spec::Dicyclic{8}, 8},         {spec::Dicyclic{12}, 12},         {spec::Semidihedral{16}, 16},
      {spec::Symmetric{4}, 24},       {spec::Alternating{4}, 12},       {spec::Metacyclic{7, 3, 2}, 21},
      {spec::Heisenberg{3}, 27},      {spec::Product{{spec::Dihedral{8}, spec::Cyclic{4}}}, 32},
  };
  for (const auto& c : cases) {
    CAPTURE(to_string(c.spec));
    Group g = construct(c.spec);
    CHECK(g.order() == c.order);
    CHECK(spec_order(c.spec) == static_cast<std::uint64_t>(c.order));
    CHECK(is_group_table(g));
  }
}

TEST_CASE("invalid specs") {
  CHECK_THROWS_AS(validate(spec::Dihedral{7}), InvalidSpec);
  CHECK_THROWS_AS(validate(spec::Metacyclic{7, 3, 3}), InvalidSpec);
  CHECK_THROWS_AS(validate(spec::Semidihedral{8}), InvalidSpec);
  CHECK_THROWS_AS(validate(spec::Heisenberg{4}), InvalidSpec);
  CHECK_THROWS_AS(validate(spec::Cyclic{0}), InvalidSpec);
  CHECK_THROWS_AS(construct(spec::Cyclic{6000}), OrderCapExceeded);
}

TEST_CASE("from_table rejects a non-associative table") {
  // Order 3 with a x a = a: identity row fine but not a group.
  std::vector<Elem> t = {0, 1, 2, 1, 1, 0, 2, 0, 1};
  CHECK_THROWS_AS(Group::from_table(3, t, spec::Cyclic{3}, {"e", "a", "b"}), InvalidSpec);
}

TEST_CASE("invariants of small groups") {
  auto q8 = invariants(construct(spec::Dicyclic{8}));
  CHECK(q8.element_order_histogram == std::map<int, int>{{1, 1}, {2, 1}, {4, 6}});
  CHECK(q8.center_order == 2);
  CHECK_FALSE(q8.abelian);

  auto d8 = invariants(construct(spec::Dihedral{8}));
  CHECK(d8.element_order_histogram == std::map<int, int>{{1, 1}, {2, 5}, {4, 2}});

  auto s4 = invariants(construct(spec::Symmetric{4}));
  CHECK(s4.derived_subgroup_order == 12);
  CHECK(s4.solvable);
  CHECK_FALSE(invariants(construct(spec::Alternating{5})).solvable);

  auto ab = invariants(construct(spec::Abelian{{2, 6, 18}}));
  REQUIRE(ab.abelian_type);
  CHECK(ab.abelian_type->at(2) == std::vector<int>{1, 1, 1});
  CHECK(ab.abelian_type->at(3) == std::vector<int>{2, 1});
}

TEST_CASE("relabeling preserves the group") {
  Group g = construct(spec::Semidihedral{16});
  std::mt19937_64 rng(7);
  for (int round = 0; round < 5; ++round) {
    std::vector<Elem> perm(g.order());
    std::iota(perm.begin(), perm.end(), Elem{0});
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    Group h = relabel(g, perm);
    CHECK(is_group_table(h));
    CHECK(fingerprint(h) == fingerprint(g));
    auto r = is_isomorphic(g, h);
    REQUIRE(r.isomorphic);
    CHECK(verify_isomorphism(g, h, *r.witness));
  }
}

TEST_CASE("group isomorphism decisions") {
  CHECK_FALSE(isomorphic(construct(spec::Dihedral{8}), construct(spec::Dicyclic{8})));
  CHECK(isomorphic(construct(spec::Symmetric{3}), construct(spec::Dihedral{6})));
  CHECK(isomorphic(construct(spec::Abelian{{2, 3}}), construct(spec::Cyclic{6})));
  CHECK(isomorphic(construct(spec::Product{{spec::Cyclic{2}, spec::Cyclic{6}, spec::Cyclic{18}}}),
                   construct(spec::Abelian{{2, 6, 18}})));
  // Same element-order histogram, different groups.
  auto a = construct(spec::Abelian{{4, 4}});
  auto b = construct(spec::Metacyclic{4, 4, 3});
  CHECK(fingerprint(a).element_order_histogram == fingerprint(b).element_order_histogram);
  CHECK_FALSE(isomorphic(a, b));
  // Heisenberg(3) and Z9 x| Z3 share order, exponent class and centre size.
  CHECK_FALSE(is_isomorphic(construct(spec::Heisenberg{3}), construct(spec::Metacyclic{9, 3, 4})).isomorphic);
}

TEST_CASE("partition_classes groups isomorphic inputs") {
  std::vector<Group> gs = {construct(spec::Cyclic{4}), construct(spec::Abelian{{2, 2}}),
                           construct(spec::Abelian{{4}}), construct(spec::Dihedral{4})};
  auto classes = partition_classes(gs);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0] == std::vector<std::size_t>{0, 2});
  CHECK(classes[1] == std::vector<std::size_t>{1, 3});
}

TEST_CASE("factorize") {
  CHECK(factorize(360) == std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(factorize(1).empty());
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
}
