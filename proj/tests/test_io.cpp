#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "isolat/cache.hpp"
#include "isolat/catalog.hpp"
#include "isolat/dot.hpp"
#include "isolat/expr.hpp"
#include "isolat/suites.hpp"

using namespace isolat;
namespace fs = std::filesystem;

namespace {

std::size_t count_of(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = s.find(needle); at != std::string::npos; at = s.find(needle, at + 1)) ++n;
  return n;
}

fs::path scratch_dir(const std::string& name) {
  auto p = fs::temp_directory_path() / ("isolat-test-" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

IsoPoset iso_of(const GroupSpec& s) { return build_iso_poset(enumerate_subgroups(construct(s))); }

}  // namespace

TEST_CASE("group expressions") {
  auto s = parse_group_expr("Z2 x Z6 x Z18");
  REQUIRE(s.as<spec::Abelian>());
  CHECK(s.as<spec::Abelian>()->factors == std::vector<int>{2, 6, 18});
  CHECK(to_string(parse_group_expr("D12")) == "D12");
  CHECK(to_string(parse_group_expr("ZM(7,3,2)")) == "ZM(7,3,2)");
  CHECK(to_string(parse_group_expr("M27")) == "ZM(9,3,4)");
  CHECK(parse_group_expr("D8 x Z4").as<spec::Product>());
  CHECK(parse_group_expr("G(12,3)").as<spec::CatalogRef>());
  CHECK(spec_order(parse_group_expr("Heis(5)")) == 125);
  CHECK(spec_order(parse_group_expr("(S3 x Z2) x A4")) == 144);
  CHECK_THROWS_AS(parse_group_expr("D7"), InvalidSpec);
  CHECK_THROWS_AS(parse_group_expr("ZM(7,3,3)"), InvalidSpec);
  CHECK_THROWS_AS(parse_group_expr("Z4 x"), SyntaxError);
  CHECK_THROWS_AS(parse_group_expr("Y5"), SyntaxError);
  try {
    parse_group_expr("Z2 x ?");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("catalog parsing") {
  auto c = parse_catalog("# complete-through: 8\n8:4:Q8:8:(1 2 3 4)(5 8 7 6);(1 5 3 7)(2 6 4 8)\n\n6:1:S3:3:(1 2);(1 2 3)\n");
  CHECK(c.completeness_bound() == 8);
  REQUIRE(c.entries().size() == 2);
  CHECK(c.entries()[0].name == "S3");
  const auto* q8 = c.find(8, 4);
  REQUIRE(q8);
  CHECK(fingerprint(construct(q8->spec())) == fingerprint(construct(spec::Dicyclic{8})));
  CHECK(format_catalog_line(*q8) == "8:4:Q8:8:(1 2 3 4)(5 8 7 6);(1 5 3 7)(2 6 4 8)");
  CHECK(c.find_name("S3"));

  CHECK(parse_catalog("").entries().empty());
  CHECK_THROWS_AS(parse_catalog("6:1:S3:3:(1 2);(1 2 3)\n6:1:Z6:6:(1 2 3 4 5 6)\n"), ParseError);
  CHECK_THROWS_AS(parse_catalog("4:1:Z4:4:(1 2 3 4)\n8:1:Z8:4:(1 2 3 4)\n"), OrderMismatch);
  try {
    parse_catalog("2:1:Z2:2:(1 2)\n3:1:Z3:3:(1 2 3\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(load_catalog("/nonexistent/catalog.txt"), ParseError);

  auto resolved = resolve(parse_group_expr("G(6,1) x Z2"), c);
  CHECK(spec_order(resolved) == 12);
  CHECK_THROWS_AS(resolve(parse_group_expr("G(6,2)"), c), InvalidSpec);
}

TEST_CASE("shipped catalog") {
  auto c = load_catalog(default_catalog_path());
  CHECK(c.completeness_bound() == 24);
  for (int n = 1; n <= c.completeness_bound(); ++n) {
    CAPTURE(n);
    auto entries = c.of_order(n);
    REQUIRE(known_group_count(n));
    CHECK(entries.size() == static_cast<std::size_t>(*known_group_count(n)));
    std::vector<Group> groups;
    for (const auto* e : entries) groups.push_back(construct(e->spec()));
    CHECK(partition_classes(groups).size() == groups.size());
  }
  CHECK(c.find_name("Q16"));
  CHECK(c.find_name("Heis(3)"));
  CHECK(c.find_name("Heis(5)"));
  CHECK(c.find_name("Z7sdZ3"));
}

TEST_CASE("DOT export") {
  auto two = export_dot(Poset::chain(2));
  CHECK(two.rfind("digraph", 0) == 0);
  CHECK(count_of(two, "->") == 1);

  auto a4 = export_dot(iso_of(spec::Alternating{4}).poset, "A4");
  CHECK(count_of(a4, "[label=") == 5);
  CHECK(count_of(a4, "->") == 5);
  CHECK(export_dot(iso_of(spec::Alternating{4}).poset, "A4") == a4);

  auto d12 = export_dot(iso_of(spec::Dihedral{12}).poset);
  CHECK(count_of(d12, "[label=") == 7);
}

TEST_CASE("cache round trip") {
  auto dir = scratch_dir("cache");
  ResultCache cache(dir.string());
  Caps caps;
  GroupSpec d12 = spec::Dihedral{12};
  auto l = enumerate_subgroups(construct(d12));
  auto ip = build_iso_poset(l);
  CHECK_FALSE(cache.load(d12, caps));
  cache.store(d12, caps, l, ip);
  auto back = cache.load(d12, caps);
  REQUIRE(back);
  CHECK(poset_digest(back->iso.poset) == poset_digest(ip.poset));
  CHECK(back->iso.classes == ip.classes);
  CHECK(back->lattice.size() == l.size());
  for (std::size_t i = 0; i < l.size(); ++i) CHECK(back->lattice.subgroup(i).members == l.subgroup(i).members);

  CHECK_FALSE(ResultCache(dir.string(), kCacheVersion + 1).load(d12, caps));
  Caps other = caps;
  other.subgroup_cap = 1000;
  CHECK(cache.key(d12, other) != cache.key(d12, caps));

  // Truncate the stored file.
  auto path = cache.path(d12, caps);
  auto size = fs::file_size(path);
  fs::resize_file(path, size / 2);
  CHECK_THROWS_AS(cache.load(d12, caps), CorruptEntry);
  std::ostringstream warn;
  auto recomputed = cache.get_or_compute(d12, caps, nullptr, &warn);
  CHECK(poset_digest(recomputed.iso.poset) == poset_digest(ip.poset));
  CHECK_FALSE(warn.str().empty());
  CHECK(cache.load(d12, caps));
  fs::remove_all(dir);
}

TEST_CASE("sha256") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("suite runner") {
  auto catalog = load_catalog(default_catalog_path());
  auto r = run_suite("examples", catalog);
  CHECK(r.cases.size() == 6);
  CHECK(r.count(CaseStatus::Pass) == 6);
  CHECK(r.to_json().dump() == run_suite("examples", catalog).to_json().dump());
  auto j = r.to_json();
  CHECK(j["suite"] == "examples");
  CHECK(j["cases"][0].contains("evidence"));
  CHECK(j["cases"][0]["millis"] == 0);

  CHECK_THROWS_AS(run_suite("nope", catalog), UnknownSuite);
  SuiteOptions past;
  past.max_order = catalog.completeness_bound() + 1;
  CHECK_THROWS_AS(run_suite("conjecture", catalog, {}, past), CatalogIncomplete);

  auto dot_dir = scratch_dir("dot");
  SuiteOptions with_dot;
  with_dot.dot_dir = dot_dir.string();
  run_suite("examples", catalog, {}, with_dot);
  CHECK(std::distance(fs::directory_iterator(dot_dir), fs::directory_iterator{}) > 0);
  fs::remove_all(dot_dir);
}
