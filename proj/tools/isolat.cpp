#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "isolat/analytic.hpp"
#include "isolat/cache.hpp"
#include "isolat/dot.hpp"
#include "isolat/expr.hpp"
#include "isolat/suites.hpp"
#include "json.hpp"

using namespace isolat;
using nlohmann::json;

namespace {

struct Loaded {
  GroupSpec spec;
  SubgroupLattice lattice;
  IsoPoset iso;
};

std::optional<Catalog> catalog_cache;

const Catalog& catalog_at(const std::string& path) {
  if (!catalog_cache) catalog_cache = load_catalog(path);
  return *catalog_cache;
}

bool mentions_catalog(const GroupSpec& s) {
  if (s.as<spec::CatalogRef>()) return true;
  if (auto p = s.as<spec::Product>())
    for (const auto& f : p->factors)
      if (mentions_catalog(f)) return true;
  return false;
}

GroupSpec resolve_expr(const std::string& text, const std::string& catalog_path) {
  GroupSpec s = parse_group_expr(text);
  return mentions_catalog(s) ? resolve(s, catalog_at(catalog_path)) : s;
}

// Labels use catalog names when the catalog is readable.
GroupNamer& namer(const std::string& catalog_path, const Caps& caps) {
  static std::optional<GroupNamer> n;
  if (!n) {
    n.emplace();
    if (std::filesystem::exists(catalog_path)) add_catalog_references(*n, catalog_at(catalog_path), caps);
  }
  return *n;
}

Loaded load(const std::string& text, const std::string& catalog_path, const Caps& caps) {
  Loaded out{resolve_expr(text, catalog_path), {}, {}};
  out.lattice = enumerate_subgroups(construct(out.spec, caps), caps);
  out.iso = build_iso_poset(out.lattice, &namer(catalog_path, caps));
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

json properties_json(const PropertyReport& r, const Poset& p) {
  json j = {{"lattice", r.is_lattice},         {"chain", r.is_chain},
            {"modular", r.is_modular},         {"distributive", r.is_distributive},
            {"complemented", r.is_complemented}, {"height", r.height}};
  auto add = [&](const char* key, const std::optional<PropertyWitness>& w) {
    if (!w) return;
    json labels = json::array();
    for (auto e : w->elements) labels.push_back(p.label(e));
    j["witnesses"][key] = {{"kind", w->kind}, {"labels", labels}};
  };
  add("lattice", r.lattice_witness);
  add("modular", r.modular_witness);
  add("distributive", r.distributive_witness);
  add("complemented", r.complemented_witness);
  return j;
}

void print_properties(const PropertyReport& r, const Poset& p) {
  std::cout << "properties: lattice=" << yes_no(r.is_lattice) << " chain=" << yes_no(r.is_chain)
            << " modular=" << yes_no(r.is_modular) << " distributive=" << yes_no(r.is_distributive)
            << " complemented=" << yes_no(r.is_complemented) << " height=" << r.height << "\n";
  auto show = [&](const std::optional<PropertyWitness>& w) {
    if (!w) return;
    std::cout << "  witness " << w->kind << ":";
    for (auto e : w->elements) std::cout << " " << p.label(e);
    std::cout << "\n";
  };
  show(r.lattice_witness);
  if (!r.is_lattice) return;
  show(r.modular_witness);
  show(r.distributive_witness);
  show(r.complemented_witness);
}

int cmd_iso(const std::string& expr, const std::string& catalog, const Caps& caps, bool as_json,
            const std::string& dot_file) {
  auto g = load(expr, catalog, caps);
  const Poset& p = g.iso.poset;
  auto props = properties(p);
  if (!dot_file.empty()) std::ofstream(dot_file) << export_dot(p, "Iso(" + to_string(g.spec) + ")");
  if (as_json) {
    json classes = json::array();
    for (std::size_t k = 0; k < p.size(); ++k)
      classes.push_back({{"label", p.label(k)},
                         {"order", g.lattice.subgroup(g.iso.representative[k]).order},
                         {"members", g.iso.classes[k].size()},
                         {"fingerprint", g.iso.class_fingerprint[k].to_string()}});
    json hasse = json::array();
    for (auto [a, b] : p.hasse()) hasse.push_back({a, b});
    json out = {{"group", to_string(g.spec)},
                {"order", g.lattice.parent().order()},
                {"subgroups", g.lattice.size()},
                {"classes", classes},
                {"hasse", hasse},
                {"properties", properties_json(props, p)},
                {"digest", poset_digest(p)}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "group " << to_string(g.spec) << ", order " << g.lattice.parent().order() << ", "
            << g.lattice.size() << " subgroups, " << p.size() << " isomorphism classes\n";
  for (std::size_t k = 0; k < p.size(); ++k)
    std::cout << "  [" << k << "] " << p.label(k) << "  order " << g.lattice.subgroup(g.iso.representative[k]).order
              << ", " << g.iso.classes[k].size() << " subgroup(s)\n";
  std::cout << "hasse:";
  for (auto [a, b] : p.hasse()) std::cout << " " << p.label(a) << "<" << p.label(b);
  std::cout << "\n";
  print_properties(props, p);
  return 0;
}

int cmd_lattice(const std::string& expr, const std::string& catalog, const Caps& caps, bool as_json) {
  auto g = load(expr, catalog, caps);
  const auto& l = g.lattice;
  std::map<std::size_t, std::size_t> by_order;
  std::size_t normal = 0;
  for (std::size_t id = 0; id < l.size(); ++id) {
    ++by_order[l.subgroup(id).order];
    if (l.is_normal(id)) ++normal;
  }
  auto meta = lattice_meta(l);
  auto pq = pq_property(l);
  if (as_json) {
    json counts = json::object();
    for (auto [o, c] : by_order) counts[std::to_string(o)] = c;
    json out = {{"group", to_string(g.spec)},
                {"order", l.parent().order()},
                {"subgroups", l.size()},
                {"by_order", counts},
                {"normal", normal},
                {"conjugacy_classes", l.conjugacy_class_count()},
                {"hasse_edges", l.hasse().size()},
                {"frattini_order", l.subgroup(meta.frattini_id).order},
                {"clt", meta.is_clt},
                {"jordan_dedekind", meta.jordan_dedekind},
                {"pq_property", pq.holds}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "group " << to_string(g.spec) << ", order " << l.parent().order() << "\n";
  std::cout << "subgroups " << l.size() << " (normal " << normal << ", conjugacy classes "
            << l.conjugacy_class_count() << ", hasse edges " << l.hasse().size() << ")\n";
  std::cout << "by order:";
  for (auto [o, c] : by_order) std::cout << " " << o << ":" << c;
  std::cout << "\n";
  std::cout << "frattini order " << l.subgroup(meta.frattini_id).order << ", CLT " << yes_no(meta.is_clt)
            << ", Jordan-Dedekind " << yes_no(meta.jordan_dedekind) << ", pq property " << yes_no(pq.holds)
            << "\n";
  return 0;
}

int cmd_compare(const std::string& e1, const std::string& e2, const std::string& catalog, const Caps& caps,
                bool as_json) {
  auto a = load(e1, catalog, caps);
  auto b = load(e2, catalog, caps);
  auto giso = is_isomorphic(a.lattice.parent(), b.lattice.parent());
  auto piso = poset_isomorphic(a.iso.poset, b.iso.poset);
  const bool verified = piso.witness && verify_poset_isomorphism(a.iso.poset, b.iso.poset, *piso.witness);
  if (as_json) {
    json out = {{"first", to_string(a.spec)},
                {"second", to_string(b.spec)},
                {"groups_isomorphic", giso.isomorphic},
                {"iso_posets_isomorphic", piso.isomorphic},
                {"witness_verified", verified}};
    if (piso.witness) {
      json map = json::array();
      for (std::size_t i = 0; i < piso.witness->size(); ++i)
        map.push_back({a.iso.poset.label(i), b.iso.poset.label((*piso.witness)[i])});
      out["witness"] = map;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << to_string(a.spec) << " vs " << to_string(b.spec) << "\n";
  std::cout << "groups isomorphic: " << yes_no(giso.isomorphic) << "\n";
  std::cout << "Iso posets isomorphic: " << yes_no(piso.isomorphic) << " (" << a.iso.poset.size() << " vs "
            << b.iso.poset.size() << " classes)\n";
  if (piso.witness) {
    std::cout << "witness" << (verified ? " (verified)" : " (NOT verified)") << ":";
    for (std::size_t i = 0; i < piso.witness->size(); ++i)
      std::cout << " " << a.iso.poset.label(i) << "->" << b.iso.poset.label((*piso.witness)[i]);
    std::cout << "\n";
  }
  return 0;
}

int cmd_twin(std::uint64_t n, const std::string& catalog, const Caps& caps) {
  auto [s1, s2] = twin_pair(n);
  std::cout << "twin pair for n=" << n << ": " << to_string(s1) << " and " << to_string(s2) << "\n";
  auto l1 = enumerate_subgroups(construct(s1, caps), caps);
  auto l2 = enumerate_subgroups(construct(s2, caps), caps);
  auto i1 = build_iso_poset(l1, &namer(catalog, caps));
  auto i2 = build_iso_poset(l2, &namer(catalog, caps));
  auto giso = is_isomorphic(l1.parent(), l2.parent());
  auto piso = poset_isomorphic(i1.poset, i2.poset);
  const bool ok = !giso.isomorphic && piso.isomorphic && piso.witness &&
                  verify_poset_isomorphism(i1.poset, i2.poset, *piso.witness);
  std::cout << "groups isomorphic: " << yes_no(giso.isomorphic) << ", Iso posets isomorphic: "
            << yes_no(piso.isomorphic) << " (" << i1.poset.size() << " classes)\n";
  std::cout << (ok ? "verified" : "NOT verified") << "\n";
  return ok ? 0 : 1;
}

int cmd_verify(const std::string& suite, const std::string& catalog, const Caps& caps, std::optional<int> max_order,
               bool as_json, const std::string& dot_dir, const std::string& cache_dir, bool timing) {
  SuiteOptions opts;
  opts.max_order = max_order;
  opts.dot_dir = dot_dir;
  opts.cache_dir = cache_dir;
  opts.timing = timing;
  opts.warn = &std::cerr;
  auto report = run_suite(suite, catalog_at(catalog), caps, opts);
  if (as_json) std::cout << report.to_json().dump(2) << "\n";
  else std::cout << report.table();
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subgroup lattices and posets of isomorphism classes of subgroups"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string catalog = default_catalog_path();
  Caps caps;
  app.add_option("--catalog", catalog, "catalog file")->capture_default_str();
  app.add_option("--table-cap", caps.table_cap, "largest group order to materialize")->capture_default_str();
  app.add_option("--subgroup-cap", caps.subgroup_cap, "largest subgroup count")->capture_default_str();

  std::string expr, expr2, dot, suite, cache_dir;
  bool as_json = false, timing = false;
  std::uint64_t n = 0;
  std::optional<int> max_order;

  auto* iso = app.add_subcommand("iso", "isomorphism classes of subgroups, Iso(G)");
  iso->add_option("expr", expr, "group expression, e.g. D12, Z2xZ6, ZM(7,3,2), G(16,3)")->required();
  iso->add_option("--dot", dot, "write the Hasse diagram as DOT to this file");
  iso->add_flag("--json", as_json);

  auto* lat = app.add_subcommand("lattice", "subgroup lattice summary, L(G)");
  lat->add_option("expr", expr)->required();
  lat->add_flag("--json", as_json);

  auto* cmp = app.add_subcommand("compare", "compare two groups and their Iso posets");
  cmp->add_option("expr1", expr)->required();
  cmp->add_option("expr2", expr2)->required();
  cmp->add_flag("--json", as_json);

  auto* twin = app.add_subcommand("twin", "non-isomorphic pair of order n with isomorphic Iso posets");
  twin->add_option("n", n)->required();

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", suite, "one of: all, " + [] {
    std::string s;
    for (const auto& name : suite_names()) s += (s.empty() ? "" : ", ") + name;
    return s;
  }())->required();
  ver->add_option("--max-order", max_order, "largest catalog order to visit");
  ver->add_flag("--json", as_json);
  ver->add_option("--dot", dot, "directory for DOT files of every analyzed group");
  ver->add_option("--cache", cache_dir, "result cache directory");
  ver->add_flag("--timing", timing, "record wall times in the report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*iso) return cmd_iso(expr, catalog, caps, as_json, dot);
    if (*lat) return cmd_lattice(expr, catalog, caps, as_json);
    if (*cmp) return cmd_compare(expr, expr2, catalog, caps, as_json);
    if (*twin) return cmd_twin(n, catalog, caps);
    if (*ver) return cmd_verify(suite, catalog, caps, max_order, as_json, dot, cache_dir, timing);
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
