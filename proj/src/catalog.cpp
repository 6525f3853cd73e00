#include "isolat/catalog.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <set>
#include <sstream>

#ifndef ISOLAT_DATA_DIR
#define ISOLAT_DATA_DIR "data"
#endif

namespace isolat {

Catalog::Catalog(std::vector<CatalogEntry> entries, int completeness_bound)
    : entries_(std::move(entries)), completeness_bound_(completeness_bound) {
  std::stable_sort(entries_.begin(), entries_.end(), [](const auto& a, const auto& b) {
    return std::tie(a.order, a.index) < std::tie(b.order, b.index);
  });
}

std::vector<const CatalogEntry*> Catalog::of_order(int order) const {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : entries_)
    if (e.order == order) out.push_back(&e);
  return out;
}

const CatalogEntry* Catalog::find(int order, int index) const {
  for (const auto& e : entries_)
    if (e.order == order && e.index == index) return &e;
  return nullptr;
}

const CatalogEntry* Catalog::find_name(const std::string& name) const {
  for (const auto& e : entries_)
    if (e.name == name) return &e;
  return nullptr;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

int to_int(const std::string& s, std::size_t line, const char* what) {
  std::string t = trim(s);
  if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError(std::string("bad ") + what + " '" + t + "'", line);
  return std::stoi(t);
}

}  // namespace

Catalog parse_catalog(const std::string& text, bool check_orders) {
  std::vector<CatalogEntry> entries;
  int bound = 0;
  std::set<std::pair<int, int>> ids;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string key = "complete-through:";
      auto at = line.find(key);
      if (at != std::string::npos) bound = to_int(line.substr(at + key.size()), lineno, "completeness bound");
      continue;
    }
    auto fields = split(line, ':');
    if (fields.size() != 5) throw ParseError("expected order:index:name:degree:generators", lineno);
    CatalogEntry e;
    e.order = to_int(fields[0], lineno, "order");
    e.index = to_int(fields[1], lineno, "index");
    e.name = trim(fields[2]);
    e.degree = to_int(fields[3], lineno, "degree");
    if (e.order < 1 || e.index < 1 || e.degree < 1) throw ParseError("order, index and degree must be positive", lineno);
    if (!ids.emplace(e.order, e.index).second)
      throw ParseError("duplicate catalog id " + std::to_string(e.order) + ":" + std::to_string(e.index), lineno);
    std::string gens = trim(fields[4]);
    if (!gens.empty()) {
      for (const auto& g : split(gens, ';')) {
        try {
          e.generators.push_back(parse_cycles(trim(g), e.degree));
        } catch (const InvalidSpec& err) {
          throw ParseError(err.what(), lineno);
        }
      }
    }
    if (check_orders) {
      auto n = spec_order(e.spec());
      if (n != static_cast<std::uint64_t>(e.order))
        throw OrderMismatch(e.name + " (" + std::to_string(e.order) + ":" + std::to_string(e.index) +
                            ") declares order " + std::to_string(e.order) + " but generates " +
                            std::to_string(n) + " elements");
    }
    entries.push_back(std::move(e));
  }
  return Catalog(std::move(entries), bound);
}

Catalog load_catalog(const std::string& path, bool check_orders) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open catalog " + path, 0);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str(), check_orders);
}

std::string format_catalog_line(const CatalogEntry& e) {
  std::string out = std::to_string(e.order) + ":" + std::to_string(e.index) + ":" + e.name + ":" +
                    std::to_string(e.degree) + ":";
  for (std::size_t i = 0; i < e.generators.size(); ++i) {
    if (i) out += ";";
    out += format_cycles(e.generators[i]);
  }
  return out;
}

std::optional<int> known_group_count(int n) {
  static constexpr std::array<int, 33> kCounts = {0, 1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14,
                                                  1, 5, 1, 5, 2, 2, 1, 15, 2, 2, 5, 4, 1, 4, 1, 51};
  if (n < 1 || n > 32) return std::nullopt;
  return kCounts[static_cast<std::size_t>(n)];
}

GroupSpec resolve(const GroupSpec& s, const Catalog& catalog) {
  if (auto c = s.as<spec::CatalogRef>()) {
    const auto* e = catalog.find(c->order, c->index);
    if (!e) throw InvalidSpec("no catalog entry " + to_string(s));
    return e->spec();
  }
  if (auto p = s.as<spec::Product>()) {
    spec::Product out;
    for (const auto& f : p->factors) out.factors.push_back(resolve(f, catalog));
    return out;
  }
  return s;
}

std::string default_catalog_path() { return std::string(ISOLAT_DATA_DIR) + "/catalog.txt"; }

}  // namespace isolat
