#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isolat/group.hpp"

namespace isolat {

// One line of the catalog file:
//   order:index:name:degree:gen;gen;...
// with generators in disjoint-cycle notation over points 1..degree.
struct CatalogEntry {
  int order = 0;
  int index = 0;
  std::string name;
  int degree = 0;
  std::vector<Permutation> generators;

  GroupSpec spec() const { return spec::Perm{degree, generators}; }
};

class Catalog {
 public:
  Catalog() = default;
  Catalog(std::vector<CatalogEntry> entries, int completeness_bound);

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  std::vector<const CatalogEntry*> of_order(int order) const;
  const CatalogEntry* find(int order, int index) const;
  const CatalogEntry* find_name(const std::string& name) const;

  // Every group of order <= bound is present exactly once.
  int completeness_bound() const { return completeness_bound_; }

 private:
  std::vector<CatalogEntry> entries_;
  int completeness_bound_ = 0;
};

// Parses catalog text. A comment line "# complete-through: N" declares the
// completeness bound. With `check_orders`, every entry's generators are
// closed and the declared order asserted (OrderMismatch otherwise).
Catalog parse_catalog(const std::string& text, bool check_orders = true);
Catalog load_catalog(const std::string& path, bool check_orders = true);

std::string format_catalog_line(const CatalogEntry& e);

// Number of isomorphism types of groups of order n, for n <= 32.
std::optional<int> known_group_count(int n);

// Replaces CatalogRef nodes by the referenced permutation specs.
GroupSpec resolve(const GroupSpec& spec, const Catalog& catalog);

// Path of the catalog shipped with the sources.
std::string default_catalog_path();

}  // namespace isolat
