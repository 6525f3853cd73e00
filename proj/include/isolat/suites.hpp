#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "isolat/cache.hpp"
#include "isolat/catalog.hpp"
#include "isolat/poset.hpp"
#include "json.hpp"

namespace isolat {

// Registers the catalog's non-abelian groups (up to max_order) as naming
// references.
void add_catalog_references(GroupNamer& namer, const Catalog& catalog, const Caps& caps, int max_order = 64);

// Everything the suites need to know about one group.
struct Analysis {
  std::string name;
  GroupSpec spec;
  SubgroupLattice lattice;
  IsoPoset iso;
  PropertyReport props;
  GroupInvariants inv;

  const Group& group() const { return lattice.parent(); }
};

// Memoizes analyses by spec, optionally backed by a ResultCache. Labels come
// from a shared GroupNamer seeded with the catalog's non-abelian groups.
class Workbench {
 public:
  Workbench(const Catalog& catalog, Caps caps, const ResultCache* cache = nullptr,
            std::ostream* warn = nullptr);

  const Analysis& analyze(const GroupSpec& spec, const std::string& name = "");
  const Analysis& analyze(const CatalogEntry& e);

  const Catalog& catalog() const { return catalog_; }
  const Caps& caps() const { return caps_; }
  GroupNamer& namer() { return namer_; }

  // Analyses in the order they were first requested.
  const std::vector<const Analysis*>& analyzed() const { return order_; }

 private:
  const Catalog& catalog_;
  Caps caps_;
  const ResultCache* cache_;
  std::ostream* warn_;
  GroupNamer namer_;
  std::map<std::string, std::unique_ptr<Analysis>> memo_;
  std::vector<const Analysis*> order_;
};

enum class CaseStatus { Pass, Fail, Flagged };
std::string to_string(CaseStatus s);

struct CaseResult {
  std::string id;
  CaseStatus status = CaseStatus::Pass;
  std::string detail;  // one line for the human table
  nlohmann::json evidence;
  std::int64_t millis = 0;
};

struct VerificationReport {
  std::string suite;
  std::vector<CaseResult> cases;
  std::int64_t millis = 0;

  std::size_t count(CaseStatus s) const;
  bool passed() const { return count(CaseStatus::Fail) == 0; }
  const CaseResult* find(const std::string& id) const;

  nlohmann::json to_json() const;
  std::string table() const;
};

struct SuiteOptions {
  std::optional<int> max_order;  // caps the catalog groups a suite visits
  std::string dot_dir;           // Iso posets of every analyzed group as DOT
  std::string cache_dir;
  bool timing = false;           // record wall time (otherwise 0, for stable output)
  std::ostream* warn = nullptr;
};

std::vector<std::string> suite_names();

// Runs one suite ("all" runs every suite in turn). Throws UnknownSuite, and
// CatalogIncomplete when the conjecture suite is asked to go past the
// catalog's completeness bound.
VerificationReport run_suite(const std::string& name, const Catalog& catalog, const Caps& caps = {},
                             const SuiteOptions& opts = {});

// Runs a suite on an existing workbench (shares analyses across calls).
VerificationReport run_suite(const std::string& name, Workbench& wb, const SuiteOptions& opts = {});

// Pairwise Iso-poset comparison among the catalog groups of one order, as
// used by the conjecture suite: for each group, the ids of same-order
// non-isomorphic groups whose Iso posets are isomorphic.
struct TwinTable {
  int order = 0;
  std::vector<std::string> ids;
  std::vector<std::vector<std::size_t>> partners;
  std::vector<std::vector<std::vector<std::size_t>>> witnesses;  // poset maps, per partner
};

TwinTable twin_table(Workbench& wb, int order);

}  // namespace isolat
