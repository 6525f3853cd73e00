#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isolat/group.hpp"

namespace isolat {

// Relabeling-invariant summary used to rule out isomorphism cheaply. Equal
// fingerprints are necessary, not sufficient.
struct Fingerprint {
  int order = 0;
  std::map<int, int> element_order_histogram;
  bool abelian = false;
  std::optional<std::map<int, std::vector<int>>> abelian_type;
  int center_order = 0;
  int derived_subgroup_order = 0;
  int exponent = 0;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;

  std::string to_string() const;
};

Fingerprint fingerprint(const Group& g);
Fingerprint fingerprint_from(const GroupInvariants& inv);

struct IsoResult {
  bool isomorphic = false;
  // witness[x] is the image in the second group of element x of the first.
  std::optional<std::vector<Elem>> witness;
};

// Complete decision by fingerprint comparison and generator-image
// backtracking. A reported witness has already been checked on all pairs.
IsoResult is_isomorphic(const Group& a, const Group& b);

// Decision only; abelian pairs are settled by their abelian type without
// building a map.
bool isomorphic(const Group& a, const Group& b);

// Full check: bijective and multiplicative on every pair.
bool verify_isomorphism(const Group& a, const Group& b, const std::vector<Elem>& map);

// Isomorphism classes of the given groups as lists of input positions. Each
// class lists its members ascending; classes are ordered by
// (order, fingerprint, smallest member), so the partition does not depend on
// how the input happens to be ordered beyond the positions themselves.
std::vector<std::vector<std::size_t>> partition_classes(const std::vector<Group>& groups);

}  // namespace isolat
