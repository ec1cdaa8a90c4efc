#pragma once

// JSON group descriptions: catalog entries, permutation generators, Cayley
// tables and direct products. The grammar is in docs/input-format.md.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hh1/group.hpp"

namespace hh1 {

inline constexpr std::size_t kMaxSpecDepth = 4;

struct GroupSpec {
  enum class Kind { Catalog, Permutation, Cayley, Product };
  Kind kind = Kind::Catalog;

  std::string name;                          // catalog
  std::map<std::string, long long> params;   // catalog
  std::size_t degree = 0;                    // permutation
  std::vector<Permutation> generators;       // permutation, 0-based images
  std::vector<std::vector<Elem>> table;      // cayley, element 0 is the identity
  std::vector<GroupSpec> factors;            // product

  /// Short human-readable form, e.g. "heisenberg(p=3) x cyclic(n=3)".
  std::string describe() const;
};

/// Throws Error(InvalidInput) on malformed documents, unknown catalog names
/// or nesting deeper than kMaxSpecDepth.
GroupSpec parse_group_spec(const std::string& text);

Group build_group(const GroupSpec& spec);

/// Catalog names accepted by parse_group_spec, with their parameter names.
const std::vector<std::pair<std::string, std::vector<std::string>>>& catalog_entries();

}  // namespace hh1
