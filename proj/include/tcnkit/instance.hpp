#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tcnkit/taxon.hpp"

namespace tcnkit {

/// JSON container for problem inputs: an alphabet, optional reserved taxon,
/// Newick trees, plain strings and an optional budget.
struct InstanceFile {
  std::vector<std::string> alphabet;
  std::optional<std::string> reserved;
  std::vector<std::string> trees;
  std::optional<std::vector<std::string>> strings;
  std::optional<long long> budget;

  static InstanceFile from_json_text(std::string_view text);
  std::string to_json_text() const;  // 2-space indent, LF line endings

  // Leaf labels of every tree and all string symbols must belong to the
  // alphabet; throws DomainError otherwise.
  void validate() const;

  TaxonSet taxon_set() const { return TaxonSet::from_names(alphabet, reserved); }
};

}  // namespace tcnkit
