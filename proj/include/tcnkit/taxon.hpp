#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tcnkit {

// A sequence of symbols. The symbols are indices whose meaning (taxon index
// or ordering rank) is fixed by the function that produces or consumes them.
using Seq = std::vector<int>;

// Taxon names are free tokens except for whitespace and `(),;:#`.
bool is_valid_taxon_name(std::string_view name);

/// Ordered alphabet of taxa. `reserved` marks the extra leaf shared by all
/// line trees of an instance.
class TaxonSet {
 public:
  TaxonSet() = default;
  static TaxonSet from_names(std::vector<std::string> names,
                             const std::optional<std::string>& reserved = {});

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> reserved() const { return reserved_; }

  int index_of(std::string_view name) const;  // -1 when absent
  int require(std::string_view name) const;   // throws DomainError when absent
  bool contains(std::string_view name) const { return index_of(name) >= 0; }

  std::vector<std::string> seq_names(const Seq& seq) const;

 private:
  std::vector<std::string> names_;
  std::optional<int> reserved_;
  std::unordered_map<std::string, int> index_;
};

/// A total order on a taxon set; rank 0 is the smallest taxon.
class Ordering {
 public:
  Ordering() = default;
  Ordering(TaxonSet taxa, Seq seq);  // seq[rank] = taxon index
  static Ordering from_names(const std::vector<std::string>& names_smallest_first,
                             const std::optional<std::string>& reserved = {});

  const TaxonSet& taxa() const { return taxa_; }
  int size() const { return static_cast<int>(seq_.size()); }
  int taxon_at(int rank) const { return seq_.at(static_cast<std::size_t>(rank)); }
  int rank_of(int taxon) const { return rank_.at(static_cast<std::size_t>(taxon)); }
  const Seq& seq() const { return seq_; }

  const std::string& name_at(int rank) const { return taxa_.name(taxon_at(rank)); }
  std::vector<std::string> names_in_order() const;
  // Rank of the reserved taxon; throws DomainError when the set has none.
  int reserved_rank() const;
  bool has_reserved() const { return taxa_.reserved().has_value(); }

 private:
  TaxonSet taxa_;
  Seq seq_;
  Seq rank_;
};

// Text form of a symbol sequence: taxon names are concatenated when all
// names are single characters and joined with '.' otherwise. Parsing splits
// on '.' when one is present, else per character.
std::vector<std::string> split_sequence_text(std::string_view text);
std::string join_sequence(const std::vector<std::string>& names);

}  // namespace tcnkit
