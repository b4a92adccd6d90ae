#include "tcnkit/taxon.hpp"

#include <algorithm>
#include <cctype>

#include "tcnkit/errors.hpp"

namespace tcnkit {

bool is_valid_taxon_name(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name) {
    if (std::isspace(static_cast<unsigned char>(c))) return false;
    if (c == '(' || c == ')' || c == ',' || c == ';' || c == ':' || c == '#') return false;
  }
  return true;
}

TaxonSet TaxonSet::from_names(std::vector<std::string> names,
                              const std::optional<std::string>& reserved) {
  TaxonSet set;
  set.names_ = std::move(names);
  for (int i = 0; i < set.size(); ++i) {
    const std::string& n = set.names_[static_cast<std::size_t>(i)];
    if (!is_valid_taxon_name(n)) throw DomainError("invalid taxon name: '" + n + "'");
    if (!set.index_.emplace(n, i).second) throw DomainError("duplicate taxon name: '" + n + "'");
  }
  if (reserved) {
    auto it = set.index_.find(*reserved);
    if (it == set.index_.end())
      throw DomainError("reserved taxon '" + *reserved + "' is not a member");
    set.reserved_ = it->second;
  }
  return set;
}

int TaxonSet::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? -1 : it->second;
}

int TaxonSet::require(std::string_view name) const {
  int i = index_of(name);
  if (i < 0) throw DomainError("unknown taxon: '" + std::string(name) + "'");
  return i;
}

std::vector<std::string> TaxonSet::seq_names(const Seq& seq) const {
  std::vector<std::string> out;
  out.reserve(seq.size());
  for (int s : seq) out.push_back(name(s));
  return out;
}

Ordering::Ordering(TaxonSet taxa, Seq seq) : taxa_(std::move(taxa)), seq_(std::move(seq)) {
  if (static_cast<int>(seq_.size()) != taxa_.size())
    throw DomainError("ordering length does not match taxon set size");
  rank_.assign(seq_.size(), -1);
  for (int r = 0; r < static_cast<int>(seq_.size()); ++r) {
    int t = seq_[static_cast<std::size_t>(r)];
    if (t < 0 || t >= taxa_.size() || rank_[static_cast<std::size_t>(t)] != -1)
      throw DomainError("ordering is not a permutation of the taxon set");
    rank_[static_cast<std::size_t>(t)] = r;
  }
}

Ordering Ordering::from_names(const std::vector<std::string>& names_smallest_first,
                              const std::optional<std::string>& reserved) {
  TaxonSet taxa = TaxonSet::from_names(names_smallest_first, reserved);
  Seq seq(names_smallest_first.size());
  for (int i = 0; i < taxa.size(); ++i) seq[static_cast<std::size_t>(i)] = i;
  return Ordering(std::move(taxa), std::move(seq));
}

std::vector<std::string> Ordering::names_in_order() const {
  std::vector<std::string> out;
  out.reserve(seq_.size());
  for (int t : seq_) out.push_back(taxa_.name(t));
  return out;
}

int Ordering::reserved_rank() const {
  auto r = taxa_.reserved();
  if (!r) throw DomainError("taxon set has no reserved taxon");
  return rank_of(*r);
}

std::vector<std::string> split_sequence_text(std::string_view text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  if (text.find('.') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t dot = text.find('.', start);
      if (dot == std::string_view::npos) dot = text.size();
      out.emplace_back(text.substr(start, dot - start));
      start = dot + 1;
      if (dot == text.size()) break;
    }
  } else {
    for (char c : text) out.emplace_back(1, c);
  }
  for (const auto& n : out)
    if (!is_valid_taxon_name(n)) throw DomainError("invalid symbol '" + n + "' in sequence text");
  return out;
}

std::string join_sequence(const std::vector<std::string>& names) {
  bool dotted = std::any_of(names.begin(), names.end(),
                            [](const std::string& n) { return n.size() > 1; });
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (dotted && i > 0) out += '.';
    out += names[i];
  }
  return out;
}

}  // namespace tcnkit
