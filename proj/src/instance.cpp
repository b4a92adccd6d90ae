#include "tcnkit/instance.hpp"

#include <json.hpp>

#include "tcnkit/errors.hpp"
#include "tcnkit/newick.hpp"

namespace tcnkit {

InstanceFile InstanceFile::from_json_text(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  InstanceFile out;
  try {
    out.alphabet = j.at("alphabet").get<std::vector<std::string>>();
    if (j.contains("reserved")) out.reserved = j.at("reserved").get<std::string>();
    if (j.contains("trees")) out.trees = j.at("trees").get<std::vector<std::string>>();
    if (j.contains("strings"))
      out.strings = j.at("strings").get<std::vector<std::string>>();
    if (j.contains("budget")) out.budget = j.at("budget").get<long long>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid instance file: ") + e.what(), 0);
  }
  return out;
}

std::string InstanceFile::to_json_text() const {
  nlohmann::json j;
  j["alphabet"] = alphabet;
  if (reserved) j["reserved"] = *reserved;
  j["trees"] = trees;
  if (strings) j["strings"] = *strings;
  if (budget) j["budget"] = *budget;
  return j.dump(2) + "\n";
}

void InstanceFile::validate() const {
  TaxonSet taxa = taxon_set();
  for (const std::string& text : trees) {
    BinaryTree tree = parse_newick(text);
    for (const std::string& name : tree.leaf_names())
      if (!taxa.contains(name))
        throw DomainError("tree leaf '" + name + "' is not in the alphabet");
  }
  if (strings)
    for (const std::string& s : *strings)
      for (const std::string& sym : split_sequence_text(s))
        if (!taxa.contains(sym))
          throw DomainError("string symbol '" + sym + "' is not in the alphabet");
}

}  // namespace tcnkit
