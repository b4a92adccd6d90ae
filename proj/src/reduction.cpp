#include "tcnkit/reduction.hpp"

#include <algorithm>
#include <set>

#include "tcnkit/construct.hpp"
#include "tcnkit/errors.hpp"

namespace tcnkit {

namespace {

Seq to_ranks(const TaxonSet& taxa, const std::vector<std::string>& names) {
  Seq out;
  for (const auto& n : names) out.push_back(taxa.require(n));
  return out;
}

}  // namespace

void TwoScsInstance::validate() const {
  TaxonSet x = TaxonSet::from_names(alphabet);
  if (strings.empty()) throw DomainError("empty 2-SCS instance");
  if (budget < 0) throw DomainError("negative budget");
  for (const auto& s : strings) {
    if (s.size() != 2 || s[0] == s[1])
      throw DomainError("2-SCS strings must have exactly 2 distinct characters");
    x.require(s[0]);
    x.require(s[1]);
  }
}

bool TwoScsInstance::has_universal_character() const {
  for (const std::string& c : alphabet) {
    bool everywhere = true;
    for (const auto& s : strings)
      if (s[0] != c && s[1] != c) everywhere = false;
    if (everywhere && !strings.empty()) return true;
  }
  return false;
}

std::vector<std::string> PermutationScsInstance::full_alphabet() const {
  std::vector<std::string> out = base;
  out.insert(out.end(), separators.begin(), separators.end());
  return out;
}

PermutationScsInstance encode_2scs(const TwoScsInstance& inst) {
  inst.validate();
  long long n = static_cast<long long>(inst.alphabet.size());
  long long big_n = n + inst.budget + 1;

  PermutationScsInstance enc;
  enc.base = inst.alphabet;
  for (long long i = 1; i <= big_n; ++i) {
    std::string y = "y" + std::to_string(i);
    if (std::find(inst.alphabet.begin(), inst.alphabet.end(), y) != inst.alphabet.end())
      throw DomainError("separator name '" + y + "' collides with the alphabet");
    enc.separators.push_back(std::move(y));
  }
  for (const auto& s : inst.strings) {
    std::vector<std::string> perm{s[0], s[1]};
    perm.insert(perm.end(), enc.separators.begin(), enc.separators.end());
    for (const std::string& c : inst.alphabet)
      if (c != s[0] && c != s[1]) perm.push_back(c);
    enc.permutations.push_back(std::move(perm));
  }
  enc.budget = inst.budget + big_n + n;
  return enc;
}

std::vector<std::string> forward_witness(const TwoScsInstance& inst,
                                         const std::vector<std::string>& witness) {
  inst.validate();
  PermutationScsInstance enc = encode_2scs(inst);
  TaxonSet full = TaxonSet::from_names(enc.full_alphabet());
  Seq w = to_ranks(full, witness);
  if (static_cast<long long>(witness.size()) > inst.budget)
    throw DomainError("witness exceeds the budget");
  for (const auto& s : inst.strings)
    if (!is_supersequence(w, to_ranks(full, s)))
      throw DomainError("witness is not a common supersequence of the instance");

  std::vector<std::string> out = witness;
  out.insert(out.end(), enc.separators.begin(), enc.separators.end());
  out.insert(out.end(), inst.alphabet.begin(), inst.alphabet.end());

  Seq o = to_ranks(full, out);
  for (const auto& p : enc.permutations)
    if (!is_supersequence(o, to_ranks(full, p)))
      throw StructuralError("forward witness fails against an encoded permutation");
  return out;
}

DecodedWitness decode_witness(const TwoScsInstance& inst, const PermutationScsInstance& enc,
                              const std::vector<std::string>& witness) {
  TaxonSet full = TaxonSet::from_names(enc.full_alphabet());
  Seq w = to_ranks(full, witness);
  if (static_cast<long long>(witness.size()) > enc.budget)
    throw DomainError("witness exceeds the encoded budget");
  for (const auto& p : enc.permutations)
    if (!is_supersequence(w, to_ranks(full, p)))
      throw DomainError("witness is not a common supersequence of the encoded permutations");

  // Smallest suffix containing Y as a subsequence: match yN..y1 right to left.
  std::size_t split = witness.size();
  for (auto it = enc.separators.rbegin(); it != enc.separators.rend(); ++it) {
    std::size_t j = split;
    while (j > 0 && witness[j - 1] != *it) --j;
    if (j == 0)
      throw DomainError("witness does not contain the separator block as a subsequence");
    split = j - 1;
  }

  std::set<std::string> separators(enc.separators.begin(), enc.separators.end());
  DecodedWitness out;
  out.split = split;
  out.suffix_len = witness.size() - split;
  for (std::size_t i = 0; i < split; ++i)
    if (!separators.count(witness[i])) out.witness.push_back(witness[i]);

  for (const auto& s : inst.strings) {
    Seq t = to_ranks(full, out.witness);
    if (!is_supersequence(t, to_ranks(full, s)))
      throw StructuralError("decoded witness is not a common supersequence of the instance");
  }
  if (static_cast<long long>(out.witness.size()) > inst.budget)
    throw StructuralError(
        "decoded witness exceeds the budget; a character occurs in every input string, which "
        "the reduction requires to be absent");
  if (!inst.has_universal_character() &&
      out.suffix_len < enc.separators.size() + enc.base.size())
    throw StructuralError("minimal suffix is shorter than |Y| + |X|");
  return out;
}

EquivalenceReport verify_equivalence(const TwoScsInstance& inst, const ScsOptions& opts) {
  inst.validate();
  PermutationScsInstance enc = encode_2scs(inst);
  TaxonSet x = TaxonSet::from_names(inst.alphabet);
  TaxonSet full = TaxonSet::from_names(enc.full_alphabet());

  std::vector<Seq> left_strings;
  for (const auto& s : inst.strings) left_strings.push_back(to_ranks(x, s));
  std::vector<Seq> right_strings;
  for (const auto& p : enc.permutations) right_strings.push_back(to_ranks(full, p));

  EquivalenceReport report;
  report.scs_len = scs_length(left_strings, x.size(), opts);
  report.encoded_scs_len = scs_length(right_strings, full.size(), opts);
  report.left = report.scs_len <= inst.budget;
  report.right = report.encoded_scs_len <= enc.budget;
  report.agree = report.left == report.right;

  if (report.left) {
    Seq t = exact_scs(left_strings, x.size(), opts);
    std::vector<std::string> forward = forward_witness(inst, x.seq_names(t));
    if (static_cast<long long>(forward.size()) > enc.budget)
      throw StructuralError("forward witness exceeds the encoded budget");
    report.witnesses_checked = true;
  }
  // Decoding is only guaranteed to land within budget when no character
  // occurs in every string; without that the sides can genuinely disagree.
  if (report.right && !inst.has_universal_character()) {
    Seq t = exact_scs(right_strings, full.size(), opts);
    decode_witness(inst, enc, full.seq_names(t));
    report.witnesses_checked = true;
  }
  return report;
}

HardnessInstance end_to_end_tcn_instance(const TwoScsInstance& inst,
                                         const std::string& reserved) {
  PermutationScsInstance enc = encode_2scs(inst);
  for (const std::string& name : enc.full_alphabet())
    if (name == reserved)
      throw DomainError("reserved taxon '" + reserved + "' collides with the encoded alphabet");

  HardnessInstance out;
  out.reserved = reserved;
  for (const auto& p : enc.permutations)
    out.trees.push_back(line_tree_from_permutation(p, reserved));
  out.target = enc.budget - static_cast<long long>(enc.full_alphabet().size());
  return out;
}

}  // namespace tcnkit
