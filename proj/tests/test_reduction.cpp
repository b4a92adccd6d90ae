#include <doctest.h>

#include "helpers.hpp"
#include "tcnkit/errors.hpp"
#include "tcnkit/reduction.hpp"
#include "tcnkit/scs.hpp"
#include "tcnkit/solver.hpp"

using namespace tcnkit;
using testing::name_vec;

namespace {

TwoScsInstance make(const std::vector<std::string>& alphabet,
                    const std::vector<std::string>& strings, long long k) {
  TwoScsInstance inst;
  inst.alphabet = alphabet;
  for (const std::string& s : strings) inst.strings.push_back(name_vec(s));
  inst.budget = k;
  return inst;
}

}  // namespace

TEST_SUITE_BEGIN("reduction");

TEST_CASE("encoding the two-permutation instance") {
  TwoScsInstance inst = make({"x1", "x2"}, {}, 3);
  inst.strings = {{"x1", "x2"}, {"x2", "x1"}};
  PermutationScsInstance enc = encode_2scs(inst);
  CHECK(enc.separators.size() == 6);  // N = n + k + 1
  CHECK(enc.budget == 11);            // k' = k + N + n
  REQUIRE(enc.permutations.size() == 2);
  std::vector<std::string> expect1{"x1", "x2", "y1", "y2", "y3", "y4", "y5", "y6"};
  std::vector<std::string> expect2{"x2", "x1", "y1", "y2", "y3", "y4", "y5", "y6"};
  CHECK(enc.permutations[0] == expect1);
  CHECK(enc.permutations[1] == expect2);
}

TEST_CASE("encoding pads with the remaining alphabet") {
  TwoScsInstance inst = make({"a", "b", "c"}, {"ab"}, 0);
  PermutationScsInstance enc = encode_2scs(inst);
  CHECK(enc.separators.size() == 4);
  std::vector<std::string> expect{"a", "b", "y1", "y2", "y3", "y4", "c"};
  CHECK(enc.permutations == std::vector<std::vector<std::string>>{expect});
}

TEST_CASE("encoded strings are genuine permutations of the full alphabet") {
  TwoScsInstance inst = make({"a", "b", "c", "d"}, {"ab", "cd", "bc"}, 2);
  PermutationScsInstance enc = encode_2scs(inst);
  std::vector<std::string> full = enc.full_alphabet();
  std::sort(full.begin(), full.end());
  for (const auto& p : enc.permutations) {
    std::vector<std::string> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == full);
  }
}

TEST_CASE("encoding validation") {
  CHECK_THROWS_AS(encode_2scs(make({"a", "b"}, {"aa"}, 1)), DomainError);
  CHECK_THROWS_AS(encode_2scs(make({"a", "b"}, {}, 1)), DomainError);
  CHECK_THROWS_AS(encode_2scs(make({"a", "b"}, {"ab"}, -1)), DomainError);
  TwoScsInstance collide = make({"a", "y1"}, {}, 0);
  collide.strings = {{"a", "y1"}};
  CHECK_THROWS_WITH_AS(encode_2scs(collide), doctest::Contains("collides"), DomainError);
}

TEST_CASE("forward witness") {
  TwoScsInstance inst = make({"x1", "x2"}, {}, 3);
  inst.strings = {{"x1", "x2"}, {"x2", "x1"}};
  std::vector<std::string> witness{"x1", "x2", "x1"};
  std::vector<std::string> forward = forward_witness(inst, witness);
  CHECK(forward.size() == 11);

  TwoScsInstance single = make({"a", "b"}, {"ab"}, 2);
  std::vector<std::string> fw = forward_witness(single, name_vec("ab"));
  std::vector<std::string> expect{"a", "b", "y1", "y2", "y3", "y4", "y5", "a", "b"};
  CHECK(fw == expect);

  CHECK_THROWS_AS(forward_witness(inst, {"x1", "x2"}), DomainError);     // misses x2x1
  CHECK_THROWS_AS(forward_witness(single, name_vec("abab")), DomainError);  // over budget
}

TEST_CASE("decode inverts forward") {
  TwoScsInstance inst = make({"x1", "x2"}, {}, 3);
  inst.strings = {{"x1", "x2"}, {"x2", "x1"}};
  PermutationScsInstance enc = encode_2scs(inst);
  std::vector<std::string> witness{"x1", "x2", "x1"};
  DecodedWitness decoded = decode_witness(inst, enc, forward_witness(inst, witness));
  CHECK(decoded.witness == witness);
  CHECK(decoded.witness.size() <= 3);
  CHECK(decoded.suffix_len >= enc.separators.size() + enc.base.size());
}

TEST_CASE("decoding an encoded permutation itself") {
  TwoScsInstance inst = make({"a", "b"}, {"ab"}, 2);
  PermutationScsInstance enc = encode_2scs(inst);
  DecodedWitness decoded = decode_witness(inst, enc, enc.permutations[0]);
  CHECK(decoded.witness == name_vec("ab"));
  // the instance has universal characters, so only the separator block sits
  // in the minimal suffix here
  CHECK(decoded.suffix_len == enc.separators.size());
}

TEST_CASE("decode rejects non-witnesses") {
  TwoScsInstance inst = make({"a", "b"}, {"ab"}, 2);
  PermutationScsInstance enc = encode_2scs(inst);
  CHECK_THROWS_AS(decode_witness(inst, enc, name_vec("ab")), DomainError);  // too short for Y
  std::vector<std::string> too_long = enc.permutations[0];
  too_long.insert(too_long.end(), {"a", "b", "a"});
  CHECK_THROWS_AS(decode_witness(inst, enc, too_long), DomainError);  // over k'
}

TEST_CASE("equivalence on the swapped two-permutation instance") {
  TwoScsInstance inst = make({"x1", "x2"}, {}, 3);
  inst.strings = {{"x1", "x2"}, {"x2", "x1"}};
  EquivalenceReport report = verify_equivalence(inst);
  CHECK(report.scs_len == 3);
  CHECK(report.left);
  CHECK(report.right);
  CHECK(report.agree);
  CHECK(report.witnesses_checked);
}

TEST_CASE("the no-universal-character constraint is load-bearing") {
  // x1 and x2 each occur in every string; at k = 2 the encoded side is
  // satisfiable (SCS 8 <= k' = 9) while the source side is not (3 > 2), so
  // the equivalence genuinely needs the constraint.
  TwoScsInstance inst = make({"x1", "x2"}, {}, 2);
  inst.strings = {{"x1", "x2"}, {"x2", "x1"}};
  CHECK(inst.has_universal_character());
  EquivalenceReport report = verify_equivalence(inst);
  CHECK(report.scs_len == 3);
  CHECK(report.encoded_scs_len == 8);
  CHECK_FALSE(report.left);
  CHECK(report.right);
  CHECK_FALSE(report.agree);
}

TEST_CASE("equivalence on a constraint-satisfying instance for every budget") {
  for (long long k = 0; k <= 5; ++k) {
    TwoScsInstance inst = make({"a", "b", "c"}, {"ab", "bc", "ca"}, k);
    CHECK_FALSE(inst.has_universal_character());
    EquivalenceReport report = verify_equivalence(inst);
    CHECK(report.scs_len == 4);
    CHECK(report.agree);
    CHECK(report.left == (k >= 4));
  }
}

TEST_CASE("singleton instance agrees at its budget") {
  TwoScsInstance inst = make({"a", "b"}, {"ab"}, 2);
  EquivalenceReport report = verify_equivalence(inst);
  CHECK(report.left);
  CHECK(report.right);
  CHECK(report.agree);
}

TEST_CASE("end-to-end hardness instance") {
  TwoScsInstance inst = make({"a", "b"}, {"ab"}, 2);
  HardnessInstance hard = end_to_end_tcn_instance(inst);
  CHECK(hard.trees.size() == 1);
  CHECK(hard.target == 2);  // k' - |X u Y| = 9 - 7
  CHECK(hard.trees[0].leaf_names().size() == 8);
  SolveReport solved = solve_line_trees_fast(hard.trees, hard.reserved);
  bool tcn_side = solved.hn <= hard.target;
  bool scs_side = scs_length({testing::cseq("ab")}, 2) <= inst.budget;
  CHECK(tcn_side == scs_side);
}

TEST_CASE("end-to-end agreement on a constraint-satisfying instance") {
  for (long long k = 0; k <= 5; ++k) {
    TwoScsInstance inst = make({"a", "b", "c"}, {"ab", "bc", "ca"}, k);
    HardnessInstance hard = end_to_end_tcn_instance(inst);
    SolveReport solved = solve_line_trees_fast(hard.trees, hard.reserved);
    bool tcn_side = solved.hn <= hard.target;
    bool scs_side = (k >= 4);  // SCS of {ab, bc, ca} has length 4
    CHECK(tcn_side == scs_side);
  }
}

TEST_CASE("empty instances are rejected") {
  TwoScsInstance inst = make({"a", "b"}, {}, 2);
  CHECK_THROWS_AS(end_to_end_tcn_instance(inst), DomainError);
  CHECK_THROWS_AS(verify_equivalence(inst), DomainError);
}

TEST_SUITE_END();
