#include <doctest.h>

#include "helpers.hpp"
#include "tcnkit/errors.hpp"
#include "tcnkit/scs.hpp"

using namespace tcnkit;
using testing::cseq;

TEST_SUITE_BEGIN("scs");

TEST_CASE("is_supersequence") {
  CHECK(is_supersequence(cseq("ecadebced"), cseq("eadbc")));
  CHECK(is_supersequence(cseq("abc"), cseq("")));
  CHECK_FALSE(is_supersequence(cseq("ab"), cseq("ba")));
  CHECK(is_supersequence(cseq("ab"), cseq("ab")));
  CHECK_FALSE(is_supersequence(cseq(""), cseq("a")));
}

TEST_CASE("exact_scs single string is itself") {
  CHECK(exact_scs({cseq("edb")}, 5) == cseq("edb"));
}

TEST_CASE("exact_scs worked row") {
  // symbols c<d<e<l as 0<1<2<3: dc={1,0}, el={2,3}, l={3}
  std::vector<Seq> row{{1, 0}, {2, 3}, {3}};
  Seq got = exact_scs(row, 4);
  CHECK(got.size() == 4);
  for (const Seq& s : row) CHECK(is_supersequence(got, s));
  CHECK(got == Seq{1, 0, 2, 3});  // lexicographically smallest of the minimal solutions
}

TEST_CASE("exact_scs and oracle on a conflicting pair") {
  CHECK(scs_length({cseq("ab"), cseq("ba")}, 2) == 3);
  auto witness = exhaustive_scs_oracle({cseq("ab"), cseq("ba")}, 2, 3);
  REQUIRE(witness.has_value());
  CHECK(*witness == cseq("aba"));  // first in enumeration order
}

TEST_CASE("scs_length basics") {
  CHECK(scs_length({cseq("eb"), cseq("cb"), cseq("cb")}, 5) == 3);
  CHECK(scs_length({cseq(""), cseq(""), cseq("")}, 3) == 0);
  CHECK(scs_length({}, 3) == 0);
}

TEST_CASE("worked permutations have a length-9 SCS") {
  std::vector<Seq> perms{cseq("eadbc"), cseq("caebd"), cseq("cabed")};
  long long len = scs_length(perms, 5);
  CHECK(is_supersequence(cseq("ecadebced"), perms[0]));
  CHECK(is_supersequence(cseq("ecadebced"), perms[1]));
  CHECK(is_supersequence(cseq("ecadebced"), perms[2]));
  CHECK(len == 9);
  // independent confirmation that no length-8 witness exists
  CHECK_FALSE(exhaustive_scs_oracle(perms, 5, 8).has_value());
}

TEST_CASE("majority_merge") {
  CHECK(majority_merge({cseq("ab")}, 2) == cseq("ab"));
  CHECK(majority_merge({cseq("ab"), cseq("ba")}, 2) == cseq("aba"));
  std::vector<Seq> row{{1, 0}, {2, 3}, {3}};
  Seq merged = majority_merge(row, 4);
  CHECK(merged.size() >= 4);
  for (const Seq& s : row) CHECK(is_supersequence(merged, s));
}

TEST_CASE("oracle refuses impossible lengths") {
  CHECK_FALSE(exhaustive_scs_oracle({cseq("abc")}, 3, 2).has_value());
  auto w = exhaustive_scs_oracle({{1, 0}, {2, 3}, {3}}, 4, 4);
  REQUIRE(w.has_value());
  CHECK(w->size() == 4);
}

TEST_CASE("state budget is enforced") {
  ScsOptions tiny;
  tiny.state_budget = 8;
  CHECK_THROWS_AS(exact_scs({cseq("abc"), cseq("cba")}, 3, tiny), CapacityError);
}

TEST_CASE("symbols outside the alphabet are rejected") {
  CHECK_THROWS_AS(exact_scs({cseq("abc")}, 2), DomainError);
  CHECK_THROWS_AS(majority_merge({cseq("c")}, 2), DomainError);
}

namespace {

std::vector<Seq> all_strings(int alphabet, int max_len) {
  std::vector<Seq> out{{}};
  std::size_t begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (int c = 0; c < alphabet; ++c) {
        Seq next = out[i];
        next.push_back(c);
        out.push_back(std::move(next));
      }
    begin = end;
  }
  return out;
}

}  // namespace

TEST_CASE("exact matches the oracle on a literal grid") {
  // alphabet 2, up to 3 strings of length <= 3, fully literal
  std::vector<Seq> pool = all_strings(2, 3);
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i; j < pool.size(); ++j)
      for (std::size_t k = j; k < pool.size(); ++k) {
        std::vector<Seq> input{pool[i], pool[j], pool[k]};
        long long len = scs_length(input, 2);
        auto witness = exhaustive_scs_oracle(input, 2, static_cast<int>(len));
        REQUIRE(witness.has_value());
        CHECK(static_cast<long long>(witness->size()) == len);
        if (len > 0) CHECK_FALSE(exhaustive_scs_oracle(input, 2, static_cast<int>(len) - 1));
      }
}

TEST_CASE("output properties on random instances") {
  std::uint64_t state = 12345;
  auto rng = [&]() { return state = state * 6364136223846793005ULL + 1442695040888963407ULL; };
  for (int trial = 0; trial < 200; ++trial) {
    int alphabet = 2 + static_cast<int>(rng() % 3);
    int count = 1 + static_cast<int>(rng() % 3);
    std::vector<Seq> input;
    std::size_t max_len = 0, distinct = 0;
    std::vector<char> used(static_cast<std::size_t>(alphabet), 0);
    for (int s = 0; s < count; ++s) {
      Seq str;
      int len = static_cast<int>(rng() % 5);
      for (int i = 0; i < len; ++i) {
        int c = static_cast<int>(rng() % static_cast<std::uint64_t>(alphabet));
        str.push_back(c);
        used[static_cast<std::size_t>(c)] = 1;
      }
      max_len = std::max(max_len, str.size());
      input.push_back(std::move(str));
    }
    for (char u : used) distinct += static_cast<std::size_t>(u);

    Seq best = exact_scs(input, alphabet);
    Seq merged = majority_merge(input, alphabet);
    for (const Seq& s : input) {
      CHECK(is_supersequence(best, s));
      CHECK(is_supersequence(merged, s));
    }
    CHECK(best.size() <= merged.size());
    CHECK(best.size() >= max_len);
    CHECK(best.size() >= distinct);
    CHECK(static_cast<long long>(best.size()) == scs_length(input, alphabet));
  }
}

TEST_CASE("permutation inputs stay within the sandwich bound") {
  std::vector<Seq> perms{cseq("abcd"), cseq("dcba"), cseq("badc")};
  long long len = scs_length(perms, 4);
  CHECK(len >= 4);
  CHECK(len <= 12);
  CHECK(len == static_cast<long long>(exact_scs(perms, 4).size()));
}

TEST_SUITE_END();
