#include <gtest/gtest.h>

#include "corpus.hpp"

TEST(ExpansionProperty, RoundTripOnGeneratedMonomials) {
  for (std::uint64_t seed : {1u, 2u}) {
    corpus::Summary s = corpus::expansion_roundtrip(seed, 500);
    EXPECT_TRUE(s.ok()) << s.failure;
    EXPECT_EQ(s.undecided, 0u);
    EXPECT_EQ(s.stuck, 0u);
  }
}

TEST(TreeProperty, LawsOnGeneratedNumbers) {
  corpus::TreeSummary s = corpus::tree_laws(5, 300);
  EXPECT_TRUE(s.ok()) << s.failure;
  EXPECT_LE(s.max_height, 6u);
}

TEST(ParserProperty, GeneratedCorpusFixpoint) {
  corpus::Summary s = corpus::print_parse(6, 1000);
  EXPECT_TRUE(s.ok()) << s.failure;
}
