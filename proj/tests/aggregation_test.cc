// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "mmcoreset/aggregation.h"

#include <random>

#include "gtest/gtest.h"
#include "test_util.h"

namespace mmcoreset {
namespace {

using testing::ErrorCodeOf;

MultimodalDataset TwoSingleTokenModalities() {
  return MultimodalDataset({EmbeddingTensor("a", 1, 1, 2, {1, 2}),
                            EmbeddingTensor("b", 1, 1, 2, {3, 4})});
}

TEST(AggregationTest, WorkedExample) {
  const MultimodalDataset dataset = TwoSingleTokenModalities();
  const FeatureMatrix concat = Aggregate(dataset, AggregationStrategy::kConcat);
  const FeatureMatrix mean = Aggregate(dataset, AggregationStrategy::kMean);
  const FeatureMatrix sum = Aggregate(dataset, AggregationStrategy::kSum);
  EXPECT_EQ(std::vector<double>(concat.values().begin(), concat.values().end()),
            (std::vector<double>{1, 2, 3, 4}));
  EXPECT_EQ(std::vector<double>(mean.values().begin(), mean.values().end()),
            (std::vector<double>{2, 3}));
  EXPECT_EQ(std::vector<double>(sum.values().begin(), sum.values().end()),
            (std::vector<double>{4, 6}));
  EXPECT_EQ(concat.provenance(), "concat");
}

TEST(AggregationTest, ConcatWidthIsSumOfTokenBlocks) {
  std::mt19937_64 rng(3);
  const MultimodalDataset dataset(
      {EmbeddingTensor("rgb", 2, 196, 768, testing::UniformValues(2 * 196 * 768, rng)),
       EmbeddingTensor("semseg", 2, 197, 768,
                       testing::UniformValues(2 * 197 * 768, rng))});
  EXPECT_EQ(Aggregate(dataset, AggregationStrategy::kConcat).d(), 301824u);
  EXPECT_EQ(Aggregate(dataset, AggregationStrategy::kMean).d(), 768u);
  EXPECT_EQ(Aggregate(dataset, AggregationStrategy::kSum).d(), 768u);
}

TEST(AggregationTest, ConcatAllowsMixedWidthsButPoolingDoesNot) {
  const MultimodalDataset dataset({EmbeddingTensor("a", 2, 1, 2, {1, 2, 3, 4}),
                                   EmbeddingTensor("b", 2, 2, 1, {5, 6, 7, 8})});
  const FeatureMatrix concat = Aggregate(dataset, AggregationStrategy::kConcat);
  EXPECT_EQ(concat.d(), 4u);
  EXPECT_EQ(std::vector<double>(concat.row(1).begin(), concat.row(1).end()),
            (std::vector<double>{3, 4, 7, 8}));
  EXPECT_EQ(ErrorCodeOf([&] { Aggregate(dataset, AggregationStrategy::kMean); }),
            ErrorCode::kDimension);
  EXPECT_EQ(ErrorCodeOf([&] { Aggregate(dataset, AggregationStrategy::kSum); }),
            ErrorCode::kDimension);
}

TEST(AggregationTest, MeanTimesTokenCountEqualsSum) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 1 + rng() % 6, d = 1 + rng() % 5;
    const std::size_t t1 = 1 + rng() % 4, t2 = 1 + rng() % 4;
    const MultimodalDataset dataset(
        {EmbeddingTensor("a", n, t1, d, testing::UniformValues(n * t1 * d, rng)),
         EmbeddingTensor("b", n, t2, d, testing::UniformValues(n * t2 * d, rng))});
    const FeatureMatrix mean = Aggregate(dataset, AggregationStrategy::kMean);
    const FeatureMatrix sum = Aggregate(dataset, AggregationStrategy::kSum);
    const double tokens = static_cast<double>(t1 + t2);
    for (std::size_t i = 0; i < mean.values().size(); ++i) {
      EXPECT_NEAR(mean.values()[i] * tokens, sum.values()[i],
                  1e-12 * (1.0 + std::abs(sum.values()[i])));
    }
  }
}

TEST(AggregationTest, ModalityOrderPermutesConcatBlocksOnly) {
  // Integer-valued tokens keep the pooled sums exact in any order.
  const EmbeddingTensor a("a", 2, 2, 2, {1, 2, 3, 4, 5, 6, 7, 8});
  const EmbeddingTensor b("b", 2, 1, 2, {9, 10, 11, 12});
  const MultimodalDataset ab({a, b});
  const MultimodalDataset ba({b, a});
  for (auto s : {AggregationStrategy::kMean, AggregationStrategy::kSum}) {
    EXPECT_EQ(Aggregate(ab, s).values().size(), Aggregate(ba, s).values().size());
    const FeatureMatrix x = Aggregate(ab, s);
    const FeatureMatrix y = Aggregate(ba, s);
    EXPECT_TRUE(std::equal(x.values().begin(), x.values().end(), y.values().begin()));
  }
  const FeatureMatrix cab = Aggregate(ab, AggregationStrategy::kConcat);
  const FeatureMatrix cba = Aggregate(ba, AggregationStrategy::kConcat);
  for (std::size_t i = 0; i < 2; ++i) {
    auto r1 = cab.row(i);
    auto r2 = cba.row(i);
    // ab = [a(4) | b(2)], ba = [b(2) | a(4)].
    EXPECT_TRUE(std::equal(r1.begin(), r1.begin() + 4, r2.begin() + 2));
    EXPECT_TRUE(std::equal(r1.begin() + 4, r1.end(), r2.begin()));
  }
}

TEST(AggregationTest, ParsesStrategyNames) {
  EXPECT_EQ(ParseAggregation("concat"), AggregationStrategy::kConcat);
  EXPECT_EQ(ParseAggregation("mean"), AggregationStrategy::kMean);
  EXPECT_EQ(ParseAggregation("sum"), AggregationStrategy::kSum);
  EXPECT_FALSE(ParseAggregation("max").has_value());
}

}  // namespace
}  // namespace mmcoreset
