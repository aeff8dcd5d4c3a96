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
#include "mmcoreset/metrics.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "gtest/gtest.h"
#include "oracles.h"
#include "test_util.h"

namespace mmcoreset {
namespace {

using testing::ErrorCodeOf;
using Indices = std::vector<std::size_t>;

TEST(MetricsTest, QuantizationErrorFixtures) {
  const FeatureMatrix three = testing::Line({0, 1, 2});
  EXPECT_NEAR(QuantizationError(three, Indices{0}), 5.0 / 3.0, 1e-12);
  EXPECT_EQ(QuantizationError(three, Indices{0, 1, 2}), 0.0);
  const FeatureMatrix four = testing::Line({0, 1, 2, 10});
  EXPECT_NEAR(QuantizationError(four, Indices{2}), 69.0 / 4.0, 1e-12);
  EXPECT_EQ(ErrorCodeOf([&] { QuantizationError(four, Indices{}); }), ErrorCode::kEmpty);
  EXPECT_EQ(ErrorCodeOf([&] { QuantizationError(four, Indices{4}); }), ErrorCode::kIndex);
}

TEST(MetricsTest, DiversityFixtures) {
  const FeatureMatrix f = testing::Line({0, 1, 2, 3});
  EXPECT_EQ(Diversity(f, Indices{2}), 0.0);
  EXPECT_EQ(Diversity(f, Indices{0, 2}), 4.0);
  EXPECT_NEAR(Diversity(f, Indices{0, 1, 3}), 14.0 / 3.0, 1e-12);
}

TEST(MetricsTest, MatchBruteForceAndIgnoreOrder) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 40, d = 1 + rng() % 5;
    const FeatureMatrix f = testing::RandomFeatures(n, d, rng);
    Indices all(n);
    std::iota(all.begin(), all.end(), std::size_t{0});
    std::shuffle(all.begin(), all.end(), rng);
    Indices coreset(all.begin(), all.begin() + 1 + rng() % n);
    const auto points = testing::ToPoints(f);
    std::sort(coreset.begin(), coreset.end());
    const double qe = QuantizationError(f, coreset);
    const double div = Diversity(f, coreset);
    EXPECT_NEAR(qe, oracle::QuantizationError(points, coreset), 1e-12);
    EXPECT_NEAR(div, oracle::Diversity(points, coreset), 1e-12);
    std::shuffle(coreset.begin(), coreset.end(), rng);
    EXPECT_EQ(QuantizationError(f, coreset), qe);
    EXPECT_EQ(Diversity(f, coreset), div);
  }
}

TEST(MetricsTest, QuantizationErrorNonIncreasingUnderEnlargement) {
  std::mt19937_64 rng(1);
  const FeatureMatrix f = testing::RandomFeatures(50, 3, rng);
  Indices order(50);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);
  double previous = 1e300;
  for (std::size_t size = 1; size <= 50; ++size) {
    const double qe = QuantizationError(f, Indices(order.begin(), order.begin() + size));
    EXPECT_LE(qe, previous);
    previous = qe;
  }
  EXPECT_EQ(previous, 0.0);
}

}  // namespace
}  // namespace mmcoreset
