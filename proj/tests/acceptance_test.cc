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
// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli_runner.h"
#include "mmcoreset/aggregation.h"
#include "mmcoreset/metrics.h"
#include "mmcoreset/pipeline.h"
#include "mmcoreset/reduction.h"
#include "mmcoreset/sampler.h"
#include "mmcoreset/selector.h"
#include "oracles.h"
#include "test_util.h"

namespace mmcoreset {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void Check(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

struct RandomInstance {
  FeatureMatrix features;
  std::size_t num_bins;
};

// The 100 seeded instances shared by criteria 1 and 3.
std::vector<RandomInstance> OracleInstances() {
  std::vector<RandomInstance> out;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(seed);
    const std::size_t n = 8 + rng() % 57;
    const std::size_t d = 1 + rng() % 8;
    const std::size_t bins = 1 + rng() % n;
    out.push_back({testing::RandomFeatures(n, d, rng), bins});
  }
  return out;
}

Outcome OracleEquivalence() {
  Outcome o;
  const auto start = Clock::now();
  for (const RandomInstance& inst : OracleInstances()) {
    const auto expected = oracle::Select(testing::ToPoints(inst.features), inst.num_bins);
    const BinPartition got =
        SelectBins(inst.features, {inst.num_bins, SelectionMode::kAccelerated, 0});
    o.Check(got.bins == expected.bins,
            "partition differs for n=" + std::to_string(inst.features.n()));
  }
  const double elapsed = Seconds(start);
  o.Check(elapsed < 60.0, "took " + std::to_string(elapsed) + " s");
  if (o.pass) o.detail = "100 instances identical in " + std::to_string(elapsed) + " s";
  return o;
}

Outcome WorkedFixture() {
  Outcome o;
  const FeatureMatrix f = testing::Line({0, 1, 2, 10});
  std::vector<double> totals;
  const BinPartition p =
      SelectBins(f, {2, SelectionMode::kAccelerated, 1}, [&](const SelectionStep& s) {
        if (s.bin == 0 && s.step == 0) {
          for (std::size_t x = 0; x < 4; ++x) totals.push_back(s.state->total(x));
        }
      });
  o.Check(p.bins == std::vector<std::vector<std::size_t>>{{2, 1}, {0, 3}},
          "partition is not [[2,1],[0,3]]");
  o.Check(std::abs(p.gains[0][0] - (-69.0)) <= 1e-12, "first gain != -69");
  o.Check(std::abs(p.gains[0][1] - (-81.0)) <= 1e-12, "second gain != -81");
  const std::vector<double> expected_t = {105, 83, 69, 245};
  for (std::size_t x = 0; x < 4; ++x) {
    o.Check(std::abs(totals.at(x) - expected_t[x]) <= 1e-12,
            "T(" + std::to_string(x) + ") mismatch");
  }
  if (o.pass) o.detail = "[[2,1],[0,3]], gains -69/-81, T 105/83/69/245";
  return o;
}

Outcome GainIdentity() {
  Outcome o;
  std::size_t checks = 0;
  double worst = 0.0;
  for (const RandomInstance& inst : OracleInstances()) {
    const auto points = testing::ToPoints(inst.features);
    SelectBins(inst.features, {inst.num_bins, SelectionMode::kAccelerated, 1},
               [&](const SelectionStep& s) {
                 const std::vector<std::size_t> pool(s.pool.begin(), s.pool.end());
                 const std::vector<std::size_t> bin(s.current_bin.begin(),
                                                    s.current_bin.end());
                 for (std::size_t x : s.candidates) {
                   const double direct = oracle::Gain(points, bin, pool, x);
                   const double incremental =
                       2.0 * s.state->accumulated(x) - s.state->total(x);
                   const double ratio =
                       std::abs(incremental - direct) / (1.0 + std::abs(direct));
                   worst = std::max(worst, ratio);
                   o.Check(ratio <= 1e-9, "gain identity violated");
                   ++checks;
                 }
               });
  }
  if (o.pass) {
    std::ostringstream s;
    s << checks << " candidate checks, worst relative deviation " << worst;
    o.detail = s.str();
  }
  return o;
}

Outcome PartitionSweep() {
  Outcome o;
  std::mt19937_64 rng(4);
  std::size_t cases = 0;
  for (std::size_t n = 1; n <= 50; ++n) {
    const FeatureMatrix f = testing::RandomFeatures(n, 2, rng);
    for (std::size_t bins = 1; bins <= n; ++bins) {
      const BinPartition p = SelectBins(f, {bins, SelectionMode::kAccelerated, 1});
      std::vector<int> seen(n, 0);
      bool sizes_ok = p.bins.size() == bins;
      for (std::size_t k = 0; k < p.bins.size(); ++k) {
        const std::size_t want = k < n % bins ? (n + bins - 1) / bins : n / bins;
        sizes_ok = sizes_ok && p.bins[k].size() == want;
        for (std::size_t x : p.bins[k]) ++seen[x];
      }
      const bool exact_cover =
          std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
      o.Check(sizes_ok && exact_cover, "n=" + std::to_string(n) + " N=" + std::to_string(bins));
      ++cases;
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " (n, N) pairs";
  return o;
}

double OrthonormalityError(const PcaModel& m) {
  double worst = 0.0;
  for (std::size_t a = 0; a < m.k; ++a) {
    for (std::size_t b = 0; b < m.k; ++b) {
      double dot = 0.0;
      for (std::size_t j = 0; j < m.d; ++j) dot += m.component(a)[j] * m.component(b)[j];
      worst = std::max(worst, std::abs(dot - (a == b ? 1.0 : 0.0)));
    }
  }
  return worst;
}

Outcome Pca() {
  Outcome o;
  const PcaModel line = FitPca(FeatureMatrix(3, 2, {-1, -1, 0, 0, 1, 1}, "line"), 1);
  o.Check(std::abs(line.component(0)[0] - 0.70711) <= 1e-5 &&
              std::abs(line.component(0)[0] - std::sqrt(0.5)) <= 1e-6 &&
              std::abs(line.component(0)[1] - std::sqrt(0.5)) <= 1e-6,
          "line component");
  o.Check(std::abs(line.explained_variance[0] - 2.0) <= 1e-6, "line variance");

  std::mt19937_64 rng(55);
  double worst_ortho = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng() % 40, d = 1 + rng() % 60;
    const FeatureMatrix f = testing::RandomFeatures(n, d, rng);
    const PcaModel m = FitPca(f, 1 + rng() % std::min(n - 1, d));
    worst_ortho = std::max(worst_ortho, OrthonormalityError(m));
  }
  o.Check(worst_ortho <= 1e-8, "orthonormality " + std::to_string(worst_ortho));

  double worst_route = 0.0;
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = 1 + rng() % 16, n = 16 + rng() % 48;
    const FeatureMatrix f = testing::RandomFeatures(n, d, rng);
    const std::size_t k = 1 + rng() % d;
    PcaOptions cov, gram;
    cov.route = PcaRoute::kCovariance;
    gram.route = PcaRoute::kGram;
    const PcaModel a = FitPca(f, k, cov);
    const PcaModel b = FitPca(f, k, gram);
    for (std::size_t i = 0; i < a.components.size(); ++i) {
      worst_route = std::max(worst_route, std::abs(a.components[i] - b.components[i]));
    }
  }
  o.Check(worst_route <= 1e-6, "Gram vs covariance " + std::to_string(worst_route));
  if (o.pass) {
    std::ostringstream s;
    s << "line ok; orthonormality " << worst_ortho << "; route gap " << worst_route;
    o.detail = s.str();
  }
  return o;
}

Outcome AggregationDims() {
  Outcome o;
  std::mt19937_64 rng(6);
  const MultimodalDataset dataset(
      {EmbeddingTensor("rgb", 2, 196, 768, testing::UniformValues(2 * 196 * 768, rng)),
       EmbeddingTensor("semseg", 2, 197, 768, testing::UniformValues(2 * 197 * 768, rng))});
  const std::size_t concat = Aggregate(dataset, AggregationStrategy::kConcat).d();
  const std::size_t mean = Aggregate(dataset, AggregationStrategy::kMean).d();
  const std::size_t sum = Aggregate(dataset, AggregationStrategy::kSum).d();
  o.Check(concat == 301824, "concat width " + std::to_string(concat));
  o.Check(mean == 768 && sum == 768, "mean/sum width");
  if (o.pass) o.detail = "concat 301824, mean 768, sum 768";
  return o;
}

Outcome Sampler() {
  Outcome o;
  const std::vector<std::size_t> even = {5, 5, 5, 5};
  const std::vector<std::size_t> uneven = {6, 5, 5, 4};
  o.Check(Quotas(even, 0.2) == std::vector<std::size_t>{1, 1, 1, 1}, "quotas [5,5,5,5]");
  o.Check(Quotas(uneven, 0.2) == std::vector<std::size_t>{1, 1, 1, 1}, "quotas [6,5,5,4]");
  std::uint64_t state = 0;
  const std::uint64_t reference = oracle::SplitMix64Next(state);
  o.Check(reference == 0xE220A8397B1DCDAFULL, "reference SplitMix64 constant");
  o.Check(SplitMix64(0).Next() == reference, "SplitMix64 first output");

  std::mt19937_64 rng(8);
  for (std::size_t n = 1; n <= 200; ++n) {
    const FeatureMatrix f = testing::RandomFeatures(n, 2, rng);
    const BinPartition p =
        SelectBins(f, {std::min<std::size_t>(20, n), SelectionMode::kAccelerated, 1});
    const Coreset c = SampleCoreset(p, 0.2, n);
    o.Check(c.indices.size() == oracle::FifthRoundedHalfUp(n),
            "size mismatch at n=" + std::to_string(n));
  }
  if (o.pass) o.detail = "quotas, SplitMix64(0)=0xE220A8397B1DCDAF, sizes n=1..200";
  return o;
}

Outcome EndToEnd() {
  using testing::Quote;
  using testing::ReadText;
  using testing::RunCli;
  Outcome o;
  testing::TempDir dir("acceptance");
  testing::WriteSyntheticDataset(dir.path(), 40, {{"rgb", 4, 6}, {"semseg", 3, 6}}, 99);
  testing::WriteText(dir / "config.json",
                     R"({"manifest": "manifest.json", "aggregation": "concat",
                         "reduction": {"kind": "pca", "k": 4}, "num_bins": 4,
                         "fraction": 0.25, "seed": 7, "mode": "accelerated"})");
  auto p = [&](const std::string& name) { return Quote((dir / name).string()); };
  const std::string cfg = " --config " + p("config.json");

  o.Check(RunCli("pipeline" + cfg + " --out " + p("run1")) == 0, "pipeline run 1");
  o.Check(RunCli("pipeline" + cfg + " --out " + p("run2")) == 0, "pipeline run 2");
  for (const char* name : {"coreset.json", "report.json"}) {
    const std::string a = ReadText(dir / "run1" / name);
    o.Check(!a.empty() && a == ReadText(dir / "run2" / name),
            std::string(name) + " differs between runs");
  }

  o.Check(RunCli("aggregate" + cfg + " --out " + p("f.mmeb")) == 0, "aggregate");
  o.Check(RunCli("reduce" + cfg + " --features " + p("f.mmeb") + " --out " + p("r.mmeb")) == 0,
          "reduce");
  o.Check(RunCli("select" + cfg + " --features " + p("r.mmeb") + " --out " +
                 p("partition.json")) == 0,
          "select");
  o.Check(RunCli("sample" + cfg + " --partition " + p("partition.json") + " --out " +
                 p("coreset.json")) == 0,
          "sample");
  o.Check(ReadText(dir / "coreset.json") == ReadText(dir / "run1/coreset.json"),
          "stage-wise coreset differs from pipeline");
  if (o.pass) o.detail = "byte-identical reruns; stage-wise coreset matches";
  return o;
}

// Current resident set size from /proc/self/statm.
long CurrentRssKb() {
  std::FILE* f = std::fopen("/proc/self/statm", "r");
  if (f == nullptr) return 0;
  long pages_total = 0;
  long pages_resident = 0;
  if (std::fscanf(f, "%ld %ld", &pages_total, &pages_resident) != 2) pages_resident = 0;
  std::fclose(f);
  return pages_resident * (sysconf(_SC_PAGESIZE) / 1024);
}

Outcome Performance() {
  Outcome o;
  std::ostringstream detail;
  struct Case {
    std::size_t n, d;
    double budget_s;
  };
  for (const Case& c : {Case{2000, 64, 10.0}, Case{10000, 128, 300.0}}) {
    std::mt19937_64 rng(c.n);
    const FeatureMatrix f = testing::RandomFeatures(c.n, c.d, rng);
    const long rss_before = CurrentRssKb();
    long rss_max = rss_before;
    const auto start = Clock::now();
    // RSS is sampled at every bin's first step, after its totals are built.
    const BinPartition p = SelectBins(f, {20, SelectionMode::kAccelerated, 0},
                                      [&](const SelectionStep& s) {
                                        if (s.step == 0) {
                                          rss_max = std::max(rss_max, CurrentRssKb());
                                        }
                                      });
    const double elapsed = Seconds(start);
    const long rss_growth_kb = std::max(rss_max, CurrentRssKb()) - rss_before;
    // An n x n double matrix would need n*n*8 bytes; allow a tenth of it.
    const double quadratic_kb = static_cast<double>(c.n) * c.n * 8.0 / 1024.0;
    o.Check(p.bins.size() == 20, "bin count");
    o.Check(elapsed <= c.budget_s, "n=" + std::to_string(c.n) + " took " +
                                       std::to_string(elapsed) + " s");
    o.Check(rss_growth_kb < quadratic_kb / 10.0,
            "peak RSS grew by " + std::to_string(rss_growth_kb) + " KiB");
    detail << "n=" << c.n << ",d=" << c.d << ": " << elapsed << " s (budget "
           << c.budget_s << "), RSS +" << rss_growth_kb << " KiB; ";
  }
  if (o.pass) o.detail = detail.str();
  return o;
}

Outcome Metrics() {
  Outcome o;
  using Indices = std::vector<std::size_t>;
  const FeatureMatrix three = testing::Line({0, 1, 2});
  const FeatureMatrix four = testing::Line({0, 1, 2, 10});
  o.Check(std::abs(QuantizationError(three, Indices{0}) - 5.0 / 3.0) <= 1e-12, "qe 5/3");
  o.Check(std::abs(QuantizationError(four, Indices{2}) - 69.0 / 4.0) <= 1e-12, "qe 69/4");
  const FeatureMatrix pair = testing::Line({0, 2});
  o.Check(std::abs(Diversity(pair, Indices{0, 1}) - 4.0) <= 1e-12, "diversity 4");
  const FeatureMatrix triple = testing::Line({0, 1, 3});
  o.Check(std::abs(Diversity(triple, Indices{0, 1, 2}) - 14.0 / 3.0) <= 1e-12,
          "diversity 14/3");

  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng() % 60, d = 1 + rng() % 6;
    const FeatureMatrix f = testing::RandomFeatures(n, d, rng);
    Indices order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    const std::size_t small = 1 + rng() % n;
    const std::size_t large = small + rng() % (n - small + 1);
    const double qe_small = QuantizationError(f, Indices(order.begin(), order.begin() + small));
    const double qe_large = QuantizationError(f, Indices(order.begin(), order.begin() + large));
    o.Check(qe_large <= qe_small, "monotonicity violated on trial " + std::to_string(trial));
  }
  if (o.pass) o.detail = "fixtures 5/3, 69/4, 4, 14/3; monotone on 50 instances";
  return o;
}

}  // namespace
}  // namespace mmcoreset

int main() {
  using mmcoreset::Outcome;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 oracle equivalence", mmcoreset::OracleEquivalence},
      {"AC2 worked fixture", mmcoreset::WorkedFixture},
      {"AC3 gain identity", mmcoreset::GainIdentity},
      {"AC4 partition invariants", mmcoreset::PartitionSweep},
      {"AC5 PCA", mmcoreset::Pca},
      {"AC6 aggregation dimensions", mmcoreset::AggregationDims},
      {"AC7 sampler", mmcoreset::Sampler},
      {"AC8 end-to-end determinism", mmcoreset::EndToEnd},
      {"AC9 performance budget", mmcoreset::Performance},
      {"AC10 metrics oracle", mmcoreset::Metrics},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %s: %s\n", outcome.pass ? "PASS" : "FAIL", name.c_str(),
                outcome.detail.c_str());
    std::fflush(stdout);
    if (!outcome.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
