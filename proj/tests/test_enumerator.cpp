#include "binweave/enumerator.hpp"

#include <map>
#include <stdexcept>
#include <vector>

#include "binweave/oracles.hpp"
#include "binweave/torus_action.hpp"
#include "binweave/weave_filter.hpp"
#include "doctest.h"

using namespace binweave;

namespace {

std::vector<BitRowMatrix> collect(const EnumerationJob& base) {
  std::vector<BitRowMatrix> reps;
  EnumerationJob job = base;
  job.emit = true;
  classify(job, [&reps](const BitRowMatrix& m) { reps.push_back(m); });
  return reps;
}

}  // namespace

TEST_SUITE("enumerator") {

TEST_CASE("next_vector") {
  std::vector<std::uint64_t> v{0, 0};
  CHECK(next_vector(v, 4));
  CHECK(v == std::vector<std::uint64_t>{0, 1});

  v = {0, 3};
  CHECK(next_vector(v, 4));
  CHECK(v == std::vector<std::uint64_t>{1, 0});

  v = {3, 3};
  CHECK_FALSE(next_vector(v, 4));
  CHECK(v == std::vector<std::uint64_t>{0, 0});

  v = {4, 0};
  CHECK_THROWS_AS(next_vector(v, 4), std::invalid_argument);
}

TEST_CASE("next_vector walks the whole space in order") {
  std::vector<std::uint64_t> v{0, 0, 0};
  std::vector<std::vector<std::uint64_t>> seen{v};
  while (next_vector(v, 3)) seen.push_back(v);
  CHECK(seen.size() == 27);
  for (std::size_t i = 1; i < seen.size(); ++i) CHECK(seen[i - 1] < seen[i]);
}

TEST_CASE("job validation") {
  CHECK_THROWS_AS(EnumerationJob{0}.validate(), std::invalid_argument);
  CHECK_THROWS_AS(EnumerationJob{8}.validate(), std::invalid_argument);
  EnumerationJob bad_shard{2};
  bad_shard.shard = ShardSpec{2, 2};
  CHECK_THROWS_AS(bad_shard.validate(), std::invalid_argument);
  bad_shard.shard = ShardSpec{0, 0};
  CHECK_THROWS_AS(bad_shard.validate(), std::invalid_argument);
  EnumerationJob emit_without_sink{2};
  emit_without_sink.emit = true;
  CHECK_THROWS_AS(classify(emit_without_sink), std::invalid_argument);
}

TEST_CASE("classify reproduces the known counts") {
  CHECK(classify({1}) == ClassificationCounts{2, 0, 2, 0});
  CHECK(classify({2}) == ClassificationCounts{16, 2, 7, 1});
  CHECK(classify({3}) == ClassificationCounts{512, 102, 64, 14});
}

TEST_CASE("classify emits the order-2 representatives in order") {
  const auto reps = collect({2});
  const std::vector<std::vector<std::uint64_t>> expected{
      {0, 0}, {0, 1}, {0, 3}, {1, 1}, {1, 2}, {1, 3}, {3, 3}};
  REQUIRE(reps.size() == expected.size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    CHECK(reps[i].rows() == expected[i]);
  }
}

TEST_CASE("merge") {
  const ClassificationCounts c{16, 2, 7, 1};
  const std::vector<ClassificationCounts> single{c};
  CHECK(merge(single) == c);
  CHECK(merge(std::vector<ClassificationCounts>{}) == ClassificationCounts{});

  std::vector<ClassificationCounts> parts;
  for (std::uint32_t s = 0; s < 4; ++s) {
    EnumerationJob job{3};
    job.shard = ShardSpec{s, 4};
    parts.push_back(classify(job));
  }
  CHECK(merge(parts) == ClassificationCounts{512, 102, 64, 14});
}

TEST_CASE("shard invariance for several shard counts") {
  for (int n = 1; n <= 4; ++n) {
    const auto whole = classify({n});
    for (std::uint32_t shards : {1u, 2u, 3u, 7u, 16u, 64u}) {
      CHECK(classify_sharded(n, FilterMode::All, shards) == whole);
    }
  }
}

TEST_CASE("sharded emission matches the serial stream") {
  for (std::uint32_t shards : {1u, 3u, 8u}) {
    std::vector<BitRowMatrix> sharded;
    classify_sharded(3, FilterMode::All, shards,
                     [&sharded](const BitRowMatrix& m) {
                       sharded.push_back(m);
                     });
    CHECK(sharded == collect({3}));
  }
}

TEST_CASE("weaveable-only stream is the filtered all-stream") {
  for (int n = 1; n <= 4; ++n) {
    EnumerationJob weaveable_job{n};
    weaveable_job.filter = FilterMode::WeaveableOnly;
    const auto filtered = collect(weaveable_job);

    std::vector<BitRowMatrix> expected;
    for (const auto& m : collect({n})) {
      if (is_weaveable(m)) expected.push_back(m);
    }
    CHECK(filtered == expected);

    // the filter gates emission only, never the tallies
    CHECK(classify(weaveable_job) == classify({n}));
  }
}

TEST_CASE("representatives partition the space (exhaustive n <= 3)") {
  for (int n = 1; n <= 3; ++n) {
    const auto reps = collect({n});
    std::map<std::vector<std::uint64_t>, int> hit;
    std::uint64_t orbit_total = 0;
    for (const auto& rep : reps) {
      CHECK(is_canonical(rep));
      orbit_total += orbit(rep).size();
      ++hit[rep.rows()];
    }
    CHECK(orbit_total == std::uint64_t{1} << (n * n));
    CHECK(hit.size() == reps.size());

    // every matrix's canonical form is an emitted representative
    const std::uint64_t radix = std::uint64_t{1} << n;
    std::vector<std::uint64_t> v(static_cast<std::size_t>(n), 0);
    while (true) {
      const auto canon = canonical_form(BitRowMatrix::from_rows(n, v));
      CHECK(hit.count(canon.rows()) == 1);
      int i = n - 1;
      while (i >= 0 && ++v[static_cast<std::size_t>(i)] == radix) {
        v[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
    }
  }
}

TEST_CASE("counts agree with the orbit-counting oracles (n <= 4)") {
  for (int n = 1; n <= 4; ++n) {
    const auto counts = classify({n});
    CHECK(counts.total_matrices == std::uint64_t{1} << (n * n));
    CHECK(counts.weaveable_matrices == qn_cardinality(n));
    CHECK(counts.classes == burnside_full_classes(n));
    CHECK(counts.weaveable_classes == burnside_weaveable_classes(n));
    CHECK(counts.weaveable_matrices <= counts.total_matrices);
    CHECK(counts.weaveable_classes <= counts.classes);
  }
}

}  // TEST_SUITE
