// Exhaustive lexicographic enumeration of all n x n binary matrices with
// tallies of the weaveable subset and of the shift-equivalence classes,
// streaming exactly one minimal representative per class. classify is the
// serial reference; classify_sharded runs disjoint first-row-word ranges in
// parallel (OpenMP when available) and merges.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "binweave/bitmatrix.hpp"

namespace binweave {

// 2^{n^2} tallies stay within 64 bits through order 7.
inline constexpr int kMaxEnumerationOrder = 7;

enum class FilterMode { All, WeaveableOnly };

/// Contiguous partition of the first-row-word range [0, 2^n).
struct ShardSpec {
  std::uint32_t index = 0;
  std::uint32_t count = 1;
};

struct EnumerationJob {
  int order = 1;
  FilterMode filter = FilterMode::All;
  std::optional<ShardSpec> shard;
  bool emit = false;

  /// Throws std::invalid_argument on an out-of-range order or a shard with
  /// count 0 or index >= count.
  void validate() const;
};

/// The four tallies of a classification run.
struct ClassificationCounts {
  std::uint64_t total_matrices = 0;
  std::uint64_t weaveable_matrices = 0;
  std::uint64_t classes = 0;
  std::uint64_t weaveable_classes = 0;

  friend bool operator==(const ClassificationCounts&,
                         const ClassificationCounts&) = default;
};

using RepresentativeSink = std::function<void(const BitRowMatrix&)>;

/// Advances v to its immediate lexicographic successor in [0, radix)^k
/// (increment the last component; on overflow reset it and carry left).
/// Returns false once v was the maximum, leaving v all zeros. Throws when a
/// component is already >= radix.
bool next_vector(std::span<std::uint64_t> v, std::uint64_t radix);

/// Visits every row-word vector of the job's range in ascending
/// lexicographic order, updating all four tallies. When the job emits, each
/// canonical matrix passing the filter is handed to the sink, in ascending
/// order. Sink exceptions propagate.
ClassificationCounts classify(const EnumerationJob& job,
                              const RepresentativeSink& sink = {});

/// Component-wise sum over a complete disjoint shard cover.
ClassificationCounts merge(std::span<const ClassificationCounts> parts);

/// Runs all shards of a shard_count-way split, in parallel when OpenMP is
/// enabled, and merges the results. With a sink, shard workers buffer their
/// representatives and delivery happens afterwards in shard order, so the
/// stream the sink sees is globally ascending.
ClassificationCounts classify_sharded(int order, FilterMode filter,
                                      std::uint32_t shard_count,
                                      const RepresentativeSink& sink = {});

}  // namespace binweave
