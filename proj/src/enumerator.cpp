#include "binweave/enumerator.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "binweave/torus_action.hpp"
#include "binweave/weave_filter.hpp"

namespace binweave {

void EnumerationJob::validate() const {
  if (order < 1 || order > kMaxEnumerationOrder) {
    throw std::invalid_argument("enumeration order must be in [1, " +
                                std::to_string(kMaxEnumerationOrder) +
                                "], got " + std::to_string(order));
  }
  if (shard) {
    if (shard->count == 0) {
      throw std::invalid_argument("shard count must be at least 1");
    }
    if (shard->index >= shard->count) {
      throw std::invalid_argument("shard index " +
                                  std::to_string(shard->index) +
                                  " not below shard count " +
                                  std::to_string(shard->count));
    }
  }
}

bool next_vector(std::span<std::uint64_t> v, std::uint64_t radix) {
  if (radix < 1) throw std::invalid_argument("radix must be at least 1");
  for (const std::uint64_t x : v) {
    if (x >= radix) {
      throw std::invalid_argument("vector component " + std::to_string(x) +
                                  " not below radix " + std::to_string(radix));
    }
  }
  for (auto i = static_cast<std::ptrdiff_t>(v.size()) - 1; i >= 0; --i) {
    auto& digit = v[static_cast<std::size_t>(i)];
    if (++digit < radix) return true;
    digit = 0;
  }
  return false;
}

ClassificationCounts classify(const EnumerationJob& job,
                              const RepresentativeSink& sink) {
  job.validate();
  if (job.emit && !sink) {
    throw std::invalid_argument("job requests emission but no sink was given");
  }
  const int n = job.order;
  const std::uint64_t radix = std::uint64_t{1} << n;
  std::uint64_t lo = 0;
  std::uint64_t hi = radix;
  if (job.shard) {
    lo = radix * job.shard->index / job.shard->count;
    hi = radix * (job.shard->index + std::uint64_t{1}) / job.shard->count;
  }

  ClassificationCounts counts;
  std::uint64_t v[kMaxOrder] = {};
  const std::span<std::uint64_t> whole{v, static_cast<std::size_t>(n)};
  const std::span<std::uint64_t> tail = whole.subspan(1);
  for (std::uint64_t first = lo; first < hi; ++first) {
    v[0] = first;
    std::fill(tail.begin(), tail.end(), 0);
    do {
      ++counts.total_matrices;
      const bool weaveable = is_weaveable_words(whole);
      if (weaveable) ++counts.weaveable_matrices;
      if (is_canonical_words(whole)) {
        ++counts.classes;
        if (weaveable) ++counts.weaveable_classes;
        if (job.emit && (job.filter == FilterMode::All || weaveable)) {
          sink(BitRowMatrix::from_rows(
              n, std::vector<std::uint64_t>(v, v + n)));
        }
      }
    } while (next_vector(tail, radix));
  }
  return counts;
}

ClassificationCounts merge(std::span<const ClassificationCounts> parts) {
  ClassificationCounts out;
  for (const auto& part : parts) {
    out.total_matrices += part.total_matrices;
    out.weaveable_matrices += part.weaveable_matrices;
    out.classes += part.classes;
    out.weaveable_classes += part.weaveable_classes;
  }
  return out;
}

ClassificationCounts classify_sharded(int order, FilterMode filter,
                                      std::uint32_t shard_count,
                                      const RepresentativeSink& sink) {
  EnumerationJob probe{order, filter, ShardSpec{0, shard_count}, false};
  probe.validate();

  const auto shards = static_cast<std::int64_t>(shard_count);
  std::vector<ClassificationCounts> parts(shard_count);
  if (!sink) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::int64_t s = 0; s < shards; ++s) {
      const EnumerationJob job{
          order, filter, ShardSpec{static_cast<std::uint32_t>(s), shard_count},
          false};
      parts[static_cast<std::size_t>(s)] = classify(job);
    }
  } else {
    // Workers append packed row-words; delivery below keeps shard order, so
    // the concatenated stream stays globally ascending.
    std::vector<std::vector<std::uint64_t>> buffers(shard_count);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::int64_t s = 0; s < shards; ++s) {
      auto& buffer = buffers[static_cast<std::size_t>(s)];
      const EnumerationJob job{
          order, filter, ShardSpec{static_cast<std::uint32_t>(s), shard_count},
          true};
      parts[static_cast<std::size_t>(s)] =
          classify(job, [&buffer](const BitRowMatrix& m) {
            buffer.insert(buffer.end(), m.rows().begin(), m.rows().end());
          });
    }
    const auto n = static_cast<std::size_t>(order);
    for (const auto& buffer : buffers) {
      for (std::size_t i = 0; i < buffer.size(); i += n) {
        sink(BitRowMatrix::from_rows(
            order, std::vector<std::uint64_t>(buffer.begin() + i,
                                              buffer.begin() + i + n)));
      }
    }
  }
  return merge(parts);
}

}  // namespace binweave
