#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

/// Largest node count the exhaustive solvers accept.
inline constexpr std::size_t kOracleMaxNodes = 14;

/// S(n, k): partitions of an n-set into exactly k nonempty blocks.
std::uint64_t stirling2(std::size_t n, std::size_t k);

/// Walks the partitions of {0, …, N−1} into exactly K blocks as
/// restricted-growth strings in lexicographic order: labels[0] = 0 and each
/// label exceeds the largest earlier one by at most 1.
class PartitionEnumerator {
public:
    /// Throws SizeGuardError unless 1 ≤ K ≤ N ≤ kOracleMaxNodes.
    PartitionEnumerator(std::size_t n, std::size_t k);

    const std::vector<std::size_t>& labels() const noexcept { return labels_; }
    Partition partition() const { return Partition::from_labels(labels_); }

    /// Moves to the next string; false once the sequence is exhausted.
    bool next();

private:
    void fill_from(std::size_t pos, std::size_t current_max);

    std::size_t n_;
    std::size_t k_;
    std::vector<std::size_t> labels_;
    std::vector<std::size_t> prefix_max_;
};

std::vector<Partition> enumerate_partitions(std::size_t n, std::size_t k);

struct OracleResult {
    Partition best_partition;
    double best_value = 0.0;
    std::uint64_t evaluated_count = 0;  ///< partitions enumerated, S(N, K)
    std::uint64_t skipped_count = 0;    ///< of those, left out for a zero-volume block
};

/// Exact minimum normalized cut over all K-partitions. Ties go to the
/// earliest partition in enumeration order, independent of `workers`.
/// Throws PreconditionError if every partition has a zero-volume block.
OracleResult brute_ncut(const WeightedGraph& g, std::size_t k, unsigned workers = 1);

struct MincutResult {
    Partition partition;  ///< first block contains node 0
    double value = 0.0;
    std::uint64_t evaluated_count = 0;
};

/// Exact minimum of cut(A) over proper nonempty A.
MincutResult brute_mincut(const WeightedGraph& g);

struct SampledTrace {
    double max_trace = 0.0;            ///< best tr(QA) over the samples
    double singular_value_sum = 0.0;   ///< the exact maximum over O(K)
    int samples = 0;
    std::uint64_t seed = 0;
};

/// max tr(QA) over `samples` random orthogonal Q.
SampledTrace sampled_max_trace(const Matrix& a, int samples, std::uint64_t seed = 0);

}  // namespace specgraph
