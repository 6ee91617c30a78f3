#include "specgraph/oracle.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <thread>

#include "specgraph/error.hpp"
#include "specgraph/random.hpp"
#include "specgraph/spectra.hpp"

namespace specgraph {

namespace {

void guard(std::size_t n, std::size_t k) {
    if (n < 1 || n > kOracleMaxNodes) {
        throw SizeGuardError("exhaustive search supports 1 <= N <= " + std::to_string(kOracleMaxNodes) + ", got N = " +
                             std::to_string(n));
    }
    if (k < 1 || k > n) {
        throw SizeGuardError("exhaustive search needs 1 <= K <= N, got K = " + std::to_string(k));
    }
}

// Ncut of a labelling, or nullopt when some block has zero volume.
std::optional<double> labelled_ncut(const std::vector<WeightedEdge>& edges, const Vector& deg,
                                    const std::vector<std::size_t>& labels, std::size_t k,
                                    std::vector<double>& vol, std::vector<double>& cut) {
    std::fill(vol.begin(), vol.end(), 0.0);
    std::fill(cut.begin(), cut.end(), 0.0);
    for (std::size_t i = 0; i < labels.size(); ++i) vol[labels[i]] += deg(static_cast<Eigen::Index>(i));
    for (const auto& e : edges) {
        const auto a = labels[e.u];
        const auto b = labels[e.v];
        if (a != b) {
            cut[a] += e.weight;
            cut[b] += e.weight;
        }
    }
    double total = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        if (vol[j] == 0.0) return std::nullopt;
        total += cut[j] / vol[j];
    }
    return total;
}

struct WorkerBest {
    double value = std::numeric_limits<double>::infinity();
    std::uint64_t index = 0;
    std::vector<std::size_t> labels;
    std::uint64_t count = 0;
    std::uint64_t skipped = 0;
};

WorkerBest search(const WeightedGraph& g, std::size_t k, unsigned worker, unsigned workers) {
    const auto edges = g.edges();
    const Vector deg = degrees(g);
    std::vector<double> vol(k);
    std::vector<double> cut(k);
    WorkerBest best;
    PartitionEnumerator it(g.size(), k);
    std::uint64_t index = 0;
    do {
        if (index % workers == worker) {
            ++best.count;
            const auto value = labelled_ncut(edges, deg, it.labels(), k, vol, cut);
            if (!value) {
                ++best.skipped;
            } else if (*value < best.value) {
                best.value = *value;
                best.index = index;
                best.labels = it.labels();
            }
        }
        ++index;
    } while (it.next());
    return best;
}

}  // namespace

std::uint64_t stirling2(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::vector<std::uint64_t> row(k + 1, 0);
    row[0] = 1;  // S(0, 0)
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = std::min(i, k); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[k];
}

PartitionEnumerator::PartitionEnumerator(std::size_t n, std::size_t k)
    : n_(n), k_(k), labels_(n, 0), prefix_max_(n, 0) {
    guard(n, k);
    fill_from(1, 0);
}

// Smallest completion of labels_[pos..] that still reaches K blocks.
void PartitionEnumerator::fill_from(std::size_t pos, std::size_t current_max) {
    const std::size_t missing = k_ - 1 - current_max;
    for (std::size_t i = pos; i < n_; ++i) {
        const std::size_t from_end = n_ - i;
        labels_[i] = from_end <= missing ? k_ - from_end : 0;
        current_max = std::max(current_max, labels_[i]);
        prefix_max_[i] = current_max;
    }
}

bool PartitionEnumerator::next() {
    for (std::size_t i = n_; i-- > 1;) {
        const std::size_t limit = std::min(k_ - 1, prefix_max_[i - 1] + 1);
        const std::size_t v = labels_[i] + 1;
        if (v > limit) continue;
        const std::size_t m = std::max(prefix_max_[i - 1], v);
        if (k_ - 1 - m > n_ - 1 - i) continue;
        labels_[i] = v;
        prefix_max_[i] = m;
        fill_from(i + 1, m);
        return true;
    }
    return false;
}

std::vector<Partition> enumerate_partitions(std::size_t n, std::size_t k) {
    std::vector<Partition> out;
    PartitionEnumerator it(n, k);
    do {
        out.push_back(it.partition());
    } while (it.next());
    return out;
}

OracleResult brute_ncut(const WeightedGraph& g, std::size_t k, unsigned workers) {
    guard(g.size(), k);
    workers = std::max(1U, workers);
    std::vector<WorkerBest> results(workers);
    if (workers == 1) {
        results[0] = search(g, k, 0, 1);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w) {
            threads.emplace_back([&, w] { results[w] = search(g, k, w, workers); });
        }
        for (auto& t : threads) t.join();
    }

    const WorkerBest* best = nullptr;
    std::uint64_t count = 0;
    std::uint64_t skipped = 0;
    for (const auto& r : results) {
        count += r.count;
        skipped += r.skipped;
        if (r.labels.empty()) continue;
        if (!best || r.value < best->value || (r.value == best->value && r.index < best->index)) best = &r;
    }
    if (!best) throw PreconditionError("every partition has a block of zero volume");
    return {Partition::from_labels(best->labels), best->value, count, skipped};
}

MincutResult brute_mincut(const WeightedGraph& g) {
    const std::size_t n = g.size();
    if (n < 2) throw SizeGuardError("mincut needs at least two nodes");
    guard(n, 2);
    const auto edges = g.edges();
    const std::uint64_t masks = (std::uint64_t{1} << (n - 1)) - 1;  // A = {0} ∪ bits, A ≠ V
    double best_value = std::numeric_limits<double>::infinity();
    std::uint64_t best_mask = 0;
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        const auto in_a = [&](std::size_t v) { return v == 0 || ((mask >> (v - 1)) & 1U) != 0U; };
        double c = 0.0;
        for (const auto& e : edges) {
            if (in_a(e.u) != in_a(e.v)) c += e.weight;
        }
        if (c < best_value) {
            best_value = c;
            best_mask = mask;
        }
    }
    std::vector<std::size_t> labels(n, 1);
    labels[0] = 0;
    for (std::size_t v = 1; v < n; ++v) {
        if (((best_mask >> (v - 1)) & 1U) != 0U) labels[v] = 0;
    }
    return {Partition::from_labels(labels), best_value, masks};
}

SampledTrace sampled_max_trace(const Matrix& a, int samples, std::uint64_t seed) {
    if (a.rows() != a.cols() || a.rows() == 0) throw InvalidArgument("A must be square and nonempty");
    if (samples < 1) throw InvalidArgument("need at least one sample");
    Rng rng(seed);
    SampledTrace out;
    out.samples = samples;
    out.seed = seed;
    out.singular_value_sum = svd(a).singular_values.sum();
    out.max_trace = -std::numeric_limits<double>::infinity();
    const auto n = static_cast<std::size_t>(a.rows());
    for (int s = 0; s < samples; ++s) {
        out.max_trace = std::max(out.max_trace, (random_orthogonal(n, rng) * a).trace());
    }
    return out;
}

}  // namespace specgraph
