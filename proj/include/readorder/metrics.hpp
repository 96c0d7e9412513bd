#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "readorder/model.hpp"

namespace readorder::metrics {

// Block-level BLEU-4 with brevity penalty over identifier sequences: clipped
// n-gram precisions with uniform weights over n = 1..K, K = min(4, |pred|,
// |ref|). Any zero precision zeroes the score (no smoothing).
double bleu4_blocks(std::span<const int> pred, std::span<const int> ref);

// Mean absolute rank displacement normalized by sequence length:
// (1/N^2) * sum_b |pos_pred(b) - pos_ref(b)|. Requires a permutation pair.
double ard(std::span<const int> pred, std::span<const int> ref);

// Kendall tau-a over all block pairs: (concordant - discordant) / (N(N-1)/2).
// Defined as 1.0 for N < 2. Requires a permutation pair.
double kendall_tau(std::span<const int> pred, std::span<const int> ref);

struct PageMetrics {
    double bleu4 = 0.0;
    double ard = 0.0;
    double tau = 0.0;
};

struct SplitAggregate {
    int pages = 0;
    double bleu4 = 0.0;
    double ard = 0.0;
    double tau = 0.0;
};

struct MetricReport {
    std::map<std::string, PageMetrics> per_page;
    // Keyed by split tag ("complex", "regular") plus the unweighted overall
    // mean under "all".
    std::map<std::string, SplitAggregate> splits;
    std::optional<double> fps;
};

// Per-page metrics plus per-split unweighted means. `split_of` maps page ids
// to split tags; unmapped pages only contribute to "all".
MetricReport evaluate(const std::map<std::string, std::vector<int>>& pred,
                      const std::map<std::string, std::vector<int>>& ref,
                      const std::map<std::string, std::string>& split_of = {});

std::string format_table(const MetricReport& report);

struct FpsReport {
    double mean_fps = 0.0;
    double min_fps = 0.0;
    double max_fps = 0.0;
    int repeats = 0;
    size_t pages = 0;
};

// Wall-clock throughput of the ordering callable alone; pages must already
// be parsed and resident. Reports the mean over `repeats` runs plus extrema.
FpsReport fps_bench(std::span<const Page> pages,
                    const std::function<OrderResult(const Page&)>& engine,
                    int repeats = 10);

} // namespace readorder::metrics
