#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "readorder/model.hpp"

namespace readorder::synth {

// Deterministic generator state (splitmix64). Identical across platforms,
// unlike <random> distributions, so corpora are byte-reproducible.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Inclusive bounds.
    int uniform_int(int lo, int hi) {
        if (hi <= lo) return lo;
        const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(next() % span);
    }

private:
    uint64_t state_;
};

enum class LayoutClass {
    SingleColumn,
    DoubleColumn,
    MultiColumn3Plus,
    SpanningHeader,
    LShape,
    CenteredTitlePage,
    VerticalDoc,
};

const char* class_name(LayoutClass cls);
bool class_from_string(const std::string& name, LayoutClass& out);

// Complex classes stress segmentation; regular ones are plain columns.
bool is_complex(LayoutClass cls);

struct GeneratedPage {
    Page page;              // blocks stored in ground-truth order, gt_index set
    std::vector<int> gt_order;
};

// Pages are 1000 x 1414 units. Same (cls, seed, n_blocks) always produces
// identical output. Inter-block gaps along intended cut lines stay >= 2x the
// default min_gap. Throws InfeasibleLayoutError when n_blocks cannot fit.
GeneratedPage generate(LayoutClass cls, uint64_t seed, int n_blocks);

// Draws a class-appropriate block count, then generates.
GeneratedPage generate_auto(LayoutClass cls, uint64_t seed);

struct Corpus {
    std::vector<GeneratedPage> pages;
    std::map<std::string, std::string> split_of; // page_id -> complex|regular
};

using CorpusSpec = std::vector<std::pair<LayoutClass, int>>;

// 100 pages: 70 regular (single/double column) and 30 complex.
CorpusSpec default_corpus_spec();

Corpus generate_corpus(const CorpusSpec& spec, uint64_t seed);

} // namespace readorder::synth
