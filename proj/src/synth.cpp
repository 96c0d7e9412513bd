#include "readorder/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "readorder/errors.hpp"

namespace readorder::synth {

namespace {

constexpr double kPageW = 1000.0;
constexpr double kPageH = 1414.0;

struct Band {
    double lo = 0.0;
    double hi = 0.0;
};

// Stacks n bands into [y_lo, y_hi] with randomized heights and gaps, shrinking
// the height ceiling as needed. Throws when even minimal sizes cannot fit.
std::vector<Band> stack_bands(Rng& rng, int n, double y_lo, double y_hi,
                              int h_min, int h_max, int g_min, int g_max) {
    std::vector<Band> bands;
    if (n <= 0) return bands;
    const double avail = y_hi - y_lo;
    if (n * h_min + (n - 1) * g_min > avail) {
        throw InfeasibleLayoutError("stack does not fit: " + std::to_string(n) +
                                    " blocks into " + std::to_string(avail) +
                                    " units");
    }
    const int h_cap = std::min(
        h_max, static_cast<int>((avail - (n - 1) * g_min) / n));
    std::vector<int> heights(static_cast<size_t>(n));
    double used = (n - 1) * g_min;
    for (int i = 0; i < n; ++i) {
        heights[static_cast<size_t>(i)] = rng.uniform_int(h_min, h_cap);
        used += heights[static_cast<size_t>(i)];
    }
    double slack = avail - used;
    double y = y_lo;
    for (int i = 0; i < n; ++i) {
        bands.push_back({y, y + heights[static_cast<size_t>(i)]});
        y += heights[static_cast<size_t>(i)];
        if (i + 1 < n) {
            const int extra_cap =
                std::min(g_max - g_min, static_cast<int>(slack));
            const int extra = extra_cap > 0 ? rng.uniform_int(0, extra_cap) : 0;
            slack -= extra;
            y += g_min + extra;
        }
    }
    return bands;
}

Block make_block(int id, double x1, double y1, double x2, double y2,
                 std::string label) {
    Block b;
    b.id = id;
    b.bbox = {x1, y1, x2, y2};
    b.label = std::move(label);
    return b;
}

Page make_page(const std::string& id) {
    Page page;
    page.page_id = id;
    page.width = kPageW;
    page.height = kPageH;
    return page;
}

void push_gt(Page& page, Block block) {
    block.gt_index = static_cast<int>(page.blocks.size());
    page.blocks.push_back(std::move(block));
}

struct ColumnLayout {
    std::vector<std::pair<double, double>> columns; // x bands
};

ColumnLayout make_columns(int k, double x_lo, double x_hi, double gutter) {
    ColumnLayout layout;
    const double width = (x_hi - x_lo - (k - 1) * gutter) / k;
    for (int c = 0; c < k; ++c) {
        const double cx = x_lo + c * (width + gutter);
        layout.columns.emplace_back(cx, cx + width);
    }
    return layout;
}

// Row-aligned grid filled column-major; returns blocks in ground-truth
// (column-major) order. Row gaps span the full section width so projection
// cuts between rows are always available.
std::vector<Block> grid_section(Rng& rng, int& next_id, int cells, int k,
                                double y_lo, double y_hi, int h_min, int h_max) {
    const int rows = (cells + k - 1) / k;
    const auto bands = stack_bands(rng, rows, y_lo, y_hi, h_min, h_max, 14, 30);
    const auto layout = make_columns(k, 80.0, 920.0, 28.0);
    std::vector<Block> blocks;
    blocks.reserve(static_cast<size_t>(cells));
    for (int idx = 0; idx < cells; ++idx) {
        const int col = idx / rows;
        const int row = idx % rows;
        const auto [cx1, cx2] = layout.columns[static_cast<size_t>(col)];
        const Band& band = bands[static_cast<size_t>(row)];
        const double jx1 = rng.uniform_int(0, 5);
        const double jx2 = rng.uniform_int(0, 5);
        const double jy2 = rng.uniform_int(0, 6);
        blocks.push_back(make_block(next_id++, cx1 + jx1, band.lo,
                                    cx2 - jx2, std::max(band.lo + 20.0, band.hi - jy2),
                                    "text"));
    }
    return blocks;
}

GeneratedPage gen_single_column(Rng& rng, int n) {
    GeneratedPage out;
    out.page = make_page("single");
    const auto bands = stack_bands(rng, n, 80.0, 1334.0, 50, 140, 12, 36);
    for (int i = 0; i < n; ++i) {
        const double j1 = rng.uniform_int(0, 18);
        const double j2 = rng.uniform_int(0, 18);
        push_gt(out.page, make_block(i, 100.0 + j1, bands[static_cast<size_t>(i)].lo,
                                     900.0 - j2, bands[static_cast<size_t>(i)].hi,
                                     "text"));
    }
    return out;
}

GeneratedPage gen_double_column(Rng& rng, int n) {
    GeneratedPage out;
    out.page = make_page("double");
    const int n_left = (n + 1) / 2;
    const int n_right = n - n_left;
    int id = 0;
    const auto left = stack_bands(rng, n_left, 80.0, 1334.0, 46, 120, 12, 30);
    const double right_start = 80.0 + rng.uniform_int(18, 60);
    const auto right =
        stack_bands(rng, n_right, right_start, 1334.0, 46, 120, 12, 30);
    for (const Band& band : left) {
        const double j1 = rng.uniform_int(0, 10);
        const double j2 = rng.uniform_int(0, 10);
        push_gt(out.page,
                make_block(id++, 80.0 + j1, band.lo, 470.0 - j2, band.hi, "text"));
    }
    for (const Band& band : right) {
        const double j1 = rng.uniform_int(0, 10);
        const double j2 = rng.uniform_int(0, 10);
        push_gt(out.page,
                make_block(id++, 530.0 + j1, band.lo, 920.0 - j2, band.hi, "text"));
    }
    return out;
}

GeneratedPage gen_multi_column(Rng& rng, int n) {
    if (n < 3) throw InfeasibleLayoutError("multi-column needs >= 3 blocks");
    GeneratedPage out;
    out.page = make_page("multi");
    const int k = std::min(3 + rng.uniform_int(0, 1), n);
    int id = 0;
    for (Block& b : grid_section(rng, id, n, k, 80.0, 1334.0, 56, 118)) {
        push_gt(out.page, std::move(b));
    }
    return out;
}

GeneratedPage gen_spanning_header(Rng& rng, int n) {
    if (n < 5) throw InfeasibleLayoutError("spanning header needs >= 5 blocks");
    GeneratedPage out;
    out.page = make_page("spanning");

    const int bar_h = rng.uniform_int(40, 64);
    const double bar_y1 = 707.0 + rng.uniform_int(-40, 40) - bar_h / 2.0;
    const double bar_y2 = bar_y1 + bar_h;
    // Larger than twice any generated text height, so the bar always passes
    // the isolation test and pre-cuts the page.
    const double iso_gap = 2 * 118 + 14;

    const int k = 3 + rng.uniform_int(0, 1);
    const int cells = n - 1;
    int above = std::max(k, cells / 2);
    int below = cells - above;
    if (below < 1) {
        below = 1;
        above = cells - 1;
    }

    int id = 0;
    std::vector<Block> top =
        grid_section(rng, id, above, k, 80.0, bar_y1 - iso_gap, 56, 118);
    Block bar = make_block(id++, 80.0, bar_y1, 920.0, bar_y2, "text");
    std::vector<Block> bottom =
        grid_section(rng, id, below, k, bar_y2 + iso_gap, 1334.0, 56, 118);

    for (Block& b : top) push_gt(out.page, std::move(b));
    push_gt(out.page, std::move(bar));
    for (Block& b : bottom) push_gt(out.page, std::move(b));
    return out;
}

GeneratedPage gen_l_shape(Rng& rng, int n) {
    if (n < 4) throw InfeasibleLayoutError("l-shape needs >= 4 blocks");
    GeneratedPage out;
    out.page = make_page("lshape");
    const int paragraphs = n - 2;

    const int wide_h = rng.uniform_int(140, 220);
    const double wide_gap = rng.uniform_int(30, 50);
    const auto bands = stack_bands(rng, paragraphs, 120.0,
                                   1394.0 - wide_h - wide_gap, 90, 140, 16, 30);

    int id = 0;
    std::vector<Block> paras;
    for (const Band& band : bands) {
        const double j1 = rng.uniform_int(0, 8);
        const double j2 = rng.uniform_int(0, 8);
        paras.push_back(
            make_block(id++, 100.0 + j1, band.lo, 550.0 - j2, band.hi, "text"));
    }
    // Figure shares the first paragraph's row band, so a horizontal cut
    // sweeps it into that row.
    const Band& row = bands.front();
    Block figure = make_block(id++, 600.0, row.lo + rng.uniform_int(0, 4),
                              900.0, row.hi - rng.uniform_int(0, 4), "figure");
    const double wide_y1 = bands.back().hi + wide_gap;
    Block wide =
        make_block(id++, 100.0, wide_y1, 900.0, wide_y1 + wide_h, "text");

    for (Block& b : paras) push_gt(out.page, std::move(b));
    push_gt(out.page, std::move(figure));
    push_gt(out.page, std::move(wide));
    return out;
}

GeneratedPage gen_centered_title(Rng& rng, int n) {
    if (n < 6) throw InfeasibleLayoutError("centered title page needs >= 6 blocks");
    GeneratedPage out;
    out.page = make_page("ctitle");

    const int flexible = n - 3; // minus title, figure, caption
    const int beside = flexible >= 6 ? 2 : 1;
    int tail = std::max(1, (flexible - beside) / 3);
    int top = flexible - beside - tail;
    // Keep full-width paragraphs in the majority so the adaptive length
    // threshold never flags them as cross-layout.
    while (top + tail < beside + 2 && tail > 1) {
        --tail;
        ++top;
    }

    const int title_h = rng.uniform_int(36, 50);
    const double title_y1 = 707.0 + rng.uniform_int(-45, 45) - title_h / 2.0;
    const double title_y2 = title_y1 + title_h;
    const double iso_gap = 2 * 70 + 10;

    int id = 0;
    std::vector<Block> top_paras;
    for (const Band& band :
         stack_bands(rng, top, 80.0, title_y1 - iso_gap, 40, 70, 10, 22)) {
        const double j1 = rng.uniform_int(0, 12);
        const double j2 = rng.uniform_int(0, 12);
        top_paras.push_back(
            make_block(id++, 100.0 + j1, band.lo, 900.0 - j2, band.hi, "text"));
    }
    Block title = make_block(id++, 260.0, title_y1, 740.0, title_y2, "title");

    const double below_y0 = title_y2 + iso_gap;
    const auto beside_bands =
        stack_bands(rng, beside, below_y0, below_y0 + beside * 92.0, 40, 70, 10, 22);
    std::vector<Block> beside_paras;
    for (const Band& band : beside_bands) {
        const double j2 = rng.uniform_int(0, 8);
        beside_paras.push_back(
            make_block(id++, 100.0, band.lo, 550.0 - j2, band.hi, "text"));
    }
    const Band& fig_row = beside_bands.front();
    Block figure = make_block(id++, 600.0, fig_row.lo + rng.uniform_int(0, 4),
                              900.0, fig_row.hi - rng.uniform_int(0, 4), "figure");
    Block caption = make_block(id++, 600.0, figure.bbox.y2 + 8.0, 900.0,
                               figure.bbox.y2 + 8.0 + rng.uniform_int(26, 36),
                               "figure_caption");

    const double tail_y0 =
        std::max(caption.bbox.y2, beside_bands.back().hi) + rng.uniform_int(14, 24);
    std::vector<Block> tail_paras;
    for (const Band& band : stack_bands(rng, tail, tail_y0, 1334.0, 40, 70, 10, 22)) {
        const double j1 = rng.uniform_int(0, 12);
        const double j2 = rng.uniform_int(0, 12);
        tail_paras.push_back(
            make_block(id++, 100.0 + j1, band.lo, 900.0 - j2, band.hi, "text"));
    }

    for (Block& b : top_paras) push_gt(out.page, std::move(b));
    push_gt(out.page, std::move(title));
    for (Block& b : beside_paras) push_gt(out.page, std::move(b));
    push_gt(out.page, std::move(figure));
    push_gt(out.page, std::move(caption));
    for (Block& b : tail_paras) push_gt(out.page, std::move(b));
    return out;
}

GeneratedPage gen_vertical(Rng& rng, int n) {
    GeneratedPage out;
    out.page = make_page("vertical");
    const int gutter = 14;
    const int width = std::min(
        88, static_cast<int>((840.0 - (n - 1) * gutter) / n));
    if (width < 30) throw InfeasibleLayoutError("too many vertical columns");
    // Right-to-left reading order: the rightmost column comes first.
    double x2 = 920.0;
    for (int i = 0; i < n; ++i) {
        const double y1 = 80.0 + rng.uniform_int(0, 40);
        const double y2 = 1334.0 - rng.uniform_int(0, 40);
        push_gt(out.page, make_block(i, x2 - width, y1, x2, y2, "text"));
        x2 -= width + gutter + rng.uniform_int(0, 8);
    }
    return out;
}

} // namespace

const char* class_name(LayoutClass cls) {
    switch (cls) {
    case LayoutClass::SingleColumn: return "single_column";
    case LayoutClass::DoubleColumn: return "double_column";
    case LayoutClass::MultiColumn3Plus: return "multi_column";
    case LayoutClass::SpanningHeader: return "spanning_header";
    case LayoutClass::LShape: return "l_shape";
    case LayoutClass::CenteredTitlePage: return "centered_title";
    case LayoutClass::VerticalDoc: return "vertical_doc";
    }
    return "single_column";
}

bool class_from_string(const std::string& name, LayoutClass& out) {
    static const std::map<std::string, LayoutClass> lookup = {
        {"single_column", LayoutClass::SingleColumn},
        {"double_column", LayoutClass::DoubleColumn},
        {"multi_column", LayoutClass::MultiColumn3Plus},
        {"spanning_header", LayoutClass::SpanningHeader},
        {"l_shape", LayoutClass::LShape},
        {"centered_title", LayoutClass::CenteredTitlePage},
        {"vertical_doc", LayoutClass::VerticalDoc},
    };
    auto it = lookup.find(name);
    if (it == lookup.end()) return false;
    out = it->second;
    return true;
}

bool is_complex(LayoutClass cls) {
    return cls != LayoutClass::SingleColumn && cls != LayoutClass::DoubleColumn;
}

GeneratedPage generate(LayoutClass cls, uint64_t seed, int n_blocks) {
    if (n_blocks < 1) throw InfeasibleLayoutError("n_blocks must be >= 1");
    Rng rng(seed * 0x51ED2701ULL + static_cast<uint64_t>(cls) * 7919ULL);
    GeneratedPage out;
    switch (cls) {
    case LayoutClass::SingleColumn: out = gen_single_column(rng, n_blocks); break;
    case LayoutClass::DoubleColumn: out = gen_double_column(rng, n_blocks); break;
    case LayoutClass::MultiColumn3Plus: out = gen_multi_column(rng, n_blocks); break;
    case LayoutClass::SpanningHeader: out = gen_spanning_header(rng, n_blocks); break;
    case LayoutClass::LShape: out = gen_l_shape(rng, n_blocks); break;
    case LayoutClass::CenteredTitlePage: out = gen_centered_title(rng, n_blocks); break;
    case LayoutClass::VerticalDoc: out = gen_vertical(rng, n_blocks); break;
    }
    out.page.page_id =
        std::string(class_name(cls)) + "_" + std::to_string(seed);
    out.gt_order.resize(out.page.blocks.size());
    for (size_t i = 0; i < out.page.blocks.size(); ++i) {
        out.gt_order[i] = out.page.blocks[i].id;
    }
    return out;
}

GeneratedPage generate_auto(LayoutClass cls, uint64_t seed) {
    Rng rng(seed ^ 0xA24BAED4963EE407ULL);
    int n = 0;
    switch (cls) {
    case LayoutClass::SingleColumn: n = rng.uniform_int(5, 12); break;
    case LayoutClass::DoubleColumn: n = rng.uniform_int(8, 16); break;
    case LayoutClass::MultiColumn3Plus: n = rng.uniform_int(9, 18); break;
    case LayoutClass::SpanningHeader: n = rng.uniform_int(12, 24); break;
    case LayoutClass::LShape: n = rng.uniform_int(4, 8); break;
    case LayoutClass::CenteredTitlePage: n = rng.uniform_int(8, 13); break;
    case LayoutClass::VerticalDoc: n = rng.uniform_int(5, 12); break;
    }
    return generate(cls, seed, n);
}

CorpusSpec default_corpus_spec() {
    return {
        {LayoutClass::SingleColumn, 28},  {LayoutClass::DoubleColumn, 42},
        {LayoutClass::MultiColumn3Plus, 14}, {LayoutClass::SpanningHeader, 12},
        {LayoutClass::CenteredTitlePage, 2}, {LayoutClass::LShape, 1},
        {LayoutClass::VerticalDoc, 1},
    };
}

Corpus generate_corpus(const CorpusSpec& spec, uint64_t seed) {
    Corpus corpus;
    for (const auto& [cls, count] : spec) {
        for (int i = 0; i < count; ++i) {
            const uint64_t page_seed =
                seed * 1000003ULL + static_cast<uint64_t>(cls) * 4241ULL +
                static_cast<uint64_t>(i);
            GeneratedPage page = generate_auto(cls, page_seed);
            char suffix[16];
            std::snprintf(suffix, sizeof(suffix), "_%03d", i);
            page.page.page_id = std::string(class_name(cls)) + suffix;
            corpus.split_of[page.page.page_id] =
                is_complex(cls) ? "complex" : "regular";
            corpus.pages.push_back(std::move(page));
        }
    }
    return corpus;
}

} // namespace readorder::synth
