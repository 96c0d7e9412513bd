#pragma once

// Hand-built regression pages exercising the two classic projection-cut
// failure shapes: a cell spanning two columns mid-page, and an L-shaped
// arrangement where a figure shares a row band with column text.

#include <vector>

#include "readorder/model.hpp"

namespace fixtures {

using readorder::Block;
using readorder::Page;

inline Block block(int id, double x1, double y1, double x2, double y2,
                   const char* label) {
    Block b;
    b.id = id;
    b.bbox = {x1, y1, x2, y2};
    b.label = label;
    return b;
}

// Seven cells: a 2x2 grid on top, a large spanning cell in the middle, and
// two cells at the bottom. Correct reading is column-wise through the top
// grid, then the spanning cell, then the bottom row; a plain horizontal-first
// cut reads the top grid row-wise instead.
struct SpanningCellFixture {
    Page page;
    std::vector<int> gt;      // {0, 2, 1, 3, 4, 5, 6}
    std::vector<int> baseline; // {0, 1, 2, 3, 4, 5, 6}
};

inline SpanningCellFixture spanning_cell_fixture() {
    SpanningCellFixture f;
    f.page.page_id = "fixture_spanning_cell";
    f.page.width = 1000.0;
    f.page.height = 1400.0;
    f.page.blocks = {
        block(0, 60, 150, 480, 250, "text"),   // top-left
        block(1, 520, 150, 940, 250, "text"),  // top-right
        block(2, 60, 270, 480, 370, "text"),   // second-left
        block(3, 520, 270, 940, 370, "text"),  // second-right
        block(4, 60, 580, 940, 820, "text"),   // spanning cell
        block(5, 60, 1030, 480, 1130, "text"), // bottom-left
        block(6, 520, 1030, 940, 1130, "text"),// bottom-right
    };
    f.gt = {0, 2, 1, 3, 4, 5, 6};
    f.baseline = {0, 1, 2, 3, 4, 5, 6};
    return f;
}

// Two stacked paragraphs on the left, a figure sharing the first paragraph's
// row band on the right, and a full-width paragraph below. Correct reading
// finishes the left column before the figure; the row-band cut interleaves
// the figure after the first paragraph.
struct LShapeFixture {
    Page page;
    std::vector<int> gt;      // {0, 1, 2, 3}
    std::vector<int> baseline; // {0, 2, 1, 3}
};

inline LShapeFixture l_shape_fixture() {
    LShapeFixture f;
    f.page.page_id = "fixture_l_shape";
    f.page.width = 1000.0;
    f.page.height = 1400.0;
    f.page.blocks = {
        block(0, 60, 100, 480, 240, "text"),   // left paragraph 1
        block(1, 60, 260, 480, 400, "text"),   // left paragraph 2
        block(2, 520, 120, 940, 240, "figure"),// figure beside paragraph 1
        block(3, 60, 440, 940, 700, "text"),   // full-width paragraph
    };
    f.gt = {0, 1, 2, 3};
    f.baseline = {0, 2, 1, 3};
    return f;
}

} // namespace fixtures
