#include <algorithm>

#include "doctest.h"

#include "readorder/premask.hpp"
#include "readorder/synth.hpp"

using namespace readorder;

namespace {

Page page_with_labels(const std::vector<const char*>& labels) {
    Page page;
    page.page_id = "p";
    page.width = 1000;
    page.height = 1400;
    for (size_t i = 0; i < labels.size(); ++i) {
        Block b;
        b.id = static_cast<int>(i);
        b.bbox = {100.0, 50.0 + 100.0 * i, 900.0, 120.0 + 100.0 * i};
        b.label = labels[i];
        page.blocks.push_back(b);
    }
    return page;
}

} // namespace

TEST_CASE("figures are masked, text stays in core") {
    const Page page = page_with_labels({"text", "text", "figure"});
    const MaskPartition p = build_premask(page, Taxonomy::defaults());
    CHECK(p.core.size() == 2);
    REQUIRE(p.masked.size() == 1);
    CHECK(p.masked[0].label == "figure");
}

TEST_CASE("pure text page masks nothing") {
    const Page page = page_with_labels({"text"});
    const MaskPartition p = build_premask(page, Taxonomy::defaults());
    CHECK(p.core.size() == 1);
    CHECK(p.masked.empty());
}

TEST_CASE("page of only dynamic elements yields an empty core") {
    const Page page = page_with_labels({"title", "table", "figure"});
    const MaskPartition p = build_premask(page, Taxonomy::defaults());
    CHECK(p.core.empty());
    CHECK(p.masked.size() == 3);
}

TEST_CASE("captions and headers stay in core") {
    const Page page =
        page_with_labels({"figure_caption", "table_caption", "header", "footer"});
    const MaskPartition p = build_premask(page, Taxonomy::defaults());
    CHECK(p.core.size() == 4);
    CHECK(p.masked.empty());
}

TEST_CASE("premask is a partition and idempotent") {
    const Taxonomy tax = Taxonomy::defaults();
    for (int seed = 0; seed < 20; ++seed) {
        const auto cls = static_cast<synth::LayoutClass>(seed % 7);
        const Page page = synth::generate_auto(cls, 700 + seed).page;
        const MaskPartition p = build_premask(page, tax);

        CHECK(p.core.size() + p.masked.size() == page.blocks.size());
        std::vector<int> ids;
        for (const Block& b : p.core) ids.push_back(b.id);
        for (const Block& b : p.masked) ids.push_back(b.id);
        std::sort(ids.begin(), ids.end());
        std::vector<int> expected;
        for (const Block& b : page.blocks) expected.push_back(b.id);
        std::sort(expected.begin(), expected.end());
        CHECK(ids == expected);

        // A page already stripped of dynamic elements masks nothing.
        Page stripped = page;
        stripped.blocks = p.core;
        CHECK(build_premask(stripped, tax).masked.empty());
    }
}
