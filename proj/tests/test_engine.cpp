#include <algorithm>

#include "doctest.h"

#include "readorder/engine.hpp"
#include "readorder/synth.hpp"

using namespace readorder;

namespace {

// Messy detector-style pages: overlapping, touching, and nested boxes with
// mixed labels. None of the clean-layout guarantees hold here; the engines
// must still emit a permutation deterministically.
Page random_messy_page(uint64_t seed) {
    synth::Rng rng(seed);
    Page page;
    page.page_id = "messy_" + std::to_string(seed);
    page.width = 1000;
    page.height = 1400;
    const char* labels[6] = {"text",  "title",          "figure",
                             "table", "figure_caption", "header"};
    const int n = rng.uniform_int(1, 40);
    for (int i = 0; i < n; ++i) {
        Block b;
        b.id = i;
        const double x1 = rng.uniform_int(0, 860);
        const double y1 = rng.uniform_int(0, 1300);
        b.bbox = {x1, y1, x1 + rng.uniform_int(20, 400),
                  y1 + rng.uniform_int(10, 300)};
        b.bbox.x2 = std::min(b.bbox.x2, page.width);
        b.bbox.y2 = std::min(b.bbox.y2, page.height);
        b.label = labels[rng.next() % 6];
        page.blocks.push_back(b);
    }
    return page;
}

} // namespace

TEST_CASE("engine name parsing") {
    CHECK(engine_from_string("baseline") == Engine::Baseline);
    CHECK(engine_from_string("premask") == Engine::Premask);
    CHECK(engine_from_string("mgs") == Engine::Mgs);
    CHECK(engine_from_string("xycut++") == Engine::XyCutPP);
    CHECK(engine_from_string("xycutpp") == Engine::XyCutPP);
    CHECK(engine_from_string("full") == Engine::XyCutPP);
    CHECK_FALSE(engine_from_string("xy").has_value());
    CHECK_FALSE(engine_from_string("").has_value());
}

TEST_CASE("every engine emits a deterministic permutation on messy pages") {
    const Taxonomy tax = Taxonomy::defaults();
    for (uint64_t seed = 0; seed < 60; ++seed) {
        const Page page = random_messy_page(seed);
        std::vector<int> expected;
        for (const Block& b : page.blocks) expected.push_back(b.id);
        std::sort(expected.begin(), expected.end());

        for (Engine engine : {Engine::Baseline, Engine::Premask, Engine::Mgs,
                              Engine::XyCutPP}) {
            const OrderResult first = order_page(page, engine, Params{}, tax);
            std::vector<int> sorted = first.order;
            std::sort(sorted.begin(), sorted.end());
            CHECK(sorted == expected);
            CHECK(order_page(page, engine, Params{}, tax).order == first.order);
        }
    }
}

TEST_CASE("empty and single-block pages") {
    Page empty;
    empty.page_id = "empty";
    empty.width = 100;
    empty.height = 100;
    for (Engine engine : {Engine::Baseline, Engine::Premask, Engine::Mgs,
                          Engine::XyCutPP}) {
        CHECK(order_page(empty, engine).order.empty());
    }

    Page single = empty;
    Block b;
    b.id = 3;
    b.bbox = {10, 10, 90, 40};
    b.label = "figure";
    single.blocks.push_back(b);
    for (Engine engine : {Engine::Baseline, Engine::Premask, Engine::Mgs,
                          Engine::XyCutPP}) {
        CHECK(order_page(single, engine).order == std::vector<int>{3});
    }
}
