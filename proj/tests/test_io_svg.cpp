#include <algorithm>

#include "doctest.h"

#include "readorder/engine.hpp"
#include "readorder/errors.hpp"
#include "readorder/io.hpp"
#include "readorder/svg.hpp"
#include "readorder/synth.hpp"

using namespace readorder;

namespace {

const char* kMinimalDoc = R"({
  "page_id": "demo",
  "page_size": [1000, 1400],
  "blocks": [
    {"bbox": [100, 100, 900, 200], "label": "text"}
  ]
})";

} // namespace

TEST_CASE("parse a minimal one-block document") {
    const Page page = io::parse_page(kMinimalDoc);
    CHECK(page.page_id == "demo");
    CHECK(page.width == 1000);
    CHECK(page.height == 1400);
    REQUIRE(page.blocks.size() == 1);
    CHECK(page.blocks[0].id == 0);
    CHECK(page.blocks[0].label == "text");
    CHECK_FALSE(page.blocks[0].gt_index.has_value());
}

TEST_CASE("inverted bbox names the offending block") {
    const char* doc = R"({
      "page_id": "bad",
      "page_size": [100, 100],
      "blocks": [
        {"bbox": [1, 1, 9, 9], "label": "text"},
        {"bbox": [10, 10, 5, 20], "label": "text"}
      ]
    })";
    CHECK_THROWS_WITH_AS(io::parse_page(doc),
                         doctest::Contains("blocks[1].bbox"), SchemaError);
}

TEST_CASE("duplicate reading-order indices are rejected") {
    const char* doc = R"({
      "page_id": "bad",
      "page_size": [100, 100],
      "blocks": [
        {"bbox": [1, 1, 9, 9], "label": "text", "index": 0},
        {"bbox": [1, 11, 9, 19], "label": "text", "index": 0},
        {"bbox": [1, 21, 9, 29], "label": "text", "index": 1}
      ]
    })";
    CHECK_THROWS_AS(io::parse_page(doc), DuplicateIndexError);
}

TEST_CASE("degenerate boxes are rejected at parse time") {
    const char* doc = R"({
      "page_id": "bad",
      "page_size": [100, 100],
      "blocks": [{"bbox": [1, 1, 1.0000001, 9], "label": "text"}]
    })";
    CHECK_THROWS_AS(io::parse_page(doc), SchemaError);
}

TEST_CASE("out-of-page boxes are clamped with a warning") {
    const char* doc = R"({
      "page_id": "clamp",
      "page_size": [100, 100],
      "blocks": [{"bbox": [50, 50, 140, 90], "label": "text"}]
    })";
    std::vector<std::string> warnings;
    const Page page = io::parse_page(doc, &warnings);
    CHECK(warnings.size() == 1);
    CHECK(page.blocks[0].bbox.x2 == 100);
}

TEST_CASE("empty block arrays are rejected") {
    const char* doc = R"({"page_id": "x", "page_size": [10, 10], "blocks": []})";
    CHECK_THROWS_AS(io::parse_page(doc), SchemaError);
}

TEST_CASE("round trip preserves values exactly") {
    const auto generated = synth::generate_auto(synth::LayoutClass::DoubleColumn, 5);
    const std::string first = io::page_to_json(generated.page);
    const Page reparsed = io::parse_page(first);
    CHECK(reparsed.page_id == generated.page.page_id);
    REQUIRE(reparsed.blocks.size() == generated.page.blocks.size());
    for (size_t i = 0; i < reparsed.blocks.size(); ++i) {
        CHECK(reparsed.blocks[i].bbox.x1 == generated.page.blocks[i].bbox.x1);
        CHECK(reparsed.blocks[i].bbox.y2 == generated.page.blocks[i].bbox.y2);
        CHECK(reparsed.blocks[i].label == generated.page.blocks[i].label);
        CHECK(reparsed.blocks[i].gt_index == generated.page.blocks[i].gt_index);
    }
    CHECK(io::page_to_json(reparsed) == first);
}

TEST_CASE("indexed_order reads the encoded permutation") {
    const char* doc = R"({
      "page_id": "gt",
      "page_size": [100, 100],
      "blocks": [
        {"bbox": [1, 1, 9, 9], "label": "text", "index": 2},
        {"bbox": [1, 11, 9, 19], "label": "text", "index": 0},
        {"bbox": [1, 21, 9, 29], "label": "text", "index": 1}
      ]
    })";
    const Page page = io::parse_page(doc);
    CHECK(io::indexed_order(page) == std::vector<int>{1, 2, 0});
}

TEST_CASE("engine output is invariant to block storage order") {
    for (int seed = 0; seed < 10; ++seed) {
        const auto cls = static_cast<synth::LayoutClass>(seed % 7);
        Page page = synth::generate_auto(cls, 6000 + seed).page;
        const Taxonomy tax = Taxonomy::defaults();
        const OrderResult base = order_page(page, Engine::XyCutPP, Params{}, tax);

        // The physical reading sequence: boxes in predicted order.
        auto box_sequence = [](const Page& p, const std::vector<int>& order) {
            std::vector<std::array<double, 4>> seq;
            for (int id : order) {
                for (const Block& b : p.blocks) {
                    if (b.id == id) {
                        seq.push_back({b.bbox.x1, b.bbox.y1, b.bbox.x2, b.bbox.y2});
                    }
                }
            }
            return seq;
        };
        const auto base_seq = box_sequence(page, base.order);

        synth::Rng rng(seed);
        Page shuffled = page;
        for (size_t i = shuffled.blocks.size(); i > 1; --i) {
            std::swap(shuffled.blocks[i - 1], shuffled.blocks[rng.next() % i]);
        }
        // Reassign positional ids the way the parser would after a rewrite.
        for (size_t i = 0; i < shuffled.blocks.size(); ++i) {
            shuffled.blocks[i].id = static_cast<int>(i);
        }
        const OrderResult moved = order_page(shuffled, Engine::XyCutPP, Params{}, tax);
        CHECK(box_sequence(shuffled, moved.order) == base_seq);
    }
}

TEST_CASE("svg contains one rect per block and ranked labels") {
    const auto generated = synth::generate(synth::LayoutClass::SingleColumn, 1, 3);
    const std::vector<int> order = generated.gt_order;
    const std::string svg_text = svg::render(generated.page, order);

    auto count = [&svg_text](const std::string& needle) {
        size_t n = 0;
        size_t pos = 0;
        while ((pos = svg_text.find(needle, pos)) != std::string::npos) {
            ++n;
            pos += needle.size();
        }
        return n;
    };
    CHECK(count("<rect") == 4); // page background + 3 blocks
    CHECK(count("<text") == 3);
    CHECK(svg_text.find(">0</text>") != std::string::npos);
    CHECK(svg_text.find(">1</text>") != std::string::npos);
    CHECK(svg_text.find(">2</text>") != std::string::npos);
    CHECK(count("<line") == 2); // arrows between consecutive blocks

    // Byte-identical across repeated renders.
    CHECK(svg::render(generated.page, order) == svg_text);
}

TEST_CASE("explicit sparse block ids survive the whole pipeline") {
    const char* doc = R"({
      "page_id": "sparse",
      "page_size": [1000, 1400],
      "blocks": [
        {"bbox": [100, 80, 900, 200], "label": "text", "id": 70},
        {"bbox": [100, 260, 900, 380], "label": "figure", "id": 7},
        {"bbox": [100, 440, 900, 560], "label": "text", "id": 700}
      ]
    })";
    const Page page = io::parse_page(doc);
    const Taxonomy tax = Taxonomy::defaults();
    for (Engine engine : {Engine::Baseline, Engine::Premask, Engine::Mgs,
                          Engine::XyCutPP}) {
        std::vector<int> order = order_page(page, engine, Params{}, tax).order;
        std::sort(order.begin(), order.end());
        CHECK(order == std::vector<int>{7, 70, 700});
    }
    // Duplicate explicit ids are rejected.
    const char* dup = R"({
      "page_id": "dup",
      "page_size": [1000, 1400],
      "blocks": [
        {"bbox": [100, 80, 900, 200], "label": "text", "id": 7},
        {"bbox": [100, 260, 900, 380], "label": "text", "id": 7}
      ]
    })";
    CHECK_THROWS_AS(io::parse_page(dup), SchemaError);
}

TEST_CASE("svg rejects non-permutation orders") {
    const auto generated = synth::generate(synth::LayoutClass::SingleColumn, 1, 3);
    CHECK_THROWS_AS(svg::render(generated.page, {0, 1}), NotAPermutationError);
    CHECK_THROWS_AS(svg::render(generated.page, {0, 1, 1}), NotAPermutationError);
}
