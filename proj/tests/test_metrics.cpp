#include <algorithm>
#include <numeric>
#include <vector>

#include "doctest.h"

#include "oracles.hpp"
#include "readorder/errors.hpp"
#include "readorder/metrics.hpp"
#include "readorder/synth.hpp"

using namespace readorder;
using namespace readorder::metrics;

namespace {

std::vector<int> identity(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

std::vector<int> shuffled(std::vector<int> v, synth::Rng& rng) {
    for (size_t i = v.size(); i > 1; --i) {
        std::swap(v[i - 1], v[rng.next() % i]);
    }
    return v;
}

} // namespace

TEST_CASE("bleu on identical sequences is 1") {
    const std::vector<int> s = {1, 2, 3, 4, 5};
    CHECK(bleu4_blocks(s, s) == doctest::Approx(1.0));
    const std::vector<int> three = {1, 2, 3};
    CHECK(bleu4_blocks(three, three) == doctest::Approx(1.0));
    const std::vector<int> one = {42};
    CHECK(bleu4_blocks(one, one) == doctest::Approx(1.0));
}

TEST_CASE("a tail swap kills the 4-gram precision") {
    const std::vector<int> pred = {1, 2, 3, 5, 4};
    const std::vector<int> ref = {1, 2, 3, 4, 5};
    CHECK(bleu4_blocks(pred, ref) == doctest::Approx(0.0));
}

TEST_CASE("brevity penalty applies to short hypotheses") {
    const std::vector<int> pred = {1, 2, 3, 4};
    const std::vector<int> ref = {1, 2, 3, 4, 5};
    // Clipped precisions are 1 at K = 4; only BP remains.
    CHECK(bleu4_blocks(pred, ref) == doctest::Approx(std::exp(1.0 - 5.0 / 4.0)));
    // Longer hypotheses are not length-penalized.
    CHECK(bleu4_blocks(ref, pred) ==
          doctest::Approx(std::exp((std::log(4.0 / 5.0) + std::log(3.0 / 4.0) +
                                    std::log(2.0 / 3.0) + std::log(1.0 / 2.0)) /
                                   4.0)));
}

TEST_CASE("bleu rejects empty sequences") {
    const std::vector<int> s = {1};
    CHECK_THROWS_AS(bleu4_blocks({}, s), EmptySequenceError);
    CHECK_THROWS_AS(bleu4_blocks(s, {}), EmptySequenceError);
}

TEST_CASE("ard on identity, reversal, and adjacent swap") {
    const auto id4 = identity(4);
    CHECK(ard(id4, id4) == doctest::Approx(0.0));

    std::vector<int> rev = id4;
    std::reverse(rev.begin(), rev.end());
    CHECK(ard(rev, id4) == doctest::Approx(0.5));

    const std::vector<int> swapped = {0, 2, 1, 3};
    CHECK(ard(swapped, id4) == doctest::Approx(0.125));
}

TEST_CASE("ard closed forms for reversal and adjacent swap") {
    for (int n = 2; n <= 10; ++n) {
        const auto id = identity(n);
        std::vector<int> rev = id;
        std::reverse(rev.begin(), rev.end());
        const double expected_rev =
            n % 2 == 0 ? 0.5
                       : (static_cast<double>(n) * n - 1.0) /
                             (2.0 * n * n);
        CHECK(ard(rev, id) == doctest::Approx(expected_rev));

        std::vector<int> swapped = id;
        std::swap(swapped[0], swapped[1]);
        CHECK(ard(swapped, id) == doctest::Approx(2.0 / (static_cast<double>(n) * n)));
    }
}

TEST_CASE("ard requires a permutation pair") {
    const std::vector<int> a = {0, 1, 2};
    const std::vector<int> b = {0, 1, 3};
    CHECK_THROWS_AS(ard(a, b), NotAPermutationError);
    const std::vector<int> dup = {0, 1, 1};
    CHECK_THROWS_AS(ard(dup, a), NotAPermutationError);
}

TEST_CASE("kendall tau on identity, reversal, and one swap") {
    const auto id4 = identity(4);
    CHECK(kendall_tau(id4, id4) == doctest::Approx(1.0));
    std::vector<int> rev = id4;
    std::reverse(rev.begin(), rev.end());
    CHECK(kendall_tau(rev, id4) == doctest::Approx(-1.0));
    const std::vector<int> swapped = {0, 2, 1, 3};
    CHECK(kendall_tau(swapped, id4) == doctest::Approx(4.0 / 6.0));
    const std::vector<int> single = {0};
    CHECK(kendall_tau(single, single) == doctest::Approx(1.0));
}

TEST_CASE("metrics agree with brute-force oracles on random pairs") {
    synth::Rng rng(123);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = rng.uniform_int(1, 20);
        const auto ref = shuffled(identity(n), rng);
        const auto pred = shuffled(identity(n), rng);
        CHECK(bleu4_blocks(pred, ref) ==
              doctest::Approx(oracles::bleu4_naive(pred, ref)).epsilon(1e-9));
        CHECK(ard(pred, ref) ==
              doctest::Approx(oracles::ard_naive(pred, ref)).epsilon(1e-9));
        if (n >= 2) {
            CHECK(kendall_tau(pred, ref) ==
                  doctest::Approx(oracles::tau_naive(pred, ref)).epsilon(1e-9));
        }
    }
}

TEST_CASE("metric outputs stay in their declared ranges") {
    synth::Rng rng(321);
    for (int trial = 0; trial < 10000; ++trial) {
        const int n = rng.uniform_int(2, 20);
        const auto ref = shuffled(identity(n), rng);
        const auto pred = shuffled(identity(n), rng);
        const double b = bleu4_blocks(pred, ref);
        CHECK(b >= 0.0);
        CHECK(b <= 1.0 + 1e-12);
        const double a = ard(pred, ref);
        CHECK(a >= 0.0);
        const double t = kendall_tau(pred, ref);
        CHECK(t >= -1.0 - 1e-12);
        CHECK(t <= 1.0 + 1e-12);
    }
}

TEST_CASE("metrics are invariant under id relabeling") {
    synth::Rng rng(555);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = rng.uniform_int(2, 16);
        const auto ref = shuffled(identity(n), rng);
        const auto pred = shuffled(identity(n), rng);

        // Random bijection onto a sparse id space.
        std::vector<int> image = identity(n);
        image = shuffled(image, rng);
        auto relabel = [&image](const std::vector<int>& v) {
            std::vector<int> out;
            out.reserve(v.size());
            for (int id : v) out.push_back(image[static_cast<size_t>(id)] * 17 + 3);
            return out;
        };
        CHECK(bleu4_blocks(pred, ref) ==
              doctest::Approx(bleu4_blocks(relabel(pred), relabel(ref))));
        CHECK(ard(pred, ref) == doctest::Approx(ard(relabel(pred), relabel(ref))));
        CHECK(kendall_tau(pred, ref) ==
              doctest::Approx(kendall_tau(relabel(pred), relabel(ref))));
    }
}

TEST_CASE("evaluate aggregates per split") {
    std::map<std::string, std::vector<int>> ref = {
        {"a", {0, 1, 2, 3}}, {"b", {0, 1, 2, 3}}, {"c", {0, 1, 2, 3}}};
    std::map<std::string, std::vector<int>> pred = {
        {"a", {0, 1, 2, 3}}, {"b", {3, 2, 1, 0}}, {"c", {0, 1, 2, 3}}};
    const std::map<std::string, std::string> split_of = {
        {"a", "regular"}, {"b", "complex"}, {"c", "regular"}};

    const MetricReport report = evaluate(pred, ref, split_of);
    CHECK(report.per_page.at("a").bleu4 == doctest::Approx(1.0));
    CHECK(report.per_page.at("b").tau == doctest::Approx(-1.0));
    CHECK(report.splits.at("regular").bleu4 == doctest::Approx(1.0));
    CHECK(report.splits.at("regular").pages == 2);
    CHECK(report.splits.at("complex").pages == 1);
    CHECK(report.splits.at("all").pages == 3);

    pred.erase("b");
    CHECK_THROWS_AS(evaluate(pred, ref, split_of), MissingPageError);
}

TEST_CASE("fps bench measures the ordering callable") {
    std::vector<Page> pages;
    for (int i = 0; i < 4; ++i) {
        pages.push_back(synth::generate_auto(synth::LayoutClass::SingleColumn,
                                             9000 + i)
                            .page);
    }
    const auto engine = [](const Page& page) {
        OrderResult r;
        r.page_id = page.page_id;
        for (const Block& b : page.blocks) r.order.push_back(b.id);
        return r;
    };
    const FpsReport report = fps_bench(pages, engine, 3);
    CHECK(report.repeats == 3);
    CHECK(report.pages == 4);
    CHECK(report.mean_fps > 0.0);
    CHECK(report.min_fps <= report.mean_fps);
    CHECK(report.mean_fps <= report.max_fps);

    CHECK_THROWS_AS(fps_bench({}, engine, 3), EmptyCorpusError);
}
