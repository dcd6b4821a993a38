#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "uefs/error.hpp"
#include "uefs/metrics.hpp"
#include "uefs/rng.hpp"

using namespace uefs;

namespace {

// Random scores with deliberate ties on half the instances.
std::vector<double> randomScores(size_t n, uint64_t seed, bool quantized) {
    Rng rng(seed);
    std::vector<double> s(n);
    for (double& v : s) v = quantized ? std::floor(rng.unit() * 5.0) / 5.0 : rng.unit();
    return s;
}

}  // namespace

TEST_SUITE("metrics") {

TEST_CASE("auc pins the textbook cases") {
    CHECK(auc({0.1, 0.2, 0.8, 0.9}, {0, 0, 1, 1}) == 1.0);
    CHECK(auc({0.5, 0.5, 0.5, 0.5}, {0, 1, 0, 1}) == 0.5);

    // Pairs: (0.35 vs 0.1) + (0.8 vs 0.1) + (0.8 vs 0.4) win, (0.35 vs 0.4)
    // loses -> 3/4.
    CHECK(auc({0.1, 0.4, 0.35, 0.8}, {0, 0, 1, 1}) == 0.75);
}

TEST_CASE("auc rejects degenerate inputs") {
    CHECK_THROWS_AS(auc({0.1, 0.2}, {1, 1}), ValidationError);
    CHECK_THROWS_AS(auc({0.1, 0.2}, {0, 0}), ValidationError);
    CHECK_THROWS_AS(auc({0.1, 0.2}, {0, 2}), ValidationError);
    CHECK_THROWS_AS(auc({0.1}, {0, 1}), ValidationError);
    CHECK_THROWS_AS(auc({}, {}), ValidationError);
}

TEST_CASE("auc equals both the pair-count definition and trapezoidal integration") {
    for (uint64_t seed = 0; seed < 50; ++seed) {
        const size_t n = 2 + seed % 40;
        const std::vector<double> scores = randomScores(n, 4000 + seed, seed % 2 == 0);
        const std::vector<int> labels = fixtures::randomLabels(n, 4100 + seed);

        const double got = auc(scores, labels);
        CHECK(got == oracle::pairCountAuc(scores, labels));
        CHECK(std::abs(got - oracle::trapezoidAuc(scores, labels)) <= 1e-12);
    }
}

TEST_CASE("auc complements when labels flip, for tie-free scores") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        const size_t n = 10 + seed;
        const std::vector<double> scores = randomScores(n, 4200 + seed, false);
        const std::vector<int> labels = fixtures::randomLabels(n, 4300 + seed);
        std::vector<int> flipped(labels);
        for (int& y : flipped) y = 1 - y;
        CHECK(auc(scores, labels) + auc(scores, flipped) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("auc is invariant under strictly increasing transforms") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        const std::vector<double> scores = randomScores(15, 4400 + seed, true);
        const std::vector<int> labels = fixtures::randomLabels(15, 4500 + seed);
        std::vector<double> warped(scores);
        for (double& v : warped) v = std::exp(3.0 * v) - 2.0;
        CHECK(auc(scores, labels) == auc(warped, labels));
    }
}

TEST_CASE("accuracy pins the direct-count cases") {
    CHECK(accuracy({1, 0, 1}, {1, 0, 1}) == 1.0);
    CHECK(accuracy({1, 0, 1}, {0, 1, 0}) == 0.0);
    CHECK(accuracy({1, 0, 1, 1}, {1, 1, 1, 0}) == 0.5);
    CHECK_THROWS_AS(accuracy({1, 0}, {1}), ValidationError);
    CHECK_THROWS_AS(accuracy({}, {}), ValidationError);
}

TEST_CASE("accuracy of complemented predictions mirrors") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        const std::vector<int> preds = fixtures::randomLabels(20, 4600 + seed);
        const std::vector<int> labels = fixtures::randomLabels(20, 4700 + seed);
        std::vector<int> flipped(preds);
        for (int& p : flipped) p = 1 - p;
        int hits = 0;
        for (size_t i = 0; i < preds.size(); ++i) hits += preds[i] == labels[i] ? 1 : 0;
        // Complementing every prediction complements the hit count; both
        // accuracies are exact quotients of complementary integer counts.
        CHECK(accuracy(preds, labels) == hits / 20.0);
        CHECK(accuracy(flipped, labels) == (20 - hits) / 20.0);
    }
}

TEST_CASE("confusion pins the hand cases and the brute-force tally") {
    const Confusion same = confusion({1, 1, 0}, {1, 1, 0});
    CHECK(same.tp == 2);
    CHECK(same.tn == 1);
    CHECK(same.fp == 0);
    CHECK(same.fn == 0);

    const Confusion flipped = confusion({0, 0, 1}, {1, 1, 0});
    CHECK(flipped.tp == 0);
    CHECK(flipped.tn == 0);
    CHECK(flipped.fn == 2);
    CHECK(flipped.fp == 1);

    for (uint64_t seed = 0; seed < 8; ++seed) {
        const std::vector<int> preds = fixtures::randomLabels(100, 4800 + seed);
        const std::vector<int> labels = fixtures::randomLabels(100, 4900 + seed);
        const Confusion c = confusion(preds, labels);
        size_t tp = 0, fp = 0, tn = 0, fn = 0;
        for (size_t i = 0; i < 100; ++i) {
            if (preds[i] == 1 && labels[i] == 1) ++tp;
            if (preds[i] == 1 && labels[i] == 0) ++fp;
            if (preds[i] == 0 && labels[i] == 0) ++tn;
            if (preds[i] == 0 && labels[i] == 1) ++fn;
        }
        CHECK(c.tp == tp);
        CHECK(c.fp == fp);
        CHECK(c.tn == tn);
        CHECK(c.fn == fn);
        CHECK(accuracy(preds, labels) ==
              static_cast<double>(tp + tn) / static_cast<double>(100));
    }
}

TEST_CASE("stratified folds deal each class round-robin") {
    std::vector<int> balanced(20, 0);
    for (size_t i = 0; i < 10; ++i) balanced[i] = 1;
    const std::vector<int> assignment = stratifiedFolds(balanced, 10, 42);
    std::vector<int> posPerFold(10, 0), negPerFold(10, 0);
    for (size_t i = 0; i < balanced.size(); ++i) {
        (balanced[i] == 1 ? posPerFold : negPerFold)[static_cast<size_t>(assignment[i])] += 1;
    }
    for (int f = 0; f < 10; ++f) {
        CHECK(posPerFold[static_cast<size_t>(f)] == 1);
        CHECK(negPerFold[static_cast<size_t>(f)] == 1);
    }

    std::vector<int> eight(8, 0);
    for (size_t i = 0; i < 4; ++i) eight[i] = 1;
    const std::vector<int> halves = stratifiedFolds(eight, 2, 7);
    std::vector<int> pos(2, 0), neg(2, 0);
    for (size_t i = 0; i < eight.size(); ++i) {
        (eight[i] == 1 ? pos : neg)[static_cast<size_t>(halves[i])] += 1;
    }
    CHECK(pos == std::vector<int>{2, 2});
    CHECK(neg == std::vector<int>{2, 2});
}

TEST_CASE("stratified folds keep class counts within one of proportional") {
    // 53 positives + 573 negatives over 10 folds.
    std::vector<int> labels(626, 0);
    for (size_t i = 0; i < 53; ++i) labels[i * 11] = 1;
    const std::vector<int> assignment = stratifiedFolds(labels, 10, 11);
    std::vector<int> pos(10, 0), neg(10, 0);
    for (size_t i = 0; i < labels.size(); ++i) {
        (labels[i] == 1 ? pos : neg)[static_cast<size_t>(assignment[i])] += 1;
    }
    int posTotal = 0, negTotal = 0;
    for (int f = 0; f < 10; ++f) {
        CHECK(pos[static_cast<size_t>(f)] >= 5);  // floor(5.3)
        CHECK(pos[static_cast<size_t>(f)] <= 6);  // ceil(5.3)
        CHECK(neg[static_cast<size_t>(f)] >= 57);
        CHECK(neg[static_cast<size_t>(f)] <= 58);
        posTotal += pos[static_cast<size_t>(f)];
        negTotal += neg[static_cast<size_t>(f)];
    }
    CHECK(posTotal == 53);
    CHECK(negTotal == 573);
}

TEST_CASE("stratified folds are deterministic per seed") {
    const std::vector<int> labels = fixtures::randomLabels(40, 5000);
    CHECK(stratifiedFolds(labels, 5, 9) == stratifiedFolds(labels, 5, 9));
    CHECK(stratifiedFolds(labels, 5, 9) != stratifiedFolds(labels, 5, 10));
}

TEST_CASE("stratified folds validate their inputs") {
    const std::vector<int> labels = {1, 0, 1, 0};
    CHECK_THROWS_AS(stratifiedFolds(labels, 1, 0), ValidationError);
    CHECK_THROWS_AS(stratifiedFolds(labels, 5, 0), ValidationError);  // folds > rows
    CHECK_THROWS_AS(stratifiedFolds({1, 0, 2}, 2, 0), ValidationError);

    const std::vector<int> assignment = stratifiedFolds(labels, 2, 3);
    for (int a : assignment) {
        CHECK(a >= 0);
        CHECK(a < 2);
    }
}

}  // TEST_SUITE
