#include <random>

#include "doctest.h"
#include "mlsp/link_tree.h"

using namespace mlsp;

TEST_CASE("originate values") {
    LinkTree t(5);
    t.assign(0, 0, 1, 0);
    t.assign(1, 4, 2, 0);
    CHECK(t.range_min(1, 3).value == 2);
    CHECK(t.range_min(0, 0).value == 1);
    RangeMin all = t.range_min(0, 4);
    CHECK(all.value == 1);
    CHECK(all.index == 0);
    CHECK(all.provenance == 0);
    CHECK(t.range_max(0, 4) == 2);
    CHECK(t.three_smallest(0, 4) == std::vector<int>{1, 2});
    CHECK(t.consistent());
}

TEST_CASE("inactive ranges read as infinity") {
    LinkTree t(6);
    t.assign(0, 5, 3, 1);
    t.assign(2, 4, kInfLinks, 2);
    CHECK(t.range_min(2, 4).value == kInfLinks);
    CHECK(t.range_min(1, 5).value == 3);
    CHECK(t.range_max(0, 5) == kInfLinks);
    CHECK(add_links(kInfLinks, 2) == kInfLinks);
}

TEST_CASE("relaxing a uniform range lowers both bounds") {
    LinkTree t(8);
    t.assign(0, 7, 6, 1);
    t.relax(0, 7, 4, 2);
    CHECK(t.range_min(0, 7).value == 4);
    CHECK(t.range_max(0, 7) == 4);
    CHECK(t.range_min(3, 3).provenance == 2);
    t.relax(2, 5, 9, 3);
    CHECK(t.range_max(0, 7) == 4);
    CHECK(t.range_min(2, 2).provenance == 2);
    CHECK(t.consistent());
}

TEST_CASE("empty or out-of-range queries are rejected") {
    LinkTree t(4);
    CHECK_THROWS(t.range_min(3, 2));
    CHECK_THROWS(t.range_min(0, 4));
    ArrayLinkStore a(4);
    CHECK_THROWS(a.range_min(2, 1));
}

TEST_CASE("random scripts match the array store") {
    std::mt19937_64 rng(17);
    long ops = 0;
    for (int script = 0; script < 40; ++script) {
        std::size_t m = 1 + rng() % 64;
        LinkTree tree(m);
        ArrayLinkStore arr(m);
        for (int step = 0; step < 2500; ++step, ++ops) {
            std::size_t a = rng() % m, b = rng() % m;
            if (a > b) std::swap(a, b);
            int kind = static_cast<int>(rng() % 5);
            int value = (rng() % 8 == 0) ? kInfLinks : static_cast<int>(rng() % 12);
            if (kind == 0) {
                tree.assign(a, b, value, step);
                arr.assign(a, b, value, step);
            } else if (kind == 1) {
                tree.relax(a, b, value, step);
                arr.relax(a, b, value, step);
            } else {
                RangeMin x = tree.range_min(a, b), y = arr.range_min(a, b);
                REQUIRE(x.value == y.value);
                REQUIRE(x.index == y.index);
                REQUIRE(x.provenance == y.provenance);
                REQUIRE(tree.range_max(a, b) == arr.range_max(a, b));
                REQUIRE(tree.three_smallest(a, b) == arr.three_smallest(a, b));
            }
            if (step % 97 == 0) REQUIRE(tree.consistent());
        }
    }
    CHECK(ops >= 100000);
}
