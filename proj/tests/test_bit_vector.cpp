#include <doctest.h>

#include <random>
#include <set>

#include "fca/bit_vector.hpp"

using fca::BitVector;

TEST_CASE("width and trimming across word boundaries") {
    for (std::size_t w : {0u, 1u, 63u, 64u, 65u, 130u}) {
        BitVector full(w, true);
        CHECK(full.count() == w);
        CHECK(full.all());
        BitVector empty(w);
        CHECK(empty.none());
        CHECK(empty.find_first() == w);
    }
}

TEST_CASE("iteration visits set bits in ascending order") {
    BitVector v(200);
    for (std::size_t i : {0u, 5u, 63u, 64u, 127u, 199u}) v.set(i);
    CHECK(v.indices() == std::vector<std::size_t>{0, 5, 63, 64, 127, 199});
    CHECK(v.find_next(65) == 127);
    CHECK(v.find_next(200) == 200);
}

TEST_CASE("equal_below and truncate agree with a bitwise reference") {
    std::mt19937_64 rng(7);
    std::bernoulli_distribution coin(0.5);
    for (int round = 0; round < 200; ++round) {
        const std::size_t w = rng() % 150;
        BitVector a(w), b(w);
        std::vector<bool> ra(w), rb(w);
        for (std::size_t i = 0; i < w; ++i) {
            ra[i] = coin(rng);
            rb[i] = ra[i] ? coin(rng) || coin(rng) : coin(rng) && coin(rng);
            a.assign(i, ra[i]);
            b.assign(i, rb[i]);
        }
        const std::size_t limit = w ? rng() % (w + 1) : 0;
        bool expect = true;
        for (std::size_t i = 0; i < limit; ++i) expect = expect && ra[i] == rb[i];
        CHECK(a.equal_below(b, limit) == expect);

        BitVector t = a;
        t.truncate(limit);
        for (std::size_t i = 0; i < w; ++i) CHECK(t.test(i) == (i < limit && ra[i]));

        bool sub = true;
        for (std::size_t i = 0; i < w; ++i) sub = sub && (!ra[i] || rb[i]);
        CHECK(a.is_subset_of(b) == sub);
    }
}

TEST_CASE("set algebra") {
    BitVector a(70), b(70);
    a.set(1);
    a.set(69);
    b.set(69);
    b.set(3);
    CHECK((a & b).indices() == std::vector<std::size_t>{69});
    CHECK((a | b).indices() == std::vector<std::size_t>{1, 3, 69});
    CHECK((a - b).indices() == std::vector<std::size_t>{1});
    CHECK(a.hash() == BitVector(a).hash());
}
