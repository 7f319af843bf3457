#include <atomic>
#include <thread>

#include "doctest.h"
#include "piecewise/measures.hpp"
#include "piecewise/oracle.hpp"
#include "piecewise/periodic.hpp"
#include "piecewise/side_distance.hpp"
#include "support/helpers.hpp"

using namespace piecewise;
using piecewise::testing::alpha_n;
using piecewise::testing::for_each_word_upto;
using piecewise::testing::random_word;

TEST_CASE("measure fixtures") {
    const auto abc = make_alphabet("ABC");
    CHECK(h(make_word("CAACBABA", abc)) == 5);
    CHECK(rho(make_word("CAACBABA", abc)) == 3);
    CHECK(h(make_word("CBCBCBCBBCABBABABAAA", abc)) == 10);
    CHECK(rho(make_word("CBCBCBCBBCABBABABAAA", abc)) == 6);
    CHECK(rho(make_word("ABBACCBCCABAABC", abc)) == 5);

    const Word eps = make_word("", make_alphabet("A"));
    CHECK(h(eps) == 1);
    CHECK(rho(eps) == 0);

    const Word a = make_word("A");
    CHECK(h(a) == 2);
    CHECK(h(a) == h_bf(a));
}

TEST_CASE("measure reports consistent witnesses") {
    const Word u = make_word("ABBACCBCCABAABC", make_alphabet("ABC"));
    const MeasureReport rep = measure(u);
    CHECK(rep.h == h(u));
    CHECK(rep.rho == rho(u));
    CHECK(rep.rho == 5);

    REQUIRE(rep.rho_witness.has_value());
    const auto rv = r_vector(u);
    const auto lv = l_vector(u);
    const size_t pos = *rep.rho_witness;
    CHECK(pos == 2);  // earliest position whose vector sum attains the max
    CHECK(rv[pos - 1] + lv[pos - 1] + 1 == rep.rho);

    REQUIRE(rep.h_witness.has_value());
    const auto [cut, letter] = *rep.h_witness;
    const RTable rt(u);
    const LTable lt(u);
    CHECK(rt.at(cut, letter) + lt.at(cut, letter) + 1 == rep.h);

    const MeasureReport empty = measure(make_word("", make_alphabet("A")));
    CHECK(empty.h == 1);
    CHECK(empty.rho == 0);
    CHECK_FALSE(empty.h_witness.has_value());
    CHECK_FALSE(empty.rho_witness.has_value());
}

TEST_CASE("witness ties resolve to smallest cut then smallest letter") {
    // AA is symmetric: several cuts attain the maximum for h
    const MeasureReport rep = measure(make_word("AA"));
    REQUIRE(rep.h_witness.has_value());
    CHECK(rep.h_witness->first == 0);
    CHECK(rep.h_witness->second == 0);
}

TEST_CASE("h equals rho + 1 on at most two letters (exhaustive)") {
    for (int asz = 1; asz <= 2; ++asz) {
        for_each_word_upto(alpha_n(asz), 12, [](const Word& u) {
            CHECK(h(u) == rho(u) + 1);
        });
    }
    // also when the word uses only two letters of a larger alphabet
    std::mt19937_64 rng(61);
    const auto abcd = alpha_n(4);
    for (int it = 0; it < 200; ++it) {
        std::vector<uint8_t> letters(it % 12);
        for (auto& x : letters) x = static_cast<uint8_t>(rng() % 2 ? 1 : 3);
        const Word u(abcd, letters);
        CHECK(h(u) == rho(u) + 1);
    }
}

TEST_CASE("h dominates rho + 1 everywhere") {
    std::mt19937_64 rng(67);
    for (int it = 0; it < 500; ++it) {
        const Word u = random_word(rng, alpha_n(1 + it % 4), it % 40);
        const MeasureReport rep = measure(u);
        CHECK(rep.h >= rep.rho + 1);
        CHECK(rep.rho <= u.length());
        CHECK(rep.h <= u.length() + 1);
    }
}

TEST_CASE("measures agree with the oracles (exhaustive, small)") {
    for_each_word_upto(alpha_n(2), 6, [](const Word& u) {
        CHECK(h(u) == h_bf(u));
        CHECK(rho(u) == rho_bf(u));
    });
    for_each_word_upto(alpha_n(3), 4, [](const Word& u) {
        CHECK(h(u) == h_bf(u));
        CHECK(rho(u) == rho_bf(u));
    });
}

TEST_CASE("monotone under appending and prepending") {
    std::mt19937_64 rng(71);
    for (int it = 0; it < 400; ++it) {
        const auto ab = alpha_n(1 + it % 4);
        const Word u = random_word(rng, ab, it % 20);
        const Word v = random_word(rng, ab, (it * 7) % 20);
        const Word uv = concat(u, v);
        CHECK(h(u) <= h(uv));
        CHECK(h(v) <= h(uv));
        CHECK(rho(u) <= rho(uv));
        CHECK(rho(v) <= rho(uv));
    }
}

TEST_CASE("convex under concatenation") {
    std::mt19937_64 rng(73);
    for (int it = 0; it < 400; ++it) {
        const auto ab = alpha_n(1 + it % 4);
        const Word u = random_word(rng, ab, it % 20);
        const Word v = random_word(rng, ab, (it * 11) % 20);
        const Word uv = concat(u, v);
        CHECK(rho(uv) <= rho(u) + rho(v));
        CHECK(h(uv) <= std::max(h(u) + rho(v), rho(u) + h(v)));
    }
}

TEST_CASE("mirror invariance") {
    for_each_word_upto(alpha_n(2), 5, [](const Word& u) {
        CHECK(h_bf(u) == h_bf(mirror(u)));
        CHECK(rho_bf(u) == rho_bf(mirror(u)));
    });
    std::mt19937_64 rng(79);
    for (int it = 0; it < 100; ++it) {
        const Word u = random_word(rng, alpha_n(1 + it % 4), it % 200);
        CHECK(h(u) == h(mirror(u)));
        CHECK(rho(u) == rho(mirror(u)));
    }
}

TEST_CASE("concurrent callers see consistent results") {
    const Word u = make_word("ABBACCBCCABAABC", make_alphabet("ABC"));
    const Word v = make_word("CAACBABA", make_alphabet("ABC"));
    std::atomic<int> bad{0};
    std::vector<std::thread> workers;
    for (int t = 0; t < 8; ++t) {
        workers.emplace_back([&] {
            for (int it = 0; it < 50; ++it) {
                if (h(u) != 6 || rho(u) != 5 || h(v) != 5 || rho(v) != 3 ||
                    rho_bf(v) != 3 ||
                    h_pow(v, 3) != static_cast<wide_uint>(h(power(v, 3)))) {
                    ++bad;
                }
            }
        });
    }
    for (auto& w : workers) w.join();
    CHECK(bad == 0);
}

TEST_CASE("ambient alphabet does not change the measures of nonempty words") {
    const Word narrow = make_word("CC", make_alphabet("C"));
    const Word wide = make_word("CC", make_alphabet("ABC"));
    CHECK(h(narrow) == h(wide));
    CHECK(rho(narrow) == rho(wide));

    std::mt19937_64 rng(83);
    for (int it = 0; it < 200; ++it) {
        const Word u = random_word(rng, alpha_n(2), 1 + it % 15);
        const Word embedded = make_word(u.text(), alpha_n(2 + it % 3));
        CHECK(h(u) == h(embedded));
        CHECK(rho(u) == rho(embedded));
    }
}
