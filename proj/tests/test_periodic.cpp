#include "doctest.h"
#include "piecewise/errors.hpp"
#include "piecewise/measures.hpp"
#include "piecewise/periodic.hpp"
#include "support/helpers.hpp"

using namespace piecewise;
using piecewise::testing::alpha_n;
using piecewise::testing::conjugate;
using piecewise::testing::for_each_word;
using piecewise::testing::random_full_word;

namespace {

// Cut positions of consecutive arches of u·u·u·..., from the residue map.
std::vector<uint64_t> lambda_sequence(const Word& u, size_t count) {
    const auto entries = alpha_residues(u);
    std::vector<uint64_t> lambdas{0};
    uint64_t pos = 0;
    for (size_t k = 0; k < count; ++k) {
        pos += entries[pos % u.length()];
        lambdas.push_back(pos);
    }
    return lambdas;
}

bool full_alphabet(const Word& u) {
    return static_cast<int>(letters_of(u).size()) == u.alphabet().size();
}

}  // namespace

TEST_CASE("alpha_residues fixtures") {
    const Word u = make_word("AABBCC", make_alphabet("ABC"));
    const auto entries = alpha_residues(u);
    CHECK(entries.size() == 6);
    CHECK(entries[0] == 5);
    CHECK(lambda_sequence(u, 4) == std::vector<uint64_t>{0, 5, 9, 13, 17});

    CHECK(alpha_residues(make_word("A")) == std::vector<uint32_t>{1});

    for (uint32_t e : entries) {
        CHECK(e >= 3);
        CHECK(e <= 6);
    }
}

TEST_CASE("alpha_residues requires every letter to occur") {
    CHECK_THROWS_WITH_AS((void)alpha_residues(make_word("AB", make_alphabet("ABC"))),
                         "alpha_residues: every alphabet letter must occur in the word; "
                         "missing \"C\"",
                         validation_error);
}

TEST_CASE("arch_period fixtures") {
    const PeriodData aabbcc = arch_period(make_word("AABBCC", make_alphabet("ABC")));
    CHECK(aabbcc.length == 6);
    CHECK(aabbcc.transient_arches == 1);
    CHECK(aabbcc.transient == 5);
    CHECK(aabbcc.period == 3);
    CHECK(aabbcc.span == 12);
    CHECK(aabbcc.copies == 2);
    CHECK(aabbcc.slope_num == 2);
    CHECK(aabbcc.slope_den == 3);

    const PeriodData aaa = arch_period(make_word("AAA"));
    CHECK(aaa.transient_arches == 0);
    CHECK(aaa.period == 3);
    CHECK(aaa.span == 3);
    CHECK(aaa.copies == 1);

    const PeriodData abc = arch_period(make_word("ABC"));
    CHECK(abc.transient_arches == 0);
    CHECK(abc.transient == 0);
    CHECK(abc.period == 1);
    CHECK(abc.span == 3);
    CHECK(abc.copies == 1);
    CHECK(abc.slope_num == 1);
    CHECK(abc.slope_den == 1);
}

TEST_CASE("arch_period invariants on random words") {
    std::mt19937_64 rng(113);
    for (int it = 0; it < 300; ++it) {
        const auto ab = alpha_n(1 + it % 4);
        const size_t len = ab->size() + it % 12;
        const Word u = random_full_word(rng, ab, len);
        const PeriodData pd = arch_period(u);
        const uint64_t L = pd.length;
        CHECK(pd.span % L == 0);
        CHECK(pd.span == pd.copies * L);
        CHECK(pd.transient + pd.span <= (ab->size() + 1) * L);
        CHECK(pd.period <= L);
        CHECK(pd.transient_arches + pd.period <= L);

        // after the transient, every period advances by exactly the span
        const auto lambdas =
            lambda_sequence(u, pd.transient_arches + 4 * pd.period + 1);
        CHECK(lambdas[pd.transient_arches] == pd.transient);
        for (uint64_t k = pd.transient_arches; k + pd.period < lambdas.size(); ++k) {
            CHECK(lambdas[k + pd.period] == lambdas[k] + pd.span);
        }
    }
}

TEST_CASE("conjugates share period and copies; mirror shares period (exhaustive)") {
    for (int asz = 1; asz <= 3; ++asz) {
        const auto ab = alpha_n(asz);
        for (size_t len = asz; len <= 6; ++len) {
            for_each_word(ab, len, [&](const Word& u) {
                if (!full_alphabet(u)) return;
                const PeriodData pd = arch_period(u);
                for (size_t i = 1; i < u.length(); ++i) {
                    const PeriodData pc = arch_period(conjugate(u, i));
                    CHECK(pc.period == pd.period);
                    CHECK(pc.copies == pd.copies);
                }
                CHECK(arch_period(mirror(u)).period == pd.period);
            });
        }
    }
}

TEST_CASE("pow fixtures") {
    const Word u = make_word("AABBCC", make_alphabet("ABC"));
    CHECK(h_pow(u, 1) == h(u));
    CHECK(rho_pow(u, 1) == rho(u));
    CHECK(h_pow(u, 0) == 1);
    CHECK(rho_pow(u, 0) == 0);

    const Word eps = make_word("", make_alphabet("A"));
    CHECK(h_pow(eps, 0) == 1);
    CHECK(rho_pow(eps, 0) == 0);
    CHECK_THROWS_AS((void)h_pow(eps, 2), validation_error);
    CHECK_THROWS_AS((void)h_pow(make_word("AB", make_alphabet("ABC")), 2),
                    validation_error);

    for (uint64_t n = 2; n <= 12; ++n) {
        CHECK(h_pow(u, n) == h(power(u, n)));
        CHECK(rho_pow(u, n) == rho(power(u, n)));
    }
    // step law: two more copies cost exactly the arch period
    for (uint64_t n = 2; n <= 40; ++n) {
        CHECK(h_pow(u, n + 2) - h_pow(u, n) == 3);
        CHECK(rho_pow(u, n + 2) - rho_pow(u, n) == 3);
    }
}

TEST_CASE("pow equals direct measurement (randomized, small)") {
    std::mt19937_64 rng(127);
    for (int it = 0; it < 120; ++it) {
        const auto ab = alpha_n(1 + it % 3);
        const Word u = random_full_word(rng, ab, ab->size() + it % 4);
        for (uint64_t n = 0; n <= 20; ++n) {
            REQUIRE(h_pow(u, n) == h(power(u, n)));
            REQUIRE(rho_pow(u, n) == rho(power(u, n)));
        }
    }
}

TEST_CASE("step law holds from the transient threshold on") {
    std::mt19937_64 rng(131);
    for (int it = 0; it < 30; ++it) {
        const auto ab = alpha_n(1 + it % 3);
        const Word u = random_full_word(rng, ab, ab->size() + it % 5);
        const PeriodData pd = arch_period(u);
        const PeriodData pdm = arch_period(mirror(u));
        const uint64_t n_min =
            (pd.transient + pdm.transient + pd.span + pd.length - 1) / pd.length;
        for (uint64_t n = n_min; n < n_min + 5; ++n) {
            CHECK(h_pow(u, n + pd.copies) - h_pow(u, n) == pd.period);
            CHECK(rho_pow(u, n + pd.copies) - rho_pow(u, n) == pd.period);
        }
    }
}

TEST_CASE("pow handles astronomically many copies") {
    const Word a = make_word("A");
    const uint64_t big = uint64_t{9223372036854775807ull};  // 2^63 - 1
    CHECK(to_string(h_pow(a, big)) == "9223372036854775808");
    CHECK(to_string(rho_pow(a, big)) == "9223372036854775807");

    // three arches per copy: the result overflows 64 bits
    const Word u9 = make_word("ABCABCABC", make_alphabet("ABC"));
    const uint64_t n = uint64_t{9000000000000000000ull};
    for (uint64_t m = 1; m <= 15; ++m) {
        REQUIRE(h_pow(u9, m) == h(power(u9, m)));
        REQUIRE(h_pow(u9, m) == 3 * static_cast<wide_uint>(m) + 1);
        REQUIRE(rho_pow(u9, m) == 3 * static_cast<wide_uint>(m));
    }
    CHECK(to_string(h_pow(u9, n)) == "27000000000000000001");
    CHECK(to_string(rho_pow(u9, n)) == "27000000000000000000");
}

TEST_CASE("wide decimal rendering") {
    CHECK(to_string(wide_uint{0}) == "0");
    CHECK(to_string(wide_uint{42}) == "42");
    wide_uint big = 1;
    for (int i = 0; i < 25; ++i) big *= 10;
    CHECK(to_string(big) == "10000000000000000000000000");
}
