#include "piecewise/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <optional>

namespace piecewise {
namespace {

// Length of the shortest word contained in exactly one of the two
// shortlex-ordered sets, i.e. the shortest distinguisher.
std::optional<size_t> shortest_separator(const WordSet& a, const WordSet& b) {
    const ShortlexLess less;
    auto ia = a.raw().begin(), ea = a.raw().end();
    auto ib = b.raw().begin(), eb = b.raw().end();
    while (ia != ea && ib != eb) {
        if (*ia == *ib) {
            ++ia;
            ++ib;
        } else if (less(*ia, *ib)) {
            return ia->size();
        } else {
            return ib->size();
        }
    }
    if (ia != ea) return ia->size();
    if (ib != eb) return ib->size();
    return std::nullopt;
}

Word with_insertion(const Word& u, size_t cut, uint8_t a) {
    std::vector<uint8_t> letters(u.letters().begin(), u.letters().end());
    letters.insert(letters.begin() + cut, a);
    return Word(u.alphabet_ref(), std::move(letters));
}

Word with_deletion(const Word& u, size_t pos) {
    std::vector<uint8_t> letters(u.letters().begin(), u.letters().end());
    letters.erase(letters.begin() + pos);
    return Word(u.alphabet_ref(), std::move(letters));
}

}  // namespace

BoundedDistance delta_bf(const Word& u, const Word& v, uint64_t kmax, size_t budget) {
    require_same_alphabet(u, v, "delta_bf");
    if (u == v) return BoundedDistance::infinite();
    const WordSet du = downset_upto(u, kmax, budget);
    const WordSet dv = downset_upto(v, kmax, budget);
    if (auto len = shortest_separator(du, dv)) {
        return BoundedDistance::finite(static_cast<uint64_t>(*len) - 1);
    }
    return BoundedDistance::exceeds(kmax);
}

uint64_t h_bf(const Word& u, size_t budget) {
    const uint64_t kmax = u.length() + 2;
    const WordSet du = downset_upto(u, kmax, budget);
    uint64_t best = 0;
    for (size_t cut = 0; cut <= u.length(); ++cut) {
        for (int a = 0; a < u.alphabet().size(); ++a) {
            const Word v = with_insertion(u, cut, static_cast<uint8_t>(a));
            const WordSet dv = downset_upto(v, kmax, budget);
            const auto len = shortest_separator(du, dv);
            assert(len.has_value());  // v is longer than u, so they differ
            best = std::max<uint64_t>(best, *len - 1);
        }
    }
    return best + 1;
}

uint64_t rho_bf(const Word& u, size_t budget) {
    if (u.empty()) return 0;
    const uint64_t kmax = u.length() + 1;
    const WordSet du = downset_upto(u, kmax, budget);
    uint64_t best = 0;
    for (size_t pos = 0; pos < u.length(); ++pos) {
        const Word v = with_deletion(u, pos);
        const WordSet dv = downset_upto(v, kmax, budget);
        const auto len = shortest_separator(du, dv);
        assert(len.has_value());
        best = std::max<uint64_t>(best, *len - 1);
    }
    return best + 1;
}

bool is_reduced_bf(const Word& u, uint64_t m, size_t budget) {
    for (size_t pos = 0; pos < u.length(); ++pos) {
        if (sim_k(u, with_deletion(u, pos), m, budget)) {
            return false;
        }
    }
    return true;
}

}  // namespace piecewise
