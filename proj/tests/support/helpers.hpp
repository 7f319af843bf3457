#pragma once

#include <cassert>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "piecewise/word.hpp"

namespace piecewise::testing {

inline constexpr const char* kLetterPool = "ABCDEFGHIJKLMNOPQRSTUVWXYZ";

inline AlphabetRef alpha_n(int n) {
    return make_alphabet(std::string_view(kLetterPool, n));
}

// All words of exactly len letters, odometer order.
inline void for_each_word(const AlphabetRef& alphabet, size_t len,
                          const std::function<void(const Word&)>& fn) {
    std::vector<uint8_t> letters(len, 0);
    const int asz = alphabet->size();
    while (true) {
        fn(Word(alphabet, letters));
        size_t i = 0;
        while (i < len && ++letters[i] == asz) {
            letters[i] = 0;
            ++i;
        }
        if (i == len) break;
    }
}

inline void for_each_word_upto(const AlphabetRef& alphabet, size_t maxlen,
                               const std::function<void(const Word&)>& fn) {
    for (size_t len = 0; len <= maxlen; ++len) for_each_word(alphabet, len, fn);
}

inline Word random_word(std::mt19937_64& rng, const AlphabetRef& alphabet, size_t len) {
    std::uniform_int_distribution<int> dist(0, alphabet->size() - 1);
    std::vector<uint8_t> letters(len);
    for (auto& x : letters) x = static_cast<uint8_t>(dist(rng));
    return Word(alphabet, std::move(letters));
}

// Random word guaranteed to use every alphabet letter (len >= |A|).
inline Word random_full_word(std::mt19937_64& rng, const AlphabetRef& alphabet, size_t len) {
    const int asz = alphabet->size();
    assert(len >= static_cast<size_t>(asz));
    std::uniform_int_distribution<int> dist(0, asz - 1);
    std::vector<uint8_t> letters(len);
    for (auto& x : letters) x = static_cast<uint8_t>(dist(rng));
    std::vector<size_t> positions(len);
    std::iota(positions.begin(), positions.end(), size_t{0});
    std::shuffle(positions.begin(), positions.end(), rng);
    for (int a = 0; a < asz; ++a) letters[positions[a]] = static_cast<uint8_t>(a);
    return Word(alphabet, std::move(letters));
}

inline Word conjugate(const Word& u, size_t i) {
    return concat(u.suffix(i), u.prefix(i));
}

}  // namespace piecewise::testing
