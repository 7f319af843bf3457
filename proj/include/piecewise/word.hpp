#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "piecewise/alphabet.hpp"

namespace piecewise {

// Immutable sequence of letter indices over a fixed alphabet.
//
// Positions follow the cut convention: a word of length L has cuts
// 0..L, factor(i, j) is the infix between cuts i and j, and the k-th
// letter (1-based) sits between cuts k-1 and k.
class Word {
public:
    Word(AlphabetRef alphabet, std::vector<uint8_t> letters);

    const Alphabet& alphabet() const { return *alphabet_; }
    const AlphabetRef& alphabet_ref() const { return alphabet_; }

    size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    uint8_t operator[](size_t i) const { return letters_[i]; }  // 0-based
    std::span<const uint8_t> letters() const { return letters_; }

    std::string text() const;
    Word factor(size_t i, size_t j) const;
    Word prefix(size_t i) const { return factor(0, i); }
    Word suffix(size_t i) const { return factor(i, length()); }

    bool same_alphabet(const Word& other) const {
        return alphabet_ == other.alphabet_ || *alphabet_ == *other.alphabet_;
    }

    friend bool operator==(const Word& a, const Word& b) {
        return a.same_alphabet(b) && a.letters_ == b.letters_;
    }

private:
    AlphabetRef alphabet_;
    std::vector<uint8_t> letters_;
};

// Word from symbol text; without an explicit alphabet the alphabet is
// the text's letters in first-occurrence order.
Word make_word(std::string_view text);
Word make_word(std::string_view text, AlphabetRef alphabet);

Word mirror(const Word& u);
Word concat(const Word& u, const Word& v);
Word power(const Word& u, uint64_t n);

// Letters that actually occur in u, as sorted indices.
std::vector<uint8_t> letters_of(const Word& u);

// True iff u is a subword (scattered subsequence) of v; greedy scan.
bool is_subword(const Word& u, const Word& v);

// Throws std::invalid_argument unless both words share one alphabet.
void require_same_alphabet(const Word& u, const Word& v, const char* op);

}  // namespace piecewise
