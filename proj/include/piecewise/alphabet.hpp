#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace piecewise {

// Ordered finite set of printable symbols with dense indices 0..size()-1.
// Every inner loop in the library indexes plain arrays by these indices.
class Alphabet {
public:
    // Symbols must be distinct printable (graphic) ASCII; order is kept.
    explicit Alphabet(std::string_view symbols);

    int size() const { return static_cast<int>(symbols_.size()); }
    char symbol(int index) const { return symbols_.at(static_cast<size_t>(index)); }
    const std::string& symbols() const { return symbols_; }

    // Dense index of c, or -1 when c is not part of the alphabet.
    int index_of(char c) const { return lookup_[static_cast<unsigned char>(c)]; }
    bool contains(char c) const { return index_of(c) >= 0; }

    friend bool operator==(const Alphabet& a, const Alphabet& b) {
        return a.symbols_ == b.symbols_;
    }

private:
    std::string symbols_;
    std::array<int16_t, 256> lookup_;
};

using AlphabetRef = std::shared_ptr<const Alphabet>;

AlphabetRef make_alphabet(std::string_view symbols);

// Alphabet of a text in first-occurrence order; rejects empty text.
AlphabetRef alphabet_of_text(std::string_view text);

}  // namespace piecewise
