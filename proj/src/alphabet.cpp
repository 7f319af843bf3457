#include "piecewise/alphabet.hpp"

#include <cctype>

#include "piecewise/errors.hpp"

namespace piecewise {

Alphabet::Alphabet(std::string_view symbols) {
    if (symbols.empty()) {
        throw validation_error("alphabet must contain at least one symbol");
    }
    lookup_.fill(-1);
    symbols_.reserve(symbols.size());
    for (size_t i = 0; i < symbols.size(); ++i) {
        const char c = symbols[i];
        if (!std::isgraph(static_cast<unsigned char>(c))) {
            throw validation_error("alphabet symbol at position " + std::to_string(i + 1) +
                                   " is not a printable character");
        }
        if (lookup_[static_cast<unsigned char>(c)] >= 0) {
            throw validation_error(std::string("duplicate alphabet symbol '") + c +
                                   "' at position " + std::to_string(i + 1));
        }
        lookup_[static_cast<unsigned char>(c)] = static_cast<int16_t>(symbols_.size());
        symbols_.push_back(c);
    }
}

AlphabetRef make_alphabet(std::string_view symbols) {
    return std::make_shared<const Alphabet>(symbols);
}

AlphabetRef alphabet_of_text(std::string_view text) {
    if (text.empty()) {
        throw validation_error("empty word requires an explicit alphabet");
    }
    std::string symbols;
    bool seen[256] = {};
    for (char c : text) {
        const auto uc = static_cast<unsigned char>(c);
        if (!seen[uc]) {
            seen[uc] = true;
            symbols.push_back(c);
        }
    }
    return make_alphabet(symbols);
}

}  // namespace piecewise
