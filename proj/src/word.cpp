#include "piecewise/word.hpp"

#include <algorithm>
#include <stdexcept>

#include "piecewise/errors.hpp"

namespace piecewise {

Word::Word(AlphabetRef alphabet, std::vector<uint8_t> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
    if (!alphabet_) {
        throw std::invalid_argument("word needs an alphabet");
    }
    const int size = alphabet_->size();
    for (uint8_t idx : letters_) {
        if (static_cast<int>(idx) >= size) {
            throw std::invalid_argument("letter index " + std::to_string(idx) +
                                        " outside alphabet of size " + std::to_string(size));
        }
    }
}

std::string Word::text() const {
    std::string out;
    out.reserve(letters_.size());
    for (uint8_t idx : letters_) {
        out.push_back(alphabet_->symbol(idx));
    }
    return out;
}

Word Word::factor(size_t i, size_t j) const {
    if (i > j || j > length()) {
        throw std::out_of_range("factor(" + std::to_string(i) + "," + std::to_string(j) +
                                ") outside word of length " + std::to_string(length()));
    }
    return Word(alphabet_, std::vector<uint8_t>(letters_.begin() + i, letters_.begin() + j));
}

Word make_word(std::string_view text) {
    return make_word(text, alphabet_of_text(text));
}

Word make_word(std::string_view text, AlphabetRef alphabet) {
    if (!alphabet) {
        throw std::invalid_argument("word needs an alphabet");
    }
    std::vector<uint8_t> letters;
    letters.reserve(text.size());
    for (size_t i = 0; i < text.size(); ++i) {
        const int idx = alphabet->index_of(text[i]);
        if (idx < 0) {
            throw validation_error(std::string("symbol '") + text[i] + "' at position " +
                                   std::to_string(i + 1) + " is not in alphabet \"" +
                                   alphabet->symbols() + "\"");
        }
        letters.push_back(static_cast<uint8_t>(idx));
    }
    return Word(std::move(alphabet), std::move(letters));
}

Word mirror(const Word& u) {
    std::vector<uint8_t> rev(u.letters().rbegin(), u.letters().rend());
    return Word(u.alphabet_ref(), std::move(rev));
}

Word concat(const Word& u, const Word& v) {
    require_same_alphabet(u, v, "concat");
    std::vector<uint8_t> letters;
    letters.reserve(u.length() + v.length());
    letters.insert(letters.end(), u.letters().begin(), u.letters().end());
    letters.insert(letters.end(), v.letters().begin(), v.letters().end());
    return Word(u.alphabet_ref(), std::move(letters));
}

Word power(const Word& u, uint64_t n) {
    if (u.length() > 0 && n > (size_t{1} << 30) / u.length()) {
        throw resource_error("refusing to materialize a power of " + std::to_string(n) +
                             " copies x " + std::to_string(u.length()) + " letters");
    }
    std::vector<uint8_t> letters;
    letters.reserve(u.length() * n);
    for (uint64_t k = 0; k < n; ++k) {
        letters.insert(letters.end(), u.letters().begin(), u.letters().end());
    }
    return Word(u.alphabet_ref(), std::move(letters));
}

std::vector<uint8_t> letters_of(const Word& u) {
    std::vector<bool> seen(u.alphabet().size(), false);
    for (uint8_t a : u.letters()) {
        seen[a] = true;
    }
    std::vector<uint8_t> out;
    for (size_t a = 0; a < seen.size(); ++a) {
        if (seen[a]) out.push_back(static_cast<uint8_t>(a));
    }
    return out;
}

bool is_subword(const Word& u, const Word& v) {
    require_same_alphabet(u, v, "is_subword");
    size_t i = 0;
    for (size_t j = 0; i < u.length() && j < v.length(); ++j) {
        if (u[i] == v[j]) ++i;
    }
    return i == u.length();
}

void require_same_alphabet(const Word& u, const Word& v, const char* op) {
    if (!u.same_alphabet(v)) {
        throw std::invalid_argument(std::string(op) + ": words use different alphabets (\"" +
                                    u.alphabet().symbols() + "\" vs \"" +
                                    v.alphabet().symbols() + "\")");
    }
}

}  // namespace piecewise
