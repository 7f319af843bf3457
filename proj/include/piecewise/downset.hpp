#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "piecewise/word.hpp"

namespace piecewise {

// Cap on stored subwords per enumeration call.
inline constexpr size_t kDefaultSubwordBudget = size_t{1} << 24;

// Ordering for raw index-strings: shorter first, then lexicographic.
struct ShortlexLess {
    bool operator()(const std::string& a, const std::string& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

// Duplicate-free set of words over one alphabet, kept in shortlex order
// of their letter indices so that equality and iteration are canonical.
class WordSet {
public:
    using Storage = std::set<std::string, ShortlexLess>;

    explicit WordSet(AlphabetRef alphabet) : alphabet_(std::move(alphabet)) {}

    size_t size() const { return items_.size(); }
    const Alphabet& alphabet() const { return *alphabet_; }
    const Storage& raw() const { return items_; }

    bool insert(const Word& w);
    bool insert_raw(std::string indices) { return items_.insert(std::move(indices)).second; }
    bool contains(const Word& w) const;

    std::vector<Word> words() const;

    friend bool operator==(const WordSet& a, const WordSet& b) {
        return *a.alphabet_ == *b.alphabet_ && a.items_ == b.items_;
    }

private:
    AlphabetRef alphabet_;
    Storage items_;
};

// All subwords of u of length at most k (the empty word included).
// Throws resource_error once more than `budget` subwords are stored.
WordSet downset_upto(const Word& u, uint64_t k, size_t budget = kDefaultSubwordBudget);

// Simon's congruence of order k: equal length-bounded downsets.
bool sim_k(const Word& u, const Word& v, uint64_t k, size_t budget = kDefaultSubwordBudget);

}  // namespace piecewise
