#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "piecewise/word.hpp"

namespace piecewise {

// Greedy decomposition of a word into arches: each arch is a minimal
// prefix of what remains that contains every alphabet letter, and the
// rest is the final suffix with at least one letter missing.
struct ArchFactorization {
    Word word;
    // cuts[0] = 0 and cuts[j] ends the j-th arch; rest = word(cuts.back(), |word|).
    std::vector<size_t> cuts;

    size_t arch_count() const { return cuts.size() - 1; }
    Word arch(size_t j) const { return word.factor(cuts[j], cuts[j + 1]); }
    Word rest() const { return word.suffix(cuts.back()); }
    bool fully_arched() const { return cuts.back() == word.length(); }
};

// Single pass with a seen-letter counter, O(|w| + |A|).
ArchFactorization arch_factorize(const Word& w);

bool is_fully_arched(const Word& w);

// Smallest j > i such that w(i,j) is an arch, if any. i must be a cut.
std::optional<size_t> alpha(const Word& w, size_t i);

// Largest j < i such that w(j,i) is a co-arch (mirror arch), if any.
std::optional<size_t> beta(const Word& w, size_t i);

}  // namespace piecewise
