#include "piecewise/arch.hpp"

#include <stdexcept>

namespace piecewise {
namespace {

void require_cut(const Word& w, size_t i, const char* op) {
    if (i > w.length()) {
        throw std::out_of_range(std::string(op) + ": position " + std::to_string(i) +
                                " outside cuts of a word of length " +
                                std::to_string(w.length()));
    }
}

}  // namespace

ArchFactorization arch_factorize(const Word& w) {
    const size_t asz = w.alphabet().size();
    ArchFactorization fact{w, {0}};
    std::vector<char> seen(asz, 0);
    size_t distinct = 0;
    for (size_t i = 1; i <= w.length(); ++i) {
        const uint8_t a = w[i - 1];
        if (!seen[a]) {
            seen[a] = 1;
            if (++distinct == asz) {
                fact.cuts.push_back(i);
                std::fill(seen.begin(), seen.end(), 0);
                distinct = 0;
            }
        }
    }
    return fact;
}

bool is_fully_arched(const Word& w) {
    return arch_factorize(w).fully_arched();
}

std::optional<size_t> alpha(const Word& w, size_t i) {
    require_cut(w, i, "alpha");
    const size_t asz = w.alphabet().size();
    std::vector<char> seen(asz, 0);
    size_t distinct = 0;
    for (size_t j = i + 1; j <= w.length(); ++j) {
        const uint8_t a = w[j - 1];
        if (!seen[a]) {
            seen[a] = 1;
            if (++distinct == asz) return j;
        }
    }
    return std::nullopt;
}

std::optional<size_t> beta(const Word& w, size_t i) {
    require_cut(w, i, "beta");
    const size_t asz = w.alphabet().size();
    std::vector<char> seen(asz, 0);
    size_t distinct = 0;
    for (size_t j = i; j >= 1; --j) {
        const uint8_t a = w[j - 1];
        if (!seen[a]) {
            seen[a] = 1;
            if (++distinct == asz) return j - 1;
        }
    }
    return std::nullopt;
}

}  // namespace piecewise
