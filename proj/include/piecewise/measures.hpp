#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "piecewise/word.hpp"

namespace piecewise {

struct MeasureReport {
    uint64_t h = 0;
    uint64_t rho = 0;
    // Cut position and letter index attaining h; absent for the empty word.
    std::optional<std::pair<size_t, uint8_t>> h_witness;
    // 1-based letter position attaining rho; absent for the empty word.
    std::optional<size_t> rho_witness;
};

// Piecewise complexity: smallest k at which u is alone in its class of
// Simon's congruence of order k. O(|A|·|u|) time.
uint64_t h(const Word& u);

// Minimality index: smallest k at which u is minimal in its order-k
// class under the subword order. O(|A| + |u|) time.
uint64_t rho(const Word& u);

// Both measures plus the positions attaining them. Ties resolve to the
// smallest position, then the smallest letter index.
MeasureReport measure(const Word& u);

}  // namespace piecewise
