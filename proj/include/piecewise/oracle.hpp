#pragma once

#include <cstdint>

#include "piecewise/downset.hpp"
#include "piecewise/word.hpp"

namespace piecewise {

// Brute-force reference implementations grounded directly in downset
// semantics. They never touch the side-distance machinery, so the two
// paths have disjoint failure modes and can check each other.

// Subword distance capped by a search bound.
class BoundedDistance {
public:
    static BoundedDistance finite(uint64_t v) { return {Kind::Finite, v}; }
    static BoundedDistance infinite() { return {Kind::Infinite, 0}; }
    static BoundedDistance exceeds(uint64_t kmax) { return {Kind::Exceeds, kmax}; }

    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_infinite() const { return kind_ == Kind::Infinite; }
    bool is_exceeds() const { return kind_ == Kind::Exceeds; }

    // Exact distance (finite case) or the exhausted bound (exceeds case).
    uint64_t value() const {
        if (kind_ == Kind::Infinite) {
            throw std::logic_error("BoundedDistance: infinite has no value");
        }
        return value_;
    }

    friend bool operator==(const BoundedDistance&, const BoundedDistance&) = default;

private:
    enum class Kind { Finite, Infinite, Exceeds };
    BoundedDistance(Kind kind, uint64_t value) : kind_(kind), value_(value) {}
    Kind kind_;
    uint64_t value_;
};

// Largest k <= kmax with u ~_k v: infinite when u = v, exceeds(kmax)
// when the words agree on all subwords up to length kmax but differ.
BoundedDistance delta_bf(const Word& u, const Word& v, uint64_t kmax,
                         size_t budget = kDefaultSubwordBudget);

// Piecewise complexity via all single-letter insertions.
uint64_t h_bf(const Word& u, size_t budget = kDefaultSubwordBudget);

// Minimality index via all single-letter deletions.
uint64_t rho_bf(const Word& u, size_t budget = kDefaultSubwordBudget);

// True iff no single-letter deletion of u stays ~_m-equivalent to u.
bool is_reduced_bf(const Word& u, uint64_t m, size_t budget = kDefaultSubwordBudget);

}  // namespace piecewise
