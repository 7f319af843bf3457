#pragma once

#include <cstdint>
#include <vector>

#include "piecewise/word.hpp"

namespace piecewise {

// Value of a side-distance query: a natural number, or infinite for
// the degenerate r(u, empty) query. Infinite is a distinct state, not
// a sentinel integer; only comparison and min are allowed on it.
class SideDistance {
public:
    static SideDistance infinite() { return SideDistance(true, 0); }
    static SideDistance finite(uint64_t v) { return SideDistance(false, v); }

    bool is_infinite() const { return infinite_; }
    uint64_t value() const {
        if (infinite_) throw std::logic_error("SideDistance: infinite has no numeric value");
        return value_;
    }

    friend bool operator==(const SideDistance&, const SideDistance&) = default;
    friend bool operator<(const SideDistance& a, const SideDistance& b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_;
    }

private:
    SideDistance(bool inf, uint64_t v) : infinite_(inf), value_(v) {}
    bool infinite_;
    uint64_t value_;
};

// Right side distances of every prefix against every letter:
// at(i, a) is how far u(0,i) and u(0,i)·a agree on bounded subwords.
// Built in one left-to-right pass over u, O(|A|·|u|) time and space.
class RTable {
public:
    explicit RTable(const Word& u);

    const Word& word() const { return word_; }
    size_t cuts() const { return word_.length() + 1; }

    uint32_t at(size_t i, uint8_t a) const { return cells_[i * stride_ + a]; }
    std::vector<uint32_t> row(uint8_t a) const;

private:
    Word word_;
    size_t stride_;
    std::vector<uint32_t> cells_;
};

// Left side distances of every suffix: at(i, a) is the distance between
// a·u(i,|u|) and u(i,|u|). Stored as the mirror word's RTable read
// through an index flip, so both tables share one construction.
class LTable {
public:
    explicit LTable(const Word& u);

    const Word& word() const { return word_; }
    size_t cuts() const { return word_.length() + 1; }

    uint32_t at(size_t i, uint8_t a) const {
        return mirror_table_.at(word_.length() - i, a);
    }
    std::vector<uint32_t> row(uint8_t a) const;

private:
    Word word_;
    RTable mirror_table_;
};

RTable r_table(const Word& u);
LTable l_table(const Word& u);

// Reference recursion for r(u, t), memoized per (prefix, letter) pair.
// Deliberately follows the defining equations instead of the table
// pass; the two routes are compared exhaustively in the tests.
SideDistance r_general(const Word& u, const Word& t);

// l(t, u), obtained from r on mirrored inputs.
SideDistance l_general(const Word& t, const Word& u);

struct RVectorStats {
    uint64_t pushes = 0;
    uint64_t pops = 0;
};

// Per-position side distances r(a_1..a_{i-1}, a_i) for i = 1..|u|,
// computed by a stack scan in O(|A| + |u|) time.
std::vector<uint32_t> r_vector(const Word& u, RVectorStats* stats = nullptr);

// Mirror notion: l(a_i, a_{i+1}..a_m) for i = 1..|u|.
std::vector<uint32_t> l_vector(const Word& u);

// Distance between u1·u2 and u1·a·u2, via r(u1, a) + l(a, u2).
uint64_t delta_insert(const Word& u1, uint8_t a, const Word& u2);

}  // namespace piecewise
