#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "piecewise/word.hpp"

namespace piecewise {

// Measures of n-fold repetitions grow like n·(arches per copy) and can
// exceed 64 bits for n near 2^63, so results are carried in 128 bits.
using wide_uint = unsigned __int128;

std::string to_string(wide_uint v);

// Eventual periodicity of the arch decomposition of u·u·u·...
// Iterating the arch-jump from cut 0 visits cut residues mod |u|; after
// K steps (covering T letters) the residues cycle with length p, each
// cycle advancing `span` letters = `copies` whole copies of u.
struct PeriodData {
    uint64_t length = 0;           // L, the length of u
    uint64_t transient_arches = 0; // K
    uint64_t transient = 0;        // T
    uint64_t period = 0;           // p
    uint64_t span = 0;             // multiple of L
    uint64_t copies = 0;           // span / L
    uint64_t slope_num = 1;        // copies/period as a reduced fraction
    uint64_t slope_den = 1;
};

// Arch length starting at each cut residue 0..L-1 inside the infinite
// repetition of u. Every alphabet letter must occur in u.
std::vector<uint32_t> alpha_residues(const Word& u);

PeriodData arch_period(const Word& u);

// h and rho of the n-fold repetition of u, without materializing more
// than a bounded number of copies. O(|A|^2·|u| + log n).
wide_uint h_pow(const Word& u, uint64_t n);
wide_uint rho_pow(const Word& u, uint64_t n);

}  // namespace piecewise
