#include "piecewise/side_distance.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace piecewise {

RTable::RTable(const Word& u) : word_(u), stride_(u.alphabet().size()) {
    const size_t n = u.length();
    cells_.assign((n + 1) * stride_, 0);
    // locc[a]: cut just after the last occurrence of a seen so far;
    // 0 while a has not occurred, which is safe because row 0 is zero.
    std::vector<size_t> locc(stride_, 0);
    for (size_t i = 1; i <= n; ++i) {
        const uint8_t b = u[i - 1];
        locc[b] = i;
        const uint32_t* prev = &cells_[(i - 1) * stride_];
        uint32_t* cur = &cells_[i * stride_];
        for (size_t a = 0; a < stride_; ++a) {
            if (a == b) {
                cur[a] = prev[a] + 1;
            } else {
                cur[a] = std::min<uint32_t>(prev[a], 1 + cells_[locc[a] * stride_ + b]);
            }
        }
    }
}

std::vector<uint32_t> RTable::row(uint8_t a) const {
    std::vector<uint32_t> out(cuts());
    for (size_t i = 0; i < cuts(); ++i) out[i] = at(i, a);
    return out;
}

LTable::LTable(const Word& u) : word_(u), mirror_table_(mirror(u)) {}

std::vector<uint32_t> LTable::row(uint8_t a) const {
    std::vector<uint32_t> out(cuts());
    for (size_t i = 0; i < cuts(); ++i) out[i] = at(i, a);
    return out;
}

RTable r_table(const Word& u) { return RTable(u); }
LTable l_table(const Word& u) { return LTable(u); }

SideDistance r_general(const Word& u, const Word& t) {
    require_same_alphabet(u, t, "r_general");
    if (t.empty()) return SideDistance::infinite();

    const size_t n = u.length();
    const size_t asz = u.alphabet().size();
    constexpr int64_t kUnknown = -1;
    std::vector<int64_t> memo((n + 1) * asz, kUnknown);

    // r(u(0,i), a): zero when a is absent from the prefix; otherwise
    // strip the last occurrence of a (at cut q) and take one plus the
    // cheapest letter of a·u(q,i) against the shorter prefix.
    auto solve = [&](auto&& self, size_t i, uint8_t a) -> uint64_t {
        int64_t& slot = memo[i * asz + a];
        if (slot != kUnknown) return static_cast<uint64_t>(slot);
        size_t q = 0;
        for (size_t k = i; k >= 1; --k) {
            if (u[k - 1] == a) {
                q = k;
                break;
            }
        }
        uint64_t res = 0;
        if (q > 0) {
            uint64_t best = self(self, q - 1, a);
            std::vector<bool> tried(asz, false);
            tried[a] = true;
            for (size_t k = q; k < i && best > 0; ++k) {
                const uint8_t b = u[k];
                if (!tried[b]) {
                    tried[b] = true;
                    best = std::min(best, self(self, q - 1, b));
                }
            }
            res = 1 + best;
        }
        slot = static_cast<int64_t>(res);
        return res;
    };

    uint64_t best = std::numeric_limits<uint64_t>::max();
    for (uint8_t a : letters_of(t)) {
        best = std::min(best, solve(solve, n, a));
    }
    return SideDistance::finite(best);
}

SideDistance l_general(const Word& t, const Word& u) {
    return r_general(mirror(u), mirror(t));
}

namespace {

// Stack scan behind both vectors. Reads the word right-to-left when
// `reversed` is set, which is the mirror algorithm without actually
// mirroring the word. out[i-1] receives the value of scan position i.
std::vector<uint32_t> stack_scan(const Word& u, bool reversed, RVectorStats* stats) {
    const size_t n = u.length();
    const size_t asz = u.alphabet().size();
    std::vector<uint32_t> out(n, 0);
    std::vector<size_t> locc(asz, 0);
    std::vector<size_t> stack;
    stack.reserve(n + 1);
    stack.push_back(0);
    uint64_t pushes = 1, pops = 0;
    for (size_t i = 1; i <= n; ++i) {
        const uint8_t a = u[reversed ? n - i : i - 1];
        // The stack is strictly increasing; drop entries until the top
        // is the smallest one at or above the last occurrence of a.
        while (stack.size() >= 2 && stack[stack.size() - 2] >= locc[a]) {
            stack.pop_back();
            ++pops;
        }
        const size_t j = stack.back();
        out[i - 1] = (j > 0) ? out[j - 1] + 1 : 0;
        stack.push_back(i);
        ++pushes;
        locc[a] = i;
    }
    if (stats) {
        stats->pushes = pushes;
        stats->pops = pops;
    }
    return out;
}

}  // namespace

std::vector<uint32_t> r_vector(const Word& u, RVectorStats* stats) {
    return stack_scan(u, false, stats);
}

std::vector<uint32_t> l_vector(const Word& u) {
    std::vector<uint32_t> v = stack_scan(u, true, nullptr);
    std::reverse(v.begin(), v.end());
    return v;
}

uint64_t delta_insert(const Word& u1, uint8_t a, const Word& u2) {
    require_same_alphabet(u1, u2, "delta_insert");
    if (static_cast<int>(a) >= u1.alphabet().size()) {
        throw std::invalid_argument("delta_insert: letter index outside alphabet");
    }
    const Word letter(u1.alphabet_ref(), {a});
    return r_general(u1, letter).value() + r_general(mirror(u2), letter).value();
}

}  // namespace piecewise
