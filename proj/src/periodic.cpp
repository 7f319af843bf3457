#include "piecewise/periodic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "piecewise/errors.hpp"
#include "piecewise/measures.hpp"

namespace piecewise {

std::string to_string(wide_uint v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

namespace {

void require_full_alphabet(const Word& u, const char* op) {
    std::vector<char> seen(u.alphabet().size(), 0);
    for (uint8_t a : u.letters()) seen[a] = 1;
    std::string missing;
    for (size_t a = 0; a < seen.size(); ++a) {
        if (!seen[a]) missing.push_back(u.alphabet().symbol(static_cast<int>(a)));
    }
    if (!missing.empty()) {
        throw validation_error(std::string(op) +
                               ": every alphabet letter must occur in the word; missing \"" +
                               missing + "\"");
    }
}

}  // namespace

std::vector<uint32_t> alpha_residues(const Word& u) {
    require_full_alphabet(u, "alpha_residues");
    const size_t L = u.length();
    const size_t asz = u.alphabet().size();
    // An arch starting at a cut i < L ends by cut i + L, since the next
    // L letters form a rotation of u and contain the whole alphabet, so
    // scanning two conceptual copies of u covers every start residue.
    std::vector<size_t> next(asz, 0);  // cut after the next occurrence of each letter
    std::vector<uint32_t> out(L, 0);
    for (size_t i = 2 * L; i-- > 0;) {
        next[u[i % L]] = i + 1;
        if (i < L) {
            size_t far = 0;
            for (size_t a = 0; a < asz; ++a) far = std::max(far, next[a]);
            out[i] = static_cast<uint32_t>(far - i);
        }
    }
    return out;
}

PeriodData arch_period(const Word& u) {
    const std::vector<uint32_t> entries = alpha_residues(u);
    const uint64_t L = u.length();
    PeriodData pd;
    pd.length = L;

    std::vector<int64_t> seen_at(L, -1);
    std::vector<uint64_t> lambdas;
    uint64_t res = 0;
    uint64_t lambda = 0;
    for (uint64_t step = 0;; ++step) {
        if (seen_at[res] >= 0) {
            const auto first = static_cast<uint64_t>(seen_at[res]);
            pd.transient_arches = first;
            pd.period = step - first;
            pd.transient = lambdas[first];
            pd.span = lambda - lambdas[first];
            break;
        }
        seen_at[res] = static_cast<int64_t>(step);
        lambdas.push_back(lambda);
        lambda += entries[res];
        res = (res + entries[res]) % L;
    }
    if (pd.span == 0 || pd.span % L != 0) {
        throw std::logic_error("arch span must be a positive multiple of the word length");
    }
    pd.copies = pd.span / L;
    const uint64_t g = std::gcd(pd.copies, pd.period);
    pd.slope_num = pd.copies / g;
    pd.slope_den = pd.period / g;
    return pd;
}

namespace {

struct PowPlan {
    uint64_t n0;     // copies to materialize and measure directly
    uint64_t steps;  // periodic steps on top, each adding `period`
    uint64_t period;
};

PowPlan plan_pow(const Word& u, uint64_t n) {
    const PeriodData pd = arch_period(u);
    const PeriodData pdm = arch_period(mirror(u));
    const uint64_t L = pd.length;
    // Smallest copy count from which adding `copies` more copies always
    // adds exactly `period` to both measures. Both transients plus one
    // full span must fit: the span-shift of a maximizing cut needs a
    // window clear of the transient regions on both ends. The span is
    // at least L, so n_min >= 1 and the base case is never empty.
    const uint64_t n_min = (pd.transient + pdm.transient + pd.span + L - 1) / L;
    if (n <= n_min + pd.copies) return {n, 0, pd.period};
    const uint64_t n0 = n_min + (n - n_min) % pd.copies;
    return {n0, (n - n0) / pd.copies, pd.period};
}

}  // namespace

wide_uint h_pow(const Word& u, uint64_t n) {
    if (n == 0) return 1;
    require_full_alphabet(u, "h_pow");
    const PowPlan plan = plan_pow(u, n);
    const wide_uint base = h(power(u, plan.n0));
    return base + static_cast<wide_uint>(plan.steps) * plan.period;
}

wide_uint rho_pow(const Word& u, uint64_t n) {
    if (n == 0) return 0;
    require_full_alphabet(u, "rho_pow");
    const PowPlan plan = plan_pow(u, n);
    const wide_uint base = rho(power(u, plan.n0));
    return base + static_cast<wide_uint>(plan.steps) * plan.period;
}

}  // namespace piecewise
