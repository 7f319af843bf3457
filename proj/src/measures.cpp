#include "piecewise/measures.hpp"

#include <algorithm>

#include "piecewise/side_distance.hpp"

namespace piecewise {
namespace {

struct Argmax {
    uint64_t best = 0;
    size_t pos = 0;
    uint8_t letter = 0;

    void offer(uint64_t cand, size_t p, uint8_t a) {
        if (cand > best) {
            best = cand;
            pos = p;
            letter = a;
        }
    }
};

// Max over all cuts i and letters a of r(u(0,i), a) + l(a, u(i,|u|)).
// The left table is materialized; the right table is streamed one row
// at a time, keeping per-letter snapshots of the row at each letter's
// last occurrence (that is all the recurrence looks back at).
Argmax insertion_scan(const Word& u) {
    const size_t n = u.length();
    const size_t asz = u.alphabet().size();
    const LTable lt(u);

    std::vector<uint32_t> prev(asz, 0), cur(asz, 0);
    std::vector<uint32_t> saved(asz * asz, 0);

    Argmax arg;
    for (size_t a = 0; a < asz; ++a) {
        arg.offer(lt.at(0, a), 0, static_cast<uint8_t>(a));
    }
    for (size_t i = 1; i <= n; ++i) {
        const uint8_t b = u[i - 1];
        for (size_t a = 0; a < asz; ++a) {
            cur[a] = (a == b) ? prev[a] + 1
                              : std::min<uint32_t>(prev[a], 1 + saved[a * asz + b]);
        }
        std::copy(cur.begin(), cur.end(), saved.begin() + b * asz);
        for (size_t a = 0; a < asz; ++a) {
            arg.offer(cur[a] + lt.at(i, a), i, static_cast<uint8_t>(a));
        }
        std::swap(prev, cur);
    }
    return arg;
}

Argmax deletion_scan(const Word& u) {
    const std::vector<uint32_t> rv = r_vector(u);
    const std::vector<uint32_t> lv = l_vector(u);
    Argmax arg;
    bool any = false;
    for (size_t i = 0; i < rv.size(); ++i) {
        const uint64_t cand = static_cast<uint64_t>(rv[i]) + lv[i];
        if (!any || cand > arg.best) {
            any = true;
            arg.best = cand;
            arg.pos = i + 1;
        }
    }
    return arg;
}

}  // namespace

uint64_t h(const Word& u) {
    if (u.empty()) return 1;
    return insertion_scan(u).best + 1;
}

uint64_t rho(const Word& u) {
    if (u.empty()) return 0;
    return deletion_scan(u).best + 1;
}

MeasureReport measure(const Word& u) {
    MeasureReport report;
    if (u.empty()) {
        report.h = 1;
        report.rho = 0;
        return report;
    }
    const Argmax hs = insertion_scan(u);
    report.h = hs.best + 1;
    report.h_witness = {hs.pos, hs.letter};
    const Argmax rs = deletion_scan(u);
    report.rho = rs.best + 1;
    report.rho_witness = rs.pos;
    return report;
}

}  // namespace piecewise
