#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "piecewise/arch.hpp"
#include "piecewise/downset.hpp"
#include "piecewise/errors.hpp"
#include "piecewise/measures.hpp"
#include "piecewise/oracle.hpp"
#include "piecewise/periodic.hpp"
#include "piecewise/side_distance.hpp"
#include "piecewise/word.hpp"

namespace py = pybind11;
using namespace piecewise;

namespace {

Word build_word(const std::string& text, const std::optional<std::string>& alphabet) {
    if (alphabet) return make_word(text, make_alphabet(*alphabet));
    return make_word(text);
}

// Pair of words over one shared alphabet (default: union of both texts,
// first-occurrence order).
std::pair<Word, Word> build_pair(const std::string& u, const std::string& v,
                                 const std::optional<std::string>& alphabet) {
    const AlphabetRef ab =
        alphabet ? make_alphabet(*alphabet) : alphabet_of_text(u + v);
    return {make_word(u, ab), make_word(v, ab)};
}

// Exact conversion of a 128-bit count to a python int, via its decimal text.
py::object to_pyint(wide_uint v) {
    return py::module_::import("builtins").attr("int")(to_string(v));
}

py::dict measure_dict(const Word& w) {
    const MeasureReport rep = measure(w);
    py::dict out;
    out["h"] = rep.h;
    out["rho"] = rep.rho;
    if (rep.h_witness) {
        out["h_witness"] = py::make_tuple(
            rep.h_witness->first,
            std::string(1, w.alphabet().symbol(rep.h_witness->second)));
    } else {
        out["h_witness"] = py::none();
    }
    out["rho_witness"] =
        rep.rho_witness ? py::cast(*rep.rho_witness) : py::object(py::none());
    return out;
}

std::vector<std::vector<uint32_t>> table_rows(const Word& w, bool left) {
    std::vector<std::vector<uint32_t>> rows;
    if (left) {
        const LTable lt(w);
        for (int a = 0; a < w.alphabet().size(); ++a)
            rows.push_back(lt.row(static_cast<uint8_t>(a)));
    } else {
        const RTable rt(w);
        for (int a = 0; a < w.alphabet().size(); ++a)
            rows.push_back(rt.row(static_cast<uint8_t>(a)));
    }
    return rows;
}

py::dict arch_dict(const Word& w) {
    const ArchFactorization f = arch_factorize(w);
    py::list arches;
    for (size_t j = 0; j < f.arch_count(); ++j) arches.append(f.arch(j).text());
    py::dict out;
    out["cuts"] = f.cuts;
    out["arches"] = arches;
    out["rest"] = f.rest().text();
    out["fully_arched"] = f.fully_arched();
    return out;
}

py::dict period_dict(const Word& w) {
    const PeriodData pd = arch_period(w);
    py::dict out;
    out["L"] = pd.length;
    out["K"] = pd.transient_arches;
    out["T"] = pd.transient;
    out["p"] = pd.period;
    out["span"] = pd.span;
    out["delta"] = pd.copies;
    out["slope"] = py::make_tuple(pd.slope_num, pd.slope_den);
    return out;
}

py::object delta_obj(const BoundedDistance& d) {
    if (d.is_infinite()) {
        return py::module_::import("math").attr("inf");
    }
    if (d.is_exceeds()) return py::none();
    return py::cast(d.value());
}

}  // namespace

PYBIND11_MODULE(_piecewise, m) {
    m.doc() = "Piecewise complexity, minimality index and Simon-congruence toolkit";

    py::register_exception<validation_error>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<resource_error>(m, "ResourceError", PyExc_MemoryError);

    m.def(
        "h",
        [](const std::string& w, const std::optional<std::string>& a) {
            return h(build_word(w, a));
        },
        "Piecewise complexity h(word).", py::arg("word"),
        py::arg("alphabet") = py::none());
    m.def(
        "rho",
        [](const std::string& w, const std::optional<std::string>& a) {
            return rho(build_word(w, a));
        },
        "Minimality index rho(word).", py::arg("word"),
        py::arg("alphabet") = py::none());
    m.def(
        "measure",
        [](const std::string& w, const std::optional<std::string>& a) {
            return measure_dict(build_word(w, a));
        },
        "h, rho and their witnesses.", py::arg("word"),
        py::arg("alphabet") = py::none());

    m.def(
        "h_pow",
        [](const std::string& w, uint64_t n, const std::optional<std::string>& a) {
            return to_pyint(h_pow(build_word(w, a), n));
        },
        "h(word^n) computed through the arch period.", py::arg("word"), py::arg("n"),
        py::arg("alphabet") = py::none());
    m.def(
        "rho_pow",
        [](const std::string& w, uint64_t n, const std::optional<std::string>& a) {
            return to_pyint(rho_pow(build_word(w, a), n));
        },
        "rho(word^n) computed through the arch period.", py::arg("word"), py::arg("n"),
        py::arg("alphabet") = py::none());

    m.def(
        "r_table",
        [](const std::string& w, const std::optional<std::string>& a) {
            return table_rows(build_word(w, a), false);
        },
        "Right side-distance table; one row per alphabet letter.", py::arg("word"),
        py::arg("alphabet") = py::none());
    m.def(
        "l_table",
        [](const std::string& w, const std::optional<std::string>& a) {
            return table_rows(build_word(w, a), true);
        },
        "Left side-distance table; one row per alphabet letter.", py::arg("word"),
        py::arg("alphabet") = py::none());
    m.def(
        "r_vector",
        [](const std::string& w, const std::optional<std::string>& a) {
            return r_vector(build_word(w, a));
        },
        py::arg("word"), py::arg("alphabet") = py::none());
    m.def(
        "l_vector",
        [](const std::string& w, const std::optional<std::string>& a) {
            return l_vector(build_word(w, a));
        },
        py::arg("word"), py::arg("alphabet") = py::none());

    m.def(
        "arch",
        [](const std::string& w, const std::optional<std::string>& a) {
            return arch_dict(build_word(w, a));
        },
        "Arch factorization: cuts, arches, rest.", py::arg("word"),
        py::arg("alphabet") = py::none());
    m.def(
        "alpha",
        [](const std::string& w, size_t i, const std::optional<std::string>& a) {
            return alpha(build_word(w, a), i);
        },
        "End of the shortest arch starting at cut i, or None.", py::arg("word"),
        py::arg("i"), py::arg("alphabet") = py::none());
    m.def(
        "beta",
        [](const std::string& w, size_t i, const std::optional<std::string>& a) {
            return beta(build_word(w, a), i);
        },
        "Start of the shortest co-arch ending at cut i, or None.", py::arg("word"),
        py::arg("i"), py::arg("alphabet") = py::none());
    m.def(
        "period",
        [](const std::string& w, const std::optional<std::string>& a) {
            return period_dict(build_word(w, a));
        },
        "Arch period data of the infinite repetition of word.", py::arg("word"),
        py::arg("alphabet") = py::none());

    m.def(
        "mirror",
        [](const std::string& w, const std::optional<std::string>& a) {
            return mirror(build_word(w, a)).text();
        },
        py::arg("word"), py::arg("alphabet") = py::none());
    m.def(
        "is_subword",
        [](const std::string& u, const std::string& v,
           const std::optional<std::string>& a) {
            const auto [wu, wv] = build_pair(u, v, a);
            return is_subword(wu, wv);
        },
        "True iff u is a scattered subsequence of v.", py::arg("u"), py::arg("v"),
        py::arg("alphabet") = py::none());
    m.def(
        "sim_k",
        [](const std::string& u, const std::string& v, uint64_t k,
           const std::optional<std::string>& a) {
            const auto [wu, wv] = build_pair(u, v, a);
            return sim_k(wu, wv, k);
        },
        "Simon congruence of order k.", py::arg("u"), py::arg("v"), py::arg("k"),
        py::arg("alphabet") = py::none());
    m.def(
        "downset",
        [](const std::string& w, uint64_t k, const std::optional<std::string>& a,
           size_t budget) {
            const Word word = build_word(w, a);
            std::vector<std::string> out;
            for (const Word& s : downset_upto(word, k, budget).words()) {
                out.push_back(s.text());
            }
            return out;
        },
        "All subwords of length <= k, in shortlex order.", py::arg("word"), py::arg("k"),
        py::arg("alphabet") = py::none(), py::arg("budget") = kDefaultSubwordBudget);

    m.def(
        "delta_bf",
        [](const std::string& u, const std::string& v, std::optional<uint64_t> kmax,
           const std::optional<std::string>& a) {
            const auto [wu, wv] = build_pair(u, v, a);
            const uint64_t bound = kmax ? *kmax : std::max(wu.length(), wv.length()) + 2;
            return delta_obj(delta_bf(wu, wv, bound));
        },
        "Brute-force subword distance: an int, math.inf for equal words, or None "
        "when the bound was reached.",
        py::arg("u"), py::arg("v"), py::arg("kmax") = py::none(),
        py::arg("alphabet") = py::none());
    m.def(
        "h_bf",
        [](const std::string& w, const std::optional<std::string>& a) {
            return h_bf(build_word(w, a));
        },
        "Brute-force reference for h.", py::arg("word"),
        py::arg("alphabet") = py::none());
    m.def(
        "rho_bf",
        [](const std::string& w, const std::optional<std::string>& a) {
            return rho_bf(build_word(w, a));
        },
        "Brute-force reference for rho.", py::arg("word"),
        py::arg("alphabet") = py::none());
}
