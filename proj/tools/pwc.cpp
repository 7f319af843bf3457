// pwc: piecewise complexity toolkit command line.
//
// Subcommands: measure, rtable, rvector, arch, period, pow, delta, bench.
// Exit codes: 0 success, 1 usage error, 2 validation error, 3 resource
// budget exceeded. All diagnostics go to standard error.

#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "piecewise/arch.hpp"
#include "piecewise/downset.hpp"
#include "piecewise/errors.hpp"
#include "piecewise/measures.hpp"
#include "piecewise/oracle.hpp"
#include "piecewise/periodic.hpp"
#include "piecewise/side_distance.hpp"
#include "piecewise/word.hpp"

namespace {

using namespace piecewise;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitResource = 3;

// ---------------------------------------------------------------------------
// JSON output. Hand-rolled so that field order is stable and pow results
// (which can exceed 64 bits) are emitted as exact decimal numbers.

void json_escape_into(std::string& out, std::string_view s) {
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\b': out += "\\b"; break;
            case '\f': out += "\\f"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
}

class JsonObject {
public:
    JsonObject& str(std::string_view key, std::string_view value) {
        return raw(key, quoted(value));
    }
    JsonObject& num(std::string_view key, uint64_t value) {
        return raw(key, std::to_string(value));
    }
    JsonObject& num(std::string_view key, wide_uint value) {
        return raw(key, to_string(value));
    }
    JsonObject& raw(std::string_view key, std::string_view rendered) {
        buf_ += first_ ? '{' : ',';
        first_ = false;
        buf_ += quoted(key);
        buf_ += ':';
        buf_ += rendered;
        return *this;
    }
    static std::string quoted(std::string_view s) {
        std::string out = "\"";
        json_escape_into(out, s);
        out += '"';
        return out;
    }
    std::string finish() { return first_ ? "{}" : buf_ + "}"; }

private:
    std::string buf_;
    bool first_ = true;
};

template <typename T>
std::string json_number_array(const std::vector<T>& xs) {
    std::string out = "[";
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    return out + "]";
}

// ---------------------------------------------------------------------------

struct Options {
    std::string alphabet;
    std::string input;
    bool json = false;
    bool oracle = false;
    bool timing = false;
    size_t budget = kDefaultSubwordBudget;
};

Word word_from_text(const Options& opt, const std::string& text) {
    if (!opt.alphabet.empty()) return make_word(text, make_alphabet(opt.alphabet));
    return make_word(text);
}

uint64_t elapsed_us(Clock::time_point start) {
    return static_cast<uint64_t>(
        std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start)
            .count());
}

void emit(const std::string& line) { std::cout << line << '\n'; }

void maybe_time_text(std::string& line, const Options& opt, uint64_t us) {
    if (opt.timing) line += " elapsed_us=" + std::to_string(us);
}

void maybe_time_json(JsonObject& obj, const Options& opt, uint64_t us) {
    if (opt.timing) obj.num("elapsed_us", us);
}

// ---------------------------------------------------------------------------
// Subcommand bodies; --input drives them once per line.

void run_measure(const Options& opt, const Word& u) {
    const auto start = Clock::now();
    MeasureReport rep;
    if (opt.oracle) {
        rep.h = h_bf(u, opt.budget);
        rep.rho = rho_bf(u, opt.budget);
    } else {
        rep = measure(u);
    }
    const uint64_t us = elapsed_us(start);

    if (opt.json) {
        JsonObject obj;
        obj.str("word", u.text()).str("alphabet", u.alphabet().symbols());
        obj.num("h", rep.h).num("rho", rep.rho);
        if (rep.h_witness) {
            const std::string letter(1, u.alphabet().symbol(rep.h_witness->second));
            obj.raw("h_witness", "[" + std::to_string(rep.h_witness->first) + "," +
                                     JsonObject::quoted(letter) + "]");
        }
        if (rep.rho_witness) obj.num("rho_witness", static_cast<uint64_t>(*rep.rho_witness));
        maybe_time_json(obj, opt, us);
        emit(obj.finish());
        return;
    }
    std::string line = "word=" + u.text() + " h=" + std::to_string(rep.h) +
                       " rho=" + std::to_string(rep.rho);
    if (rep.h_witness) {
        line += " h_witness=" + std::to_string(rep.h_witness->first) + ":" +
                u.alphabet().symbol(rep.h_witness->second);
    }
    if (rep.rho_witness) line += " rho_witness=" + std::to_string(*rep.rho_witness);
    maybe_time_text(line, opt, us);
    emit(line);
}

void run_rtable(const Options& opt, const Word& u) {
    const auto start = Clock::now();
    const RTable rt(u);
    const uint64_t us = elapsed_us(start);

    if (opt.json) {
        std::string rows = "[";
        for (int a = 0; a < u.alphabet().size(); ++a) {
            if (a) rows += ',';
            rows += json_number_array(rt.row(static_cast<uint8_t>(a)));
        }
        rows += "]";
        JsonObject obj;
        obj.str("word", u.text()).str("alphabet", u.alphabet().symbols());
        obj.raw("rtable", rows);
        maybe_time_json(obj, opt, us);
        emit(obj.finish());
        return;
    }
    for (int a = 0; a < u.alphabet().size(); ++a) {
        std::string line = "r[";
        line += u.alphabet().symbol(a);
        line += "]=";
        const auto row = rt.row(static_cast<uint8_t>(a));
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) line += ' ';
            line += std::to_string(row[i]);
        }
        if (a + 1 == u.alphabet().size()) maybe_time_text(line, opt, us);
        emit(line);
    }
}

void run_rvector(const Options& opt, const Word& u) {
    const auto start = Clock::now();
    const auto rv = r_vector(u);
    const uint64_t us = elapsed_us(start);

    if (opt.json) {
        JsonObject obj;
        obj.str("word", u.text()).str("alphabet", u.alphabet().symbols());
        obj.raw("rvector", json_number_array(rv));
        maybe_time_json(obj, opt, us);
        emit(obj.finish());
        return;
    }
    std::string line = "rvector=";
    for (size_t i = 0; i < rv.size(); ++i) {
        if (i) line += ' ';
        line += std::to_string(rv[i]);
    }
    maybe_time_text(line, opt, us);
    emit(line);
}

void emit_arch_svg(const ArchFactorization& f) {
    const Word& w = f.word;
    const int cell = 24, base = 90, left = 20;
    const int width =
        left * 2 + cell * std::max<int>(1, static_cast<int>(w.length()));
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"130\">\n"
        << "  <style>text{font:14px monospace;}</style>\n";
    for (size_t i = 0; i < w.length(); ++i) {
        const bool in_rest = i >= f.cuts.back();
        svg << "  <text x=\"" << left + cell * i + cell / 2 - 4 << "\" y=\"" << base
            << "\" fill=\"" << (in_rest ? "#999999" : "#000000") << "\">"
            << w.alphabet().symbol(w[i]) << "</text>\n";
    }
    for (size_t j = 0; j + 1 < f.cuts.size(); ++j) {
        const double x0 = left + cell * static_cast<double>(f.cuts[j]);
        const double x1 = left + cell * static_cast<double>(f.cuts[j + 1]);
        svg << "  <path d=\"M " << x0 << " " << base - 20 << " Q " << (x0 + x1) / 2
            << " " << base - 20 - (x1 - x0) / 3 << " " << x1 << " " << base - 20
            << "\" fill=\"none\" stroke=\"#3366cc\"/>\n";
    }
    for (size_t cut : f.cuts) {
        const double x = left + cell * static_cast<double>(cut);
        svg << "  <line x1=\"" << x << "\" y1=\"" << base - 22 << "\" x2=\"" << x
            << "\" y2=\"" << base + 6 << "\" stroke=\"#aaaaaa\"/>\n";
    }
    svg << "</svg>";
    emit(svg.str());
}

void run_arch(const Options& opt, const Word& u, bool svg) {
    const auto start = Clock::now();
    const ArchFactorization f = arch_factorize(u);
    const uint64_t us = elapsed_us(start);

    if (svg) {
        emit_arch_svg(f);
        return;
    }
    if (opt.json) {
        JsonObject obj;
        obj.str("word", u.text()).str("alphabet", u.alphabet().symbols());
        std::vector<uint64_t> cuts(f.cuts.begin(), f.cuts.end());
        obj.raw("cuts", json_number_array(cuts));
        obj.str("rest", f.rest().text());
        maybe_time_json(obj, opt, us);
        emit(obj.finish());
        return;
    }
    std::string line;
    for (size_t j = 0; j < f.arch_count(); ++j) {
        line += f.arch(j).text();
        line += '.';
    }
    line += f.rest().text();
    maybe_time_text(line, opt, us);
    emit(line);
}

void run_period(const Options& opt, const Word& u) {
    const auto start = Clock::now();
    const PeriodData pd = arch_period(u);
    const uint64_t us = elapsed_us(start);

    if (opt.json) {
        JsonObject obj;
        obj.str("word", u.text()).str("alphabet", u.alphabet().symbols());
        obj.num("K", pd.transient_arches)
            .num("T", pd.transient)
            .num("p", pd.period)
            .num("span", pd.span)
            .num("delta", pd.copies)
            .num("slope_num", pd.slope_num)
            .num("slope_den", pd.slope_den);
        maybe_time_json(obj, opt, us);
        emit(obj.finish());
        return;
    }
    std::string line = "word=" + u.text() + " K=" + std::to_string(pd.transient_arches) +
                       " T=" + std::to_string(pd.transient) +
                       " p=" + std::to_string(pd.period) +
                       " span=" + std::to_string(pd.span) +
                       " delta=" + std::to_string(pd.copies) + " slope=" +
                       std::to_string(pd.slope_num) + "/" + std::to_string(pd.slope_den);
    maybe_time_text(line, opt, us);
    emit(line);
}

void run_pow(const Options& opt, const Word& u, uint64_t n, bool verify) {
    const auto start = Clock::now();
    const wide_uint hv = h_pow(u, n);
    const wide_uint rv = rho_pow(u, n);
    const uint64_t us = elapsed_us(start);

    std::optional<uint64_t> h_direct, rho_direct;
    if (verify) {
        if (n <= 64) {
            const Word w = power(u, n);
            h_direct = h(w);
            rho_direct = rho(w);
        } else {
            std::cerr << "note: --verify skipped (n > 64)\n";
        }
    }

    if (opt.json) {
        JsonObject obj;
        obj.str("word", u.text()).str("alphabet", u.alphabet().symbols());
        obj.num("h", hv).num("rho", rv).num("n", n);
        if (h_direct) obj.num("h_direct", *h_direct).num("rho_direct", *rho_direct);
        maybe_time_json(obj, opt, us);
        emit(obj.finish());
        return;
    }
    std::string line = "word=" + u.text() + " n=" + std::to_string(n) +
                       " h=" + to_string(hv) + " rho=" + to_string(rv);
    if (h_direct) {
        line += " h_direct=" + std::to_string(*h_direct) +
                " rho_direct=" + std::to_string(*rho_direct);
    }
    maybe_time_text(line, opt, us);
    emit(line);
}

void run_delta(const Options& opt, const Word& u, const Word& v, uint64_t kmax) {
    const auto start = Clock::now();
    const BoundedDistance d = delta_bf(u, v, kmax, opt.budget);
    const uint64_t us = elapsed_us(start);

    std::string rendered;
    if (d.is_infinite()) {
        rendered = "INF";
    } else if (d.is_exceeds()) {
        rendered = ">=" + std::to_string(d.value());
    } else {
        rendered = std::to_string(d.value());
    }

    if (opt.json) {
        JsonObject obj;
        obj.str("u", u.text()).str("v", v.text());
        obj.str("alphabet", u.alphabet().symbols());
        obj.num("kmax", kmax);
        if (d.is_finite()) {
            obj.num("delta", d.value());
        } else {
            obj.str("delta", rendered);
        }
        maybe_time_json(obj, opt, us);
        emit(obj.finish());
        return;
    }
    std::string line = "delta=" + rendered;
    maybe_time_text(line, opt, us);
    emit(line);
}

// ---------------------------------------------------------------------------
// bench: timing harness over random words.

Word bench_word(std::mt19937_64& rng, const AlphabetRef& ab, size_t len, bool full) {
    std::uniform_int_distribution<int> dist(0, ab->size() - 1);
    std::vector<uint8_t> letters(len);
    for (auto& x : letters) x = static_cast<uint8_t>(dist(rng));
    if (full && len >= static_cast<size_t>(ab->size())) {
        for (int a = 0; a < ab->size(); ++a) {
            letters[rng() % len] = static_cast<uint8_t>(a);
        }
    }
    return Word(ab, std::move(letters));
}

struct BenchOpts {
    std::string op = "all";
    size_t size = 1000000;
    int alphabet_size = 26;
    int reps = 5;
    uint64_t seed = 12345;
    uint64_t pow_n = 1000000000000000000ull;
};

uint64_t median_us(std::vector<uint64_t> v) {
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
}

void run_bench(const Options& opt, const BenchOpts& b) {
    std::mt19937_64 rng(b.seed);
    const std::string_view pool =
        "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";
    const auto ab = make_alphabet(pool.substr(0, static_cast<size_t>(b.alphabet_size)));

    auto report = [&](const std::string& op, uint64_t med) {
        if (opt.json) {
            JsonObject obj;
            obj.str("op", op)
                .num("size", static_cast<uint64_t>(b.size))
                .num("alphabet", static_cast<uint64_t>(b.alphabet_size))
                .num("reps", static_cast<uint64_t>(b.reps))
                .num("median_us", med);
            emit(obj.finish());
        } else {
            emit("op=" + op + " size=" + std::to_string(b.size) + " alphabet=" +
                 std::to_string(b.alphabet_size) + " reps=" + std::to_string(b.reps) +
                 " median_us=" + std::to_string(med));
        }
    };

    auto time_op = [&](auto&& fn) {
        std::vector<uint64_t> times;
        for (int rep = 0; rep < b.reps; ++rep) {
            const auto start = Clock::now();
            fn();
            times.push_back(elapsed_us(start));
        }
        return median_us(times);
    };

    volatile uint64_t sink = 0;
    if (b.op == "all" || b.op == "h") {
        const Word w = bench_word(rng, ab, b.size, false);
        report("h", time_op([&] { sink = sink + h(w); }));
    }
    if (b.op == "all" || b.op == "rho") {
        const Word w = bench_word(rng, ab, b.size, false);
        report("rho", time_op([&] { sink = sink + rho(w); }));
    }
    if (b.op == "all" || b.op == "measure") {
        const Word w = bench_word(rng, ab, b.size, false);
        report("measure", time_op([&] { sink = sink + measure(w).h; }));
    }
    if (b.op == "all" || b.op == "pow") {
        const Word w = bench_word(rng, ab, b.size, true);
        report("pow", time_op([&] {
                   sink = sink + static_cast<uint64_t>(h_pow(w, b.pow_n)) +
                          static_cast<uint64_t>(rho_pow(w, b.pow_n));
               }));
    }
    (void)sink;
}

// ---------------------------------------------------------------------------

int process_lines(const Options& opt, const std::function<void(const Word&)>& fn) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (opt.input != "-") {
        file.open(opt.input);
        if (!file) {
            std::cerr << "error: cannot open input file '" << opt.input << "'\n";
            return kExitUsage;
        }
        in = &file;
    }
    int exit_code = kExitOk;
    std::string line;
    size_t lineno = 0;
    while (std::getline(*in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        try {
            fn(word_from_text(opt, line));
        } catch (const validation_error& e) {
            std::cerr << "line " << lineno << ": " << e.what() << '\n';
            exit_code = kExitValidation;
        } catch (const resource_error& e) {
            std::cerr << "line " << lineno << ": " << e.what() << '\n';
            if (exit_code != kExitValidation) exit_code = kExitResource;
        }
    }
    return exit_code;
}

int run_word_command(const Options& opt, const std::string& word_arg, bool have_word,
                     const std::function<void(const Word&)>& fn) {
    if (!opt.input.empty()) return process_lines(opt, fn);
    if (!have_word) {
        std::cerr << "error: expected a word argument (or --input)\n";
        return kExitUsage;
    }
    fn(word_from_text(opt, word_arg));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"piecewise complexity and Simon-congruence toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--alphabet", opt.alphabet,
                   "explicit alphabet (default: letters of the word in first-occurrence "
                   "order)");
    app.add_flag("--json", opt.json, "one JSON object per input, stable field order");
    app.add_option("--input", opt.input, "file with one word per line, - for stdin");
    app.add_flag("--oracle", opt.oracle,
                 "route measure through the brute-force reference");
    app.add_flag("--time", opt.timing, "include elapsed_us in the output");
    app.add_option("--budget", opt.budget,
                   "stored-subword cap for the brute-force paths");

    std::string word_arg, word2_arg, n_arg;
    bool svg = false, verify = false;
    uint64_t kmax = 0;

    auto* c_measure =
        app.add_subcommand("measure", "piecewise complexity h and minimality index rho");
    c_measure->add_option("word", word_arg, "input word");
    auto* c_rtable = app.add_subcommand("rtable", "right side-distance table");
    c_rtable->add_option("word", word_arg, "input word");
    auto* c_rvector = app.add_subcommand("rvector", "per-position right side distances");
    c_rvector->add_option("word", word_arg, "input word");
    auto* c_arch = app.add_subcommand("arch", "arch factorization");
    c_arch->add_option("word", word_arg, "input word");
    c_arch->add_flag("--svg", svg, "render the arches as a static SVG");
    auto* c_period =
        app.add_subcommand("period", "arch period of the infinite repetition");
    c_period->add_option("word", word_arg, "input word");
    auto* c_pow =
        app.add_subcommand("pow", "h and rho of word^n without materializing it");
    c_pow->add_option("word", word_arg, "base word");
    c_pow->add_option("n", n_arg, "number of copies (up to 2^63-1)");
    c_pow->add_flag("--verify", verify, "also compute directly when n <= 64");
    auto* c_delta = app.add_subcommand("delta", "bounded brute-force subword distance");
    c_delta->add_option("u", word_arg, "first word");
    c_delta->add_option("v", word2_arg, "second word");
    auto* kmax_opt = c_delta->add_option("--kmax", kmax, "search bound");
    BenchOpts bench;
    auto* c_bench = app.add_subcommand("bench", "timing harness on random words");
    c_bench->add_option("--op", bench.op, "h, rho, measure, pow, or all")
        ->check(CLI::IsMember({"h", "rho", "measure", "pow", "all"}));
    c_bench->add_option("--size", bench.size, "word length");
    c_bench->add_option("--alphabet-size", bench.alphabet_size, "alphabet size")
        ->check(CLI::Range(1, 62));
    c_bench->add_option("--reps", bench.reps, "repetitions per op");
    c_bench->add_option("--seed", bench.seed, "random seed");
    c_bench->add_option("--pow-n", bench.pow_n, "copy count for the pow benchmark");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (c_measure->parsed()) {
            return run_word_command(opt, word_arg, c_measure->count("word") > 0,
                                    [&](const Word& u) { run_measure(opt, u); });
        }
        if (c_rtable->parsed()) {
            return run_word_command(opt, word_arg, c_rtable->count("word") > 0,
                                    [&](const Word& u) { run_rtable(opt, u); });
        }
        if (c_rvector->parsed()) {
            return run_word_command(opt, word_arg, c_rvector->count("word") > 0,
                                    [&](const Word& u) { run_rvector(opt, u); });
        }
        if (c_arch->parsed()) {
            return run_word_command(opt, word_arg, c_arch->count("word") > 0,
                                    [&](const Word& u) { run_arch(opt, u, svg); });
        }
        if (c_period->parsed()) {
            return run_word_command(opt, word_arg, c_period->count("word") > 0,
                                    [&](const Word& u) { run_period(opt, u); });
        }
        if (c_pow->parsed()) {
            // with --input the only positional is the copy count
            std::string n_text = n_arg;
            bool have_word = c_pow->count("word") > 0;
            if (!opt.input.empty() && c_pow->count("n") == 0 && have_word) {
                n_text = word_arg;
                have_word = false;
            }
            if (n_text.empty()) {
                std::cerr << "error: pow needs a copy count\n";
                return kExitUsage;
            }
            uint64_t n = 0;
            const auto [ptr, ec] =
                std::from_chars(n_text.data(), n_text.data() + n_text.size(), n);
            if (ec != std::errc{} || ptr != n_text.data() + n_text.size()) {
                std::cerr << "error: copy count '" << n_text << "' is not a number\n";
                return kExitUsage;
            }
            if (n > uint64_t{9223372036854775807ull}) {
                throw validation_error("copy count exceeds 2^63-1");
            }
            return run_word_command(opt, word_arg, have_word,
                                    [&](const Word& u) { run_pow(opt, u, n, verify); });
        }
        if (c_delta->parsed()) {
            if (!opt.input.empty()) {
                std::cerr << "error: delta does not support --input\n";
                return kExitUsage;
            }
            if (c_delta->count("u") == 0 || c_delta->count("v") == 0) {
                std::cerr << "error: delta needs two words\n";
                return kExitUsage;
            }
            AlphabetRef ab = opt.alphabet.empty() ? alphabet_of_text(word_arg + word2_arg)
                                                  : make_alphabet(opt.alphabet);
            const Word u = make_word(word_arg, ab);
            const Word v = make_word(word2_arg, ab);
            if (kmax_opt->count() == 0) kmax = std::max(u.length(), v.length()) + 2;
            run_delta(opt, u, v, kmax);
            return kExitOk;
        }
        if (c_bench->parsed()) {
            run_bench(opt, bench);
            return kExitOk;
        }
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
