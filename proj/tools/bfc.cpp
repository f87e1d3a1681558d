// bfc: Clifford words acting on B_{r,n}, by direct action and by the determinantal series.
// Exit status: 0 success, 1 mismatch or failed check, 2 usage error.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "bfc/harness.hpp"

using namespace bfc;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::optional<int> parse_n(const std::string& s) {
    if (s == "inf" || s == "infinity") return std::nullopt;
    try {
        std::size_t pos = 0;
        int n = std::stoi(s, &pos);
        if (pos != s.size() || n < 1) throw UsageError("--n must be a positive integer or 'inf'");
        return n;
    } catch (const std::logic_error&) {
        throw UsageError("--n must be a positive integer or 'inf', got '" + s + "'");
    }
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << text;
}

std::string shown(const SchurCombo& x) { return x.is_zero() ? "0" : x.to_string(); }

int cmd_act(int r, const std::string& nstr, const std::string& word_text, const std::string& schur_text,
            const std::string& format) {
    const auto n = parse_n(nstr);
    std::vector<Letter> word;
    Partition lambda;
    try {
        word = CliffordWord::parse(word_text);
        lambda = Partition::parse(schur_text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (r < 0 || (n && r > *n)) throw UsageError("need 0 <= r <= n");
    if (lambda.length() > r || (n && lambda.length() > 0 && lambda[0] > *n - r)) {
        throw UsageError("partition " + lambda.to_string() + " is outside P_{r,n}");
    }
    for (const auto& l : word) {
        if (l.index < 0 || (n && l.index >= *n)) throw UsageError("letter index out of range 0..n-1");
    }

    const auto terms = normal_order(word);
    int h = 0, k = 0;
    for (const auto& l : word) (l.creation ? h : k) += 1;
    const int m = r + h - k;

    // Direct action on the exterior algebra.
    std::optional<int> cap;
    SeriesBounds b{0, 0, r > 0 ? r - 1 + lambda[0] : 0};
    for (const auto& [c, w] : terms) {
        for (int i : w.I) b.zdeg = std::max(b.zdeg, i);
        for (int j : w.J) b.wdeg = std::max(b.wdeg, j);
    }
    if (n) b = SeriesBounds::covering(*n);
    if (!n) {
        cap = 0;
        for (const auto& [c, w] : terms) {
            cap = std::max(*cap, infinite_degree_cap({r, static_cast<int>(w.I.size()), static_cast<int>(w.J.size()), n}, b));
        }
    }

    RingPtr ring = (m < 0 || (n && m > *n)) ? nullptr : Ring::get({m, n, cap});
    ExtVec u = clifford_act(word, ExtVec::wedge_of(n, ext_monomial(lambda, r)));
    SchurCombo direct = ring ? to_bosonic(u, ring) : SchurCombo();

    // Extraction from the generating series, one series per (h, k) block of the normal form.
    SchurCombo series = ring ? SchurCombo(ring) : SchurCombo();
    std::map<std::pair<int, int>, GenSeries> cache;
    for (const auto& [c, w] : terms) {
        const int hh = static_cast<int>(w.I.size()), kk = static_cast<int>(w.J.size());
        auto it = cache.find({hh, kk});
        if (it == cache.end()) it = cache.emplace(std::make_pair(hh, kk), main_series({r, hh, kk, n}, b)).first;
        SchurCombo v = extract_action(it->second, w.I, w.J, lambda);
        if (!v.is_zero()) series += reduce(v.to_map(), ring) * c;
    }
    const bool agree = direct.is_zero() ? series.is_zero() : direct == series;

    if (format == "json") {
        nlohmann::json j{{"word", word_text}, {"lambda", lambda.parts()}, {"r", r},
                         {"n", n ? nlohmann::json(*n) : nlohmann::json("inf")}, {"target_rank", m},
                         {"oracle", to_json(direct)}, {"series", to_json(series)}, {"agree", agree}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "oracle: " << shown(direct) << "\n";
        std::cout << "series: " << shown(series) << "\n";
        if (!agree) std::cout << "MISMATCH\n";
    }
    return agree ? 0 : 1;
}

int cmd_series(int r, int h, int k, const std::string& nstr, std::optional<int> zdeg, std::optional<int> wdeg,
               std::optional<int> tdeg, const std::string& format, const std::string& out) {
    const auto n = parse_n(nstr);
    if (r < 0 || h < 0 || k < 0) throw UsageError("r, h, k must be nonnegative");
    if (n && r > *n) throw UsageError("need r <= n");
    SeriesBounds b;
    if (n) {
        b = SeriesBounds::covering(*n);
    } else if (!zdeg || !wdeg || !tdeg) {
        throw UsageError("--n inf needs --zdeg, --wdeg and --tdeg");
    }
    if (zdeg) b.zdeg = *zdeg;
    if (wdeg) b.wdeg = *wdeg;
    if (tdeg) b.tdeg = *tdeg;
    if (b.zdeg < 0 || b.wdeg < 0 || b.tdeg < 0) throw UsageError("bounds must be nonnegative");
    GenSeries gs = main_series({r, h, k, n}, b);
    emit(format == "json" ? to_json(gs).dump(2) + "\n" : to_text(gs), out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Clifford words acting on the cohomology of Grassmannians"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    int r = 1, h = 0, k = 0;
    std::string nstr = "4", word, schur = "[]", out;
    std::optional<int> zdeg, wdeg, tdeg;

    auto* act = app.add_subcommand("act", "apply a Clifford word to S_lambda both ways");
    act->add_option("--r", r, "rank")->required();
    act->add_option("--n", nstr, "dimension of V_n, or 'inf'")->required();
    act->add_option("--word", word, "letters such as \"X:2 D:3\", rightmost acts first")->required();
    act->add_option("--schur", schur, "partition, e.g. [2,1]")->required();

    auto* series = app.add_subcommand("series", "truncated generating series of the action");
    series->set_help_flag("--help", "print this help message and exit");
    series->add_option("--r", r)->required();
    series->add_option("--h", h)->required();
    series->add_option("--k", k)->required();
    series->add_option("--n", nstr, "dimension of V_n, or 'inf'")->required();
    series->add_option("--zdeg", zdeg, "per-variable bound on z");
    series->add_option("--wdeg", wdeg, "per-variable bound on 1/w");
    series->add_option("--tdeg", tdeg, "per-variable bound on t");
    series->add_option("--out", out, "write to a file");

    SweepConfig cfg;
    cfg.jobs = default_jobs();
    bool flipped = false, no_suites = false;
    auto* verify = app.add_subcommand("verify", "series against direct action, plus invariant suites");
    verify->add_option("--min-n", cfg.min_n);
    verify->add_option("--max-n", cfg.max_n);
    verify->add_option("--max-r", cfg.max_r);
    verify->add_option("--max-h", cfg.max_h);
    verify->add_option("--max-k", cfg.max_k);
    verify->add_option("--zdeg", zdeg);
    verify->add_option("--wdeg", wdeg);
    verify->add_option("--tdeg", tdeg);
    verify->add_option("--jobs", cfg.jobs, "worker threads (default $BFC_JOBS or 1)");
    verify->add_option("--out", cfg.out_path, "write the JSON report to a file");
    verify->add_flag("--as-printed", flipped, "debug: use the displayed index and sign conventions");
    verify->add_flag("--no-suites", no_suites, "sweep only");

    auto* b24 = app.add_subcommand("b24", "the B_{2,4} expansion against the printed display");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*act) return cmd_act(r, nstr, word, schur, format);
        if (*series) return cmd_series(r, h, k, nstr, zdeg, wdeg, tdeg, format, out);
        if (*verify) {
            if (cfg.min_n < 1 || cfg.max_n < cfg.min_n || cfg.max_r < 0 || cfg.max_h < 0 || cfg.max_k < 0 || cfg.jobs < 1) {
                throw UsageError("invalid sweep range");
            }
            if (zdeg || wdeg || tdeg) {
                if (!zdeg || !wdeg || !tdeg) throw UsageError("give all of --zdeg, --wdeg, --tdeg or none");
                cfg.bounds = SeriesBounds{*zdeg, *wdeg, *tdeg};
            }
            if (flipped) cfg.convention = SignConvention::as_printed();
            VerifyReport rep = no_suites ? run_sweep(cfg) : run_verify(cfg);
            if (no_suites && !cfg.out_path.empty()) emit(rep.to_json().dump(2) + "\n", cfg.out_path);
            std::cout << (format == "json" ? rep.to_json().dump(2) + "\n" : rep.summary());
            return rep.ok() ? 0 : 1;
        }
        if (*b24) {
            B24Report rep = run_b24();
            std::cout << rep.text();
            return rep.oracle_agrees ? 0 : 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
