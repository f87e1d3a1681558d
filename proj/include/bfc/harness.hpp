#ifndef BFC_HARNESS_HPP
#define BFC_HARNESS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bfc/genfun.hpp"

namespace bfc {

struct SweepConfig {
    int min_n = 2;
    int max_n = 6;
    int max_r = 3;
    int max_h = 2;
    int max_k = 2;
    std::optional<SeriesBounds> bounds;  // default: SeriesBounds::covering(n)
    int jobs = 1;
    SignConvention convention = SignConvention::derived();
    std::string out_path;
};

struct Mismatch {
    SeriesParams params;
    std::vector<int> I;
    std::vector<int> J;
    Partition lambda;
    std::string oracle;
    std::string series;
};

struct SuiteResult {
    std::string name;
    bool passed = true;
    long checks = 0;
    std::string detail;  // first failure, if any
};

struct VerifyReport {
    SweepConfig config;
    long cases = 0;
    int series_built = 0;
    std::vector<Mismatch> mismatches;
    std::vector<SuiteResult> suites;
    double seconds = 0;

    [[nodiscard]] bool ok() const;
    [[nodiscard]] nlohmann::json to_json() const;
    [[nodiscard]] std::string summary() const;
};

/// Default job count: $BFC_JOBS when set and positive, else 1.
int default_jobs();

/// Generating series against direct Clifford action over every (n, r, h, k, I, J, lambda) in the config.
VerifyReport run_sweep(const SweepConfig& cfg);

/// Sweep plus every invariant suite.
VerifyReport run_verify(const SweepConfig& cfg);

// Invariant suites; each is exact and deterministic.
SuiteResult suite_clifford_relations(int n = 6, int max_degree = 4);
SuiteResult suite_antiderivation(int n = 6);
SuiteResult suite_trace_matches_word(int n = 5);
SuiteResult suite_trace_lie_homomorphism(int n = 4);
SuiteResult suite_exp_log(int samples = 40, unsigned seed = 7);
SuiteResult suite_series_inverse(int samples = 100, unsigned seed = 11);
SuiteResult suite_ring_axioms(int samples = 60, unsigned seed = 13);
SuiteResult suite_dimension(int max_n = 8);
SuiteResult suite_grading(int max_n = 5);
SuiteResult suite_truncation_stability(int max_n = 4);
SuiteResult suite_jacobi_trudi_module(int max_n = 6);
SuiteResult suite_wedge_schur_expansion(int max_n = 6, int max_r = 3, int tdeg = 6);
SuiteResult suite_u_polynomials(int max_r = 4);
SuiteResult suite_contraction_laplace(int max_n = 6, int max_r = 3);
SuiteResult suite_cauchy(int max_h = 3, int max_r = 3, int bound = 3);
SuiteResult suite_contraction(int max_r = 3, int bound = 5);
SuiteResult suite_infinite_consistency(int max_r = 3, int zdeg = 3, int wdeg = 3, int width = 3);
std::vector<SuiteResult> run_all_suites();

/// One term of the B_{2,4} comparison at z^i w^{-j} s_lambda(t).
struct B24Row {
    int i = 0;
    int j = 0;
    Partition lambda;
    SchurCombo computed;
    SchurCombo oracle;
    std::optional<SchurCombo> printed_schur;  // absent: bracket not printed
    std::optional<SchurCombo> printed_chern;
    bool suspect_schur = false;
    bool suspect_chern = false;
    std::string status_schur;  // match | typo-suspect | unregistered-difference | missing-bracket
    std::string status_chern;
};

struct B24Report {
    std::vector<B24Row> rows;
    bool oracle_agrees = true;
    int diff_match = 0;
    int diff_suspect = 0;
    int diff_unregistered = 0;
    [[nodiscard]] std::string text() const;
};

/// Bracket of the printed display: (i, j) and (label, value) pairs; see b24_display.cpp.
struct PrintedBracket {
    int i = 0;
    int j = 0;
    std::vector<std::pair<std::string, std::string>> terms;
    bool suspect = false;
    std::string note;
};
const std::vector<PrintedBracket>& b24_schur_display();  // labels: partitions; values: polynomials in S1, S2
const std::vector<PrintedBracket>& b24_chern_display();  // labels: polynomials in t1, t2; values: polynomials in c1, c2

B24Report run_b24();

}  // namespace bfc

#endif  // BFC_HARNESS_HPP
