// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "bfc/harness.hpp"

using namespace bfc;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

bool all_ok = true;

void criterion(int id, const std::string& title, double budget, const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = o.ok && secs < budget;
    all_ok = all_ok && pass;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (pass ? "PASS" : "FAIL") << "  " << id << ". " << title << " (" << secs << " s, budget " << budget
         << " s)";
    if (!o.detail.empty()) line << ": " << o.detail;
    std::cout << line.str() << std::endl;
}

Outcome from_suites(const std::vector<SuiteResult>& suites) {
    Outcome o;
    long checks = 0;
    for (const auto& s : suites) {
        checks += s.checks;
        if (!s.passed) {
            o.ok = false;
            o.detail += "[" + s.name + "] " + s.detail + "; ";
        }
    }
    if (o.ok) o.detail = std::to_string(checks) + " checks over " + std::to_string(suites.size()) + " suites";
    return o;
}

Outcome matrix_unit_action() {
    Outcome o;
    int checks = 0;
    for (int n = 4; n <= 6; ++n) {
        RingPtr ring = Ring::get({1, n, std::nullopt});
        GenSeries gs = main_series({1, 1, 1, n}, SeriesBounds::covering(n));
        const CliffordWord e23{{2}, {3}};
        const SchurCombo c1sq = SchurCombo::basis(ring, Partition{2});
        bool ok = extract_action(gs, {2}, {3}, Partition{3}) == c1sq &&
                  star_action_oracle(e23, Partition{3}, 1, n) == c1sq;
        if (ring->contains(Partition{4})) {
            ok = ok && extract_action(gs, {2}, {3}, Partition{4}).is_zero() &&
                 star_action_oracle(e23, Partition{4}, 1, n).is_zero();
        } else {
            // c1^4 is itself zero in B_{1,4}.
            ok = ok && reduce({{Partition{4}, Rational(1)}}, ring).is_zero();
        }
        checks += 4;
        if (!ok) {
            o.ok = false;
            o.detail += "n=" + std::to_string(n) + " ";
        }
    }
    if (o.ok) o.detail = std::to_string(checks) + " checks";
    return o;
}

Outcome rank_one_series() {
    Outcome o;
    const SeriesBounds b{6, 12, 6};
    for (int n = 2; n <= 6; ++n) {
        GenSeries gs = main_series({1, 1, 1, n}, b);
        // (1 - t^n v^n) / ((1 - c1 z)(1 - t v)) with c1^i = S_(i) in B_{1,n}.
        SPoly expect(gs.body.vars());
        for (int i = 0; i <= std::min(b.zdeg, n - 1); ++i) {
            for (int j = 0; j <= std::min(b.tdeg, n - 1); ++j) {
                expect.add_term(make_monomial(expect.vars(), {{"z1", i}, {"v1", j}, {"t1", j}}),
                                SchurCombo::basis(gs.target, Partition{i}));
            }
        }
        if (!(gs.body == expect)) {
            o.ok = false;
            o.detail += "n=" + std::to_string(n) + " differs; ";
        }
    }
    if (o.ok) o.detail = "n = 2..6";
    return o;
}

Outcome sweep() {
    SweepConfig cfg;
    cfg.jobs = default_jobs();
    VerifyReport rep = run_sweep(cfg);
    Outcome o{rep.mismatches.empty(), ""};
    o.detail = std::to_string(rep.cases) + " coefficients over " + std::to_string(rep.series_built) + " series, " +
               std::to_string(rep.mismatches.size()) + " mismatches";
    return o;
}

Outcome b24() {
    B24Report rep = run_b24();
    Outcome o{rep.oracle_agrees, ""};
    std::ostringstream d;
    d << rep.rows.size() << " coefficients, oracle " << (rep.oracle_agrees ? "agrees" : "DISAGREES")
      << "; printed display: " << rep.diff_match << " match, " << rep.diff_suspect << " typo-suspect, "
      << rep.diff_unregistered << " unregistered";
    for (const auto& r : rep.rows) {
        for (const auto& [which, status] : {std::pair{"schur", r.status_schur}, std::pair{"chern", r.status_chern}}) {
            if (status == "match" || status.empty()) continue;
            d << "\n        [" << which << "] z^" << r.i << " w^-" << r.j << " s" << r.lambda.to_string() << ": " << status;
        }
    }
    o.detail = d.str();
    return o;
}

}  // namespace

int main() {
    criterion(1, "matrix unit E23 on c1^3 and c1^4 in B_{1,n}, n = 4..6, both paths", 1, matrix_unit_action);
    criterion(2, "r = 1 series equals (1 - t^n/w^n)/((1 - c1 z)(1 - t/w))", 5, rank_one_series);
    criterion(3, "generating series against direct Clifford action, n <= 6, r <= 3, h,k <= 2", 600, sweep);
    criterion(4, "Jacobi-Trudi module structure, n <= 6", 10,
              [] { return from_suites({suite_jacobi_trudi_module(6)}); });
    criterion(5, "Schur expansion of the wedge of X(t_i), t-degree 6, r <= 3, n <= 6", 10,
              [] { return from_suites({suite_wedge_schur_expansion(6, 3, 6)}); });
    criterion(6, "U_{r+j,m} vanishing and the truncated complete series identity", 5,
              [] { return from_suites({suite_u_polynomials(4)}); });
    criterion(7, "Cauchy (k = 0) and contraction (h = 0, k = r) identities", 30, [] {
        return from_suites({suite_cauchy(3, 3, 3), suite_contraction(3, 5), suite_contraction_laplace(6, 3)});
    });
    criterion(8, "B_{2,4} expansion against the oracle and the printed display", 30, b24);
    criterion(9, "finite n against the infinite mode, r <= 3, h = k = 1", 30,
              [] { return from_suites({suite_infinite_consistency(3, 3, 3, 3)}); });
    criterion(10, "structural invariant suites", 60, [] {
        return from_suites({suite_clifford_relations(), suite_antiderivation(), suite_trace_matches_word(),
                            suite_trace_lie_homomorphism(), suite_exp_log(), suite_series_inverse(),
                            suite_ring_axioms(), suite_dimension(), suite_grading(), suite_truncation_stability()});
    });
    std::cout << (all_ok ? "all criteria passed" : "some criteria FAILED") << std::endl;
    return all_ok ? 0 : 1;
}
