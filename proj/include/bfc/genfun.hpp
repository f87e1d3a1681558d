#ifndef BFC_GENFUN_HPP
#define BFC_GENFUN_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bfc/bosonic.hpp"
#include "bfc/fermionic.hpp"
#include "bfc/poly.hpp"

namespace bfc {

struct SeriesParams {
    int r = 0;
    int h = 0;
    int k = 0;
    std::optional<int> n;  // absent: the n = infinity mode

    [[nodiscard]] int target_rank() const { return r + h - k; }
    friend bool operator==(const SeriesParams&, const SeriesParams&) = default;
};

/// Per-variable maximum exponents for z_i, w_i^{-1} and t_i.
struct SeriesBounds {
    int zdeg = 0;
    int wdeg = 0;
    int tdeg = 0;

    /// Smallest bounds that cover every coefficient of the action on B_{r,n}.
    static SeriesBounds covering(int n) { return {n - 1, n - 1, n - 1}; }
    friend bool operator==(const SeriesBounds&, const SeriesBounds&) = default;
};

/// Index and sign choices for the determinant. The default reproduces the Clifford action;
/// `as_printed()` follows the displayed conventions and serves as a negative control.
struct SignConvention {
    std::string name = "derived";
    int t_index_shift = 0;             // added to every S-index in the t-columns
    bool sign_h_times_k = true;        // prefactor (-1)^{hk}; false: (-1)^h
    bool sign_row_order = true;        // extra (-1)^{k(k-1)/2} for top rows ordered w_1..w_k

    static SignConvention derived() { return {}; }
    static SignConvention as_printed() { return {"as-printed", -1, false, false}; }
};

/// Truncated generating series with coefficients in B_{r+h-k,n}.
/// Variables: z1..zh, v1..vk (v_i = 1/w_i), t1..tr.
struct GenSeries {
    SeriesParams params;
    SeriesBounds bounds;
    RingPtr target;  // null when r+h-k is out of range
    SPoly body;

    [[nodiscard]] bool trivially_zero() const { return !target || body.is_zero(); }
};

/// Alphabet z1..zh, v1..vk, t1..tr (and W1..Wk when `with_w`).
Alphabet genfun_alphabet(int r, int h, int k, bool with_w = false);

/// Degree cap of the n = infinity target ring needed for the given bounds.
int infinite_degree_cap(const SeriesParams& p, const SeriesBounds& b);

/// Target ring B_{r+h-k,n}, or null when the rank is negative or exceeds n.
RingPtr target_ring(const SeriesParams& p, const SeriesBounds& b);

/// sum_{a=0}^{#vars} (-1)^a e_a(vars) S_{j+a}, with S_m = 0 for m < 0.
SPoly sbb_poly(int j, const SymContext& vars, const RingPtr& ring);

/// The (r+h)x(r+h) determinant, with W_i standing for w_i; z, t truncated by `bounds`.
SPoly build_D(const SeriesParams& p, const SeriesBounds& bounds, const RingPtr& ring,
              const SignConvention& conv = SignConvention::derived());

/// Replaces each v_i^a W_i^b by v_i^{a-b} (or W_i^{b-a}).
SPoly cancel_w(const SPoly& p, int k);

GenSeries main_series(const SeriesParams& p, const SeriesBounds& bounds,
                      const SignConvention& conv = SignConvention::derived());

/// Coefficient of z^I v^J t^{lambda+delta} in alt(z) alt(v) alt(t) * body.
SchurCombo extract_action(const GenSeries& gs, const std::vector<int>& I, const std::vector<int>& J,
                          const Partition& lambda);

struct CoefficientEntry {
    std::vector<int> I;
    std::vector<int> J;
    Partition lambda;
    SchurCombo value;
};

/// Every (I, J, lambda) covered by the bounds and admissible for n; zero values included.
std::vector<CoefficientEntry> coefficient_table(const GenSeries& gs);

/// Strictly decreasing length-`len` tuples with entries in [0, top].
std::vector<std::vector<int>> decreasing_tuples(int len, int top);

/// Equality of parameters, bounds and coefficient tables.
bool same_series(const GenSeries& a, const GenSeries& b);

nlohmann::json to_json(const GenSeries& gs);
GenSeries genseries_from_json(const nlohmann::json& j);
std::string to_text(const GenSeries& gs);

nlohmann::json to_json(const SchurCombo& x);
SchurCombo schurcombo_from_json(const nlohmann::json& j, const RingPtr& ring);
nlohmann::json to_json(const MPoly& p);
MPoly mpoly_from_json(const nlohmann::json& j);

/// Both sides of the k = 0 wedge identity, truncated per variable at `bound`.
struct IdentitySides {
    ExtSeries lhs;
    ExtSeries rhs;
    [[nodiscard]] bool agree() const { return lhs == rhs; }
};
IdentitySides cauchy_wedge(int h, int r, std::optional<int> n, int bound);

struct ScalarSides {
    MPoly lhs;
    MPoly rhs;
    [[nodiscard]] bool agree() const { return lhs == rhs; }
};
/// h = 0, k = r: iterated contraction of sigma_+(t) X^r(0) against the determinant.
ScalarSides contraction_det(int r, std::optional<int> n, int bound);

}  // namespace bfc

#endif  // BFC_GENFUN_HPP
