#ifndef BFC_SYMFUN_HPP
#define BFC_SYMFUN_HPP

#include <string>
#include <vector>

#include "bfc/partition.hpp"
#include "bfc/poly.hpp"

namespace bfc {

/// A finite set of variables inside an alphabet, e.g. t1..tr.
struct SymContext {
    Alphabet vars;              // ambient alphabet of all produced polynomials
    std::vector<int> indices;   // positions of the symmetric variables in `vars`

    [[nodiscard]] int r() const { return static_cast<int>(indices.size()); }
    [[nodiscard]] const std::string& name(int i) const { return (*vars)[indices[i]]; }

    /// Variables prefix1..prefixr forming their own alphabet.
    static SymContext make(const std::string& prefix, int r);
    /// The named variables inside an existing alphabet.
    static SymContext within(const Alphabet& vars, const std::vector<std::string>& names);
};

MPoly elementary(int k, const SymContext& ctx);
MPoly complete(int k, const SymContext& ctx);
MPoly power_sum(int k, const SymContext& ctx);

/// prod_{i<j} (t_j - t_i).
MPoly vandermonde(const SymContext& ctx);
/// prod_{i<j} (t_i - t_j) = det(t_i^{r-j}); the sign normalisation under which
/// X(t_1)^...^X(t_r) = alternant * sum_lambda X^r(lambda) s_lambda.
MPoly alternant(const SymContext& ctx);

/// det(t_i^{lambda_j + r - j}).
MPoly alternant_of(const Partition& lambda, const SymContext& ctx);

/// Bialternant quotient; zero when the length of lambda exceeds r.
MPoly schur(const Partition& lambda, const SymContext& ctx);

/// sum_{a <= min(j,r)} (-1)^a e_a h_{m+j-a}.
MPoly u_poly(int j, int m, const SymContext& ctx);

/// sum_{j<r} U_{j,m} zeta^j; the alphabet of the result is ctx.vars extended by `zeta`.
MPoly y_poly(int m, const SymContext& ctx, const std::string& zeta);

/// E_r(t, zeta) = prod (1 - t_i zeta), over ctx.vars extended by `zeta`.
MPoly e_generating(const SymContext& ctx, const std::string& zeta);

}  // namespace bfc

#endif  // BFC_SYMFUN_HPP
