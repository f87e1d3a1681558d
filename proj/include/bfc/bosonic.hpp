#ifndef BFC_BOSONIC_HPP
#define BFC_BOSONIC_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "bfc/partition.hpp"
#include "bfc/poly.hpp"
#include "bfc/series.hpp"
#include "bfc/symfun.hpp"

namespace bfc {

/// B_{r,n}; with n absent this is B_r, which needs a degree cap to stay finite.
struct RingContext {
    int r = 0;
    std::optional<int> n;
    std::optional<int> degree_cap;

    [[nodiscard]] std::string to_string() const;
    friend bool operator==(const RingContext&, const RingContext&) = default;
    friend auto operator<=>(const RingContext&, const RingContext&) = default;
};

using SparseVec = std::vector<std::pair<int, Rational>>;

/// Schur basis, Pieri tables and a lazily filled product table.
class Ring {
public:
    static std::shared_ptr<const Ring> get(const RingContext& ctx);

    [[nodiscard]] const RingContext& context() const { return ctx_; }
    [[nodiscard]] int dim() const { return static_cast<int>(basis_.size()); }
    [[nodiscard]] const std::vector<Partition>& basis() const { return basis_; }
    [[nodiscard]] const Partition& partition(int i) const { return basis_[i]; }
    [[nodiscard]] int degree(int i) const { return degree_[i]; }
    [[nodiscard]] int max_degree() const { return max_degree_; }
    /// -1 when the class vanishes in this ring.
    [[nodiscard]] int index_of(const Partition& p) const;
    [[nodiscard]] bool contains(const Partition& p) const { return index_of(p) >= 0; }

    /// S_(j) * S_{basis[i]} by the Pieri rule.
    [[nodiscard]] const SparseVec& pieri(int j, int i) const;
    /// S_{basis[i]} * S_{basis[j]}.
    [[nodiscard]] const SparseVec& product(int i, int j) const;

    explicit Ring(const RingContext& ctx);

private:
    RingContext ctx_;
    std::vector<Partition> basis_;
    std::map<Partition, int> index_;
    std::vector<int> degree_;
    int max_degree_ = 0;
    std::vector<std::vector<SparseVec>> pieri_;  // [j][i], j = 0..max_degree
    mutable std::mutex mu_;
    mutable std::map<std::pair<int, int>, SparseVec> products_;
};

using RingPtr = std::shared_ptr<const Ring>;

/// Element of a ring in the Schur basis. A default-constructed value is a zero without a ring.
class SchurCombo {
public:
    SchurCombo() = default;
    explicit SchurCombo(RingPtr ring) : ring_(std::move(ring)) {}

    static SchurCombo basis(const RingPtr& ring, const Partition& p, const Rational& c = Rational(1));
    static SchurCombo unit(const RingPtr& ring) { return basis(ring, Partition{}); }
    /// S_j, zero for j < 0 and for classes outside the ring.
    static SchurCombo segre(const RingPtr& ring, int j);
    static SchurCombo from_sparse(const RingPtr& ring, SparseVec terms);

    [[nodiscard]] const RingPtr& ring() const { return ring_; }
    [[nodiscard]] const SparseVec& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_one() const;
    [[nodiscard]] Rational coeff(const Partition& p) const;
    [[nodiscard]] std::map<Partition, Rational> to_map() const;
    /// Degree when homogeneous and nonzero.
    [[nodiscard]] std::optional<int> homogeneous_degree() const;

    /// Product with S_j.
    [[nodiscard]] SchurCombo mul_segre(int j) const;

    SchurCombo& operator+=(const SchurCombo& o);
    SchurCombo& operator-=(const SchurCombo& o) { return *this += -o; }
    friend SchurCombo operator+(SchurCombo a, const SchurCombo& b) { return a += b; }
    friend SchurCombo operator-(SchurCombo a, const SchurCombo& b) { return a += -b; }
    friend SchurCombo operator-(const SchurCombo& a);
    friend SchurCombo operator*(const SchurCombo& a, const SchurCombo& b);
    friend SchurCombo operator*(const SchurCombo& a, const Rational& q);
    friend SchurCombo operator*(const Rational& q, const SchurCombo& a) { return a * q; }
    friend bool operator==(const SchurCombo& a, const SchurCombo& b);

    /// `1*S[2,1] + -3/2*S[1]`, highest basis element first; zero prints as `0`.
    [[nodiscard]] std::string to_string() const;

private:
    RingPtr ring_;
    SparseVec terms_;
};

inline bool coeff_is_zero(const SchurCombo& c) { return c.is_zero(); }
inline bool coeff_is_one(const SchurCombo& c) { return c.is_one(); }
SchurCombo coeff_unit_like(const SchurCombo& sample);

using SPoly = Poly<SchurCombo>;
using SSeries = TruncSeries<SchurCombo>;

SchurCombo multiply(const SchurCombo& a, const SchurCombo& b);

/// Projection of a raw combination onto the ring: classes outside the rectangle vanish.
SchurCombo reduce(const std::map<Partition, Rational>& raw, const RingPtr& ring);

/// 1 + S_1 z + S_2 z^2 + ... with ring coefficients, truncated at z^zbound.
SSeries segre_series(const RingPtr& ring, int zbound, const std::string& z = "z");

/// 1 / c_r(z) in Chern variables c1..cr, where c_r(z) = sum_i (-1)^i c_i z^i.
MSeries segre_series_chern(int r, int zbound, const std::string& z = "z");

/// det(S_{lambda_j - j + i}) over the alphabet S1, S2, ... with S_0 = 1.
MPoly jacobi_trudi(const Partition& lambda);

/// Evaluates a polynomial in S1, S2, ... in the ring.
SchurCombo evaluate_segre_poly(const MPoly& p, const RingPtr& ring);

/// Evaluates a polynomial in c1, c2, ... in the ring, with c_i = S_(1^i).
SchurCombo evaluate_chern_poly(const MPoly& p, const RingPtr& ring);

/// x_1..x_bound from exp(sum x_i z^i) = 1 + S_1 z + ...; index 0 is unused and zero.
std::vector<SchurCombo> x_series(const RingPtr& ring, int bound);

enum class ExpansionPath { Basis, Exponential };

/// sum_{|lambda| <= degbound} S_lambda s_lambda(vars), over vars.vars, per-variable bounds degbound.
SSeries schur_expansion(const RingPtr& ring, const SymContext& vars, int degbound,
                        ExpansionPath path = ExpansionPath::Basis);

/// Chern-variable presentation (not reduced modulo the relations).
MPoly to_chern(const SchurCombo& x);

/// S_{n-r+1}, ..., S_n written in c1..cr; they generate the relations of B_{r,n}.
std::vector<MPoly> chern_relations(int r, int n);

}  // namespace bfc

#endif  // BFC_BOSONIC_HPP
