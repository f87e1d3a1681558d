#ifndef BFC_FERMIONIC_HPP
#define BFC_FERMIONIC_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bfc/bosonic.hpp"
#include "bfc/partition.hpp"
#include "bfc/poly.hpp"
#include "bfc/symfun.hpp"

namespace bfc {

/// X^{a_1} ^ ... ^ X^{a_d} with a_1 > ... > a_d >= 0.
using ExtMonomial = std::vector<int>;

/// Element of the exterior algebra of V_n (n absent: unbounded).
class ExtVec {
public:
    ExtVec() = default;
    explicit ExtVec(std::optional<int> n) : n_(n) {}

    /// Sorts `exps` into decreasing order with the permutation sign; zero on a repeat or an index >= n.
    static ExtVec wedge_of(std::optional<int> n, const std::vector<int>& exps, const Rational& c = Rational(1));
    static ExtVec scalar(std::optional<int> n, const Rational& c) { return wedge_of(n, {}, c); }

    [[nodiscard]] std::optional<int> n() const { return n_; }
    [[nodiscard]] const std::map<ExtMonomial, Rational>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] Rational coeff(const ExtMonomial& m) const;
    /// Degree when homogeneous and nonzero.
    [[nodiscard]] std::optional<int> degree() const;

    void add_term(const ExtMonomial& m, const Rational& c);

    ExtVec& operator+=(const ExtVec& o);
    ExtVec& operator-=(const ExtVec& o) { return *this += -o; }
    friend ExtVec operator+(ExtVec a, const ExtVec& b) { return a += b; }
    friend ExtVec operator-(ExtVec a, const ExtVec& b) { return a += -b; }
    friend ExtVec operator-(const ExtVec& a) { return a * Rational(-1); }
    friend ExtVec operator*(const ExtVec& a, const Rational& q);
    friend ExtVec operator*(const Rational& q, const ExtVec& a) { return a * q; }
    friend bool operator==(const ExtVec& a, const ExtVec& b) { return a.terms_ == b.terms_; }

    /// `1*X[3,1] - 2*X[2,0]`; zero prints as `0`.
    [[nodiscard]] std::string to_string() const;

private:
    std::optional<int> n_;
    std::map<ExtMonomial, Rational> terms_;
};

inline bool coeff_is_zero(const ExtVec& v) { return v.is_zero(); }

ExtVec wedge(const ExtVec& u, const ExtVec& v);

/// Linear form sum_j c_j d^j, with d^j(X^i) = delta_ij.
using Covector = std::map<int, Rational>;
inline Covector dual(int j) { return {{j, Rational(1)}}; }

/// alpha _| (v_1 ^ ... ^ v_d) = sum_j (-1)^(j-1) alpha(v_j) v_1 ^ .. (omit j) .. ^ v_d.
ExtVec contract(const Covector& alpha, const ExtVec& u);

/// Letter of a raw Clifford word: X^index (creation) or d^index (annihilation).
struct Letter {
    bool creation = true;
    int index = 0;
    friend bool operator==(const Letter&, const Letter&) = default;
};

/// X^{i_1}...X^{i_h} d^{j_1}...d^{j_k}; normal form has I and J strictly decreasing.
struct CliffordWord {
    std::vector<int> I;
    std::vector<int> J;

    [[nodiscard]] bool is_normal() const;
    [[nodiscard]] std::vector<Letter> letters() const;
    [[nodiscard]] std::string to_string() const;  // "X:2 D:3"
    /// Parses "X:2 D:3"; letters may appear in any order (a raw word).
    static std::vector<Letter> parse(const std::string& text);

    friend bool operator==(const CliffordWord&, const CliffordWord&) = default;
    friend auto operator<=>(const CliffordWord&, const CliffordWord&) = default;
};

/// Signed sum of normal-form words equal to the raw word in the Clifford algebra.
std::vector<std::pair<Rational, CliffordWord>> normal_order(const std::vector<Letter>& word);

/// Normal-form word: X^{i_1} ^ ... ^ X^{i_h} ^ (d^{j_1} _| (... _| (d^{j_k} _| u))).
ExtVec clifford_act(const CliffordWord& w, const ExtVec& u);

/// Raw word acting through its normal forms.
ExtVec clifford_act(const std::vector<Letter>& raw, const ExtVec& u);

/// Raw word acting letter by letter, rightmost first.
ExtVec clifford_act_letters(const std::vector<Letter>& raw, const ExtVec& u);

/// The derivation of the exterior algebra extending E_ij.
ExtVec trace_action(int i, int j, const ExtVec& u);

/// Series in the variables of `vars` with exterior-algebra coefficients.
using ExtSeries = Poly<ExtVec>;

/// sigma_+(vars) u: X^a -> sum_i h_i(vars) X^{a+i}, extended multiplicatively; bounds per variable.
ExtSeries sigma_plus(const SymContext& vars, const ExtVec& u, int bound);
/// sigma-bar_+(vars) u: X^a -> sum_p (-1)^p e_p(vars) X^{a+p}.
ExtSeries sigma_plus_bar(const SymContext& vars, const ExtVec& u, int bound);
/// Applies sigma_+ (or its inverse) coefficientwise to a series that already lives over vars.vars.
ExtSeries sigma_plus_series(const SymContext& vars, const ExtSeries& s, int bound, bool inverse);

/// Wedge of two series, truncated per variable at `bound` (aligned with the union alphabet).
ExtSeries wedge_series(const ExtSeries& a, const ExtSeries& b, const Bounds& bound);

/// X^r(lambda) = X^{r-1+lambda_1} ^ ... ^ X^{lambda_r}.
ExtMonomial ext_monomial(const Partition& lambda, int r);
Partition partition_of(const ExtMonomial& m);

SchurCombo to_bosonic(const ExtVec& u, const RingPtr& ring);
ExtVec from_bosonic(const SchurCombo& x);

/// Image of S_lambda under the word, read back in B_{r+h-k,n}.
SchurCombo star_action_oracle(const CliffordWord& w, const Partition& lambda, int r, std::optional<int> n,
                              std::optional<int> degree_cap = std::nullopt);

}  // namespace bfc

#endif  // BFC_FERMIONIC_HPP
