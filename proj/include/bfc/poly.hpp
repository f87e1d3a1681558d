#ifndef BFC_POLY_HPP
#define BFC_POLY_HPP

#include <algorithm>
#include <array>
#include <climits>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bfc/rational.hpp"

namespace bfc {

using Alphabet = std::shared_ptr<const std::vector<std::string>>;

Alphabet make_alphabet(std::vector<std::string> names);
Alphabet empty_alphabet();
/// Names of `a` followed by the names of `b` not already in `a`.
Alphabet alphabet_union(const Alphabet& a, const Alphabet& b);
bool same_alphabet(const Alphabet& a, const Alphabet& b);
int alphabet_index(const Alphabet& a, const std::string& name);  // -1 if absent

/// Exponent vector relative to an alphabet. Unused slots are zero.
struct Monomial {
    static constexpr int kMaxVars = 24;
    std::array<std::int16_t, kMaxVars> e{};

    [[nodiscard]] int degree() const {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }
    [[nodiscard]] bool is_one() const {
        return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend Monomial operator+(Monomial a, const Monomial& b) {
        for (int i = 0; i < kMaxVars; ++i) a.e[i] = static_cast<std::int16_t>(a.e[i] + b.e[i]);
        return a;
    }
};

/// Graded order: total degree first, then the larger exponent of the earliest variable first.
struct MonoLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return b.e < a.e;
    }
};

/// Per-variable maximum exponent, aligned with an alphabet. INT_MAX means unbounded.
using Bounds = std::vector<int>;

inline bool within(const Monomial& m, const Bounds& b) {
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (m.e[i] > b[i]) return false;
    }
    return true;
}

// Coefficient hooks. Specialised by SchurCombo and ExtVec.
inline bool coeff_is_zero(const Rational& c) { return c.is_zero(); }

template <class C>
class Poly {
public:
    using Terms = std::map<Monomial, C, MonoLess>;

    Poly() : vars_(empty_alphabet()) {}
    explicit Poly(Alphabet vars) : vars_(std::move(vars)) {
        if (vars_->size() > static_cast<std::size_t>(Monomial::kMaxVars)) {
            throw std::length_error("Poly: too many variables");
        }
    }

    static Poly constant(const C& c, Alphabet vars = empty_alphabet()) {
        Poly p(std::move(vars));
        p.add_term(Monomial{}, c);
        return p;
    }

    static Poly variable(const std::string& name, const C& one, Alphabet vars) {
        int i = alphabet_index(vars, name);
        if (i < 0) throw std::invalid_argument("Poly::variable: '" + name + "' not in alphabet");
        Poly p(std::move(vars));
        Monomial m;
        m.e[i] = 1;
        p.add_term(m, one);
        return p;
    }

    [[nodiscard]] const Alphabet& vars() const { return vars_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }

    void add_term(const Monomial& m, const C& c) {
        if (coeff_is_zero(c)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
            return;
        }
        it->second += c;
        if (coeff_is_zero(it->second)) terms_.erase(it);
    }

    [[nodiscard]] C coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? C{} : it->second;
    }

    [[nodiscard]] int var(const std::string& name) const { return alphabet_index(vars_, name); }

    /// Re-expresses the polynomial over `target`, which must contain every variable in use.
    [[nodiscard]] Poly embed(const Alphabet& target) const {
        if (same_alphabet(vars_, target)) {
            Poly p(target);
            p.terms_ = terms_;
            return p;
        }
        std::vector<int> map(vars_->size());
        for (std::size_t i = 0; i < vars_->size(); ++i) map[i] = alphabet_index(target, (*vars_)[i]);
        Poly p(target);
        for (const auto& [m, c] : terms_) {
            Monomial q;
            for (std::size_t i = 0; i < vars_->size(); ++i) {
                if (m.e[i] == 0) continue;
                if (map[i] < 0) {
                    throw std::invalid_argument("Poly::embed: variable '" + (*vars_)[i] + "' missing from target");
                }
                q.e[map[i]] = m.e[i];
            }
            p.terms_.emplace(q, c);
        }
        return p;
    }

    Poly& operator+=(const Poly& o) {
        if (!same_alphabet(vars_, o.vars_)) {
            auto u = alphabet_union(vars_, o.vars_);
            *this = embed(u);
            Poly b = o.embed(u);
            for (const auto& [m, c] : b.terms_) add_term(m, c);
            return *this;
        }
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) { return *this += -o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a += -b; }
    friend Poly operator-(const Poly& a) {
        Poly p(a.vars_);
        for (const auto& [m, c] : a.terms_) p.terms_.emplace(m, -c);
        return p;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (same_alphabet(a.vars_, b.vars_)) return a.terms_ == b.terms_;
        auto u = alphabet_union(a.vars_, b.vars_);
        return a.embed(u).terms_ == b.embed(u).terms_;
    }

    /// Scales every coefficient by a rational.
    [[nodiscard]] Poly scaled(const Rational& q) const {
        Poly p(vars_);
        if (q.is_zero()) return p;
        for (const auto& [m, c] : terms_) p.terms_.emplace(m, c * q);
        return p;
    }

    /// Drops monomials outside `bounds` (aligned with this alphabet).
    [[nodiscard]] Poly truncated(const Bounds& bounds) const {
        Poly p(vars_);
        for (const auto& [m, c] : terms_) {
            if (within(m, bounds)) p.terms_.emplace(m, c);
        }
        return p;
    }

    /// Multiplies every monomial by `shift`.
    [[nodiscard]] Poly shifted(const Monomial& shift) const {
        Poly p(vars_);
        for (const auto& [m, c] : terms_) p.terms_.emplace(m + shift, c);
        return p;
    }

    /// Total degree filter over the variables flagged in `mask`.
    [[nodiscard]] Poly degree_at_most(const std::vector<bool>& mask, int cap) const {
        Poly p(vars_);
        for (const auto& [m, c] : terms_) {
            int d = 0;
            for (std::size_t i = 0; i < mask.size(); ++i) {
                if (mask[i]) d += m.e[i];
            }
            if (d <= cap) p.terms_.emplace(m, c);
        }
        return p;
    }

    template <class F>
    [[nodiscard]] auto map_coeffs(F&& f) const -> Poly<decltype(f(std::declval<const C&>()))> {
        using D = decltype(f(std::declval<const C&>()));
        Poly<D> p(vars_);
        for (const auto& [m, c] : terms_) p.add_term(m, f(c));
        return p;
    }

    Terms& mutable_terms() { return terms_; }

private:
    Alphabet vars_;
    Terms terms_;
};

using MPoly = Poly<Rational>;

/// Product with per-variable truncation. `bounds` is aligned with the union alphabet; empty means none.
template <class A, class B>
auto mul_truncated(const Poly<A>& a, const Poly<B>& b, const Bounds& bounds = {})
    -> Poly<decltype(std::declval<const A&>() * std::declval<const B&>())> {
    using R = decltype(std::declval<const A&>() * std::declval<const B&>());
    if (!same_alphabet(a.vars(), b.vars())) {
        auto u = alphabet_union(a.vars(), b.vars());
        return mul_truncated(a.embed(u), b.embed(u), bounds);
    }
    Poly<R> out(a.vars());
    if (a.is_zero() || b.is_zero()) return out;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            Monomial m = ma + mb;
            if (!bounds.empty() && !within(m, bounds)) continue;
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

template <class A, class B>
auto operator*(const Poly<A>& a, const Poly<B>& b) {
    return mul_truncated(a, b);
}

/// Bounds aligned with `vars` from a name-to-bound list; names not in `vars` are ignored.
Bounds make_bounds(const Alphabet& vars, const std::map<std::string, int>& named);

/// Monomial over `vars` from name-to-exponent pairs.
Monomial make_monomial(const Alphabet& vars, const std::map<std::string, int>& named);

/// Exact quotient of p by (x_a - x_b). Throws std::logic_error on a nonzero remainder.
template <class C>
Poly<C> divide_by_difference(const Poly<C>& p, int a, int b) {
    // Buckets by exponent of x_a, processed from the top down.
    std::map<int, Poly<C>, std::greater<>> bucket;
    for (const auto& [m, c] : p.terms()) {
        auto [it, fresh] = bucket.try_emplace(m.e[a], Poly<C>(p.vars()));
        it->second.add_term(m, c);
    }
    Poly<C> q(p.vars());
    while (!bucket.empty()) {
        auto it = bucket.begin();
        int d = it->first;
        Poly<C> cur = std::move(it->second);
        bucket.erase(it);
        if (cur.is_zero()) continue;
        if (d == 0) throw std::logic_error("divide_by_difference: nonzero remainder");
        auto [lower, fresh] = bucket.try_emplace(d - 1, Poly<C>(p.vars()));
        for (const auto& [m, c] : cur.terms()) {
            Monomial qm = m;
            qm.e[a] = static_cast<std::int16_t>(qm.e[a] - 1);
            q.add_term(qm, c);
            Monomial carry = qm;
            carry.e[b] = static_cast<std::int16_t>(carry.e[b] + 1);
            lower->second.add_term(carry, c);
        }
    }
    return q;
}

/// Exact quotient of p by prod_{i<j}(x_{idx[i]} - x_{idx[j]}).
template <class C>
Poly<C> divide_by_alternant(Poly<C> p, const std::vector<int>& idx) {
    for (std::size_t i = 0; i < idx.size(); ++i) {
        for (std::size_t j = i + 1; j < idx.size(); ++j) p = divide_by_difference(p, idx[i], idx[j]);
    }
    return p;
}

/// Text form such as `1 - c1*z + c2*z^2`.
std::string to_string(const MPoly& p);
std::string monomial_string(const Monomial& m, const Alphabet& vars);

/// Parses the text form over the given alphabet (variables are added as needed when `vars` is null).
MPoly parse_mpoly(const std::string& text, Alphabet vars = nullptr);

}  // namespace bfc

#endif  // BFC_POLY_HPP
