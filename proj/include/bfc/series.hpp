#ifndef BFC_SERIES_HPP
#define BFC_SERIES_HPP

#include <map>
#include <stdexcept>
#include <string>

#include "bfc/poly.hpp"

namespace bfc {

inline bool coeff_is_one(const Rational& c) { return c.is_one(); }
inline Rational coeff_unit_like(const Rational&) { return Rational(1); }

/// Polynomial body plus per-variable truncation. Variables absent from `bounds` are unbounded.
template <class C>
struct TruncSeries {
    Poly<C> body;
    std::map<std::string, int> bounds;

    TruncSeries() = default;
    TruncSeries(Poly<C> b, std::map<std::string, int> bd) : body(std::move(b)), bounds(std::move(bd)) {
        body = body.truncated(aligned());
    }

    [[nodiscard]] Bounds aligned() const { return make_bounds(body.vars(), bounds); }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.bounds == b.bounds && a.body == b.body;
    }
};

using MSeries = TruncSeries<Rational>;

inline std::map<std::string, int> merge_bounds(const std::map<std::string, int>& a,
                                               const std::map<std::string, int>& b) {
    std::map<std::string, int> out = a;
    for (const auto& [k, v] : b) {
        auto it = out.find(k);
        if (it == out.end()) {
            out.emplace(k, v);
        } else {
            it->second = std::min(it->second, v);
        }
    }
    return out;
}

template <class C>
TruncSeries<C> series_add(const TruncSeries<C>& a, const TruncSeries<C>& b) {
    return TruncSeries<C>(a.body + b.body, merge_bounds(a.bounds, b.bounds));
}

template <class A, class B>
auto series_mul(const TruncSeries<A>& a, const TruncSeries<B>& b) {
    auto bounds = merge_bounds(a.bounds, b.bounds);
    auto u = alphabet_union(a.body.vars(), b.body.vars());
    auto prod = mul_truncated(a.body.embed(u), b.body.embed(u), make_bounds(u, bounds));
    return TruncSeries<typename decltype(prod)::Terms::mapped_type>(std::move(prod), bounds);
}

namespace detail {

// Every monomial of a nilpotent part must touch a bounded variable, else powers never vanish.
template <class C>
void require_nilpotent(const Poly<C>& u, const Bounds& b, const char* who) {
    for (const auto& [m, c] : u.terms()) {
        bool ok = false;
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (m.e[i] > 0 && b[i] != INT_MAX) ok = true;
        }
        if (!ok) throw std::invalid_argument(std::string(who) + ": term not controlled by any truncation bound");
    }
}

// sum_k coef(k) * u^k, stopping when the power vanishes under truncation.
template <class C, class F>
Poly<C> power_sum(const Poly<C>& u, const Bounds& b, const C& unit, F&& coef) {
    Poly<C> out = Poly<C>::constant(unit, u.vars()).embed(u.vars());
    Poly<C> pw = Poly<C>::constant(unit, u.vars());
    for (int k = 1;; ++k) {
        pw = mul_truncated(pw, u, b);
        if (pw.is_zero()) break;
        Rational q = coef(k);
        if (!q.is_zero()) out += pw.scaled(q);
    }
    return out;
}

}  // namespace detail

/// Multiplicative inverse. The constant term must be a nonzero rational.
inline MSeries series_inverse(const MSeries& s) {
    Rational c0 = s.body.coeff(Monomial{});
    if (c0.is_zero()) throw std::domain_error("series_inverse: zero constant term");
    Bounds b = s.aligned();
    MPoly u = s.body.scaled(Rational(1) / c0);
    u.add_term(Monomial{}, Rational(-1));
    detail::require_nilpotent(u, b, "series_inverse");
    MPoly inv = detail::power_sum(u, b, Rational(1), [](int k) { return Rational(k % 2 ? -1 : 1); });
    return MSeries(inv.scaled(Rational(1) / c0), s.bounds);
}

template <class C>
TruncSeries<C> series_exp(const TruncSeries<C>& s) {
    if (!coeff_is_zero(s.body.coeff(Monomial{}))) throw std::domain_error("series_exp: nonzero constant term");
    if (s.body.is_zero()) {
        throw std::domain_error("series_exp: cannot infer the unit of a zero series");
    }
    Bounds b = s.aligned();
    detail::require_nilpotent(s.body, b, "series_exp");
    C unit = coeff_unit_like(s.body.terms().begin()->second);
    Rational fact(1);
    Poly<C> e = detail::power_sum(s.body, b, unit, [&fact](int k) {
        fact *= Rational(k);
        return Rational(1) / fact;
    });
    return TruncSeries<C>(std::move(e), s.bounds);
}

template <class C>
TruncSeries<C> series_log(const TruncSeries<C>& s) {
    C c0 = s.body.coeff(Monomial{});
    if (!coeff_is_one(c0)) throw std::domain_error("series_log: constant term is not 1");
    Bounds b = s.aligned();
    Poly<C> u = s.body;
    u.add_term(Monomial{}, -c0);
    detail::require_nilpotent(u, b, "series_log");
    Poly<C> l = detail::power_sum(u, b, c0, [](int k) { return Rational(k % 2 ? 1 : -1, k); });
    l.add_term(Monomial{}, -c0);
    return TruncSeries<C>(std::move(l), s.bounds);
}

/// Coefficient of the partial monomial `m`; other variables stay symbolic.
template <class C>
Poly<C> coefficient(const TruncSeries<C>& s, const std::map<std::string, int>& m) {
    for (const auto& [name, e] : m) {
        auto it = s.bounds.find(name);
        if (it != s.bounds.end() && e > it->second) {
            throw std::out_of_range("coefficient: exponent of '" + name + "' beyond truncation");
        }
    }
    std::vector<std::pair<int, int>> want;
    for (const auto& [name, e] : m) {
        int i = s.body.var(name);
        if (i < 0) {
            if (e != 0) return Poly<C>(s.body.vars());
            continue;
        }
        want.emplace_back(i, e);
    }
    Poly<C> out(s.body.vars());
    for (const auto& [mono, c] : s.body.terms()) {
        bool ok = true;
        for (auto [i, e] : want) ok = ok && mono.e[i] == e;
        if (!ok) continue;
        Monomial rest = mono;
        for (auto [i, e] : want) rest.e[i] = 0;
        out.add_term(rest, c);
    }
    return out;
}

}  // namespace bfc

#endif  // BFC_SERIES_HPP
