#include "bfc/fermionic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bfc {

ExtVec ExtVec::wedge_of(std::optional<int> n, const std::vector<int>& exps, const Rational& c) {
    ExtVec out(n);
    if (c.is_zero()) return out;
    std::vector<int> a = exps;
    for (int x : a) {
        if (x < 0) throw std::invalid_argument("ExtVec: negative exponent");
        if (n && x >= *n) return out;
    }
    // insertion sort into decreasing order, tracking the sign
    bool neg = false;
    for (std::size_t i = 1; i < a.size(); ++i) {
        for (std::size_t j = i; j > 0 && a[j - 1] <= a[j]; --j) {
            if (a[j - 1] == a[j]) return out;
            std::swap(a[j - 1], a[j]);
            neg = !neg;
        }
    }
    out.terms_.emplace(std::move(a), neg ? -c : c);
    return out;
}

Rational ExtVec::coeff(const ExtMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> ExtVec::degree() const {
    if (terms_.empty()) return std::nullopt;
    std::size_t d = terms_.begin()->first.size();
    for (const auto& [m, c] : terms_) {
        if (m.size() != d) return std::nullopt;
    }
    return static_cast<int>(d);
}

void ExtVec::add_term(const ExtMonomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

ExtVec& ExtVec::operator+=(const ExtVec& o) {
    if (!n_) n_ = o.n_;
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ExtVec operator*(const ExtVec& a, const Rational& q) {
    ExtVec out(a.n_);
    if (q.is_zero()) return out;
    for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, c * q);
    return out;
}

std::string ExtVec::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rational& c = it->second;
        std::string body;
        if (out.empty()) {
            body = c.to_string();
        } else {
            out += c.sign() < 0 ? " - " : " + ";
            body = (c.sign() < 0 ? -c : c).to_string();
        }
        out += body + "*X[";
        for (std::size_t i = 0; i < it->first.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(it->first[i]);
        }
        out += "]";
    }
    return out;
}

ExtVec wedge(const ExtVec& u, const ExtVec& v) {
    std::optional<int> n = u.n() ? u.n() : v.n();
    ExtVec out(n);
    for (const auto& [a, ca] : u.terms()) {
        for (const auto& [b, cb] : v.terms()) {
            std::vector<int> all = a;
            all.insert(all.end(), b.begin(), b.end());
            out += ExtVec::wedge_of(n, all, ca * cb);
        }
    }
    return out;
}

ExtVec contract(const Covector& alpha, const ExtVec& u) {
    ExtVec out(u.n());
    for (const auto& [m, c] : u.terms()) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            auto it = alpha.find(m[j]);
            if (it == alpha.end() || it->second.is_zero()) continue;
            ExtMonomial rest = m;
            rest.erase(rest.begin() + static_cast<long>(j));
            Rational s = c * it->second;
            out.add_term(rest, j % 2 ? -s : s);
        }
    }
    return out;
}

bool CliffordWord::is_normal() const {
    for (std::size_t i = 1; i < I.size(); ++i) {
        if (I[i] >= I[i - 1]) return false;
    }
    for (std::size_t i = 1; i < J.size(); ++i) {
        if (J[i] >= J[i - 1]) return false;
    }
    return true;
}

std::vector<Letter> CliffordWord::letters() const {
    std::vector<Letter> out;
    for (int i : I) out.push_back({true, i});
    for (int j : J) out.push_back({false, j});
    return out;
}

std::string CliffordWord::to_string() const {
    std::string out;
    for (const auto& l : letters()) {
        if (!out.empty()) out += " ";
        out += (l.creation ? "X:" : "D:") + std::to_string(l.index);
    }
    return out;
}

std::vector<Letter> CliffordWord::parse(const std::string& text) {
    std::vector<Letter> out;
    std::stringstream ss(text);
    std::string tok;
    while (ss >> tok) {
        if (tok.size() < 3 || tok[1] != ':' || (tok[0] != 'X' && tok[0] != 'D')) {
            throw std::invalid_argument("CliffordWord::parse: bad letter '" + tok + "'");
        }
        std::string num = tok.substr(2);
        if (!std::all_of(num.begin(), num.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            throw std::invalid_argument("CliffordWord::parse: bad index in '" + tok + "'");
        }
        out.push_back({tok[0] == 'X', std::stoi(num)});
    }
    return out;
}

namespace {

// Sorts a block of same-kind letters into strictly decreasing order; false if a letter repeats.
bool sort_block(std::vector<int>& v, bool& neg) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        for (std::size_t j = i; j > 0 && v[j - 1] <= v[j]; --j) {
            if (v[j - 1] == v[j]) return false;
            std::swap(v[j - 1], v[j]);
            neg = !neg;
        }
    }
    return true;
}

}  // namespace

std::vector<std::pair<Rational, CliffordWord>> normal_order(const std::vector<Letter>& word) {
    std::map<CliffordWord, Rational> acc;
    std::vector<std::pair<Rational, std::vector<Letter>>> work{{Rational(1), word}};
    while (!work.empty()) {
        auto [c, w] = std::move(work.back());
        work.pop_back();
        std::size_t p = 0;
        while (p + 1 < w.size() && !(!w[p].creation && w[p + 1].creation)) ++p;
        if (p + 1 < w.size()) {
            // d^j X^i = delta_ij - X^i d^j
            if (w[p].index == w[p + 1].index) {
                std::vector<Letter> shorter = w;
                shorter.erase(shorter.begin() + static_cast<long>(p), shorter.begin() + static_cast<long>(p) + 2);
                work.emplace_back(c, std::move(shorter));
            }
            std::swap(w[p], w[p + 1]);
            work.emplace_back(-c, std::move(w));
            continue;
        }
        CliffordWord nf;
        for (const auto& l : w) (l.creation ? nf.I : nf.J).push_back(l.index);
        bool neg = false;
        if (!sort_block(nf.I, neg) || !sort_block(nf.J, neg)) continue;
        acc[nf] += neg ? -c : c;
    }
    std::vector<std::pair<Rational, CliffordWord>> out;
    for (auto& [w, c] : acc) {
        if (!c.is_zero()) out.emplace_back(c, w);
    }
    return out;
}

ExtVec clifford_act(const CliffordWord& w, const ExtVec& u) {
    ExtVec v = u;
    for (auto it = w.J.rbegin(); it != w.J.rend(); ++it) v = contract(dual(*it), v);
    for (auto it = w.I.rbegin(); it != w.I.rend(); ++it) v = wedge(ExtVec::wedge_of(u.n(), {*it}), v);
    return v;
}

ExtVec clifford_act(const std::vector<Letter>& raw, const ExtVec& u) {
    ExtVec out(u.n());
    for (const auto& [c, w] : normal_order(raw)) out += clifford_act(w, u) * c;
    return out;
}

ExtVec clifford_act_letters(const std::vector<Letter>& raw, const ExtVec& u) {
    ExtVec v = u;
    for (auto it = raw.rbegin(); it != raw.rend(); ++it) {
        v = it->creation ? wedge(ExtVec::wedge_of(u.n(), {it->index}), v) : contract(dual(it->index), v);
    }
    return v;
}

ExtVec trace_action(int i, int j, const ExtVec& u) {
    ExtVec out(u.n());
    for (const auto& [m, c] : u.terms()) {
        for (std::size_t p = 0; p < m.size(); ++p) {
            if (m[p] != j) continue;
            std::vector<int> img = m;
            img[p] = i;
            out += ExtVec::wedge_of(u.n(), img, c);
        }
    }
    return out;
}

ExtSeries wedge_series(const ExtSeries& a, const ExtSeries& b, const Bounds& bound) {
    if (!same_alphabet(a.vars(), b.vars())) {
        auto un = alphabet_union(a.vars(), b.vars());
        return wedge_series(a.embed(un), b.embed(un), bound);
    }
    ExtSeries out(a.vars());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            Monomial m = ma + mb;
            if (!bound.empty() && !within(m, bound)) continue;
            out.add_term(m, wedge(ca, cb));
        }
    }
    return out;
}

namespace {

ExtSeries sigma_factor(const SymContext& vars, std::optional<int> n, int a, int bound, bool inverse) {
    ExtSeries out(vars.vars);
    Bounds b(vars.vars->size(), INT_MAX);
    for (int i : vars.indices) b[i] = bound;
    int top = inverse ? vars.r() : vars.r() * bound;
    for (int i = 0; i <= top; ++i) {
        if (n && a + i >= *n) break;
        MPoly coef = inverse ? elementary(i, vars) : complete(i, vars);
        if (inverse && i % 2) coef = -coef;
        ExtVec x = ExtVec::wedge_of(n, {a + i});
        for (const auto& [m, c] : coef.terms()) {
            if (within(m, b)) out.add_term(m, x * c);
        }
    }
    return out;
}

ExtSeries sigma_apply(const SymContext& vars, const ExtVec& u, int bound, bool inverse) {
    Bounds b(vars.vars->size(), INT_MAX);
    for (int i : vars.indices) b[i] = bound;
    ExtSeries out(vars.vars);
    for (const auto& [m, c] : u.terms()) {
        ExtSeries acc = ExtSeries::constant(ExtVec::scalar(u.n(), c), vars.vars);
        for (int a : m) acc = wedge_series(acc, sigma_factor(vars, u.n(), a, bound, inverse), b);
        out += acc;
    }
    return out;
}

}  // namespace

ExtSeries sigma_plus(const SymContext& vars, const ExtVec& u, int bound) { return sigma_apply(vars, u, bound, false); }

ExtSeries sigma_plus_bar(const SymContext& vars, const ExtVec& u, int bound) { return sigma_apply(vars, u, bound, true); }

ExtSeries sigma_plus_series(const SymContext& vars, const ExtSeries& s, int bound, bool inverse) {
    ExtSeries in = s.embed(alphabet_union(s.vars(), vars.vars));
    SymContext v = SymContext::within(in.vars(), [&] {
        std::vector<std::string> names;
        for (int i = 0; i < vars.r(); ++i) names.push_back(vars.name(i));
        return names;
    }());
    Bounds b(in.vars()->size(), INT_MAX);
    for (int i : v.indices) b[i] = bound;
    ExtSeries out(in.vars());
    for (const auto& [m, c] : in.terms()) {
        ExtSeries img = sigma_apply(v, c, bound, inverse);
        for (const auto& [mm, cc] : img.terms()) {
            Monomial t = m + mm;
            if (within(t, b)) out.add_term(t, cc);
        }
    }
    return out;
}

ExtMonomial ext_monomial(const Partition& lambda, int r) {
    std::vector<int> p = lambda.padded(r);
    ExtMonomial m(r);
    for (int i = 0; i < r; ++i) m[i] = p[i] + r - 1 - i;
    return m;
}

Partition partition_of(const ExtMonomial& m) {
    const int d = static_cast<int>(m.size());
    std::vector<int> p(d);
    for (int i = 0; i < d; ++i) p[i] = m[i] - (d - 1 - i);
    return Partition(p);
}

SchurCombo to_bosonic(const ExtVec& u, const RingPtr& ring) {
    SchurCombo out(ring);
    const int r = ring->context().r;
    SparseVec v;
    for (const auto& [m, c] : u.terms()) {
        if (static_cast<int>(m.size()) != r) throw std::invalid_argument("to_bosonic: element is not homogeneous of degree r");
        int i = ring->index_of(partition_of(m));
        if (i >= 0) v.emplace_back(i, c);
    }
    return SchurCombo::from_sparse(ring, std::move(v));
}

ExtVec from_bosonic(const SchurCombo& x) {
    if (!x.ring()) return ExtVec();
    const auto& ctx = x.ring()->context();
    ExtVec out(ctx.n);
    for (const auto& [i, c] : x.terms()) out.add_term(ext_monomial(x.ring()->partition(i), ctx.r), c);
    return out;
}

SchurCombo star_action_oracle(const CliffordWord& w, const Partition& lambda, int r, std::optional<int> n,
                              std::optional<int> degree_cap) {
    if (lambda.length() > r || (n && lambda[0] > *n - r)) {
        throw std::invalid_argument("star_action_oracle: partition outside the rectangle");
    }
    const int m = r + static_cast<int>(w.I.size()) - static_cast<int>(w.J.size());
    if (m < 0 || (n && m > *n)) return SchurCombo();
    ExtVec u = ExtVec::wedge_of(n, ext_monomial(lambda, r));
    return to_bosonic(clifford_act(w, u), Ring::get({m, n, degree_cap}));
}

}  // namespace bfc
