#include "bfc/bosonic.hpp"

#include <algorithm>
#include <stdexcept>

#include "bfc/det.hpp"

namespace bfc {

std::string RingContext::to_string() const {
    std::string out = "B(r=" + std::to_string(r) + ", n=" + (n ? std::to_string(*n) : std::string("inf"));
    if (degree_cap) out += ", cap=" + std::to_string(*degree_cap);
    return out + ")";
}

namespace {

void strips(const std::vector<int>& lam, int row, int left, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    const int r = static_cast<int>(lam.size());
    if (row == r) {
        if (left == 0) out.push_back(cur);
        return;
    }
    int hi = row == 0 ? lam[0] + left : std::min(lam[row - 1], lam[row] + left);
    for (int v = lam[row]; v <= hi; ++v) {
        cur[row] = v;
        strips(lam, row + 1, left - (v - lam[row]), cur, out);
    }
    cur[row] = lam[row];
}

void add_into(std::map<int, Rational>& acc, const SparseVec& v, const Rational& scale) {
    for (const auto& [i, c] : v) {
        auto [it, fresh] = acc.try_emplace(i, Rational(0));
        it->second += c * scale;
        if (it->second.is_zero()) acc.erase(it);
    }
}

SparseVec to_sparse(const std::map<int, Rational>& acc) { return SparseVec(acc.begin(), acc.end()); }

int segre_index(const std::string& name, char prefix) {
    if (name.size() < 2 || name[0] != prefix) throw std::invalid_argument("expected a variable like " + std::string(1, prefix) + "3, got '" + name + "'");
    return std::stoi(name.substr(1));
}

}  // namespace

Ring::Ring(const RingContext& ctx) : ctx_(ctx) {
    if (ctx.r < 0) throw std::invalid_argument("Ring: negative r");
    if (ctx.n && *ctx.n < ctx.r) throw std::invalid_argument("Ring: r > n");
    if (!ctx.n && !ctx.degree_cap) throw std::invalid_argument("Ring: n = infinity needs a degree cap");
    if (ctx.n) {
        for (auto& p : enumerate_partitions(RectBound{ctx.r, *ctx.n - ctx.r})) {
            if (!ctx.degree_cap || p.weight() <= *ctx.degree_cap) basis_.push_back(p);
        }
    } else {
        for (int w = 0; w <= *ctx.degree_cap; ++w) {
            for (auto& p : enumerate_by_weight(ctx.r, w)) basis_.push_back(p);
        }
    }
    std::sort(basis_.begin(), basis_.end(), partition_order);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        index_[basis_[i]] = static_cast<int>(i);
        degree_.push_back(basis_[i].weight());
        max_degree_ = std::max(max_degree_, degree_.back());
    }
    pieri_.resize(max_degree_ + 1);
    for (int j = 0; j <= max_degree_; ++j) {
        pieri_[j].resize(basis_.size());
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            if (ctx_.r == 0) {
                if (j == 0) pieri_[j][i] = {{static_cast<int>(i), Rational(1)}};
                continue;
            }
            std::vector<int> lam = basis_[i].padded(ctx_.r);
            std::vector<int> cur = lam;
            std::vector<std::vector<int>> out;
            strips(lam, 0, j, cur, out);
            std::map<int, Rational> acc;
            for (auto& mu : out) {
                int k = index_of(Partition(mu));
                if (k >= 0) acc[k] += Rational(1);
            }
            pieri_[j][i] = to_sparse(acc);
        }
    }
}

std::shared_ptr<const Ring> Ring::get(const RingContext& ctx) {
    static std::mutex mu;
    static std::map<RingContext, std::shared_ptr<const Ring>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(ctx);
    if (it != cache.end()) return it->second;
    auto ring = std::make_shared<const Ring>(ctx);
    cache.emplace(ctx, ring);
    return ring;
}

int Ring::index_of(const Partition& p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
}

const SparseVec& Ring::pieri(int j, int i) const {
    static const SparseVec empty;
    if (j < 0 || j > max_degree_) return empty;
    return pieri_[j][i];
}

const SparseVec& Ring::product(int i, int j) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(std::min(i, j), std::max(i, j));
    auto it = products_.find(key);
    if (it != products_.end()) return it->second;
    // Expand the shorter partition by Jacobi-Trudi and apply Pieri steps to the other.
    int a = key.first, b = key.second;
    if (basis_[a].length() > basis_[b].length()) std::swap(a, b);
    MPoly jt = jacobi_trudi(basis_[a]);
    std::map<int, Rational> acc;
    for (const auto& [m, c] : jt.terms()) {
        std::map<int, Rational> cur{{b, Rational(1)}};
        for (std::size_t v = 0; v < jt.vars()->size(); ++v) {
            int s = segre_index((*jt.vars())[v], 'S');
            for (int e = 0; e < m.e[v]; ++e) {
                std::map<int, Rational> next;
                for (const auto& [k, ck] : cur) add_into(next, pieri(s, k), ck);
                cur = std::move(next);
            }
        }
        add_into(acc, to_sparse(cur), c);
    }
    return products_.emplace(key, to_sparse(acc)).first->second;
}

SchurCombo SchurCombo::basis(const RingPtr& ring, const Partition& p, const Rational& c) {
    SchurCombo s(ring);
    int i = ring->index_of(p);
    if (i >= 0 && !c.is_zero()) s.terms_.emplace_back(i, c);
    return s;
}

SchurCombo SchurCombo::segre(const RingPtr& ring, int j) {
    if (j < 0) return SchurCombo(ring);
    return basis(ring, j == 0 ? Partition{} : Partition{j});
}

SchurCombo SchurCombo::from_sparse(const RingPtr& ring, SparseVec terms) {
    SchurCombo s(ring);
    std::map<int, Rational> acc;
    add_into(acc, terms, Rational(1));
    s.terms_ = to_sparse(acc);
    return s;
}

bool SchurCombo::is_one() const {
    return terms_.size() == 1 && ring_->partition(terms_[0].first).empty() && terms_[0].second.is_one();
}

Rational SchurCombo::coeff(const Partition& p) const {
    if (!ring_) return Rational(0);
    int i = ring_->index_of(p);
    for (const auto& [k, c] : terms_) {
        if (k == i) return c;
    }
    return Rational(0);
}

std::map<Partition, Rational> SchurCombo::to_map() const {
    std::map<Partition, Rational> out;
    for (const auto& [k, c] : terms_) out.emplace(ring_->partition(k), c);
    return out;
}

std::optional<int> SchurCombo::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = ring_->degree(terms_[0].first);
    for (const auto& [k, c] : terms_) {
        if (ring_->degree(k) != d) return std::nullopt;
    }
    return d;
}

SchurCombo SchurCombo::mul_segre(int j) const {
    if (is_zero() || j == 0) return *this;
    SchurCombo out(ring_);
    if (j < 0) return out;
    std::map<int, Rational> acc;
    for (const auto& [i, c] : terms_) add_into(acc, ring_->pieri(j, i), c);
    out.terms_ = to_sparse(acc);
    return out;
}

namespace {

void check_rings(const RingPtr& a, const RingPtr& b) {
    if (a && b && a != b && a->context() != b->context()) {
        throw std::invalid_argument("SchurCombo: ring mismatch " + a->context().to_string() + " vs " +
                                    b->context().to_string());
    }
}

}  // namespace

SchurCombo& SchurCombo::operator+=(const SchurCombo& o) {
    if (o.is_zero()) {
        if (!ring_) ring_ = o.ring_;
        return *this;
    }
    check_rings(ring_, o.ring_);
    if (!ring_) ring_ = o.ring_;
    SparseVec out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
            out.push_back(std::move(terms_[i++]));
        } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
            out.push_back(o.terms_[j++]);
        } else {
            Rational c = terms_[i].second + o.terms_[j].second;
            if (!c.is_zero()) out.emplace_back(terms_[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

SchurCombo operator-(const SchurCombo& a) {
    SchurCombo out = a;
    for (auto& [k, c] : out.terms_) c = -c;
    return out;
}

SchurCombo operator*(const SchurCombo& a, const Rational& q) {
    SchurCombo out(a.ring_);
    if (q.is_zero()) return out;
    out.terms_ = a.terms_;
    for (auto& [k, c] : out.terms_) c *= q;
    return out;
}

SchurCombo operator*(const SchurCombo& a, const SchurCombo& b) {
    check_rings(a.ring_, b.ring_);
    SchurCombo out(a.ring_ ? a.ring_ : b.ring_);
    if (a.is_zero() || b.is_zero()) return out;
    std::map<int, Rational> acc;
    for (const auto& [i, ci] : a.terms_) {
        for (const auto& [j, cj] : b.terms_) add_into(acc, a.ring_->product(i, j), ci * cj);
    }
    out.terms_ = to_sparse(acc);
    return out;
}

bool operator==(const SchurCombo& a, const SchurCombo& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.ring_ != b.ring_ && a.ring_->context() != b.ring_->context()) return false;
    return a.terms_ == b.terms_;
}

std::string SchurCombo::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += it->second.to_string() + "*S" + ring_->partition(it->first).to_string();
    }
    return out;
}

SchurCombo coeff_unit_like(const SchurCombo& sample) {
    if (!sample.ring()) throw std::invalid_argument("coeff_unit_like: ringless sample");
    return SchurCombo::unit(sample.ring());
}

SchurCombo multiply(const SchurCombo& a, const SchurCombo& b) { return a * b; }

SchurCombo reduce(const std::map<Partition, Rational>& raw, const RingPtr& ring) {
    SparseVec v;
    for (const auto& [p, c] : raw) {
        int i = ring->index_of(p);
        if (i >= 0 && !c.is_zero()) v.emplace_back(i, c);
    }
    return SchurCombo::from_sparse(ring, std::move(v));
}

SSeries segre_series(const RingPtr& ring, int zbound, const std::string& z) {
    Alphabet vars = make_alphabet({z});
    SPoly p(vars);
    for (int j = 0; j <= zbound; ++j) {
        Monomial m;
        m.e[0] = static_cast<std::int16_t>(j);
        p.add_term(m, SchurCombo::segre(ring, j));
    }
    return SSeries(std::move(p), {{z, zbound}});
}

MSeries segre_series_chern(int r, int zbound, const std::string& z) {
    std::vector<std::string> names;
    for (int i = 1; i <= r; ++i) names.push_back("c" + std::to_string(i));
    names.push_back(z);
    Alphabet vars = make_alphabet(names);
    MPoly c(vars);
    c.add_term(Monomial{}, Rational(1));
    for (int i = 1; i <= r; ++i) {
        Monomial m;
        m.e[i - 1] = 1;
        m.e[r] = static_cast<std::int16_t>(i);
        c.add_term(m, Rational(i % 2 ? -1 : 1));
    }
    return series_inverse(MSeries(std::move(c), {{z, zbound}}));
}

MPoly jacobi_trudi(const Partition& lambda) {
    const int l = lambda.length();
    if (l == 0) return MPoly::constant(Rational(1));
    const int top = lambda[0] + l - 1;
    std::vector<std::string> names;
    for (int i = 1; i <= top; ++i) names.push_back("S" + std::to_string(i));
    Alphabet vars = make_alphabet(names);
    PolyMatrix<Rational> m(l, std::vector<MPoly>(l, MPoly(vars)));
    for (int i = 1; i <= l; ++i) {
        for (int j = 1; j <= l; ++j) {
            int idx = lambda[j - 1] - j + i;
            if (idx == 0) {
                m[i - 1][j - 1] = MPoly::constant(Rational(1), vars);
            } else if (idx > 0) {
                m[i - 1][j - 1] = MPoly::variable("S" + std::to_string(idx), Rational(1), vars);
            }
        }
    }
    return determinant(m, vars);
}

SchurCombo evaluate_segre_poly(const MPoly& p, const RingPtr& ring) {
    SchurCombo out(ring);
    for (const auto& [m, c] : p.terms()) {
        SchurCombo term = SchurCombo::unit(ring) * c;
        for (std::size_t v = 0; v < p.vars()->size(); ++v) {
            int s = segre_index((*p.vars())[v], 'S');
            for (int e = 0; e < m.e[v]; ++e) term = term.mul_segre(s);
        }
        out += term;
    }
    return out;
}

SchurCombo evaluate_chern_poly(const MPoly& p, const RingPtr& ring) {
    SchurCombo out(ring);
    for (const auto& [m, c] : p.terms()) {
        SchurCombo term = SchurCombo::unit(ring) * c;
        for (std::size_t v = 0; v < p.vars()->size(); ++v) {
            int i = segre_index((*p.vars())[v], 'c');
            SchurCombo ci = SchurCombo::basis(ring, Partition(std::vector<int>(i, 1)));
            for (int e = 0; e < m.e[v]; ++e) term = term * ci;
        }
        out += term;
    }
    return out;
}

std::vector<SchurCombo> x_series(const RingPtr& ring, int bound) {
    if (bound < 1) throw std::invalid_argument("x_series: bound must be >= 1");
    std::vector<SchurCombo> x(bound + 1, SchurCombo(ring));
    SSeries l = series_log(segre_series(ring, bound));
    for (const auto& [m, c] : l.body.terms()) x[m.e[0]] = c;
    return x;
}

SSeries schur_expansion(const RingPtr& ring, const SymContext& vars, int degbound, ExpansionPath path) {
    std::map<std::string, int> bounds;
    for (int i = 0; i < vars.r(); ++i) bounds[vars.name(i)] = degbound;
    SPoly out(vars.vars);
    if (path == ExpansionPath::Basis) {
        for (const auto& lam : ring->basis()) {
            if (lam.weight() > degbound || lam.length() > vars.r()) continue;
            SchurCombo s = SchurCombo::basis(ring, lam);
            out += schur(lam, vars).map_coeffs([&s](const Rational& c) { return s * c; });
        }
        return SSeries(std::move(out), bounds);
    }
    // exp(sum x_i p_i), with a grading variable g enforcing total degree <= degbound.
    const std::string g = "_g";
    Alphabet ext = alphabet_union(vars.vars, make_alphabet({g}));
    int gi = alphabet_index(ext, g);
    std::vector<SchurCombo> x = x_series(ring, std::max(1, degbound));
    SPoly arg(ext);
    for (int i = 1; i <= degbound; ++i) {
        if (x[i].is_zero()) continue;
        Monomial gm;
        gm.e[gi] = static_cast<std::int16_t>(i);
        const SchurCombo& xi = x[i];
        arg += power_sum(i, vars).embed(ext).shifted(gm).map_coeffs([&xi](const Rational& c) { return xi * c; });
    }
    auto ebounds = bounds;
    ebounds[g] = degbound;
    SPoly e = arg.is_zero() ? SPoly::constant(SchurCombo::unit(ring), ext) : series_exp(SSeries(arg, ebounds)).body;
    for (const auto& [m, c] : e.terms()) {
        Monomial q = m;
        q.e[gi] = 0;
        SPoly t(vars.vars);
        t.add_term(q, c);
        out += t;
    }
    return SSeries(std::move(out), bounds);
}

namespace {

MPoly substitute(const MPoly& p, const std::map<std::string, MPoly>& values, const Alphabet& target) {
    MPoly out(target);
    for (const auto& [m, c] : p.terms()) {
        MPoly term = MPoly::constant(c, target);
        for (std::size_t v = 0; v < p.vars()->size(); ++v) {
            if (m.e[v] == 0) continue;
            const MPoly& val = values.at((*p.vars())[v]);
            for (int e = 0; e < m.e[v]; ++e) term = term * val;
        }
        out += term.embed(target);
    }
    return out;
}

std::map<std::string, MPoly> segre_in_chern(int r, int top, Alphabet& cvars) {
    MSeries s = segre_series_chern(r, top, "z");
    std::vector<std::string> names;
    for (int i = 1; i <= r; ++i) names.push_back("c" + std::to_string(i));
    cvars = make_alphabet(names);
    std::map<std::string, MPoly> values;
    for (int k = 1; k <= top; ++k) {
        MPoly ck = coefficient(s, {{"z", k}});
        // drop the now unused z slot
        MPoly q(cvars);
        for (const auto& [m, c] : ck.terms()) {
            Monomial mm;
            for (int i = 0; i < r; ++i) mm.e[i] = m.e[i];
            q.add_term(mm, c);
        }
        values.emplace("S" + std::to_string(k), q);
    }
    return values;
}

}  // namespace

MPoly to_chern(const SchurCombo& x) {
    if (!x.ring()) return MPoly(make_alphabet({}));
    const int r = x.ring()->context().r;
    int top = 1;
    for (const auto& [i, c] : x.terms()) {
        const Partition& p = x.ring()->partition(i);
        top = std::max(top, p[0] + p.length());
    }
    Alphabet cvars;
    auto values = segre_in_chern(r, top, cvars);
    MPoly out(cvars);
    for (const auto& [i, c] : x.terms()) {
        out += substitute(jacobi_trudi(x.ring()->partition(i)), values, cvars).scaled(c);
    }
    return out;
}

std::vector<MPoly> chern_relations(int r, int n) {
    Alphabet cvars;
    auto values = segre_in_chern(r, n, cvars);
    std::vector<MPoly> out;
    for (int k = n - r + 1; k <= n; ++k) out.push_back(values.at("S" + std::to_string(k)));
    return out;
}

}  // namespace bfc
