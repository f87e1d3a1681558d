#include "bfc/genfun.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "bfc/det.hpp"

namespace bfc {

namespace {

std::vector<std::string> names(const std::string& prefix, int count) {
    std::vector<std::string> out;
    for (int i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

int choose2(int x) { return x * (x - 1) / 2; }

SPoly lift(const MPoly& p, const SchurCombo& unit) {
    return p.map_coeffs([&unit](const Rational& c) { return unit * c; });
}

// Signed shifts delta o pi of alt(x) = sum_pi sgn(pi) prod_i x_i^{len-1-pi(i)}.
std::vector<std::pair<int, std::vector<int>>> alternant_terms(int len) {
    std::vector<int> perm(len);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<int, std::vector<int>>> out;
    do {
        int inv = 0;
        for (int i = 0; i < len; ++i) {
            for (int j = i + 1; j < len; ++j) inv += perm[i] > perm[j];
        }
        std::vector<int> shift(len);
        for (int i = 0; i < len; ++i) shift[i] = len - 1 - perm[i];
        out.emplace_back(inv % 2 ? -1 : 1, shift);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

void require_decreasing(const std::vector<int>& v, const char* what) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0) throw std::invalid_argument(std::string(what) + ": negative index");
        if (i > 0 && v[i] >= v[i - 1]) throw std::invalid_argument(std::string(what) + ": indices must be strictly decreasing");
    }
}

SPoly mul_exp(const SPoly& p, int var, int bound) {
    SPoly out(p.vars());
    for (const auto& [m, c] : p.terms()) {
        for (int e = 0; m.e[var] + e <= bound; ++e) {
            SchurCombo ce = c.mul_segre(e);
            if (ce.is_zero()) continue;
            Monomial mm = m;
            mm.e[var] = static_cast<std::int16_t>(m.e[var] + e);
            out.add_term(mm, ce);
        }
    }
    return out;
}

// Multiplies by 1 / (1 - x_a x_b) truncated at the per-variable bounds.
template <class C>
Poly<C> mul_geometric(const Poly<C>& p, int a, int b, int bound_a, int bound_b) {
    Poly<C> out(p.vars());
    for (const auto& [m, c] : p.terms()) {
        Monomial mm = m;
        while (mm.e[a] <= bound_a && mm.e[b] <= bound_b) {
            out.add_term(mm, c);
            ++mm.e[a];
            ++mm.e[b];
        }
    }
    return out;
}

template <class C>
Poly<C> drop_unused(const Poly<C>& p, const Alphabet& target) {
    return p.embed(target);
}

}  // namespace

Alphabet genfun_alphabet(int r, int h, int k, bool with_w) {
    std::vector<std::string> all = names("z", h);
    for (auto& s : names("v", k)) all.push_back(s);
    for (auto& s : names("t", r)) all.push_back(s);
    if (with_w) {
        for (auto& s : names("W", k)) all.push_back(s);
    }
    return make_alphabet(all);
}

int infinite_degree_cap(const SeriesParams& p, const SeriesBounds& b) {
    const int m = p.target_rank();
    int cap = p.r * (b.tdeg - p.r + 1) + p.h * b.zdeg - choose2(p.h) - choose2(p.k) + choose2(p.r) - choose2(m);
    return std::max(cap, 0);
}

RingPtr target_ring(const SeriesParams& p, const SeriesBounds& b) {
    const int m = p.target_rank();
    if (m < 0 || (p.n && m > *p.n)) return nullptr;
    if (p.n) return Ring::get({m, p.n, std::nullopt});
    return Ring::get({m, std::nullopt, infinite_degree_cap(p, b)});
}

SPoly sbb_poly(int j, const SymContext& vars, const RingPtr& ring) {
    SPoly out(vars.vars);
    for (int a = 0; a <= vars.r(); ++a) {
        SchurCombo s = SchurCombo::segre(ring, j + a);
        if (s.is_zero()) continue;
        MPoly e = elementary(a, vars);
        out += lift(a % 2 ? -e : e, s);
    }
    return out;
}

SPoly build_D(const SeriesParams& p, const SeriesBounds& bounds, const RingPtr& ring, const SignConvention& conv) {
    const int r = p.r, h = p.h, k = p.k, m = p.target_rank();
    if (m < 0) throw std::invalid_argument("build_D: r + h - k < 0");
    Alphabet A = genfun_alphabet(r, h, k, true);
    SymContext T = SymContext::within(A, names("t", r));
    SymContext Z = SymContext::within(A, names("z", h));
    Bounds b = make_bounds(A, {});
    for (int i : T.indices) b[i] = bounds.tdeg;
    for (int i : Z.indices) b[i] = bounds.zdeg;
    const SchurCombo unit = SchurCombo::unit(ring);
    const int N = r + h;
    if (N == 0) return SPoly::constant(unit, A);

    PolyMatrix<SchurCombo> M(N, std::vector<SPoly>(N, SPoly(A)));
    for (int a = 0; a < k; ++a) {
        const std::string v = "v" + std::to_string(a + 1);
        const int vi = alphabet_index(A, v);
        const int Wi = alphabet_index(A, "W" + std::to_string(a + 1));
        for (int c = 0; c < r; ++c) {
            MPoly entry(A);
            Monomial wc;
            wc.e[Wi] = static_cast<std::int16_t>(c);
            entry.add_term(wc, Rational(1));
            if (p.n) {
                Monomial vs;
                vs.e[vi] = static_cast<std::int16_t>(*p.n - r + 1);
                entry -= y_poly(*p.n - r + 1 + c, T, v).embed(A).shifted(vs).truncated(b);
            }
            M[a][h + c] = lift(entry, unit);
        }
    }
    for (int i = 1; i <= m; ++i) {
        for (int col = 0; col < h; ++col) {
            M[k + i - 1][col] = sbb_poly(h - 1 - col - m + i + conv.t_index_shift, T, ring).truncated(b);
        }
        for (int c = 0; c < r; ++c) {
            M[k + i - 1][h + c] = sbb_poly(r - 1 - c - m + i, Z, ring).truncated(b);
        }
    }
    return determinant(M, A, b);
}

SPoly cancel_w(const SPoly& p, int k) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= k; ++a) {
        int v = p.var("v" + std::to_string(a));
        int W = p.var("W" + std::to_string(a));
        if (v >= 0 && W >= 0) pairs.emplace_back(v, W);
    }
    SPoly out(p.vars());
    for (const auto& [m, c] : p.terms()) {
        Monomial q = m;
        for (auto [v, W] : pairs) {
            std::int16_t d = std::min(q.e[v], q.e[W]);
            q.e[v] = static_cast<std::int16_t>(q.e[v] - d);
            q.e[W] = static_cast<std::int16_t>(q.e[W] - d);
        }
        out.add_term(q, c);
    }
    return out;
}

GenSeries main_series(const SeriesParams& p, const SeriesBounds& bounds, const SignConvention& conv) {
    if (p.r < 0 || p.h < 0 || p.k < 0) throw std::invalid_argument("main_series: negative parameter");
    if (p.n && (*p.n < 1 || p.r > *p.n)) throw std::invalid_argument("main_series: need 0 <= r <= n");
    GenSeries gs{p, bounds, target_ring(p, bounds), SPoly(genfun_alphabet(p.r, p.h, p.k))};
    if (!gs.target || p.k > p.r) return gs;

    const int r = p.r, h = p.h, k = p.k;
    SPoly D = build_D(p, bounds, gs.target, conv);
    Monomial pre;
    for (int a = 1; a <= k; ++a) pre.e[D.var("v" + std::to_string(a))] = static_cast<std::int16_t>(r - 1);
    SPoly body = cancel_w(D.shifted(pre), k);
    for (const auto& [m, c] : body.terms()) {
        for (int a = 1; a <= k; ++a) {
            if (m.e[body.var("W" + std::to_string(a))] != 0) {
                throw std::logic_error("main_series: positive power of w survived the prefactor");
            }
        }
    }
    body = drop_unused(body, gs.body.vars());
    int sign = (conv.sign_h_times_k ? h * k : h) + (conv.sign_row_order ? choose2(k) : 0);
    if (sign % 2) body = -body;

    std::vector<int> vidx;
    for (int a = 1; a <= k; ++a) vidx.push_back(body.var("v" + std::to_string(a)));
    body = divide_by_alternant(body, vidx);

    const Alphabet& A = body.vars();
    Bounds box(A->size(), INT_MAX);
    for (int i = 1; i <= h; ++i) box[alphabet_index(A, "z" + std::to_string(i))] = bounds.zdeg;
    for (int i = 1; i <= k; ++i) box[alphabet_index(A, "v" + std::to_string(i))] = bounds.wdeg;
    for (int i = 1; i <= r; ++i) box[alphabet_index(A, "t" + std::to_string(i))] = bounds.tdeg;
    body = body.truncated(box);

    for (int a = 1; a <= k; ++a) {
        int v = alphabet_index(A, "v" + std::to_string(a));
        for (int j = 1; j <= r; ++j) {
            int t = alphabet_index(A, "t" + std::to_string(j));
            body = mul_geometric(body, t, v, bounds.tdeg, bounds.wdeg);
        }
    }
    for (int i = 1; i <= h; ++i) body = mul_exp(body, alphabet_index(A, "z" + std::to_string(i)), bounds.zdeg);
    for (int j = 1; j <= r; ++j) body = mul_exp(body, alphabet_index(A, "t" + std::to_string(j)), bounds.tdeg);
    gs.body = std::move(body);
    return gs;
}

SchurCombo extract_action(const GenSeries& gs, const std::vector<int>& I, const std::vector<int>& J,
                          const Partition& lambda) {
    const auto& p = gs.params;
    if (static_cast<int>(I.size()) != p.h || static_cast<int>(J.size()) != p.k) {
        throw std::invalid_argument("extract_action: index tuple lengths must be h and k");
    }
    require_decreasing(I, "extract_action");
    require_decreasing(J, "extract_action");
    if (lambda.length() > p.r) throw std::invalid_argument("extract_action: partition longer than r");
    if (p.n) {
        if ((!I.empty() && I[0] >= *p.n) || (!J.empty() && J[0] >= *p.n)) {
            throw std::invalid_argument("extract_action: index >= n");
        }
        if (lambda[0] > *p.n - p.r) throw std::invalid_argument("extract_action: partition outside the rectangle");
    }
    if ((!I.empty() && I[0] > gs.bounds.zdeg) || (!J.empty() && J[0] > gs.bounds.wdeg) ||
        (p.r > 0 && lambda[0] + p.r - 1 > gs.bounds.tdeg)) {
        throw std::out_of_range("extract_action: target outside the truncation bounds");
    }
    if (!gs.target) return SchurCombo();
    SchurCombo out(gs.target);
    if (gs.body.is_zero()) return out;

    const Alphabet& A = gs.body.vars();
    std::vector<int> zi, vi, ti;
    for (int i = 1; i <= p.h; ++i) zi.push_back(alphabet_index(A, "z" + std::to_string(i)));
    for (int i = 1; i <= p.k; ++i) vi.push_back(alphabet_index(A, "v" + std::to_string(i)));
    for (int i = 1; i <= p.r; ++i) ti.push_back(alphabet_index(A, "t" + std::to_string(i)));
    Monomial target;
    for (int i = 0; i < p.h; ++i) target.e[zi[i]] = static_cast<std::int16_t>(I[i]);
    for (int i = 0; i < p.k; ++i) target.e[vi[i]] = static_cast<std::int16_t>(J[i]);
    for (int i = 0; i < p.r; ++i) target.e[ti[i]] = static_cast<std::int16_t>(lambda[i] + p.r - 1 - i);

    const auto az = alternant_terms(p.h), av = alternant_terms(p.k), at = alternant_terms(p.r);
    for (const auto& [sz, dz] : az) {
        for (const auto& [sv, dv] : av) {
            for (const auto& [st, dt] : at) {
                Monomial m = target;
                bool ok = true;
                auto sub = [&](const std::vector<int>& idx, const std::vector<int>& d) {
                    for (std::size_t i = 0; i < idx.size(); ++i) {
                        m.e[idx[i]] = static_cast<std::int16_t>(m.e[idx[i]] - d[i]);
                        ok = ok && m.e[idx[i]] >= 0;
                    }
                };
                sub(zi, dz);
                sub(vi, dv);
                sub(ti, dt);
                if (!ok) continue;
                auto it = gs.body.terms().find(m);
                if (it == gs.body.terms().end()) continue;
                out += it->second * Rational(sz * sv * st);
            }
        }
    }
    return out;
}

std::vector<std::vector<int>> decreasing_tuples(int len, int top) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int below) -> void {
        if (static_cast<int>(cur.size()) == len) {
            out.push_back(cur);
            return;
        }
        int need = len - static_cast<int>(cur.size());
        for (int x = below - 1; x >= need - 1; --x) {
            cur.push_back(x);
            self(self, x);
            cur.pop_back();
        }
    };
    rec(rec, top + 1);
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<CoefficientEntry> coefficient_table(const GenSeries& gs) {
    const auto& p = gs.params;
    int ztop = gs.bounds.zdeg, wtop = gs.bounds.wdeg, width = gs.bounds.tdeg - p.r + 1;
    if (p.n) {
        ztop = std::min(ztop, *p.n - 1);
        wtop = std::min(wtop, *p.n - 1);
        width = std::min(width, *p.n - p.r);
    }
    std::vector<Partition> lams;
    if (p.r == 0) {
        lams.emplace_back();
    } else if (width >= 0) {
        lams = enumerate_partitions(RectBound{p.r, width});
    }
    std::vector<CoefficientEntry> out;
    for (const auto& I : decreasing_tuples(p.h, ztop)) {
        for (const auto& J : decreasing_tuples(p.k, wtop)) {
            for (const auto& lam : lams) out.push_back({I, J, lam, extract_action(gs, I, J, lam)});
        }
    }
    return out;
}

bool same_series(const GenSeries& a, const GenSeries& b) {
    if (!(a.params == b.params) || !(a.bounds == b.bounds)) return false;
    auto ta = coefficient_table(a), tb = coefficient_table(b);
    if (ta.size() != tb.size()) return false;
    for (std::size_t i = 0; i < ta.size(); ++i) {
        if (!(ta[i].value == tb[i].value)) return false;
    }
    return true;
}

nlohmann::json to_json(const SchurCombo& x) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [i, c] : x.terms()) {
        out.push_back({{"partition", x.ring()->partition(i).parts()}, {"coeff", c.to_string()}});
    }
    return out;
}

SchurCombo schurcombo_from_json(const nlohmann::json& j, const RingPtr& ring) {
    std::map<Partition, Rational> raw;
    for (const auto& t : j) {
        raw[Partition(t.at("partition").get<std::vector<int>>())] += Rational::parse(t.at("coeff").get<std::string>());
    }
    for (const auto& [p, c] : raw) {
        if (!ring->contains(p) && !c.is_zero()) throw std::invalid_argument("schurcombo_from_json: class " + p.to_string() + " not in ring");
    }
    return reduce(raw, ring);
}

nlohmann::json to_json(const MPoly& p) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::json ex = nlohmann::json::object();
        for (std::size_t i = 0; i < p.vars()->size(); ++i) {
            if (m.e[i]) ex[(*p.vars())[i]] = m.e[i];
        }
        out.push_back({{"exponents", ex}, {"coeff", c.to_string()}});
    }
    return out;
}

MPoly mpoly_from_json(const nlohmann::json& j) {
    std::vector<std::string> vars;
    for (const auto& t : j) {
        for (const auto& [name, e] : t.at("exponents").items()) {
            if (std::find(vars.begin(), vars.end(), name) == vars.end()) vars.push_back(name);
        }
    }
    Alphabet a = make_alphabet(vars);
    MPoly out(a);
    for (const auto& t : j) {
        std::map<std::string, int> ex;
        for (const auto& [name, e] : t.at("exponents").items()) ex[name] = e.get<int>();
        out.add_term(make_monomial(a, ex), Rational::parse(t.at("coeff").get<std::string>()));
    }
    return out;
}

nlohmann::json to_json(const GenSeries& gs) {
    const auto& p = gs.params;
    nlohmann::json out;
    out["params"] = {{"r", p.r}, {"h", p.h}, {"k", p.k}};
    if (p.n) {
        out["params"]["n"] = *p.n;
    } else {
        out["params"]["n"] = "inf";
    }
    out["bounds"] = {{"zdeg", gs.bounds.zdeg}, {"wdeg", gs.bounds.wdeg}, {"tdeg", gs.bounds.tdeg}};
    out["coefficients"] = nlohmann::json::array();
    for (const auto& e : coefficient_table(gs)) {
        if (e.value.is_zero()) continue;
        out["coefficients"].push_back({{"z", e.I}, {"w", e.J}, {"lambda", e.lambda.parts()}, {"value", to_json(e.value)}});
    }
    return out;
}

GenSeries genseries_from_json(const nlohmann::json& j) {
    SeriesParams p;
    p.r = j.at("params").at("r").get<int>();
    p.h = j.at("params").at("h").get<int>();
    p.k = j.at("params").at("k").get<int>();
    const auto& n = j.at("params").at("n");
    if (n.is_number_integer()) p.n = n.get<int>();
    SeriesBounds b{j.at("bounds").at("zdeg").get<int>(), j.at("bounds").at("wdeg").get<int>(),
                   j.at("bounds").at("tdeg").get<int>()};
    GenSeries gs{p, b, target_ring(p, b), SPoly(genfun_alphabet(p.r, p.h, p.k))};
    const Alphabet& A = gs.body.vars();
    SymContext Z = SymContext::within(A, names("z", p.h));
    SymContext V = SymContext::within(A, names("v", p.k));
    SymContext T = SymContext::within(A, names("t", p.r));
    Bounds box(A->size(), INT_MAX);
    for (int i : Z.indices) box[i] = b.zdeg;
    for (int i : V.indices) box[i] = b.wdeg;
    for (int i : T.indices) box[i] = b.tdeg;
    auto shifted_partition = [](const std::vector<int>& idx) {
        std::vector<int> out(idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i) out[i] = idx[i] - static_cast<int>(idx.size() - 1 - i);
        return Partition(out);
    };
    for (const auto& e : j.at("coefficients")) {
        if (!gs.target) throw std::invalid_argument("genseries_from_json: coefficients for an empty target");
        auto I = e.at("z").get<std::vector<int>>();
        auto J = e.at("w").get<std::vector<int>>();
        Partition lam(e.at("lambda").get<std::vector<int>>());
        SchurCombo value = schurcombo_from_json(e.at("value"), gs.target);
        MPoly s = mul_truncated(mul_truncated(schur(shifted_partition(I), Z), schur(shifted_partition(J), V), box),
                                schur(lam, T), box);
        gs.body += lift(s, value);
    }
    return gs;
}

std::string to_text(const GenSeries& gs) {
    const auto& p = gs.params;
    std::string out = "series r=" + std::to_string(p.r) + " h=" + std::to_string(p.h) + " k=" + std::to_string(p.k) +
                      " n=" + (p.n ? std::to_string(*p.n) : std::string("inf")) + " zdeg=" + std::to_string(gs.bounds.zdeg) +
                      " wdeg=" + std::to_string(gs.bounds.wdeg) + " tdeg=" + std::to_string(gs.bounds.tdeg) + "\n";
    if (!gs.target) return out + "0 (r+h-k is outside 0..n)\n";
    auto tuple = [](const std::vector<int>& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + "]";
    };
    bool any = false;
    for (const auto& e : coefficient_table(gs)) {
        if (e.value.is_zero()) continue;
        any = true;
        out += "z" + tuple(e.I) + " w^-" + tuple(e.J) + " s" + e.lambda.to_string() + ": " + e.value.to_string() + "\n";
    }
    if (!any) out += "0\n";
    return out;
}

IdentitySides cauchy_wedge(int h, int r, std::optional<int> n, int bound) {
    std::vector<std::string> all = names("z", h);
    for (auto& s : names("t", r)) all.push_back(s);
    Alphabet A = make_alphabet(all);
    SymContext Z = SymContext::within(A, names("z", h));
    SymContext T = SymContext::within(A, names("t", r));
    SymContext ZT = SymContext::within(A, all);
    Bounds box(A->size(), bound);

    ExtVec xh = ExtVec::wedge_of(n, ext_monomial(Partition{}, h));
    ExtVec xr = ExtVec::wedge_of(n, ext_monomial(Partition{}, r));
    IdentitySides sides{wedge_series(sigma_plus(Z, xh, bound), sigma_plus(T, xr, bound), box), ExtSeries(A)};

    MPoly cross = MPoly::constant(Rational(1), A);
    for (int i = 0; i < h; ++i) {
        for (int j = 0; j < r; ++j) {
            MPoly d(A);
            Monomial a, b;
            a.e[Z.indices[i]] = 1;
            b.e[T.indices[j]] = 1;
            d.add_term(a, Rational(1));
            d.add_term(b, Rational(-1));
            cross = mul_truncated(cross, d, box);
        }
    }
    const int d = h + r;
    std::vector<Partition> lams;
    if (n) {
        if (d <= *n) lams = enumerate_partitions(RectBound{d, *n - d});
    } else {
        for (int w = 0; w <= d * bound - h * r; ++w) {
            for (auto& p : enumerate_by_weight(d, w)) lams.push_back(p);
        }
    }
    for (const auto& lam : lams) {
        ExtVec x = ExtVec::wedge_of(n, ext_monomial(lam, d));
        MPoly s = mul_truncated(cross, schur(lam, ZT).truncated(box), box);
        for (const auto& [m, c] : s.terms()) sides.rhs.add_term(m, x * c);
    }
    return sides;
}

ScalarSides contraction_det(int r, std::optional<int> n, int bound) {
    std::vector<std::string> all = names("v", r);
    for (auto& s : names("t", r)) all.push_back(s);
    Alphabet A = make_alphabet(all);
    SymContext T = SymContext::within(A, names("t", r));
    Bounds box(A->size(), bound);

    // Left side: d(v_r) _| ... _| d(v_1) _| sigma_+(t) X^r(0).
    ExtSeries u = sigma_plus(T, ExtVec::wedge_of(n, ext_monomial(Partition{}, r)), bound);
    for (int a = 0; a < r; ++a) {
        ExtSeries next(A);
        int top = n ? std::min(bound, *n - 1) : bound;
        for (const auto& [m, c] : u.terms()) {
            for (int j = 0; j <= top && m.e[a] + j <= bound; ++j) {
                ExtVec img = contract(dual(j), c);
                if (img.is_zero()) continue;
                Monomial mm = m;
                mm.e[a] = static_cast<std::int16_t>(m.e[a] + j);
                next.add_term(mm, img);
            }
        }
        u = std::move(next);
    }
    ScalarSides sides{MPoly(A), MPoly(A)};
    for (const auto& [m, c] : u.terms()) sides.lhs.add_term(m, c.coeff({}));

    // Right side: prod v_a^{r-1} det[W_a^c - y_{n-r+1+c}(t; v_a) v_a^{n-r+1}] prod_a H(t, v_a).
    if (r == 0) {
        sides.rhs = MPoly::constant(Rational(1), A);
        return sides;
    }
    std::vector<std::string> withW = all;
    for (auto& s : names("W", r)) withW.push_back(s);
    Alphabet AW = make_alphabet(withW);
    SymContext TW = SymContext::within(AW, names("t", r));
    Bounds bw(AW->size(), INT_MAX);
    for (int i : TW.indices) bw[i] = bound;
    PolyMatrix<Rational> M(r, std::vector<MPoly>(r, MPoly(AW)));
    for (int a = 0; a < r; ++a) {
        const std::string v = "v" + std::to_string(a + 1);
        const int vi = alphabet_index(AW, v);
        const int Wi = alphabet_index(AW, "W" + std::to_string(a + 1));
        for (int c = 0; c < r; ++c) {
            Monomial wc;
            wc.e[Wi] = static_cast<std::int16_t>(c);
            M[a][c].add_term(wc, Rational(1));
            if (n) {
                Monomial vs;
                vs.e[vi] = static_cast<std::int16_t>(*n - r + 1);
                M[a][c] -= y_poly(*n - r + 1 + c, TW, v).embed(AW).shifted(vs).truncated(bw);
            }
        }
    }
    MPoly det = determinant(M, AW, bw);
    Monomial pre;
    for (int a = 0; a < r; ++a) pre.e[a] = static_cast<std::int16_t>(r - 1);
    det = det.shifted(pre);
    MPoly cancelled(AW);
    for (const auto& [m, c] : det.terms()) {
        Monomial q = m;
        for (int a = 0; a < r; ++a) {
            int W = alphabet_index(AW, "W" + std::to_string(a + 1));
            std::int16_t d = std::min(q.e[a], q.e[W]);
            q.e[a] = static_cast<std::int16_t>(q.e[a] - d);
            q.e[W] = static_cast<std::int16_t>(q.e[W] - d);
            if (q.e[W] != 0) throw std::logic_error("contraction_det: positive power of w survived");
        }
        cancelled.add_term(q, c);
    }
    MPoly rhs = cancelled.embed(A).truncated(box);
    for (int a = 0; a < r; ++a) {
        for (int j = 0; j < r; ++j) rhs = mul_geometric(rhs, T.indices[j], a, bound, bound);
    }
    sides.rhs = rhs;
    return sides;
}

}  // namespace bfc
