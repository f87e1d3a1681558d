#include "bfc/symfun.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bfc {

SymContext SymContext::make(const std::string& prefix, int r) {
    std::vector<std::string> names;
    for (int i = 1; i <= r; ++i) names.push_back(prefix + std::to_string(i));
    SymContext ctx{make_alphabet(names), {}};
    for (int i = 0; i < r; ++i) ctx.indices.push_back(i);
    return ctx;
}

SymContext SymContext::within(const Alphabet& vars, const std::vector<std::string>& names) {
    SymContext ctx{vars, {}};
    for (const auto& n : names) {
        int i = alphabet_index(vars, n);
        if (i < 0) throw std::invalid_argument("SymContext::within: '" + n + "' not in alphabet");
        ctx.indices.push_back(i);
    }
    return ctx;
}

namespace {

MPoly one(const Alphabet& vars) { return MPoly::constant(Rational(1), vars); }

void subsets(const SymContext& ctx, int start, int k, Monomial& cur, MPoly& out) {
    if (k == 0) {
        out.add_term(cur, Rational(1));
        return;
    }
    for (int i = start; i + k <= ctx.r(); ++i) {
        cur.e[ctx.indices[i]] = 1;
        subsets(ctx, i + 1, k - 1, cur, out);
        cur.e[ctx.indices[i]] = 0;
    }
}

void multisets(const SymContext& ctx, int pos, int k, Monomial& cur, MPoly& out) {
    if (pos == ctx.r() - 1) {
        cur.e[ctx.indices[pos]] = static_cast<std::int16_t>(k);
        out.add_term(cur, Rational(1));
        cur.e[ctx.indices[pos]] = 0;
        return;
    }
    for (int a = 0; a <= k; ++a) {
        cur.e[ctx.indices[pos]] = static_cast<std::int16_t>(a);
        multisets(ctx, pos + 1, k - a, cur, out);
    }
    cur.e[ctx.indices[pos]] = 0;
}

MPoly difference(const SymContext& ctx, int i, int j) {
    MPoly p(ctx.vars);
    Monomial a, b;
    a.e[ctx.indices[i]] = 1;
    b.e[ctx.indices[j]] = 1;
    p.add_term(a, Rational(1));
    p.add_term(b, Rational(-1));
    return p;
}

Alphabet with_var(const Alphabet& vars, const std::string& z) {
    return alphabet_union(vars, make_alphabet({z}));
}

}  // namespace

MPoly elementary(int k, const SymContext& ctx) {
    if (k < 0) return MPoly(ctx.vars);
    MPoly out(ctx.vars);
    if (k > ctx.r()) return out;
    Monomial cur;
    subsets(ctx, 0, k, cur, out);
    return out;
}

MPoly complete(int k, const SymContext& ctx) {
    if (k < 0) return MPoly(ctx.vars);
    if (k == 0) return one(ctx.vars);
    MPoly out(ctx.vars);
    if (ctx.r() == 0) return out;
    Monomial cur;
    multisets(ctx, 0, k, cur, out);
    return out;
}

MPoly power_sum(int k, const SymContext& ctx) {
    if (k < 1) throw std::invalid_argument("power_sum: index must be >= 1");
    MPoly out(ctx.vars);
    for (int i = 0; i < ctx.r(); ++i) {
        Monomial m;
        m.e[ctx.indices[i]] = static_cast<std::int16_t>(k);
        out.add_term(m, Rational(1));
    }
    return out;
}

MPoly vandermonde(const SymContext& ctx) {
    MPoly out = one(ctx.vars);
    for (int i = 0; i < ctx.r(); ++i) {
        for (int j = i + 1; j < ctx.r(); ++j) out = out * difference(ctx, j, i);
    }
    return out;
}

MPoly alternant(const SymContext& ctx) {
    MPoly out = one(ctx.vars);
    for (int i = 0; i < ctx.r(); ++i) {
        for (int j = i + 1; j < ctx.r(); ++j) out = out * difference(ctx, i, j);
    }
    return out;
}

MPoly alternant_of(const Partition& lambda, const SymContext& ctx) {
    const int r = ctx.r();
    std::vector<int> parts = lambda.padded(r);
    std::vector<int> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    MPoly out(ctx.vars);
    do {
        // sign of perm by counting inversions
        int inv = 0;
        for (int i = 0; i < r; ++i) {
            for (int j = i + 1; j < r; ++j) inv += perm[i] > perm[j];
        }
        Monomial m;
        for (int i = 0; i < r; ++i) {
            int j = perm[i];
            m.e[ctx.indices[i]] = static_cast<std::int16_t>(parts[j] + r - 1 - j);
        }
        out.add_term(m, Rational(inv % 2 ? -1 : 1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

MPoly schur(const Partition& lambda, const SymContext& ctx) {
    if (lambda.length() > ctx.r()) return MPoly(ctx.vars);
    return divide_by_alternant(alternant_of(lambda, ctx), ctx.indices);
}

MPoly u_poly(int j, int m, const SymContext& ctx) {
    if (j < 0 || m < 0) throw std::invalid_argument("u_poly: negative index");
    MPoly out(ctx.vars);
    for (int a = 0; a <= std::min(j, ctx.r()); ++a) {
        MPoly term = elementary(a, ctx) * complete(m + j - a, ctx);
        out += a % 2 ? -term : term;
    }
    return out;
}

MPoly y_poly(int m, const SymContext& ctx, const std::string& zeta) {
    if (m < 0) throw std::invalid_argument("y_poly: negative index");
    Alphabet vars = with_var(ctx.vars, zeta);
    int z = alphabet_index(vars, zeta);
    MPoly out(vars);
    for (int j = 0; j < ctx.r(); ++j) {
        Monomial shift;
        shift.e[z] = static_cast<std::int16_t>(j);
        out += u_poly(j, m, ctx).embed(vars).shifted(shift);
    }
    if (ctx.r() == 0 && m == 0) out = MPoly::constant(Rational(1), vars);
    return out;
}

MPoly e_generating(const SymContext& ctx, const std::string& zeta) {
    Alphabet vars = with_var(ctx.vars, zeta);
    int z = alphabet_index(vars, zeta);
    MPoly out(vars);
    for (int a = 0; a <= ctx.r(); ++a) {
        Monomial shift;
        shift.e[z] = static_cast<std::int16_t>(a);
        MPoly e = elementary(a, ctx).embed(vars).shifted(shift);
        out += a % 2 ? -e : e;
    }
    return out;
}

}  // namespace bfc
