#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bfc/series.hpp"

using namespace bfc;

namespace {

MPoly P(const std::string& s, const Alphabet& a) { return parse_mpoly(s, a); }

std::map<std::string, int> bounds_of(const Alphabet& a, int b) {
    std::map<std::string, int> out;
    for (const auto& v : *a) out[v] = b;
    return out;
}

}  // namespace

TEST_CASE("rational_normalises_sign_and_gcd") {
    Rational q(6, -4);
    CHECK(q.to_string() == "-3/2");
    CHECK(q.denominator() == "2");
    CHECK(Rational(0, 5).to_string() == "0");
    CHECK(Rational(0, 5).denominator() == "1");
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("7").is_integer());
}

TEST_CASE("rational_arithmetic_is_exact") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(Rational(1, 3) * 3 == Rational(1));
    CHECK(Rational(-1, 2) < Rational(1, 3));
}

TEST_CASE("rational_division_by_zero_throws") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
    CHECK_THROWS(Rational::parse("abc"));
}

TEST_CASE("mpoly_difference_of_squares") {
    Alphabet a = make_alphabet({"t1", "t2"});
    CHECK(P("t1-t2", a) * P("t1+t2", a) == P("t1^2-t2^2", a));
}

TEST_CASE("mpoly_zero_annihilates") {
    Alphabet a = make_alphabet({"t1", "t2"});
    MPoly zero(a);
    CHECK((zero * P("3*t1^2*t2-1/2", a)).is_zero());
}

TEST_CASE("mpoly_chern_times_segre_truncation") {
    Alphabet a = make_alphabet({"c1", "c2", "z"});
    MPoly c = P("1-c1*z+c2*z^2", a);
    MPoly s = P("1+c1*z+c1^2*z^2-c2*z^2", a);
    // z, z^2 cancel; the z^3, z^4 remainders are what the degree-2 truncation of the Segre series leaves.
    CHECK(c * s == P("1-c1^3*z^3+2*c1*c2*z^3+c1^2*c2*z^4-c2^2*z^4", a));
}

TEST_CASE("mpoly_text_is_graded_and_deterministic") {
    Alphabet a = make_alphabet({"x", "y"});
    MPoly p = P("y^2 + x*y + 3 + x^2 - 1/2*x", a);
    CHECK(to_string(p) == "3 - 1/2*x + x^2 + x*y + y^2");
    CHECK(to_string(MPoly(a)) == "0");
    CHECK(parse_mpoly(to_string(p), a) == p);
}

TEST_CASE("mpoly_parse_rejects_unknown_variable") {
    Alphabet a = make_alphabet({"x"});
    CHECK_THROWS_AS(parse_mpoly("x+y", a), std::invalid_argument);
    CHECK_THROWS_AS(parse_mpoly("", a), std::invalid_argument);
}

TEST_CASE("mpoly_ring_axioms_on_random_triples") {
    Alphabet a = make_alphabet({"x", "y", "z"});
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> coef(-5, 5), ex(0, 2);
    auto rnd = [&] {
        MPoly p(a);
        for (int i = 0; i < 5; ++i) {
            Monomial m;
            for (int v = 0; v < 3; ++v) m.e[v] = static_cast<std::int16_t>(ex(rng));
            p.add_term(m, Rational(coef(rng), 1 + ex(rng)));
        }
        return p;
    };
    for (int s = 0; s < 50; ++s) {
        MPoly p = rnd(), q = rnd(), r = rnd();
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p - p == MPoly(a));
    }
}

TEST_CASE("mpoly_no_zero_coefficients_stored") {
    Alphabet a = make_alphabet({"x"});
    MPoly p = P("x", a) + P("-x", a);
    CHECK(p.is_zero());
    CHECK(p.size() == 0);
}

TEST_CASE("mpoly_divide_by_difference_is_exact") {
    Alphabet a = make_alphabet({"x", "y"});
    MPoly p = P("x^3-y^3", a);
    CHECK(divide_by_difference(p, 0, 1) == P("x^2+x*y+y^2", a));
    CHECK_THROWS_AS(divide_by_difference(P("x^2+y", a), 0, 1), std::logic_error);
}

TEST_CASE("series_inverse_geometric") {
    Alphabet a = make_alphabet({"c1", "z"});
    MSeries s(P("1-c1*z", a), {{"z", 3}});
    CHECK(series_inverse(s).body == P("1+c1*z+c1^2*z^2+c1^3*z^3", a));
}

TEST_CASE("series_inverse_defines_segre_classes") {
    Alphabet a = make_alphabet({"c1", "c2", "z"});
    MSeries s(P("1-c1*z+c2*z^2", a), {{"z", 3}});
    CHECK(series_inverse(s).body == P("1+c1*z+c1^2*z^2-c2*z^2+c1^3*z^3-2*c1*c2*z^3", a));
}

TEST_CASE("series_inverse_of_one_and_of_zero") {
    Alphabet a = make_alphabet({"z"});
    CHECK(series_inverse(MSeries(P("1", a), {{"z", 3}})).body == P("1", a));
    CHECK_THROWS_AS(series_inverse(MSeries(P("z", a), {{"z", 3}})), std::domain_error);
}

TEST_CASE("series_inverse_random_unit_series") {
    Alphabet a = make_alphabet({"x", "y"});
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int s = 0; s < 100; ++s) {
        MPoly p = P(std::to_string(1 + (s % 3)), a);
        for (int i = 0; i <= 3; ++i) {
            for (int j = 0; j <= 3; ++j) {
                if (i + j == 0) continue;
                Monomial m;
                m.e[0] = static_cast<std::int16_t>(i);
                m.e[1] = static_cast<std::int16_t>(j);
                p.add_term(m, Rational(coef(rng)));
            }
        }
        MSeries ser(p, bounds_of(a, 3));
        CHECK(series_mul(ser, series_inverse(ser)).body == P("1", a));
    }
}

TEST_CASE("series_exp_of_z") {
    Alphabet a = make_alphabet({"z"});
    CHECK(series_exp(MSeries(P("z", a), {{"z", 3}})).body == P("1+z+1/2*z^2+1/6*z^3", a));
}

TEST_CASE("series_log_mercator") {
    Alphabet a = make_alphabet({"S1", "S2", "z"});
    MSeries s(P("1+S1*z+S2*z^2", a), {{"z", 2}});
    CHECK(series_log(s).body == P("S1*z+S2*z^2-1/2*S1^2*z^2", a));
}

TEST_CASE("series_exp_log_inverse_pair") {
    Alphabet a = make_alphabet({"S1", "z"});
    MSeries s(P("1+S1*z", a), {{"z", 5}});
    CHECK(series_exp(series_log(s)) == s);
    MSeries u(P("S1*z-z^2", a), {{"z", 5}});
    CHECK(series_log(series_exp(u)) == u);
}

TEST_CASE("series_exp_and_log_preconditions") {
    Alphabet a = make_alphabet({"z"});
    CHECK_THROWS_AS(series_exp(MSeries(P("1+z", a), {{"z", 3}})), std::domain_error);
    CHECK_THROWS_AS(series_log(MSeries(P("2+z", a), {{"z", 3}})), std::domain_error);
    Alphabet b = make_alphabet({"z", "c"});
    CHECK_THROWS_AS(series_exp(MSeries(P("c", b), {{"z", 3}})), std::invalid_argument);
}

TEST_CASE("series_truncation_uses_minimum_bound") {
    Alphabet a = make_alphabet({"z"});
    MSeries s(P("1+z+z^2+z^3", a), {{"z", 3}});
    MSeries t(P("1+z", a), {{"z", 1}});
    auto p = series_mul(s, t);
    CHECK(p.bounds.at("z") == 1);
    CHECK(p.body == P("1+2*z", a));
}

TEST_CASE("series_coefficient_reads_partial_monomials") {
    Alphabet a = make_alphabet({"c1", "z"});
    MSeries s(P("1+c1*z+c1^2*z^2", a), {{"z", 2}});
    CHECK(coefficient(s, {{"z", 2}}) == P("c1^2", a));
    CHECK_THROWS_AS(coefficient(s, {{"z", 3}}), std::out_of_range);
}

TEST_CASE("series_coefficient_of_the_r1_product") {
    // (sum c1^i z^i)(sum t^j v^j), v standing for 1/w.
    Alphabet a = make_alphabet({"c1", "z", "t", "v"});
    MSeries x(P("1+c1*z+c1^2*z^2+c1^3*z^3", a), {{"z", 3}, {"t", 4}, {"v", 4}});
    MSeries y(P("1+t*v+t^2*v^2+t^3*v^3+t^4*v^4", a), {{"z", 3}, {"t", 4}, {"v", 4}});
    auto s = series_mul(x, y);
    CHECK(coefficient(s, {{"z", 2}, {"v", 3}, {"t", 3}}) == P("c1^2", a));
    CHECK(coefficient(s, {{"z", 2}, {"v", 3}, {"t", 4}}).is_zero());
}
