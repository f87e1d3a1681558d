#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bfc/genfun.hpp"

using namespace bfc;

namespace {

RingPtr ring(int r, int n) { return Ring::get({r, n, std::nullopt}); }

SchurCombo S(const RingPtr& g, const Partition& p, const Rational& c = Rational(1)) {
    return SchurCombo::basis(g, p, c);
}

SchurCombo seg(const RingPtr& g, int j) { return SchurCombo::segre(g, j); }

}  // namespace

TEST_CASE("sbb_with_no_variables_is_segre") {
    auto g = ring(2, 6);
    auto none = SymContext::make("z", 0);
    for (int j = -2; j <= 4; ++j) {
        auto p = sbb_poly(j, none, g);
        CHECK(p.coeff(Monomial{}) == seg(g, j));
        CHECK(p.size() <= 1);
    }
}

TEST_CASE("sbb_in_one_and_two_variables") {
    auto g = ring(2, 7);
    auto z = SymContext::make("z", 1);
    auto p = sbb_poly(2, z, g);
    CHECK(p.size() == 2);
    CHECK(p.coeff(Monomial{}) == seg(g, 2));
    CHECK(p.coeff(make_monomial(z.vars, {{"z1", 1}})) == -seg(g, 3));

    auto zw = SymContext::make("z", 2);
    auto q = sbb_poly(1, zw, g);
    CHECK(q.coeff(Monomial{}) == seg(g, 1));
    CHECK(q.coeff(make_monomial(zw.vars, {{"z1", 1}})) == -seg(g, 2));
    CHECK(q.coeff(make_monomial(zw.vars, {{"z2", 1}})) == -seg(g, 2));
    CHECK(q.coeff(make_monomial(zw.vars, {{"z1", 1}, {"z2", 1}})) == seg(g, 3));
}

TEST_CASE("sbb_at_minus_r_is_signed_top_elementary") {
    auto g = ring(3, 6);
    for (int r = 1; r <= 3; ++r) {
        auto t = SymContext::make("t", r);
        auto p = sbb_poly(-r, t, g);
        Monomial top;
        for (int i = 0; i < r; ++i) top.e[i] = 1;
        CHECK(p.size() == 1);
        CHECK(p.coeff(top) == SchurCombo::unit(g) * Rational(r % 2 ? -1 : 1));
    }
}

TEST_CASE("extract_matrix_action_rank_one") {
    for (int n = 4; n <= 6; ++n) {
        auto gs = main_series({1, 1, 1, n}, SeriesBounds::covering(n));
        CHECK(extract_action(gs, {2}, {3}, Partition{3}) == S(ring(1, n), {2}));
        if (n > 4) CHECK(extract_action(gs, {2}, {3}, Partition{4}).is_zero());
    }
}

TEST_CASE("extract_is_zero_for_negative_target_rank") {
    auto gs = main_series({1, 0, 2, 4}, SeriesBounds::covering(4));
    CHECK(gs.trivially_zero());
    CHECK_FALSE(gs.target);
    CHECK(extract_action(gs, {}, {3, 1}, Partition{2}).is_zero());
}

TEST_CASE("extract_rejects_bad_targets") {
    auto gs = main_series({1, 1, 1, 4}, SeriesBounds::covering(4));
    CHECK_THROWS_AS(extract_action(gs, {2}, {3, 1}, Partition{}), std::invalid_argument);
    CHECK_THROWS_AS(extract_action(gs, {4}, {3}, Partition{}), std::invalid_argument);
    CHECK_THROWS_AS(extract_action(gs, {1}, {1}, Partition{4}), std::invalid_argument);
    auto small = main_series({1, 1, 1, 6}, {2, 2, 2});
    CHECK_THROWS_AS(extract_action(small, {3}, {1}, Partition{}), std::out_of_range);
}

TEST_CASE("vacuum_series_is_the_segre_series") {
    auto gs = main_series({0, 1, 0, 4}, SeriesBounds::covering(4));
    auto g = ring(1, 4);
    for (int i = 0; i < 4; ++i) CHECK(extract_action(gs, {i}, {}, Partition{}) == S(g, {i}));
}

TEST_CASE("empty_word_series_is_the_schur_expansion") {
    for (int n = 2; n <= 5; ++n) {
        for (int r = 0; r <= std::min(n, 3); ++r) {
            auto gs = main_series({r, 0, 0, n}, SeriesBounds::covering(n));
            for (const auto& lam : gs.target->basis()) {
                CHECK(extract_action(gs, {}, {}, lam) == S(gs.target, lam));
            }
        }
    }
}

TEST_CASE("coefficient_table_matches_the_oracle_on_a_small_ring") {
    auto gs = main_series({2, 1, 1, 4}, SeriesBounds::covering(4));
    auto table = coefficient_table(gs);
    CHECK(table.size() == 4 * 4 * 6);
    for (const auto& e : table) {
        CHECK(e.value == star_action_oracle({e.I, e.J}, e.lambda, 2, 4));
    }
}

TEST_CASE("decreasing_tuples_counts") {
    CHECK(decreasing_tuples(0, 3).size() == 1);
    CHECK(decreasing_tuples(2, 3).size() == 6);
    CHECK(decreasing_tuples(2, 3).front() == std::vector<int>{1, 0});
    CHECK(decreasing_tuples(5, 3).empty());
}

TEST_CASE("json_round_trip_of_series") {
    for (auto p : {SeriesParams{2, 1, 1, 4}, SeriesParams{1, 2, 0, 5}, SeriesParams{1, 0, 2, 4},
                   SeriesParams{1, 1, 1, std::nullopt}}) {
        SeriesBounds b = p.n ? SeriesBounds::covering(*p.n) : SeriesBounds{2, 3, 2};
        auto gs = main_series(p, b);
        auto back = genseries_from_json(nlohmann::json::parse(to_json(gs).dump()));
        CHECK(same_series(gs, back));
        CHECK(back.params == gs.params);
        CHECK(back.bounds == gs.bounds);
    }
}

TEST_CASE("same_series_detects_a_changed_coefficient") {
    auto a = main_series({1, 1, 1, 4}, SeriesBounds::covering(4));
    auto j = to_json(a);
    auto b = main_series({1, 1, 1, 5}, SeriesBounds::covering(4));
    CHECK_FALSE(same_series(a, b));
    CHECK(same_series(a, genseries_from_json(j)));
}

TEST_CASE("mpoly_and_schur_json_round_trip") {
    auto p = parse_mpoly("1-1/2*c1*z+c2^3");
    CHECK(mpoly_from_json(to_json(p)) == p);
    auto g = ring(2, 5);
    auto x = S(g, {2, 1}, Rational(-7, 3)) + S(g, {3});
    CHECK(schurcombo_from_json(to_json(x), g) == x);
}

TEST_CASE("cauchy_identity_small") {
    CHECK(cauchy_wedge(1, 1, std::nullopt, 4).agree());
    CHECK(cauchy_wedge(1, 0, std::nullopt, 4).agree());
    CHECK(cauchy_wedge(1, 1, 2, 4).agree());
    CHECK(cauchy_wedge(2, 2, 5, 3).agree());
}

TEST_CASE("contraction_identity_small") {
    CHECK(contraction_det(1, 4, 5).agree());
    CHECK(contraction_det(2, std::nullopt, 4).agree());
    CHECK(contraction_det(0, 4, 3).agree());
    CHECK(contraction_det(2, 5, 4).agree());
}

TEST_CASE("extracted_coefficients_are_homogeneous") {
    const int n = 5;
    auto gs = main_series({2, 2, 1, n}, SeriesBounds::covering(n));
    for (const auto& e : coefficient_table(gs)) {
        if (e.value.is_zero()) continue;
        int I = 0, J = 0;
        for (int i : e.I) I += i;
        for (int j : e.J) J += j;
        // |lambda| + |I| - |J| + C(r,2) - C(m,2) with r = 2, m = 3.
        CHECK(e.value.homogeneous_degree() == e.lambda.weight() + I - J + 1 - 3);
    }
}
