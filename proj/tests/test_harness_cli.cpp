#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "bfc/harness.hpp"

using namespace bfc;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run bfc_run(const std::string& args) {
    std::string cmd = std::string("\"") + BFC_CLI_PATH + "\" " + args + " 2>&1";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

bool has(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("act_matrix_unit_on_c1_cubed") {
    auto r = bfc_run("act --r 1 --n 6 --word \"X:2 D:3\" --schur \"[3]\"");
    CHECK(r.status == 0);
    CHECK(r.out == "oracle: 1*S[2]\nseries: 1*S[2]\n");
}

TEST_CASE("act_matrix_unit_kills_c1_fourth") {
    auto r = bfc_run("act --r 1 --n 6 --word \"X:2 D:3\" --schur \"[4]\"");
    CHECK(r.status == 0);
    CHECK(r.out == "oracle: 0\nseries: 0\n");
}

TEST_CASE("act_identity_word") {
    auto r = bfc_run("act --r 2 --n 4 --word \"\" --schur \"[2,1]\"");
    CHECK(r.status == 0);
    CHECK(r.out == "oracle: 1*S[2,1]\nseries: 1*S[2,1]\n");
}

TEST_CASE("act_raw_word_and_infinite_n") {
    auto a = bfc_run("act --r 2 --n 5 --word \"D:2 X:2 X:0 D:1\" --schur \"[1,1]\"");
    CHECK(a.status == 0);
    CHECK_FALSE(has(a.out, "MISMATCH"));
    auto b = bfc_run("act --r 2 --n inf --word \"X:4 D:1\" --schur \"[2,1]\"");
    CHECK(b.status == 0);
    CHECK_FALSE(has(b.out, "MISMATCH"));
}

TEST_CASE("act_json_output") {
    auto r = bfc_run("--format json act --r 1 --n 6 --word \"X:2 D:3\" --schur \"[3]\"");
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["agree"] == true);
    CHECK(j["target_rank"] == 1);
    auto after = bfc_run("act --r 1 --n 6 --word \"X:2 D:3\" --schur \"[3]\" --format json");
    CHECK(after.status == 0);
    CHECK(nlohmann::json::parse(after.out) == j);
}

TEST_CASE("usage_errors_exit_two") {
    CHECK(bfc_run("act --r 1 --n 6 --word \"X:2\" --schur \"[1,2]\"").status == 2);
    CHECK(bfc_run("act --r 1 --n 6 --word \"Q:2\" --schur \"[1]\"").status == 2);
    CHECK(bfc_run("act --r 1 --n 6 --word \"X:7\" --schur \"[1]\"").status == 2);
    CHECK(bfc_run("act --r 2 --n 4 --word \"\" --schur \"[3]\"").status == 2);
    CHECK(bfc_run("").status == 2);
    CHECK(bfc_run("frobnicate").status == 2);
    CHECK(bfc_run("series --r 1 --h 1 --k 1 --n inf").status == 2);
    CHECK(bfc_run("series --r 1 --h 1 --k 1 --n zero").status == 2);
    CHECK(bfc_run("verify --max-n 1 --min-n 3").status == 2);
}

TEST_CASE("series_json_round_trip") {
    auto path = std::filesystem::temp_directory_path() / "bfc_series_round_trip.json";
    auto r = bfc_run("--format json series --r 2 --h 1 --k 1 --n 4 --out \"" + path.string() + "\"");
    REQUIRE(r.status == 0);
    std::ifstream f(path);
    auto back = genseries_from_json(nlohmann::json::parse(f));
    CHECK(same_series(back, main_series({2, 1, 1, 4}, SeriesBounds::covering(4))));
    std::filesystem::remove(path);
}

TEST_CASE("series_infinite_mode_round_trip") {
    auto r = bfc_run("series --r 1 --h 1 --k 1 --n inf --zdeg 2 --wdeg 3 --tdeg 2 --format json");
    REQUIRE(r.status == 0);
    auto back = genseries_from_json(nlohmann::json::parse(r.out));
    CHECK(same_series(back, main_series({1, 1, 1, std::nullopt}, {2, 3, 2})));
}

TEST_CASE("series_text_for_the_vacuum") {
    auto r = bfc_run("series --r 0 --h 1 --k 0 --n 4");
    CHECK(r.status == 0);
    CHECK(has(r.out, "z[2] w^-[] s[]: 1*S[2]"));
    CHECK(has(r.out, "z[3] w^-[] s[]: 1*S[3]"));
}

TEST_CASE("series_negative_target_rank_is_zero_with_a_note") {
    auto r = bfc_run("series --r 0 --h 0 --k 1 --n 4");
    CHECK(r.status == 0);
    CHECK(has(r.out, "0 (r+h-k is outside 0..n)"));
}

TEST_CASE("verify_small_sweep_is_fast_and_clean") {
    auto t0 = std::chrono::steady_clock::now();
    auto r = bfc_run("verify --max-n 2 --no-suites");
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(r.status == 0);
    CHECK(has(r.out, "0 mismatches"));
    CHECK(secs < 1.0);
}

TEST_CASE("verify_json_report") {
    auto r = bfc_run("--format json verify --max-n 3 --max-r 2 --no-suites --jobs 2");
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["mismatches"].empty());
    CHECK(j["cases"].get<long>() > 0);
}

TEST_CASE("verify_negative_control_reports_mismatches") {
    auto r = bfc_run("verify --max-n 3 --no-suites --as-printed");
    CHECK(r.status == 1);
    CHECK(has(r.out, "[as-printed]"));
    CHECK_FALSE(has(r.out, " 0 mismatches"));
    CHECK(has(r.out, "oracle"));
}

TEST_CASE("b24_report") {
    auto r = bfc_run("b24");
    CHECK(r.status == 0);
    CHECK(has(r.out, "oracle agreement: yes"));
    CHECK(has(r.out, "z^0 w^-0 s[1]: 1*S[1] | c1"));
    CHECK(has(r.out, "z^1 w^-1 s[]: 1*S[] | 1"));
}

TEST_CASE("b24_display_scalar_brackets") {
    auto rep = run_b24();
    CHECK(rep.oracle_agrees);
    for (const auto& row : rep.rows) {
        if (row.i == 0 && row.j == 0 && row.lambda == Partition{2}) {
            CHECK(row.status_schur == "match");
            CHECK(row.status_chern == "match");
        }
        if (row.i == 1 && row.j == 1 && row.lambda.empty()) CHECK(row.status_schur == "match");
    }
}
