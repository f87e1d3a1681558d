#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bfc/partition.hpp"

using namespace bfc;

namespace {

long binom(int n, int k) {
    long b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

std::vector<std::string> names(const std::vector<Partition>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(p.to_string());
    return out;
}

}  // namespace

TEST_CASE("partition_parse_and_print") {
    CHECK(Partition::parse("[2,1]") == Partition{2, 1});
    CHECK(Partition::parse("[]").empty());
    CHECK(Partition::parse("[3, 1, 0, 0]").to_string() == "[3,1]");
    CHECK(Partition{2, 2}.weight() == 4);
    CHECK(Partition{2}.padded(3) == std::vector<int>{2, 0, 0});
    CHECK(Partition{2, 1}[5] == 0);
}

TEST_CASE("partition_rejects_bad_input") {
    CHECK_THROWS_AS(Partition::parse("[1,2]"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("[-1]"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("2,1"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("[a]"), std::invalid_argument);
}

TEST_CASE("enumerate_two_by_two_box") {
    CHECK(names(enumerate_partitions({2, 2})) ==
          std::vector<std::string>{"[]", "[1]", "[2]", "[1,1]", "[2,1]", "[2,2]"});
}

TEST_CASE("enumerate_degenerate_boxes") {
    CHECK(names(enumerate_partitions({0, 3})) == std::vector<std::string>{"[]"});
    CHECK(names(enumerate_partitions({3, 0})) == std::vector<std::string>{"[]"});
    CHECK(enumerate_partitions({1, 4}).size() == 5);
}

TEST_CASE("enumerate_counts_are_binomial") {
    for (int n = 0; n <= 8; ++n) {
        for (int r = 0; r <= n; ++r) {
            CAPTURE(n);
            CAPTURE(r);
            CHECK(static_cast<long>(enumerate_partitions({r, n - r}).size()) == binom(n, r));
        }
    }
}

TEST_CASE("enumerate_is_sorted_and_inside_the_box") {
    auto ps = enumerate_partitions({3, 3});
    for (std::size_t i = 0; i + 1 < ps.size(); ++i) CHECK(partition_order(ps[i], ps[i + 1]));
    for (const auto& p : ps) CHECK(RectBound{3, 3}.contains(p));
}

TEST_CASE("enumerate_by_weight_lists_descending") {
    CHECK(names(enumerate_by_weight(2, 3)) == std::vector<std::string>{"[3]", "[2,1]"});
    CHECK(names(enumerate_by_weight(3, 3)) == std::vector<std::string>{"[3]", "[2,1]", "[1,1,1]"});
    CHECK(names(enumerate_by_weight(0, 0)) == std::vector<std::string>{"[]"});
    CHECK(enumerate_by_weight(0, 2).empty());
}

TEST_CASE("unbounded_width_is_rejected_for_enumeration") {
    CHECK_THROWS(enumerate_partitions({2, std::nullopt}));
    CHECK(RectBound{2, std::nullopt}.contains(Partition{9, 4}));
    CHECK_FALSE(RectBound{2, std::nullopt}.contains(Partition{1, 1, 1}));
}
