#ifndef BFC_PARTITION_HPP
#define BFC_PARTITION_HPP

#include <optional>
#include <string>
#include <vector>

namespace bfc {

/// Weakly decreasing tuple of nonnegative integers, stored without trailing zeros.
class Partition {
public:
    Partition() = default;
    /// Accepts padded input; throws std::invalid_argument if not weakly decreasing and nonnegative.
    Partition(std::vector<int> parts);  // NOLINT(google-explicit-constructor)
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
    [[nodiscard]] int length() const { return static_cast<int>(parts_.size()); }
    [[nodiscard]] int weight() const;
    /// i-th part (0-based), zero beyond the length.
    [[nodiscard]] int operator[](int i) const { return i < length() ? parts_[i] : 0; }
    [[nodiscard]] bool empty() const { return parts_.empty(); }
    /// Padded to exactly r entries; requires length() <= r.
    [[nodiscard]] std::vector<int> padded(int r) const;

    [[nodiscard]] std::string to_string() const;  // "[2,1]", "[]"
    static Partition parse(const std::string& text);

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// r rows and an optional width (absent means unbounded).
struct RectBound {
    int rows = 0;
    std::optional<int> width;

    [[nodiscard]] bool contains(const Partition& p) const {
        return p.length() <= rows && (!width || p[0] <= *width);
    }
};

/// Order used everywhere: weight ascending, then lexicographically descending parts.
bool partition_order(const Partition& a, const Partition& b);

/// Every partition in the rectangle, sorted by partition_order. Requires a finite width.
std::vector<Partition> enumerate_partitions(const RectBound& bound);

/// Partitions of `weight` with at most r parts, lexicographically descending.
std::vector<Partition> enumerate_by_weight(int r, int weight);

}  // namespace bfc

#endif  // BFC_PARTITION_HPP
