#ifndef BFC_RATIONAL_HPP
#define BFC_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bfc {

/// Exact rational number in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(mpq_class value);

    /// Accepts "p", "-p" or "p/q".
    static Rational parse(std::string_view text);

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_one() const { return value_ == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

    [[nodiscard]] std::string numerator() const { return value_.get_num().get_str(); }
    [[nodiscard]] std::string denominator() const { return value_.get_den().get_str(); }

    /// "p/q", with "/q" omitted when q == 1.
    [[nodiscard]] std::string to_string() const;

    [[nodiscard]] const mpq_class& raw() const { return value_; }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) {
        return os << q.to_string();
    }

private:
    mpq_class value_{0};
};

}  // namespace bfc

#endif  // BFC_RATIONAL_HPP
