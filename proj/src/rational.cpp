#include "bfc/rational.hpp"

#include <stdexcept>

namespace bfc {

Rational::Rational(long num, long den) {
    if (den == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
    if (s.empty()) {
        throw std::invalid_argument("Rational::parse: empty string");
    }
    if (s.front() == '+') s.erase(s.begin());
    mpq_class v;
    if (v.set_str(s, 10) != 0) {
        throw std::invalid_argument("Rational::parse: malformed rational '" + std::string(text) + "'");
    }
    if (v.get_den() == 0) {
        throw std::domain_error("Rational::parse: zero denominator");
    }
    return Rational(std::move(v));
}

std::string Rational::to_string() const {
    if (value_.get_den() == 1) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    value_ /= o.value_;
    return *this;
}

}  // namespace bfc
