#ifndef TURAN_RATIONAL_HPP
#define TURAN_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace turan {

// Exact fraction on 64-bit numerator/denominator. Always normalized:
// denominator > 0, gcd(|num|, den) = 1. Intermediate products go through
// __int128 and overflow of the reduced result throws.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : num_(value), den_(1) {}
    Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator+(const Rational& o) const {
        return from128(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return from128(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return from128(i128(num_) * o.num_, i128(den_) * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        return from128(i128(num_) * o.den_, i128(den_) * o.num_);
    }
    Rational operator-() const { return Rational(-num_, den_); }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return i128(num_) * o.den_ < i128(o.num_) * den_; }
    bool operator<=(const Rational& o) const { return i128(num_) * o.den_ <= i128(o.num_) * den_; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // Canonical "num/den" form, e.g. "18/5", "3/1", "-2/7".
    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    // Parses "a/b" or "a". Throws std::invalid_argument on malformed input.
    static Rational parse(const std::string& text) {
        auto slash = text.find('/');
        try {
            if (slash == std::string::npos) return Rational(std::stoll(text));
            std::int64_t n = std::stoll(text.substr(0, slash));
            std::int64_t d = std::stoll(text.substr(slash + 1));
            return Rational(n, d);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Rational: cannot parse '" + text + "'");
        } catch (const std::out_of_range&) {
            throw std::overflow_error("Rational: value out of range in '" + text + "'");
        }
    }

private:
    using i128 = __int128;

    void assign(std::int64_t num, std::int64_t den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        num_ = num;
        den_ = den;
    }

    static Rational from128(i128 num, i128 den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        i128 a = num < 0 ? -num : num;
        i128 g = gcd128(a, den);
        if (g > 1) { num /= g; den /= g; }
        constexpr i128 lo = INT64_MIN, hi = INT64_MAX;
        if (num < lo || num > hi || den > hi)
            throw std::overflow_error("Rational: result exceeds 64-bit range");
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) { i128 t = a % b; a = b; b = t; }
        return a;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace turan

#endif
