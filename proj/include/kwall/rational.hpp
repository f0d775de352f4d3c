#pragma once

/**
 * @file rational.hpp
 * @brief Exact rationals over arbitrary-precision integers.
 *
 * Values are kept in canonical form at all times: the denominator is
 * positive and coprime to the numerator, and zero is 0/1. Equality is
 * therefore plain field equality, which is what lets rationals be used
 * as set and map keys throughout the library.
 */

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "kwall/error.hpp"

namespace kwall {

using Integer = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(Integer n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
    Rational(long long n, long long d) : num_(n), den_(d) { reduce(); }

    /// Parses "p/q" or "p" with optional leading sign; whitespace is not accepted.
    static Rational parse(std::string_view text) {
        auto digits_ok = [](std::string_view s) {
            if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
            if (s.empty()) return false;
            for (char ch : s)
                if (ch < '0' || ch > '9') return false;
            return true;
        };
        auto to_integer = [](std::string_view s) {
            if (!s.empty() && s.front() == '+') s.remove_prefix(1);
            return Integer(std::string(s));
        };
        const auto slash = text.find('/');
        if (slash == std::string_view::npos) {
            if (!digits_ok(text)) throw Error(ErrorCode::parse, "not a rational: '" + std::string(text) + "'");
            return Rational(to_integer(text));
        }
        const auto num = text.substr(0, slash);
        const auto den = text.substr(slash + 1);
        if (!digits_ok(num) || !digits_ok(den) || den.front() == '-' || den.front() == '+')
            throw Error(ErrorCode::parse, "not a rational: '" + std::string(text) + "'");
        Integer d = to_integer(den);
        if (d == 0) throw Error(ErrorCode::parse, "zero denominator in '" + std::string(text) + "'");
        return Rational(to_integer(num), std::move(d));
    }

    const Integer& numerator() const { return num_; }
    const Integer& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_.sign(); }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw Error(ErrorCode::invalid_argument, "division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const Integer lhs = a.num_ * b.den_;
        const Integer rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// "p/q", with "/q" omitted when q = 1.
    std::string str() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

    /// Decimal rendering with exactly `digits` fractional digits, rounded
    /// half away from zero using integer arithmetic only.
    std::string to_fixed(unsigned digits) const {
        Integer scale = 1;
        for (unsigned i = 0; i < digits; ++i) scale *= 10;
        Integer mag = abs(num_) * scale;
        Integer q = mag / den_;
        const Integer rem = mag % den_;
        if (2 * rem >= den_) q += 1;
        const bool negative = num_ < 0 && q != 0;
        std::string int_part = Integer(q / scale).str();
        std::string frac = Integer(q % scale).str();
        if (frac.size() < digits) frac.insert(0, digits - frac.size(), '0');
        std::string out = negative ? "-" : "";
        out += int_part;
        if (digits > 0) out += "." + frac;
        return out;
    }

private:
    void reduce() {
        if (den_ == 0) throw Error(ErrorCode::invalid_argument, "zero denominator");
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const Integer g = boost::multiprecision::gcd(num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Integer num_;
    Integer den_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Integer result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

inline Integer factorial(unsigned n) {
    Integer result = 1;
    for (unsigned i = 2; i <= n; ++i) result *= i;
    return result;
}

}  // namespace kwall

template <>
struct std::hash<kwall::Rational> {
    std::size_t operator()(const kwall::Rational& r) const noexcept {
        return std::hash<std::string>{}(r.str());
    }
};
