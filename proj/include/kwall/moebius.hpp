#pragma once

#include <array>
#include <string>

#include "kwall/rational.hpp"

namespace kwall {

/// Fractional-linear map x -> (a x + b) / (c x + d) with integer coefficients.
///
/// Construction normalizes to gcd(a, b, c, d) = 1 with the first nonzero
/// coefficient positive, so two maps describing the same function compare
/// equal. A zero determinant is rejected.
class MoebiusMap {
public:
    MoebiusMap(Integer a, Integer b, Integer c, Integer d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
        if (determinant() == 0)
            throw Error(ErrorCode::invalid_argument, "Moebius map with zero determinant: " + str());
        normalize();
    }

    static MoebiusMap identity() { return MoebiusMap(1, 0, 0, 1); }

    const Integer& a() const { return a_; }
    const Integer& b() const { return b_; }
    const Integer& c() const { return c_; }
    const Integer& d() const { return d_; }
    std::array<Integer, 4> coefficients() const { return {a_, b_, c_, d_}; }

    Integer determinant() const { return a_ * d_ - b_ * c_; }

    Rational operator()(const Rational& x) const { return eval(x); }

    Rational eval(const Rational& x) const {
        // (a p/q + b) / (c p/q + d) = (a p + b q) / (c p + d q)
        const Integer& p = x.numerator();
        const Integer& q = x.denominator();
        Integer den = c_ * p + d_ * q;
        if (den == 0) throw Error(ErrorCode::pole, x.str() + " under " + str());
        return Rational(a_ * p + b_ * q, std::move(den));
    }

    MoebiusMap inverse() const { return MoebiusMap(d_, -b_, -c_, a_); }

    /// (f.compose(g))(x) = f(g(x)).
    MoebiusMap compose(const MoebiusMap& g) const {
        Integer na = a_ * g.a_ + b_ * g.c_;
        Integer nb = a_ * g.b_ + b_ * g.d_;
        Integer nc = c_ * g.a_ + d_ * g.c_;
        Integer nd = c_ * g.b_ + d_ * g.d_;
        if (na * nd - nb * nc == 0)
            throw Error(ErrorCode::degenerate_composite, str() + " o " + g.str());
        return MoebiusMap(std::move(na), std::move(nb), std::move(nc), std::move(nd));
    }

    friend bool operator==(const MoebiusMap&, const MoebiusMap&) = default;

    std::string str() const {
        return "(" + a_.str() + "x + " + b_.str() + ")/(" + c_.str() + "x + " + d_.str() + ")";
    }

private:
    void normalize() {
        Integer g = boost::multiprecision::gcd(boost::multiprecision::gcd(a_, b_),
                                               boost::multiprecision::gcd(c_, d_));
        if (g < 0) g = -g;
        a_ /= g;
        b_ /= g;
        c_ /= g;
        d_ /= g;
        const Integer& lead = a_ != 0 ? a_ : (b_ != 0 ? b_ : c_);
        if (lead < 0) {
            a_ = -a_;
            b_ = -b_;
            c_ = -c_;
            d_ = -d_;
        }
    }

    Integer a_, b_, c_, d_;
};

inline Rational moebius_eval(const MoebiusMap& map, const Rational& x) { return map.eval(x); }
inline MoebiusMap moebius_invert(const MoebiusMap& map) { return map.inverse(); }
inline MoebiusMap moebius_compose(const MoebiusMap& f, const MoebiusMap& g) { return f.compose(g); }

}  // namespace kwall
