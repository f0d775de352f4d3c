#pragma once

#include <string>
#include <vector>

#include "kwall/polynomial.hpp"
#include "kwall/wallsets.hpp"

namespace kwall {

/// Dimension, anticanonical volume (-K)^n and Hilbert polynomial chi(-mK).
struct FanoNumerics {
    unsigned dimension = 0;
    Rational volume = 1;
    Polynomial hilbert = Polynomial({Rational(1)});

    static FanoNumerics of(const FamilyRecord& rec) { return {rec.dimension, rec.volume, rec.hilbert}; }
    static FanoNumerics point() { return {}; }
};

struct DimensionVolume {
    unsigned dimension = 0;
    Rational volume;
    friend bool operator==(const DimensionVolume&, const DimensionVolume&) = default;
};

/// (-K_{X1 x X2})^{n1+n2} = C(n1+n2, n1) V1 V2.
inline DimensionVolume product_volume(const FanoNumerics& a, const FanoNumerics& b) {
    const unsigned n = a.dimension + b.dimension;
    return {n, Rational(binomial(n, a.dimension)) * a.volume * b.volume};
}

/// Kuenneth: chi_{X1 x X2}(m) = chi_1(m) chi_2(m).
inline Polynomial product_hilbert(const FanoNumerics& a, const FanoNumerics& b) { return a.hilbert * b.hilbert; }

inline FanoNumerics product_numerics(const FanoNumerics& a, const FanoNumerics& b) {
    const auto dv = product_volume(a, b);
    return {dv.dimension, dv.volume, product_hilbert(a, b)};
}

/// Violated invariants; empty means the numerics are consistent.
inline std::vector<std::string> consistency_check(const FanoNumerics& x) {
    std::vector<std::string> out;
    const Rational at_zero = x.hilbert(Rational(0));
    if (at_zero != Rational(1)) out.push_back("chi(0) = " + at_zero.str() + ", expected 1");
    if (x.hilbert.degree() != static_cast<int>(x.dimension))
        out.push_back("deg chi = " + std::to_string(x.hilbert.degree()) + ", expected " + std::to_string(x.dimension));
    const Rational top = Rational(factorial(x.dimension)) * x.hilbert.coefficient(x.dimension);
    if (top != x.volume) out.push_back("n! * lead(chi) = " + top.str() + ", expected volume " + x.volume.str());
    return out;
}

}  // namespace kwall
