#pragma once

#include <string>
#include <vector>

#include "kwall/rational.hpp"

namespace kwall {

/// Univariate polynomial with rational coefficients, stored constant-first
/// with no trailing zero coefficients (the zero polynomial is empty).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

    Rational operator()(const Rational& x) const {
        Rational acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
        if (p.is_zero() || q.is_zero()) return {};
        std::vector<Rational> out(p.coeffs_.size() + q.coeffs_.size() - 1);
        for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < q.coeffs_.size(); ++j) out[i + j] += p.coeffs_[i] * q.coeffs_[j];
        return Polynomial(std::move(out));
    }

    friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
        std::vector<Rational> out(std::max(p.coeffs_.size(), q.coeffs_.size()));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.coefficient(i) + q.coefficient(i);
        return Polynomial(std::move(out));
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Human-readable form in the variable `var`, highest degree first.
    std::string str(const std::string& var = "m") const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const Rational& c = coeffs_[static_cast<std::size_t>(i)];
            if (c.is_zero()) continue;
            Rational mag = abs(c);
            if (!out.empty()) out += c.sign() < 0 ? " - " : " + ";
            else if (c.sign() < 0) out += "-";
            const bool unit = mag == Rational(1);
            if (i == 0 || !unit) out += mag.is_integer() ? mag.str() : "(" + mag.str() + ")";
            if (i >= 1) out += var;
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

}  // namespace kwall
