#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nckit {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Univariate polynomial in a formal parameter t with exact rational
/// coefficients. Constant polynomials double as plain scalars, so the
/// whole symbolic layer is written over this one coefficient type.
class RatPoly {
public:
    RatPoly() = default;
    RatPoly(const Rational& c) { if (c != 0) coeffs_ = {c}; }
    RatPoly(long c) : RatPoly(Rational(c)) {}
    RatPoly(int c) : RatPoly(Rational(c)) {}

    static RatPoly t() { return RatPoly(std::vector<Rational>{0, 1}); }
    static RatPoly one_minus_t() { return RatPoly(std::vector<Rational>{1, -1}); }

    explicit RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    Rational constant_value() const {
        if (!is_constant()) throw std::logic_error("RatPoly: not a constant");
        return coeffs_.empty() ? Rational(0) : coeffs_[0];
    }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational eval(const Rational& x) const {
        Rational r = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
        return r;
    }

    double eval(double x) const {
        double r = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            r = r * x + static_cast<double>(*it);
        return r;
    }

    RatPoly operator+(const RatPoly& o) const {
        std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
        for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
        for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
        return RatPoly(std::move(c));
    }
    RatPoly operator-(const RatPoly& o) const { return *this + (o * Rational(-1)); }
    RatPoly operator-() const { return *this * Rational(-1); }

    RatPoly operator*(const RatPoly& o) const {
        if (is_zero() || o.is_zero()) return RatPoly();
        std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
        for (size_t i = 0; i < coeffs_.size(); ++i)
            for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
        return RatPoly(std::move(c));
    }
    RatPoly operator*(const Rational& s) const {
        if (s == 0) return RatPoly();
        std::vector<Rational> c = coeffs_;
        for (auto& x : c) x *= s;
        return RatPoly(std::move(c));
    }

    RatPoly& operator+=(const RatPoly& o) { *this = *this + o; return *this; }
    RatPoly& operator-=(const RatPoly& o) { *this = *this - o; return *this; }
    RatPoly& operator*=(const RatPoly& o) { *this = *this * o; return *this; }

    bool operator==(const RatPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const RatPoly& o) const { return !(*this == o); }

    /// True if the polynomial is provably nonnegative on [0,1]: all Bernstein
    /// coefficients nonnegative at some degree elevation. Sound, not complete.
    bool nonneg_on_unit_interval(int max_elevation = 16) const {
        if (is_zero()) return true;
        int d = degree();
        for (int m = d; m <= d + max_elevation; ++m) {
            if (bernstein_nonneg(m)) return true;
        }
        return false;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            if (!s.empty()) s += " + ";
            s += coeffs_[i].str();
            if (i == 1) s += "*t";
            else if (i > 1) s += "*t^" + std::to_string(i);
        }
        return s;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    bool bernstein_nonneg(int m) const {
        // b_i = sum_j a_j * C(i,j)/C(m,j)
        for (int i = 0; i <= m; ++i) {
            Rational b = 0;
            for (int j = 0; j <= std::min<int>(i, degree()); ++j)
                b += coeffs_[j] * Rational(binom(i, j), binom(m, j));
            if (b < 0) return false;
        }
        return true;
    }

    static BigInt binom(int n, int k) {
        if (k < 0 || k > n) return 0;
        BigInt r = 1;
        for (int i = 0; i < k; ++i) { r *= (n - i); r /= (i + 1); }
        return r;
    }

    std::vector<Rational> coeffs_;  // coeffs_[i] is the coefficient of t^i
};

}  // namespace nckit
