#pragma once

#include "permpat/rational.hpp"

#include <string>
#include <vector>

namespace permpat {

// Truncated formal power series over the exact rationals. A value knows its
// own truncation order; every operation computes the largest order it can
// honestly certify, so coefficients beyond it are never fabricated.
class Series {
public:
    Series() = default;
    explicit Series(int order) : order_(order), c_(order + 1) {}
    Series(int order, std::vector<Rational> coeffs);

    static Series zero(int order) { return Series(order); }
    static Series constant(const Rational& v, int order);
    static Series x(int order);  // the variable itself
    // c * x^k
    static Series monomial(const Rational& c, int k, int order);

    int order() const { return order_; }
    // index of first nonzero coefficient; order()+1 when identically zero
    int valuation() const;
    const Rational& coeff(int n) const;
    Rational& coeff(int n) { return c_[n]; }
    const std::vector<Rational>& coeffs() const { return c_; }

    Series truncated(int new_order) const;
    bool is_zero() const;
    std::string to_string() const;

private:
    int order_ = -1;  // -1: empty/invalid
    std::vector<Rational> c_;
};

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator-(const Series& a);
Series operator*(const Series& a, const Series& b);
Series operator*(const Rational& s, const Series& a);
// Requires val(b) <= val(a) and exact divisibility through the valuation shift.
Series operator/(const Series& a, const Series& b);
bool operator==(const Series& a, const Series& b);

Series ps_add(const Series& a, const Series& b);
Series ps_mul(const Series& a, const Series& b);
Series ps_div(const Series& a, const Series& b);
// Square root. The constant term must be 1 after factoring out an even power
// of the variable; otherwise throws.
Series ps_sqrt(const Series& a);
// f(g) with val(g) >= 1.
Series ps_compose(const Series& f, const Series& g);
Series ps_derivative(const Series& a);
// multiply by x^k (k >= 0), or divide exactly by x^(-k) (k < 0)
Series ps_shift(const Series& a, int k);
Series ps_pow(const Series& a, unsigned e);
// coefficient-wise equality on the common certified prefix
bool agree_to_order(const Series& a, const Series& b, int order);

// Univariate series in z whose coefficients are polynomials in a marker
// variable u (used for statistics-tracking generating functions).
class UPoly {
public:
    UPoly() : c_{} {}
    UPoly(Rational r) { if (!r.is_zero()) c_.push_back(std::move(r)); }
    static UPoly var();  // u
    static UPoly monomial(const Rational& c, int k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(int k) const;
    bool is_zero() const { return c_.empty(); }

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    bool operator==(const UPoly& o) const { return c_ == o.c_; }

    Rational eval(const Rational& u) const;
    UPoly derivative() const;
    // coefficient reversal within degree n: u^k -> u^(n-k); requires degree <= n
    UPoly reversed(int n) const;
    std::string to_string() const;

private:
    std::vector<Rational> c_;  // c_[k] multiplies u^k; no trailing zeros
    void trim();
};

class PolySeries {
public:
    PolySeries() = default;
    explicit PolySeries(int order) : order_(order), c_(order + 1) {}

    static PolySeries constant(const UPoly& p, int order);
    static PolySeries z(int order);

    int order() const { return order_; }
    const UPoly& coeff(int n) const { return c_[n]; }
    UPoly& coeff(int n) { return c_[n]; }

    PolySeries operator+(const PolySeries& o) const;
    PolySeries operator-(const PolySeries& o) const;
    PolySeries operator*(const PolySeries& o) const;
    // divisor's z-constant term must be a nonzero rational constant
    PolySeries operator/(const PolySeries& o) const;

    Series at_u(const Rational& u) const;
    PolySeries d_du() const;

private:
    int order_ = -1;
    std::vector<UPoly> c_;
};

// Bivariate truncated series in (u, v), truncated by total degree.
class Bivar {
public:
    Bivar() = default;
    explicit Bivar(int total_degree);

    static Bivar constant(const Rational& r, int total_degree);
    static Bivar u(int total_degree);
    static Bivar v(int total_degree);

    int total_degree() const { return deg_; }
    const Rational& coeff(int i, int j) const;  // u^i v^j, i + j <= deg
    Rational& coeff(int i, int j);

    Bivar operator+(const Bivar& o) const;
    Bivar operator-(const Bivar& o) const;
    Bivar operator*(const Bivar& o) const;
    Bivar operator/(const Bivar& o) const;  // nonzero constant term
    friend Bivar bv_sqrt(const Bivar& a);   // constant term 1

    // substitute univariate series for u and v
    Series substitute(const Series& su, const Series& sv, int order) const;
    std::string to_string() const;

private:
    int deg_ = -1;
    std::vector<std::vector<Rational>> c_;  // c_[i][j], i + j <= deg_
};

} // namespace permpat
