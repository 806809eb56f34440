#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "permpat/series.hpp"

using namespace permpat;

namespace {

Series poly(std::initializer_list<long long> coeffs, int order) {
    Series s(order);
    int i = 0;
    for (long long c : coeffs) s.coeff(i++) = Rational(c);
    return s;
}

// independent binomial-series oracle for (1+c x)^(1/2)
Rational sqrt_coeff_oracle(long long c, int n) {
    // binomial(1/2, n) * c^n
    Rational coeff(1);
    for (int i = 0; i < n; ++i) coeff *= (Rational(1, 2) - Rational(i)) / Rational(i + 1);
    Rational pw(1);
    for (int i = 0; i < n; ++i) pw *= Rational(c);
    return coeff * pw;
}

} // namespace

TEST_CASE("sqrt against the binomial expansion") {
    const int N = 12;
    Series s = ps_sqrt(poly({1, -4}, N));
    for (int n = 0; n <= N; ++n) CHECK(s.coeff(n) == sqrt_coeff_oracle(-4, n));
    // frozen prefix: sqrt(1-4z) = 1 - 2z - 2z^2 - 4z^3 - 10z^4 - ...
    CHECK(s.coeff(0) == Rational(1));
    CHECK(s.coeff(1) == Rational(-2));
    CHECK(s.coeff(2) == Rational(-2));
    CHECK(s.coeff(3) == Rational(-4));
    CHECK(s.coeff(4) == Rational(-10));
    CHECK((s * s) == poly({1, -4}, N));
}

TEST_CASE("sqrt with even valuation") {
    const int N = 10;
    // x^2 (1 - 4x): sqrt = x sqrt(1-4x)
    Series inner = ps_shift(poly({1, -4}, N), 2).truncated(N);
    Series r = ps_sqrt(inner);
    Series expect = ps_shift(ps_sqrt(poly({1, -4}, N)), 1);
    CHECK(agree_to_order(r, expect, std::min(r.order(), expect.order())));
    CHECK_THROWS(ps_sqrt(poly({2}, 4)));
    CHECK_THROWS(ps_sqrt(Series::x(4)));
}

TEST_CASE("division and valuation shifts") {
    const int N = 10;
    Series geom = poly({1}, N) / poly({1, -1}, N);
    for (int n = 0; n <= N; ++n) CHECK(geom.coeff(n) == Rational(1));
    // (x^2 + x^3) / x = x + x^2
    Series a(N);
    a.coeff(2) = Rational(1);
    a.coeff(3) = Rational(1);
    Series q = a / Series::x(N);
    CHECK(q.coeff(1) == Rational(1));
    CHECK(q.coeff(2) == Rational(1));
    CHECK(q.coeff(3) == Rational(0));
    CHECK_THROWS(poly({1}, N) / Series::x(N));
    CHECK((poly({3, 1, 4}, N) * poly({1}, N)) == poly({3, 1, 4}, N));
}

TEST_CASE("compose and derivative") {
    const int N = 10;
    // C = (1 - sqrt(1-4x))/(2x) satisfies C = 1 + x C^2
    Series c = ps_shift(poly({1}, N + 2) - ps_sqrt(poly({1, -4}, N + 2)), -1) / poly({2}, N + 1);
    Series rhs = poly({1}, N) + (Series::x(N) * c.truncated(N) * c.truncated(N));
    CHECK(agree_to_order(c, rhs, N));
    // compose f(g) with f = 1/(1-x), g = x + x^2: coefficients count
    // compositions into parts of size 1 or 2 (Fibonacci)
    Series f = poly({1}, N) / poly({1, -1}, N);
    Series g = poly({0, 1, 1}, N);
    Series comp = ps_compose(f, g);
    long long fib[11] = {1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89};
    for (int n = 0; n <= N; ++n) CHECK(comp.coeff(n) == Rational(fib[n]));
    Series d = ps_derivative(poly({7, 0, 5, 2}, N));
    CHECK(d.coeff(0) == Rational(0));
    CHECK(d.coeff(1) == Rational(10));
    CHECK(d.coeff(2) == Rational(6));
}

TEST_CASE("series honesty about truncation orders") {
    const Series a = poly({0, 1, 1}, 8);
    Series b = poly({1}, 4);
    CHECK((a * b).order() == 4);
    CHECK((a / Series::x(8)).order() == 7);
    CHECK_THROWS(a.truncated(9));
    CHECK_THROWS((void)a.coeff(9));
    // dividing a unit by the variable must refuse
    CHECK_THROWS(poly({1, 1}, 8) / Series::x(8));
}

TEST_CASE("polynomial-coefficient series") {
    const int N = 8;
    // f = 1 / (1 - z(1+u)): coefficient of z^n is (1+u)^n
    PolySeries one = PolySeries::constant(UPoly(Rational(1)), N);
    PolySeries zu(N);
    zu.coeff(1) = UPoly(Rational(1)) + UPoly::var();
    PolySeries f = one / (one - zu);
    for (int n = 0; n <= N; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(f.coeff(n).coeff(k) == Rational(BigInt::binomial(n, k)));
    // d/du at u=1 gives n 2^{n-1}
    Series d = f.d_du().at_u(Rational(1));
    for (int n = 1; n <= N; ++n)
        CHECK(d.coeff(n) == Rational(n) * Rational(BigInt::pow(2, n - 1)));
    CHECK(f.at_u(Rational(0)).coeff(5) == Rational(1));
}

TEST_CASE("upoly reversal") {
    UPoly p = UPoly::monomial(Rational(3), 0) + UPoly::monomial(Rational(5), 2);
    UPoly r = p.reversed(3);  // 3 + 5u^2 -> 3u^3 + 5u
    CHECK(r.coeff(3) == Rational(3));
    CHECK(r.coeff(1) == Rational(5));
    CHECK(r.coeff(0) == Rational(0));
}

TEST_CASE("bivariate ring") {
    const int D = 10;
    Bivar u = Bivar::u(D), v = Bivar::v(D);
    Bivar one = Bivar::constant(Rational(1), D);
    // 1/(1-u-v): coefficient of u^i v^j is C(i+j, i)
    Bivar f = one / (one - u - v);
    for (int i = 0; i <= D; ++i)
        for (int j = 0; i + j <= D; ++j)
            CHECK(f.coeff(i, j) == Rational(BigInt::binomial(i + j, i)));
    // sqrt((1+u+v)^2) = 1+u+v
    Bivar g = one + u + v;
    CHECK((bv_sqrt(g * g) - g).to_string() == "0");
    // substitute u = x, v = x^2 into u*v + v: x^3 + x^2
    Bivar h = u * v + v;
    Series s = h.substitute(Series::x(8), Series::monomial(Rational(1), 2, 8), 8);
    CHECK(s.coeff(2) == Rational(1));
    CHECK(s.coeff(3) == Rational(1));
    CHECK(s.coeff(4) == Rational(0));
}
