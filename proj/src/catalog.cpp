#include "permpat/catalog.hpp"

#include <stdexcept>

namespace permpat {

namespace {

// All internal builders work at a padded order so valuation-shifting
// divisions still certify the caller's requested prefix.
constexpr int kPad = 6;

Series one(int N) { return Series::constant(Rational(1), N); }
Series X(int N) { return Series::x(N); }

// (1 + c1 x + c2 x^2 + ...) helpers
Series poly(std::initializer_list<long long> coeffs, int N) {
    Series s(N);
    int i = 0;
    for (long long c : coeffs) {
        if (i > N) break;
        s.coeff(i++) = Rational(c);
    }
    return s;
}

Series catalan(int N) {
    // C = (1 - sqrt(1-4x)) / (2x)
    int W = N + kPad;
    Series root = ps_sqrt(poly({1, -4}, W));
    return (ps_shift(one(W) - root, -1).truncated(W - 1) / poly({2}, W - 1)).truncated(N);
}

Series sqrt_1m4x(int N) { return ps_sqrt(poly({1, -4}, N)); }

// substitute x -> x^2 (order preserved)
Series at_x2(const Series& s, int N) {
    Series r(N);
    for (int i = 0; 2 * i <= N && i <= s.order(); ++i) r.coeff(2 * i) = s.coeff(i);
    return r;
}


Series num213_star(int N) {
    // x^3 C / (1-4x)^{3/2}
    int W = N + kPad;
    Series c = catalan(W);
    Series half32 = one(W) / (poly({1, -4}, W) * sqrt_1m4x(W));
    return (ps_shift(c, 3).truncated(W) * half32).truncated(N);
}

Series num213(int N) {
    int W = N + kPad;
    Series c = catalan(W);
    Series half32 = one(W) / (poly({1, -4}, W) * sqrt_1m4x(W));
    return (ps_shift(ps_pow(c, 3), 3).truncated(W) * half32).truncated(N);
}

Series num12_av123(int N) {
    int W = N + kPad;
    Series c = catalan(W);
    return (ps_shift(c * c, 2).truncated(W) / poly({1, -4}, W)).truncated(N);
}

Series num231(int N) {
    // Printed form in the source is off by a factor of -2; this is the
    // variant that matches the class data (and the linear relations):
    //   ((1-3z)/(1-4z)^2 - (1-z)/(1-4z)^{3/2}) / 2
    int W = N + kPad;
    Series t1 = poly({1, -3}, W) / ps_pow(poly({1, -4}, W), 2);
    Series t2 = poly({1, -1}, W) / (poly({1, -4}, W) * sqrt_1m4x(W));
    return (Rational(1, 2) * (t1 - t2)).truncated(N);
}

Series cat_choose3(int N) {
    // sum C(n,3) c_n x^n = x^3 C'''(x) / 6
    int W = N + 3;
    Series c = catalan(W);
    Series d3 = ps_derivative(ps_derivative(ps_derivative(c)));
    return Rational(1, 6) * ps_shift(d3, 3).truncated(N);
}

Series num321(int N) {
    // total 3-patterns minus the four known ones (132=213, 231=312)
    return cat_choose3(N) - Rational(2) * num213(N) - Rational(2) * num231(N);
}

Series av123_simples(int N) {
    // 2x^2 / (1 - x^2 + (1+x) sqrt(1-2x-3x^2)); the staircase iteration
    // f3 = x^2 / (1 - xy - x^2 y - x^2) evaluated at its fixed point
    int W = N + kPad;
    Series root = ps_sqrt(poly({1, -2, -3}, W));
    Series den = poly({1, 0, -1}, W) + poly({1, 1}, W) * root;
    return (poly({0, 0, 2}, W) / den).truncated(N);
}

Series motzkin_fixedpoint(int N) {
    // (1 - x - sqrt(1-2x-3x^2)) / (2x)
    int W = N + kPad;
    Series root = ps_sqrt(poly({1, -2, -3}, W));
    return (ps_shift(poly({1, -1}, W) - root, -1).truncated(W - 1) / poly({2}, W - 1)).truncated(N);
}

Series schroder_large(int N) {
    int W = N + kPad;
    Series root = ps_sqrt(poly({1, -6, 1}, W));
    return (Rational(1, 2) * (poly({1, -1}, W) - root)).truncated(N);
}

Series schroder_small(int N) {
    int W = N + kPad;
    Series root = ps_sqrt(poly({1, -6, 1}, W));
    return (Rational(1, 4) * (poly({1, 1}, W) - root)).truncated(N);
}

Series central_binomial_inv(int N) {
    // (1 - 4x^2 - sqrt(1-4x^2)) / (4x^2 - 2x): counts involutions avoiding 123
    int W = N + kPad;
    Series num = poly({1, 0, -4}, W) - ps_sqrt(poly({1, 0, -4}, W));
    Series den = poly({0, -2, 4}, W);
    return (ps_shift(num, -1).truncated(W - 1) / ps_shift(den, -1).truncated(W - 1)).truncated(N);
}

Series htso(int N) {
    // 2x^5 (1 + x^2 + r) / ((1+x^2)^2 (1 - 3x^2 + (1-2x^2) r)), r = sqrt(1-2x^2-3x^4)
    int W = N + kPad;
    Series r = ps_sqrt(poly({1, 0, -2, 0, -3}, W));
    Series num = poly({0, 0, 0, 0, 0, 2}, W) * (poly({1, 0, 1}, W) + r);
    Series den = ps_pow(poly({1, 0, 1}, W), 2) * (poly({1, 0, -3}, W) + poly({1, 0, -2}, W) * r);
    return (num / den).truncated(N);
}

Series htszero(int N) {
    // 2x^6 (1 + x^2 - r) / (2 - 2x^2 - 10x^4 - 6x^6 + (2 - 6x^4 - 4x^6) r)
    int W = N + kPad;
    Series r = ps_sqrt(poly({1, 0, -2, 0, -3}, W));
    Series num = poly({0, 0, 0, 0, 0, 0, 2}, W) * (poly({1, 0, 1}, W) - r);
    Series den = poly({2, 0, -2, 0, -10, 0, -6}, W) + poly({2, 0, 0, 0, -6, 0, -4}, W) * r;
    return (num / den).truncated(N);
}

Series htstwo(int N) {
    // x^4 (2 + 5x^2 + 3x^4 - (2+x^2) r) / (1 - x^2 - 5x^4 - 3x^6 + (1 + 2x^2 + x^4) r)
    int W = N + kPad;
    Series r = ps_sqrt(poly({1, 0, -2, 0, -3}, W));
    Series num = ps_shift(poly({2, 0, 5, 0, 3}, W) - poly({2, 0, 1}, W) * r, 4).truncated(W);
    Series den = poly({1, 0, -1, 0, -5, 0, -3}, W) + poly({1, 0, 2, 0, 1}, W) * r;
    return (num / den).truncated(N);
}

Series g_1342(int N) {
    // x (1 - 2x + x^2 + sqrt(1-6x^2+x^4)) / (2 (1 - 3x + x^2))
    int W = N + kPad;
    Series r = ps_sqrt(poly({1, 0, -6, 0, 1}, W));
    Series num = ps_shift(poly({1, -2, 1}, W) + r, 1).truncated(W);
    Series den = poly({2, -6, 2}, W);
    return (num / den).truncated(N);
}

Series no_bonds(int N) {
    // f(z, 0) = sum m! (z - 2z^2/(1+z))^m; each m contributes from order m on
    Series base = X(N) - (poly({0, 0, 2}, N) / poly({1, 1}, N));
    Series total = Series::zero(N);
    Series pw = one(N);
    Rational fact(1);
    for (int m = 0; m <= N; ++m) {
        if (m > 0) {
            pw = pw * base;
            fact *= Rational(m);
        }
        total = total + fact * pw;
    }
    return total;
}

Series simples_compose_check(int N) {
    // the simple-permutation series with every entry inflated by a
    // nonempty decreasing run; equals x (C(x) - 1)
    int W = N + kPad;
    Series inner = X(W) / poly({1, -1}, W);
    return ps_compose(av123_simples(W), inner).truncated(N);
}

// ---------------------------------------------------- bivariate helpers
// Everything below works in a := u^2, b := v^2, which keeps the simple
// involution forms inside the univariate ring once a and b are series in x.

struct SVars {
    Series a, b, r, D;
};

SVars make_svars(const Series& a, const Series& b) {
    int N = std::min(a.order(), b.order());
    Series ab = a * b;
    Series D = one(N) - Rational(6) * ab - Rational(4) * (ab * b) - Rational(4) * (a * ab) -
               Rational(3) * (ab * ab);
    return {a.truncated(N), b.truncated(N), ps_sqrt(D), D};
}

Series s0_of(const SVars& s) {
    const Series &a = s.a, &b = s.b, &r = s.r, &D = s.D;
    int N = a.order();
    Series ab = a * b;
    Series num = Rational(2) * (ab * b) * (one(N) + a) *
                 (one(N) + Rational(2) * a + ab - r);
    Series den = (one(N) - ab + r) * (D + (one(N) + Rational(2) * b + ab) * r);
    return num / den;
}

// s^(1)(u,v) / v with the fixed point a rtl-max
Series s1_over_v_of(const SVars& s) {
    const Series &a = s.a, &b = s.b, &r = s.r, &D = s.D;
    int N = a.order();
    Series ab = a * b;
    Series num = ab * (one(N) + a) * (one(N) + Rational(2) * b + ab + r);
    Series den = (one(N) + b) * (D + (one(N) - Rational(3) * ab - Rational(2) * (a * ab)) * r);
    return num / den;
}

Series s2_over_uv_of(const SVars& s) {
    const Series &a = s.a, &b = s.b, &r = s.r, &D = s.D;
    int N = a.order();
    Series ab = a * b;
    Series num = b * (poly({2}, N) + Rational(7) * a + Rational(4) * ab + Rational(4) * (a * a) +
                      Rational(3) * (a * ab) - (poly({2}, N) + a) * r);
    Series den = D + (one(N) + Rational(2) * b + ab) * r;
    return num / den;
}

} // namespace

Series assemble_av1342(int order) {
    int N = order;
    Series a = at_x2(schroder_large(N), N);   // u^2: pairs from Av(1342,1423)
    Series b = at_x2(X(N) / poly({1, -1}, N), N);  // v^2 = x^2/(1-x^2)
    SVars sv = make_svars(a, b);
    Series runs = X(N) / poly({1, -1}, N);    // nonempty monotone run
    Series small2 = at_x2(schroder_small(N), N);

    Series t0 = s0_of(sv);
    Series t1 = s1_over_v_of(sv) * runs;
    Series t1s = s1_over_v_of(make_svars(b, a));  // u and v swapped
    Series t2 = s2_over_uv_of(sv);

    // g = x + g x/(1-x) + small(x^2)(1+g) + t0 + t1 + t1s g + t2 g x/(1-x)
    Series base = X(N) + small2 + t0 + t1;
    Series mult = runs + small2 + t1s + t2 * runs;
    if (mult.valuation() < 1)
        throw std::runtime_error("assemble_av1342: contraction term has a constant part");
    Series g = Series::zero(N);
    int fixed = -1;
    for (int it = 0; it <= N + 1; ++it) {
        Series next = base + mult * g;
        int agree = N;
        for (int i = 0; i <= N; ++i)
            if (!(next.coeff(i) == g.coeff(i))) { agree = i - 1; break; }
        if (agree == N) return next;
        if (agree <= fixed)
            throw std::runtime_error("assemble_av1342: iteration failed to fix a new coefficient");
        fixed = agree;
        g = next;
    }
    throw std::runtime_error("assemble_av1342: did not converge within the order bound");
}

Series assemble_av2341(int order) {
    int N = order;
    Series runs = X(N) / poly({1, -1}, N);
    Series pair_runs = at_x2(runs, N);  // x^2/(1-x^2)
    SVars sv = make_svars(pair_runs, pair_runs);

    Series cat_m1 = catalan(N) - one(N);            // Catalan minus constant
    Series skew = ps_shift(at_x2(cat_m1, N) + one(N), 2).truncated(N) *
                  (central_binomial_inv(N) + one(N));

    Series inflations = s0_of(sv) + Rational(2) * (s1_over_v_of(sv) * runs) +
                        s2_over_uv_of(sv) * (runs * runs) +
                        pair_runs * pair_runs * ps_pow(runs, 3);

    // b = x + b^2/(1+b) + skew + inflations
    Series known = X(N) + skew + inflations;
    Series g = Series::zero(N);
    int fixed = -1;
    for (int it = 0; it <= N + 1; ++it) {
        Series next = known + (g * g) / (one(N) + g);
        int agree = N;
        for (int i = 0; i <= N; ++i)
            if (!(next.coeff(i) == g.coeff(i))) { agree = i - 1; break; }
        if (agree == N) return next;
        if (agree <= fixed)
            throw std::runtime_error("assemble_av2341: iteration failed to fix a new coefficient");
        fixed = agree;
        g = next;
    }
    throw std::runtime_error("assemble_av2341: did not converge within the order bound");
}

Series av2341_min_poly_residue(int order) {
    int N = order;
    Series g = assemble_av2341(N);
    auto dense = [&](std::initializer_list<long long> rev) {
        // coefficients listed from the highest printed power down to x^0
        std::vector<long long> v(rev);
        Series s(N);
        int deg = static_cast<int>(v.size()) - 1;
        for (int i = 0; i <= deg && i <= N; ++i) s.coeff(i) = Rational(v[deg - i]);
        return s;
    };
    Series t = dense({32, -120, 113, 206, -540, 223, 561, -725, 26, 514, -326, -55, 141, -50, -4, 6, -1});
    Series P = dense({48, -158, 101, 334, -627, 60, 801, -684, -231, 624, -221, -162, 151, -24, -17, 8, -1});
    Series Q = dense({18, -51, 16, 125, -169, -48, 256, -130, -131, 159, -11, -60, 28, 3, -5, 1});
    return t * g * g + P * g + Q * X(N);
}

PolySeries peaks_H(int order) {
    // H = u x C / (1 - u x C - x C)
    int N = order;
    Series c = catalan(N);
    PolySeries xc(N);
    for (int i = 0; i + 1 <= N; ++i) xc.coeff(i + 1) = UPoly(c.coeff(i));
    PolySeries u = PolySeries::constant(UPoly::var(), N);
    PolySeries onep = PolySeries::constant(UPoly(Rational(1)), N);
    PolySeries num = u * xc;
    return num / (onep - num - xc);
}

PolySeries ascents_av132(int order) {
    // f = 1 + z f + u z (f - 1) f, solved by iteration
    int N = order;
    PolySeries onep = PolySeries::constant(UPoly(Rational(1)), N);
    PolySeries u = PolySeries::constant(UPoly::var(), N);
    PolySeries z = PolySeries::z(N);
    PolySeries f = onep;
    for (int it = 0; it <= N + 1; ++it) {
        PolySeries next = onep + z * f + u * z * (f - onep) * f;
        bool same = true;
        for (int i = 0; i <= N && same; ++i) same = next.coeff(i) == f.coeff(i);
        f = next;
        if (same) return f;
    }
    throw std::runtime_error("ascents_av132: iteration did not stabilize");
}

PolySeries bonds_f(int order) {
    // sum_m m! (z + 2z^2(u-1)/(1 - z(u-1)))^m
    int N = order;
    UPoly um1 = UPoly::var() - UPoly(Rational(1));
    PolySeries z = PolySeries::z(N);
    PolySeries onep = PolySeries::constant(UPoly(Rational(1)), N);
    PolySeries zum1(N);
    if (N >= 1) zum1.coeff(1) = um1;
    PolySeries num(N);
    if (N >= 2) num.coeff(2) = UPoly(Rational(2)) * um1;
    PolySeries base = z + num / (onep - zum1);
    PolySeries total(N), pw = onep;
    Rational fact(1);
    for (int m = 0; m <= N; ++m) {
        if (m > 0) {
            pw = pw * base;
            fact *= Rational(m);
        }
        total = total + PolySeries::constant(UPoly(fact), N) * pw;
    }
    return total;
}

PolySeries distinct_patterns_h(int order) {
    // h(z,u) = f(zu, 1/u): coefficient polynomials reverse within degree n-1
    // (a permutation of length n has between 0 and n-1 bonds)
    PolySeries f = bonds_f(order);
    PolySeries h(order);
    h.coeff(0) = f.coeff(0);
    for (int n = 1; n <= order; ++n) h.coeff(n) = f.coeff(n).reversed(n);
    return h;
}

Bivar catalog_bivar(const std::string& name, int D) {
    Bivar u = Bivar::u(D), v = Bivar::v(D);
    Bivar one_b = Bivar::constant(Rational(1), D);
    Bivar two = Bivar::constant(Rational(2), D);
    Bivar a = u * u, b = v * v;
    Bivar ab = a * b;
    Bivar Dp = one_b - Bivar::constant(Rational(6), D) * ab -
               Bivar::constant(Rational(4), D) * (ab * b) -
               Bivar::constant(Rational(4), D) * (a * ab) -
               Bivar::constant(Rational(3), D) * (ab * ab);
    Bivar r = bv_sqrt(Dp);
    if (name == "s0") {
        Bivar num = two * (ab * b) * (one_b + a) * (one_b + two * a + ab - r);
        Bivar den = (one_b - ab + r) * (Dp + (one_b + two * b + ab) * r);
        return num / den;
    }
    if (name == "s1") {
        // the half with the fixed point a rtl-max, as used by the assemblies
        Bivar num = (a * b * v) * (one_b + a) * (one_b + two * b + ab + r);
        Bivar den = (one_b + b) * (Dp + (one_b - Bivar::constant(Rational(3), D) * ab -
                                         two * (a * ab)) * r);
        return num / den;
    }
    if (name == "s2") {
        Bivar num = (u * v * b) *
                    (two + Bivar::constant(Rational(7), D) * a + Bivar::constant(Rational(4), D) * ab +
                     Bivar::constant(Rational(4), D) * (a * a) +
                     Bivar::constant(Rational(3), D) * (a * ab) - (two + a) * r);
        Bivar den = Dp + (one_b + two * b + ab) * r;
        return num / den;
    }
    throw std::invalid_argument("catalog_bivar: unknown name '" + name + "'");
}

Series catalog(const std::string& name, int order) {
    int N = order;
    if (name == "catalan") return catalan(N);
    if (name == "av123_simples") return av123_simples(N);
    if (name == "motzkin_fixedpoint") return motzkin_fixedpoint(N);
    if (name == "simples_compose_check") return simples_compose_check(N);
    if (name == "num12_av123") return num12_av123(N);
    if (name == "num213_star") return num213_star(N);
    if (name == "num213") return num213(N);
    if (name == "num231") return num231(N);
    if (name == "num321") return num321(N);
    if (name == "cat_choose3") return cat_choose3(N);
    if (name == "schroder_large") return schroder_large(N);
    if (name == "schroder_small") return schroder_small(N);
    if (name == "central_binomial_inv") return central_binomial_inv(N);
    if (name == "htso") return htso(N);
    if (name == "htszero") return htszero(N);
    if (name == "htstwo") return htstwo(N);
    if (name == "g_1342") return g_1342(N);
    if (name == "no_bonds") return no_bonds(N);
    if (name == "avI1342") return assemble_av1342(N);
    if (name == "avI2341") return assemble_av2341(N);
    if (name == "ascents_av132_total") {
        // d/du at u=1 of the ascent series
        return ascents_av132(N).d_du().at_u(Rational(1));
    }
    if (name == "bond_totals") return bonds_f(N).d_du().at_u(Rational(1));
    throw std::invalid_argument("catalog: unknown name '" + name + "'");
}

std::vector<std::string> catalog_names() {
    return {"catalan", "av123_simples", "motzkin_fixedpoint", "simples_compose_check",
            "num12_av123", "num213_star", "num213", "num231", "num321", "cat_choose3",
            "schroder_large", "schroder_small", "central_binomial_inv", "htso", "htszero",
            "htstwo", "g_1342", "no_bonds", "avI1342", "avI2341", "ascents_av132_total",
            "bond_totals"};
}

Rational exact_formula(const std::string& name, int n) {
    if (n < 1) throw std::invalid_argument("exact_formula: n >= 1 required");
    auto C = [](long long a, long long b) { return BigInt::binomial(a, b); };
    if (name == "a") {
        // (n+2)/4 C(2n,n) - 3 2^{2n-3}
        Rational r = Rational(n + 2, 4) * Rational(C(2 * n, n));
        if (n >= 2) r -= Rational(3) * Rational(BigInt::pow(2, 2 * n - 3));
        else r -= Rational(3, 2);  // 2^{2n-3} = 1/2 at n = 1
        return r;
    }
    if (name == "b") {
        Rational r = Rational(2 * n - 1) * Rational(C(2 * n - 3, n - 2)) -
                     Rational(2 * n + 1) * Rational(C(2 * n - 1, n - 1));
        if (n >= 2) r += Rational(n + 4) * Rational(BigInt::pow(2, 2 * n - 3));
        else r += Rational(n + 4, 2);
        return r;
    }
    if (name == "d") {
        Rational r = Rational(1, 6) * Rational(C(2 * n + 5, n + 1) * C(n + 4, 2));
        r -= Rational(5, 3) * Rational(C(2 * n + 3, n) * C(n + 3, 2));
        r += Rational(17, 3) * Rational(C(2 * n + 1, n - 1) * C(n + 2, 2));
        r -= Rational(6) * Rational(C(2 * n - 1, n - 2) * C(n + 1, 2));
        r -= Rational(n + 1) * Rational(BigInt::pow(4, n - 1));
        return r;
    }
    if (name == "av123_231") return Rational(static_cast<long long>(n) * n - n + 2, 2);
    if (name == "layered") return Rational(BigInt::pow(2, n - 1));
    if (name == "central_binomial") return Rational(C(n, n / 2));
    if (name == "bonds_mean") return Rational(2 * (n - 1), n);
    if (name == "bonds_variance") {
        if (n < 2) return Rational(0);
        Rational a(4ll * (n - 2) * (n - 2), static_cast<long long>(n) * (n - 1));
        Rational b(2 * (n - 1), n);
        Rational c(4ll * (n - 1) * (n - 1), static_cast<long long>(n) * n);
        return a + b - c;
    }
    throw std::invalid_argument("exact_formula: unknown name '" + name + "'");
}

std::vector<std::string> exact_formula_names() {
    return {"a", "b", "d", "av123_231", "layered", "central_binomial", "bonds_mean",
            "bonds_variance"};
}

} // namespace permpat
