#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "permpat/catalog.hpp"

using namespace permpat;

namespace {

long long at(const Series& s, int n) {
    REQUIRE(s.coeff(n).is_integer());
    return s.coeff(n).num().to_int64();
}

void check_prefix(const char* name, int from, std::initializer_list<long long> want, int order = 24) {
    Series s = catalog(name, order);
    int n = from;
    for (long long w : want) {
        INFO(name, " at n=", n);
        CHECK(at(s, n) == w);
        ++n;
    }
}

} // namespace

TEST_CASE("catalan and friends") {
    check_prefix("catalan", 0, {1, 1, 2, 5, 14, 42, 132, 429, 1430});
    check_prefix("motzkin_fixedpoint", 1, {1, 1, 2, 4, 9, 21, 51});
    check_prefix("schroder_large", 1, {1, 2, 6, 22, 90, 394, 1806});
    check_prefix("schroder_small", 1, {1, 1, 3, 11, 45, 197, 903});
    check_prefix("central_binomial_inv", 1, {1, 2, 3, 6, 10, 20, 35, 70, 126, 252});
}

TEST_CASE("catalan functional equation") {
    const int N = 16;
    Series c = catalog("catalan", N);
    Series rhs = Series::constant(Rational(1), N) + Series::x(N) * c * c;
    CHECK(agree_to_order(c, rhs, N));
}

TEST_CASE("pattern-occurrence series") {
    check_prefix("num12_av123", 2, {1, 6, 29, 130, 562, 2380, 9949});
    check_prefix("num213_star", 3, {1, 7, 38, 187, 874});
    check_prefix("num213", 3, {1, 9, 57, 312, 1578});
    check_prefix("num231", 3, {1, 11, 81, 500, 2794});
    check_prefix("num321", 3, {1, 16, 144, 1016, 6271});
    // num213 = C^2 * num213_star (the class is a skew tower over its
    // indecomposables)
    const int N = 18;
    Series c = catalog("catalan", N);
    CHECK(agree_to_order(catalog("num213", N), c * c * catalog("num213_star", N), N));
    // alternate printed closed forms for the same series
    {
        Series w(N);
        // x^3 C / (1-4x)^{3/2} = x^2/2 ((1-4x)^{-3/2} - (1-4x)^{-1})
        Series m4 = Series::constant(Rational(1), N) - Rational(4) * Series::x(N);
        Series inv = Series::constant(Rational(1), N) / m4;
        Series inv32 = inv / ps_sqrt(m4);
        Series alt = Rational(1, 2) * ps_shift(inv32 - inv, 2).truncated(N);
        CHECK(agree_to_order(catalog("num213_star", N), alt, N));
    }
}

TEST_CASE("linear relations among the occurrence series") {
    const int N = 14;
    Series c = catalog("catalan", N);
    Series n12 = catalog("num12_av123", N);
    Series n213 = catalog("num213", N);
    Series n231 = catalog("num231", N);
    Series n321 = catalog("num321", N);
    // num12 + num21 = C(n,2) c_n, so 4 num213 + 2 num231 = (n-2) num12
    Series lhs = Rational(4) * n213 + Rational(2) * n231;
    Series rhs(N);
    for (int n = 2; n <= N; ++n) rhs.coeff(n) = Rational(n - 2) * n12.coeff(n);
    CHECK(agree_to_order(lhs, rhs, N));
    // all 3-patterns: 2 num213 + 2 num231 + num321 = C(n,3) c_n
    Series total = Rational(2) * n213 + Rational(2) * n231 + n321;
    CHECK(agree_to_order(total, catalog("cat_choose3", N), N));
    // C(z) num213 = z C'(z) num12
    Series big = catalog("catalan", N + 1);
    Series zcp = ps_shift(ps_derivative(big), 1).truncated(N);
    CHECK(agree_to_order(c * n213, zcp * n12, N));
}

TEST_CASE("simple-permutation series") {
    check_prefix("av123_simples", 1, {0, 1, 0, 2, 2, 7, 14, 37});
    // inflating every entry by a nonempty decreasing run rebuilds the class:
    // the composition equals x (C(x) - 1)
    const int N = 16;
    Series lhs = catalog("simples_compose_check", N);
    Series want = ps_shift(catalog("catalan", N) - Series::constant(Rational(1), N), 1).truncated(N);
    CHECK(agree_to_order(lhs, want, N));
}

TEST_CASE("simple involution series") {
    check_prefix("htso", 5, {2, 0, 2, 0, 10, 0, 22, 0, 68, 0, 184, 0, 530});
    check_prefix("htszero", 8, {1, 0, 2, 0, 8, 0, 22, 0, 68, 0, 198});
    check_prefix("htstwo", 6, {3, 0, 4, 0, 15, 0, 36, 0, 105, 0, 288});
}

TEST_CASE("bivariate forms specialize to the univariate ones") {
    const int N = 14;
    const int D = 2 * N + 2;
    Series x = Series::x(N);
    Series sq = x * x;
    // htso(x) = 2 x * (s1/v at u=v=x), and s1(x,x) is half of htso
    Bivar s1 = catalog_bivar("s1", D);
    Series s1xx = s1.substitute(x, x, N);
    CHECK(agree_to_order(Rational(2) * s1xx, catalog("htso", N), N));
    Bivar s0 = catalog_bivar("s0", D);
    CHECK(agree_to_order(s0.substitute(x, x, N), catalog("htszero", N), N));
    Bivar s2 = catalog_bivar("s2", D);
    CHECK(agree_to_order(s2.substitute(x, x, N), catalog("htstwo", N), N));
}

TEST_CASE("involution assemblies") {
    const int N = 14;
    Series g = assemble_av1342(N);
    CHECK(agree_to_order(g, catalog("g_1342", N), N));
    check_prefix("g_1342", 1, {1, 2, 4, 10, 24, 62, 156, 406, 1040, 2714, 7012});
    Series b = assemble_av2341(N);
    long long want[] = {1, 2, 4, 10, 25, 66, 170, 441, 1124, 2870, 7273};
    for (int n = 1; n <= 11; ++n) CHECK(at(b, n) == want[n - 1]);
}

TEST_CASE("2341 minimal-polynomial residue") {
    // secondary evidence; the printed transcription is checked but the
    // acceptance rests on the oracle agreement
    Series res = av2341_min_poly_residue(20);
    CHECK(res.is_zero());
}

TEST_CASE("bond generating function") {
    check_prefix("no_bonds", 0, {1, 1, 0, 0, 2, 14, 90, 646, 5242}, 16);
    const int N = 12;
    PolySeries f = bonds_f(N);
    // u = 1 recovers n!
    Series atone = f.at_u(Rational(1));
    Rational fact(1);
    for (int n = 0; n <= N; ++n) {
        if (n > 0) fact *= Rational(n);
        CHECK(atone.coeff(n) == fact);
    }
    // total bonds are 2(n-1)(n-1)!
    Series totals = f.d_du().at_u(Rational(1));
    for (int n = 1; n <= N; ++n)
        CHECK(totals.coeff(n) == Rational(2 * (n - 1)) * Rational(BigInt::factorial(n - 1)));
    // second factorial moment reproduces the printed variance formula
    Series second = f.d_du().d_du().at_u(Rational(1));
    for (int n = 2; n <= N; ++n) {
        Rational nf(BigInt::factorial(n));
        Rational mean = exact_formula("bonds_mean", n);
        Rational var = second.coeff(n) / nf + mean - mean * mean;
        CHECK(var == exact_formula("bonds_variance", n));
    }
    // u = 0 slice equals the dedicated series
    CHECK(agree_to_order(f.at_u(Rational(0)), catalog("no_bonds", N), N));
}

TEST_CASE("distinct-pattern transform") {
    const int N = 10;
    PolySeries f = bonds_f(N);
    PolySeries h = distinct_patterns_h(N);
    for (int n = 1; n <= N; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(h.coeff(n).coeff(k) == f.coeff(n).coeff(n - k));
}

TEST_CASE("ascent series across Av(132)") {
    const int N = 12;
    PolySeries f = ascents_av132(N);
    // z^3 coefficient is u^2 + 3u + 1
    CHECK(f.coeff(3).coeff(0) == Rational(1));
    CHECK(f.coeff(3).coeff(1) == Rational(3));
    CHECK(f.coeff(3).coeff(2) == Rational(1));
    // u = 1 recovers the Catalan numbers
    CHECK(agree_to_order(f.at_u(Rational(1)), catalog("catalan", N), N));
    check_prefix("ascents_av132_total", 0, {0, 0, 1, 5, 21, 84, 330, 1287}, 12);
}

TEST_CASE("peak-height marking series") {
    const int N = 12;
    PolySeries H = peaks_H(N);
    // column sums: total peaks by height over semilength-n paths; check by
    // direct expansion of the defining relation H = uxC(H+1) + xCH
    // and the printed slice sum_k C(k,2) h_{n-1,k} -> 38 at n = 5
    Rational total38(0);
    const UPoly& h4 = H.coeff(4);
    for (int k = 2; k <= 4; ++k)
        total38 += h4.coeff(k) * Rational(BigInt::binomial(k, 2));
    CHECK(total38 == Rational(38));
    // u = 1 counts all peaks; at n=3 the five paths carry 1+1+2+2+3... total 9? no:
    // verified independently in test_dyck; here check consistency with catalog
    Series weighted(N);
    for (int n = 1; n <= N; ++n) {
        Rational acc(0);
        const UPoly& hn = H.coeff(n);
        for (int k = 0; k <= hn.degree(); ++k)
            acc += hn.coeff(k) * Rational(BigInt::binomial(k, 2));
        if (n + 1 <= N) weighted.coeff(n + 1) = acc;
    }
    CHECK(agree_to_order(weighted, catalog("num213_star", N), N));
}

TEST_CASE("exact formulas") {
    CHECK(exact_formula("a", 4) == Rational(9));
    CHECK(exact_formula("b", 4) == Rational(11));
    CHECK(exact_formula("d", 4) == Rational(16));
    CHECK(exact_formula("a", 7) == Rational(1578));
    CHECK(exact_formula("b", 7) == Rational(2794));
    CHECK(exact_formula("d", 7) == Rational(6271));
    CHECK(exact_formula("av123_231", 4) == Rational(7));
    CHECK(exact_formula("layered", 5) == Rational(16));
    CHECK(exact_formula("central_binomial", 11) == Rational(462));
    CHECK(exact_formula("bonds_mean", 2) == Rational(1));
    CHECK(exact_formula("bonds_mean", 6) == Rational(5, 3));
    CHECK_THROWS(exact_formula("nope", 3));
    CHECK_THROWS(catalog("nope", 5));
}

TEST_CASE("formula/series agreement") {
    const int N = 12;
    Series a = catalog("num213", N);   // num132 = num213 on Av(123)
    Series b = catalog("num231", N);
    Series d = catalog("num321", N);
    for (int n = 3; n <= N; ++n) {
        CHECK(Rational(a.coeff(n)) == exact_formula("a", n));
        CHECK(Rational(b.coeff(n)) == exact_formula("b", n));
        CHECK(Rational(d.coeff(n)) == exact_formula("d", n));
    }
}
