#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "permpat/catalog.hpp"
#include "permpat/oracle.hpp"

#include <numeric>

using namespace permpat;

namespace {

Permutation P(const std::string& s) { return Permutation::parse(s); }

long long at(const Series& s, int n) {
    REQUIRE(s.coeff(n).is_integer());
    return s.coeff(n).num().to_int64();
}

} // namespace

TEST_CASE("avoidance counts") {
    long long av1342[] = {1, 2, 6, 23, 103, 512, 2740, 15485};
    for (int n = 1; n <= 8; ++n)
        CHECK(enumerate_class({{P("1 3 4 2")}, false, n}) == av1342[n - 1]);
    Series cat = catalog("catalan", 12);
    for (int n = 1; n <= 11; ++n)
        CHECK(enumerate_class({{P("1 2 3")}, false, n}) == at(cat, n));
    for (int n = 1; n <= 8; ++n)
        CHECK(enumerate_class({{P("2 1")}, false, n}) == 1);
    // multi-pattern basis
    for (int n = 1; n <= 9; ++n)
        CHECK(enumerate_class({{P("1 2 3"), P("2 3 1")}, false, n}) ==
              (static_cast<long long>(n) * n - n + 2) / 2);
    CHECK_THROWS(enumerate_class({{P("1 2 3")}, false, 15}));
    CHECK_THROWS(enumerate_class({{}, false, 3}));
}

TEST_CASE("symmetry sanity on class sizes") {
    for (const char* b : {"1 3 2 4", "2 4 1 3", "1 2 3"}) {
        Permutation beta = P(b);
        long long base = enumerate_class({{beta}, false, 7});
        for (const auto& image : symmetry_orbit(beta))
            CHECK(enumerate_class({{image}, false, 7}) == base);
    }
}

TEST_CASE("worker count does not change counts") {
    OracleConfig one, four;
    one.workers = 1;
    four.workers = 4;
    for (int n = 5; n <= 9; ++n)
        CHECK(enumerate_class({{P("1 3 2 4")}, false, n}, one) ==
              enumerate_class({{P("1 3 2 4")}, false, n}, four));
}

TEST_CASE("involution counts") {
    for (int n = 1; n <= 12; ++n)
        CHECK(enumerate_involutions({{P("1 2 3")}, true, n}) ==
              BigInt::binomial(n, n / 2).to_int64());
    for (int n = 1; n <= 10; ++n)
        CHECK(enumerate_involutions({{P("2 3 1")}, true, n}) == (1ll << (n - 1)));
    // published involution counts for the 2413 basis (closed under inverse)
    long long av2413[] = {24, 64, 166, 456, 1234, 3454, 9600};
    for (int n = 5; n <= 11; ++n)
        CHECK(enumerate_involutions({{P("2 4 1 3")}, true, n}) == av2413[n - 5]);
    // without any basis restriction, involutions follow the telephone numbers
    long long telephone[] = {1, 2, 4, 10, 26, 76, 232, 764, 2620};
    for (int n = 1; n <= 9; ++n)
        CHECK(enumerate_involutions({{Permutation::identity(12)}, true, n}) == telephone[n - 1]);
}

TEST_CASE("skew-indecomposable 123-avoiders are counted by shifted Catalans") {
    Series cat = catalog("catalan", 11);
    for (int n = 1; n <= 10; ++n) {
        std::vector<Permutation> members;
        enumerate_class({{P("1 2 3")}, false, n}, {}, &members);
        long long stars = 0;
        for (const auto& m : members)
            if (!is_skew_decomposable(m)) ++stars;
        CHECK(stars == at(cat, n - 1));
    }
}

TEST_CASE("length-2 totals split the pair count") {
    Series cat = catalog("catalan", 11);
    Series n12 = catalog("num12_av123", 11);
    for (int n = 2; n <= 10; ++n) {
        auto t2 = occurrence_totals_all({P("1 2 3")}, n, 2);
        CHECK(t2[P("1 2")] + t2[P("2 1")] ==
              BigInt::binomial(n, 2).to_int64() * at(cat, n));
        CHECK(t2[P("1 2")] == at(n12, n));
    }
}

TEST_CASE("occurrence totals against Table-style data") {
    auto t7 = occurrence_totals_all({P("1 2 3")}, 7, 3);
    CHECK(t7[P("2 3 1")] == 2794);
    auto s7 = occurrence_totals_all({P("1 3 2")}, 7, 3);
    CHECK(s7[P("2 3 1")] == 2794);
    CHECK(occurrence_totals(P("3 2 1"), {P("1 2 3")}, 5) == 144);
    for (int n = 3; n <= 8; ++n)
        CHECK(occurrence_totals(P("1 3 2"), {P("1 3 2")}, n) == 0);
    // every 3-subset of a 123-avoider forms a non-123 pattern
    for (int n = 3; n <= 9; ++n) {
        auto t = occurrence_totals_all({P("1 2 3")}, n, 3);
        long long sum = 0;
        for (const auto& [pat, total] : t) sum += total;
        CHECK(t[P("1 2 3")] == 0);
        CHECK(sum == BigInt::binomial(n, 3).to_int64() * enumerate_class({{P("1 2 3")}, false, n}));
    }
}

TEST_CASE("simple census vs the catalog series") {
    Series simples = catalog("av123_simples", 10);
    for (int n = 4; n <= 9; ++n)
        CHECK(simple_census({P("1 2 3")}, n, false) == at(simples, n));
    CHECK(simple_census({P("1 2 3")}, 6, false) == 7);
    CHECK(simple_census({P("1 2 3")}, 8, false) == 37);
    Series so = catalog("htso", 12), sz = catalog("htszero", 12), st = catalog("htstwo", 12);
    for (int n = 5; n <= 11; ++n) {
        CHECK(simple_census({P("1 2 3")}, n, true, 1) == at(so, n));
        CHECK(simple_census({P("1 2 3")}, n, true, 0) == at(sz, n));
        CHECK(simple_census({P("1 2 3")}, n, true, 2) == at(st, n));
    }
    CHECK(simple_census({P("1 2 3")}, 9, true, 1) == 10);
}

TEST_CASE("involution assemblies vs the oracle") {
    Series g1342 = assemble_av1342(11);
    Series g2341 = assemble_av2341(11);
    for (int n = 1; n <= 11; ++n) {
        CHECK(enumerate_involutions({{P("1 3 4 2")}, true, n}) == at(g1342, n));
        CHECK(enumerate_involutions({{P("2 3 4 1")}, true, n}) == at(g2341, n));
    }
}

TEST_CASE("Schroder classes against the oracle") {
    Series big = catalog("schroder_large", 9);
    Series small = catalog("schroder_small", 9);
    for (int n = 1; n <= 8; ++n) {
        std::vector<Permutation> members;
        enumerate_class({{P("1 3 4 2"), P("1 4 2 3")}, false, n}, {}, &members);
        CHECK(static_cast<long long>(members.size()) == at(big, n));
        long long indec = 0;
        for (const auto& m : members)
            if (!is_skew_decomposable(m)) ++indec;
        CHECK(indec == at(small, n));
    }
}

TEST_CASE("ascent totals across Av(132) against the oracle") {
    Series totals = catalog("ascents_av132_total", 9);
    PolySeries f = ascents_av132(9);
    for (int n = 1; n <= 9; ++n) {
        std::vector<Permutation> members;
        enumerate_class({{P("1 3 2")}, false, n}, {}, &members);
        long long total = 0;
        std::map<int, long long> by_ascents;
        for (const auto& m : members) {
            int a = stats(m).ascents;
            total += a;
            ++by_ascents[a];
        }
        CHECK(total == at(totals, n));
        for (const auto& [k, cnt] : by_ascents)
            CHECK(Rational(cnt) == f.coeff(n).coeff(k));
    }
}

TEST_CASE("bond distribution") {
    BondDistribution d = bond_distribution(6);
    CHECK(d.count_by_bonds[0] == 90);
    CHECK(d.count_by_bonds[5] == 2);  // both monotone permutations
    CHECK(d.mean == Rational(5, 3));
    CHECK(d.mean == exact_formula("bonds_mean", 6));
    CHECK(d.variance == exact_formula("bonds_variance", 6));
    Series nb = catalog("no_bonds", 9);
    for (int n = 4; n <= 9; ++n)
        CHECK(bond_distribution(n).count_by_bonds[0] == at(nb, n));
    // distribution matches the generating function slice by slice
    PolySeries f = bonds_f(8);
    for (int n = 2; n <= 8; ++n) {
        BondDistribution bd = bond_distribution(n);
        for (int k = 0; k < n; ++k)
            CHECK(Rational(bd.count_by_bonds[k]) == f.coeff(n).coeff(k));
    }
}

TEST_CASE("distinct pattern histogram") {
    auto hist = distinct_pattern_distribution(6, 1);
    // |del| = n - bonds: histogram mirrors the bond histogram
    BondDistribution d = bond_distribution(6);
    for (int k = 0; k < 6; ++k)
        if (d.count_by_bonds[k] > 0) CHECK(hist[6 - k] == d.count_by_bonds[k]);
    // against the transformed generating function
    PolySeries h = distinct_patterns_h(7);
    auto hist7 = distinct_pattern_distribution(7, 1);
    for (int k = 1; k <= 7; ++k)
        CHECK(Rational(hist7.count(k) ? hist7[k] : 0) == h.coeff(7).coeff(k));
}

TEST_CASE("identity suite passes") {
    for (const auto& r : identity_suite(9)) {
        INFO(r.name, " ", r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("dominance of the decreasing pattern") {
    // among length-4 patterns inside Av_n(123), the decreasing one
    // eventually dominates; record the crossover
    int n0 = -1;
    for (int n = 4; n <= 10; ++n) {
        auto t = occurrence_totals_all({P("1 2 3")}, n, 4);
        long long dec = t[P("4 3 2 1")];
        bool dominates = true;
        for (const auto& [pat, total] : t)
            if (!(pat == P("4 3 2 1")) && total >= dec) dominates = false;
        if (dominates && n0 < 0) n0 = n;
        if (!dominates) n0 = -1;
    }
    REQUIRE(n0 > 0);
    CHECK(n0 <= 12);
    MESSAGE("4321 dominates every other 4-pattern in Av_n(123) from n = ", n0, " onward (tested to 10)");
}
