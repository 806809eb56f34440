#include "permpat/verify.hpp"

#include "permpat/catalog.hpp"
#include "permpat/dyck.hpp"
#include "permpat/genome.hpp"
#include "permpat/oracle.hpp"
#include "permpat/pegperm.hpp"
#include "permpat/perm.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace permpat {

namespace {

struct Checker {
    bool pass = true;
    std::string detail;
    int checks = 0;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
    template <typename A, typename B>
    void expect_eq(const A& a, const B& b, const std::string& what) {
        ++checks;
        if (!(a == b) && pass) {
            pass = false;
            std::ostringstream os;
            os << what << " (got " << a << ", want " << b << ")";
            detail = os.str();
        }
    }
    std::string summary() const {
        return pass ? std::to_string(checks) + " checks" : detail;
    }
};

Permutation P(const std::string& s) { return Permutation::parse(s); }

long long series_int(const Series& s, int n) {
    const Rational& c = s.coeff(n);
    if (!c.is_integer()) throw std::runtime_error("series coefficient is not an integer");
    return c.num().to_int64();
}

std::set<PegPerm> pegset(std::initializer_list<const char*> pegs) {
    std::set<PegPerm> out;
    for (const char* p : pegs) out.insert(PegPerm::parse(p));
    return out;
}

// ---- criterion bodies ----------------------------------------------------

void c1_wilf_table(Checker& ck, const OracleConfig& cfg) {
    struct Row { const char* beta; long long want[8]; };
    const Row rows[] = {
        {"1 3 4 2", {1, 2, 6, 23, 103, 512, 2740, 15485}},
        {"1 2 3 4", {1, 2, 6, 23, 103, 513, 2761, 15767}},
        {"1 3 2 4", {1, 2, 6, 23, 103, 513, 2762, 15793}},
    };
    for (const Row& row : rows)
        for (int n = 1; n <= 8; ++n) {
            long long got = enumerate_class({{P(row.beta)}, false, n}, cfg);
            ck.expect_eq(got, row.want[n - 1],
                         std::string("|Av_") + std::to_string(n) + "(" + row.beta + ")|");
        }
}

void c2_occurrence_tables(Checker& ck, const OracleConfig& cfg) {
    // totals of each length-3 pattern over Av_n(123) and Av_n(132), n = 3..7
    const char* pats[6] = {"1 2 3", "1 3 2", "2 1 3", "2 3 1", "3 1 2", "3 2 1"};
    const long long av123[5][6] = {
        {0, 1, 1, 1, 1, 1},
        {0, 9, 9, 11, 11, 16},
        {0, 57, 57, 81, 81, 144},
        {0, 312, 312, 500, 500, 1016},
        {0, 1578, 1578, 2794, 2794, 6271},
    };
    const long long av132[5][6] = {
        {1, 0, 1, 1, 1, 1},
        {10, 0, 11, 11, 11, 13},
        {68, 0, 81, 81, 81, 109},
        {392, 0, 500, 500, 500, 748},
        {2063, 0, 2794, 2794, 2794, 4570},
    };
    for (int n = 3; n <= 7; ++n) {
        auto t123 = occurrence_totals_all({P("1 2 3")}, n, 3, cfg);
        auto t132 = occurrence_totals_all({P("1 3 2")}, n, 3, cfg);
        for (int j = 0; j < 6; ++j) {
            ck.expect_eq(t123[P(pats[j])], av123[n - 3][j],
                         "num_" + std::string(pats[j]) + "(Av_" + std::to_string(n) + "(123))");
            ck.expect_eq(t132[P(pats[j])], av132[n - 3][j],
                         "num_" + std::string(pats[j]) + "(Av_" + std::to_string(n) + "(132))");
        }
    }
}

void c3_catalog_prefixes(Checker& ck) {
    const int N = 20;
    {
        Series s = catalog("catalan", N);
        const long long want[] = {1, 1, 2, 5, 14, 42, 132};
        for (int i = 0; i < 7; ++i) ck.expect_eq(series_int(s, i), want[i], "catalan coeff");
    }
    {
        Series s = catalog("num213_star", N);
        const long long want[] = {1, 7, 38, 187, 874};
        for (int i = 0; i < 5; ++i) ck.expect_eq(series_int(s, i + 3), want[i], "num213_star coeff");
    }
    {
        Series s = catalog("av123_simples", N);
        const long long want[] = {1, 0, 2, 2, 7, 14, 37};
        for (int i = 0; i < 7; ++i) ck.expect_eq(series_int(s, i + 2), want[i], "av123_simples coeff");
    }
    {
        Series s = catalog("htso", N);
        const long long want[] = {2, 2, 10, 22, 68};
        for (int i = 0; i < 5; ++i) ck.expect_eq(series_int(s, 5 + 2 * i), want[i], "htso coeff");
    }
    {
        Series s = catalog("htszero", N);
        const long long want[] = {1, 2, 8, 22, 68};
        for (int i = 0; i < 5; ++i) ck.expect_eq(series_int(s, 8 + 2 * i), want[i], "htszero coeff");
    }
    {
        Series s = catalog("htstwo", N);
        const long long want[] = {3, 4, 15, 36};
        for (int i = 0; i < 4; ++i) ck.expect_eq(series_int(s, 6 + 2 * i), want[i], "htstwo coeff");
    }
    {
        Series s = catalog("no_bonds", N);
        const long long want[] = {1, 1, 0, 0, 2, 14, 90, 646, 5242};
        for (int i = 0; i <= 8; ++i) ck.expect_eq(series_int(s, i), want[i], "no_bonds coeff");
    }
    {
        Series s = catalog("ascents_av132_total", 10);
        const long long want[] = {0, 0, 1, 5, 21, 84, 330};
        for (int i = 0; i <= 6; ++i) ck.expect_eq(series_int(s, i), want[i], "ascent totals coeff");
    }
}

void c4_series_vs_oracle(Checker& ck, const OracleConfig& cfg) {
    const int N = 10;
    Series s12 = catalog("num12_av123", N);
    Series s213 = catalog("num213", N);
    Series s231 = catalog("num231", N);
    Series s321 = catalog("num321", N);
    for (int n = 1; n <= N; ++n) {
        auto t2 = occurrence_totals_all({P("1 2 3")}, n, 2, cfg);
        ck.expect_eq(t2[P("1 2")], series_int(s12, n), "num12 vs oracle n=" + std::to_string(n));
        if (n >= 3) {
            auto t3 = occurrence_totals_all({P("1 2 3")}, n, 3, cfg);
            ck.expect_eq(t3[P("2 1 3")], series_int(s213, n), "num213 vs oracle n=" + std::to_string(n));
            ck.expect_eq(t3[P("2 3 1")], series_int(s231, n), "num231 vs oracle n=" + std::to_string(n));
            ck.expect_eq(t3[P("3 2 1")], series_int(s321, n), "num321 vs oracle n=" + std::to_string(n));
            ck.expect(Rational(t3[P("1 3 2")]) == exact_formula("a", n),
                      "a-formula n=" + std::to_string(n));
            ck.expect(Rational(t3[P("2 3 1")]) == exact_formula("b", n),
                      "b-formula n=" + std::to_string(n));
            ck.expect(Rational(t3[P("3 2 1")]) == exact_formula("d", n),
                      "d-formula n=" + std::to_string(n));
        }
    }
}

void c5_involutions(Checker& ck, const OracleConfig& cfg) {
    const int N = 12;
    Series g1342 = assemble_av1342(N);
    Series g2341 = assemble_av2341(N);
    ck.expect(g1342 == catalog("g_1342", N), "assembled 1342 series equals its closed form");
    const long long jag1342[] = {24, 62, 156, 406, 1040, 2714, 7012};
    const long long jag2341[] = {25, 66, 170, 441, 1124, 2870, 7273};
    for (int n = 5; n <= 11; ++n) {
        ck.expect_eq(series_int(g1342, n), jag1342[n - 5], "Av^I_n(1342) table n=" + std::to_string(n));
        ck.expect_eq(series_int(g2341, n), jag2341[n - 5], "Av^I_n(2341) table n=" + std::to_string(n));
    }
    for (int n = 1; n <= 12; ++n) {
        ck.expect_eq(enumerate_involutions({{P("1 3 4 2")}, true, n}, cfg), series_int(g1342, n),
                     "Av^I(1342) vs oracle n=" + std::to_string(n));
        ck.expect_eq(enumerate_involutions({{P("2 3 4 1")}, true, n}, cfg), series_int(g2341, n),
                     "Av^I(2341) vs oracle n=" + std::to_string(n));
    }
    for (int n = 1; n <= 14; ++n)
        ck.expect_eq(enumerate_involutions({{P("1 2 3")}, true, n}, cfg),
                     BigInt::binomial(n, n / 2).to_int64(),
                     "Av^I(123) central binomial n=" + std::to_string(n));
}

void c6_simple_involution_classification(Checker& ck, const OracleConfig& cfg) {
    for (int n = 1; n <= 9; ++n) {
        std::vector<Permutation> lhs, rhs;
        simple_census({P("2 3 4 1")}, n, true, std::nullopt, cfg, &lhs);
        simple_census({P("1 2 3")}, n, true, std::nullopt, cfg, &rhs);
        if (n == 7) rhs.push_back(P("5 2 7 4 1 6 3"));
        std::sort(lhs.begin(), lhs.end());
        std::sort(rhs.begin(), rhs.end());
        ck.expect(lhs == rhs, "simple involutions in Av^I(2341) at n=" + std::to_string(n));
    }
}

void c7_polyclass(Checker& ck) {
    // the three-descending-cells class of the worked example; counts
    // (n^2 - n + 2)/2
    auto res = polyclass_enumerate(pegset({"-3 -1 -2"}));
    RatGF want;
    want.numer = {BigInt(0), BigInt(1), BigInt(-1), BigInt(1)};
    want.denom_pow = 3;
    RatGF got = res.gf;
    got.normalize();
    want.normalize();
    ck.expect(got == want, "gf of the Av(123,231)-type class is (z^3-z^2+z)/(1-z)^3");
    Series s = res.gf.to_series(12);
    for (int n = 1; n <= 12; ++n)
        ck.expect_eq(series_int(s, n), (static_cast<long long>(n) * n - n + 2) / 2,
                     "class count n=" + std::to_string(n));
    ck.expect_eq(res.poly.polynomial_string(), std::string("1*C(n,0) + 1*C(n,2)"),
                 "binomial basis of the example class");

    // random peg sets: partition totals equal brute-force member counts
    std::mt19937 rng(20140530);
    for (int trial = 0; trial < 12; ++trial) {
        std::set<PegPerm> s;
        int npegs = 1 + static_cast<int>(rng() % 3);
        for (int t = 0; t < npegs; ++t) {
            int len = 1 + static_cast<int>(rng() % 4);
            std::vector<int> ranks(len);
            std::iota(ranks.begin(), ranks.end(), 1);
            std::shuffle(ranks.begin(), ranks.end(), rng);
            std::string decs;
            const char alphabet[3] = {'+', '-', '.'};
            for (int i = 0; i < len; ++i) decs.push_back(alphabet[rng() % 3]);
            s.insert(PegPerm(std::move(ranks), std::move(decs)));
        }
        auto result = polyclass_enumerate(s);
        Series got_series = result.gf.to_series(9);
        bool all_ok = true;
        for (int n = 1; n <= 9 && all_ok; ++n)
            all_ok = series_int(got_series, n) == brute_class_members(s, n);
        ck.expect(all_ok, "partition counts equal brute force on random set #" +
                              std::to_string(trial));
        // each member fills exactly one restricted class
        for (int n = 1; n <= 6; ++n) {
            for (const auto& pi : brute_class_set(s, n)) {
                auto [peg, vec] = greedy_peg(pi);
                int hits = 0;
                for (const auto& cls : result.partition)
                    if (cls.peg == peg && cls.allowed.contains(vec)) ++hits;
                if (hits != 1) {
                    ck.expect(false, "fill multiplicity " + std::to_string(hits) + " for " +
                                         pi.to_string());
                    break;
                }
            }
        }
    }
}

void c8_genome_tables(Checker& ck) {
    struct Row {
        BlockOp op;
        int k;
        long long counts[10];
        std::vector<long long> basis;  // coefficient of C(n,j) from j = 0
    };
    const std::vector<Row> rows = {
        {BlockOp::block_transposition, 1, {1, 2, 5, 11, 21, 36, 57, 85, 121, 166}, {1, 0, 1, 1}},
        {BlockOp::block_transposition, 2, {1, 2, 6, 23, 89, 295, 827, 2017, 4405, 8812},
         {1, 0, 1, 2, 8, 18, 11}},
        {BlockOp::block_transposition, 3, {1, 2, 6, 24, 120, 675, 3527, 15484, 56917, 179719},
         {1, 0, 1, 2, 9, 44, 220, 656, 841, 369}},
        {BlockOp::prefix_transposition, 1, {1, 2, 4, 7, 11, 16, 22, 29, 37, 46}, {1, 0, 1}},
        {BlockOp::prefix_transposition, 2, {1, 2, 6, 21, 61, 146, 302, 561, 961, 1546},
         {1, 0, 1, 2, 6}},
        {BlockOp::prefix_transposition, 3, {1, 2, 6, 24, 116, 521, 1877, 5531, 13939, 31156},
         {1, 0, 1, 2, 9, 40, 90}},
        {BlockOp::block_reversal, 1, {1, 2, 4, 7, 11, 16, 22, 29, 37, 46}, {1, 0, 1}},
        // the printed basis row stops at C(n,3); the polynomial matching the
        // printed counts needs the final 4*C(n,4) term as well
        {BlockOp::block_reversal, 2, {1, 2, 6, 22, 63, 145, 288, 516, 857, 1343}, {8, -3, 1, 4, 4}},
        {BlockOp::block_reversal, 3, {1, 2, 6, 24, 118, 534, 1851, 5158, 12264, 25943},
         {318, -214, 131, -61, 20, 70, 35}},
        {BlockOp::prefix_reversal, 1, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, {0, 1}},
        {BlockOp::prefix_reversal, 2, {1, 2, 5, 10, 17, 26, 37, 50, 65, 82}, {2, -1, 2}},
        {BlockOp::prefix_reversal, 3, {1, 2, 6, 21, 52, 105, 186, 301, 456, 657}, {-3, 3, -2, 6}},
        {BlockOp::cut_paste, 1, {1, 2, 6, 16, 35, 66, 112, 176, 261, 370}, {0, 1, 0, 3}},
        {BlockOp::cut_paste, 2, {1, 2, 6, 24, 120, 577, 2208, 6768, 17469, 39603},
         {-18, 45, -61, 70, -53, 88, 107}},
        {BlockOp::cut_paste, 3, {1, 2, 6, 24, 120, 720, 5040, 36757, 223898, 1055479},
         {508264, -280036, 140012, -57622, 13839, 4136, -5368, 531, 21125, 12615}},
        {BlockOp::block_interchange, 1, {1, 2, 6, 16, 36, 71, 127, 211, 331, 496}, {1, 0, 1, 2, 1}},
        {BlockOp::block_interchange, 2, {1, 2, 6, 24, 120, 540, 1996, 6196, 16732, 40459},
         {1, 0, 1, 2, 9, 44, 85, 70, 21}},
    };
    for (const Row& row : rows) {
        PolyclassResult res = ball_polynomial(row.op, row.k);
        Series s = res.gf.to_series(10);
        std::string tag = to_string(row.op) + " k=" + std::to_string(row.k);
        for (int n = 1; n <= 10; ++n)
            ck.expect_eq(series_int(s, n), row.counts[n - 1], tag + " count n=" + std::to_string(n));
        std::vector<long long> basis;
        for (const auto& b : res.poly.binomial_coeffs) basis.push_back(b.to_int64());
        ck.expect(basis == row.basis, tag + " binomial basis");
    }
}

void c9_genome_oracle(Checker& ck) {
    for (BlockOp op : all_block_ops())
        for (int k = 1; k <= 2; ++k) {
            PolyclassResult res = ball_polynomial(op, k);
            Series s = res.gf.to_series(8);
            for (int n = 1; n <= 8; ++n)
                ck.expect_eq(bfs_ball(op, k, n), series_int(s, n),
                             to_string(op) + " k=" + std::to_string(k) + " bfs vs polynomial n=" +
                                 std::to_string(n));
        }
}

void c10_chapter5_laws(Checker& ck) {
    // |del_set| = n - bonds and ins sizes, exhaustively
    for (int n = 2; n <= 8; ++n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        bool ok_del = true;
        do {
            Permutation p{std::vector<int>(v)};
            if (static_cast<long long>(del_set(p).size()) != n - bonds(p)) { ok_del = false; break; }
        } while (std::next_permutation(v.begin(), v.end()));
        ck.expect(ok_del, "|del_set| = n - bonds at n=" + std::to_string(n));
    }
    for (int m = 1; m <= 7; ++m) {  // sigma of length m, contained in (m^2+1) perms
        std::vector<int> v(m);
        std::iota(v.begin(), v.end(), 1);
        bool ok_ins = true;
        do {
            Permutation p{std::vector<int>(v)};
            if (ins_set_size(p) != static_cast<long long>(m) * m + 1) { ok_ins = false; break; }
        } while (std::next_permutation(v.begin(), v.end()));
        ck.expect(ok_ins, "ins_set_size = m^2+1 at m=" + std::to_string(m));
    }
    // k-plentiful iff min gap >= k+2
    for (int n = 2; n <= 8; ++n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        bool ok = true;
        do {
            // k = n is degenerate (the single empty pattern is always reached)
            Permutation p{std::vector<int>(v)};
            for (int k = 1; k <= 3 && k < n; ++k) {
                bool plentiful = del_k_count(p, k) == BigInt::binomial(n, k).to_int64();
                if (plentiful != is_k_plentiful(p, k)) { ok = false; break; }
            }
        } while (ok && std::next_permutation(v.begin(), v.end()));
        ck.expect(ok, "k-plentiful <=> gap >= k+2 at n=" + std::to_string(n));
    }
    for (int n = 2; n <= 9; ++n) {
        BondDistribution d = bond_distribution(n);
        ck.expect(d.mean == exact_formula("bonds_mean", n), "bond mean n=" + std::to_string(n));
        ck.expect(d.variance == exact_formula("bonds_variance", n),
                  "bond variance n=" + std::to_string(n));
    }
    ck.expect_eq(theta(4).to_string(), std::string("3 6 1 4 7 2 5"), "theta(4)");
    ck.expect_eq(gap_report(theta(4)).min_gap, 4, "gap of theta(4)");
}

void c11_bijections(Checker& ck, const OracleConfig& cfg) {
    // The worked example path: the printed source string drops one 'd'; the
    // recursion (and the geometric map) force the corrected value.
    ck.expect_eq(phi(P("7 4 3 5 2 6 8 1")).to_string(), std::string("uuduuududdudddud"),
                 "phi worked example");
    ck.expect_eq(phi_star(P("4 8 3 7 1 6 5 2")).to_string(), std::string("uduuduududddud"),
                 "phi_star worked example");
    for (int n = 1; n <= 9; ++n) {
        std::vector<Permutation> av132, av123;
        enumerate_class({{P("1 3 2")}, false, n}, cfg, &av132);
        enumerate_class({{P("1 2 3")}, false, n}, cfg, &av123);
        std::set<DyckPath> im132, im123;
        bool rt = true;
        for (const auto& p : av132) {
            DyckPath d = phi(p);
            im132.insert(d);
            rt = rt && phi_inverse(d) == p;
        }
        ck.expect(rt, "phi round trip n=" + std::to_string(n));
        ck.expect_eq(static_cast<long long>(im132.size()), static_cast<long long>(av132.size()),
                     "phi injective n=" + std::to_string(n));
        for (const auto& p : av123) im123.insert(phi_prime(p));
        ck.expect_eq(static_cast<long long>(im123.size()), static_cast<long long>(av123.size()),
                     "phi_prime injective n=" + std::to_string(n));
        long long cn = series_int(catalog("catalan", n), n);
        ck.expect_eq(static_cast<long long>(im132.size()), cn, "phi onto D_n");
        ck.expect_eq(static_cast<long long>(im123.size()), cn, "phi_prime onto D_n");
        // peak-height / 213 correspondence on skew-indecomposables
        if (n >= 2) {
            std::set<DyckPath> imstar;
            long long stars = 0;
            bool peaks_ok = true;
            for (const auto& p : av123) {
                if (is_skew_decomposable(p)) continue;
                ++stars;
                DyckPath d = phi_star(p);
                imstar.insert(d);
                long long weighted = 0;
                for (int h : peak_heights(d)) weighted += static_cast<long long>(h) * (h - 1) / 2;
                peaks_ok = peaks_ok && weighted == count_occurrences(P("2 1 3"), p);
            }
            ck.expect(peaks_ok, "peak/213 correspondence n=" + std::to_string(n));
            ck.expect_eq(static_cast<long long>(imstar.size()), stars,
                         "phi_star injective n=" + std::to_string(n));
        }
    }
}

void c12_equivalences(Checker& ck, const OracleConfig& cfg) {
    auto results = identity_suite(9, cfg);
    for (const auto& r : results) {
        if (r.name == "plentiful probability trend") continue;  // informational
        ck.expect(r.pass, r.name + (r.detail.empty() ? "" : " [" + r.detail + "]"));
    }
}

} // namespace

CriterionResult run_criterion(int index, int workers) {
    OracleConfig cfg;
    cfg.workers = workers;
    static const char* names[] = {
        "Wilf-class table rows for 1342/1234/1324, n <= 8",
        "occurrence tables for Av(123) and Av(132), n = 3..7",
        "generating-function catalog prefixes",
        "length-3 occurrence series and formulas vs oracle, n <= 10",
        "involution series vs table and oracle",
        "simple 2341-avoiding involutions are the 123 ones plus 5274163",
        "polynomial-class algorithm vs worked example and brute force",
        "genome ball tables, all six operations",
        "genome BFS oracle agreement, k <= 2, n <= 8",
        "large-pattern laws: del/ins/gap/bond moments",
        "Dyck-path bijections and the peak correspondence",
        "equivalence identities and ltr-minima distribution",
    };
    Checker ck;
    auto start = std::chrono::steady_clock::now();
    switch (index) {
        case 1: c1_wilf_table(ck, cfg); break;
        case 2: c2_occurrence_tables(ck, cfg); break;
        case 3: c3_catalog_prefixes(ck); break;
        case 4: c4_series_vs_oracle(ck, cfg); break;
        case 5: c5_involutions(ck, cfg); break;
        case 6: c6_simple_involution_classification(ck, cfg); break;
        case 7: c7_polyclass(ck); break;
        case 8: c8_genome_tables(ck); break;
        case 9: c9_genome_oracle(ck); break;
        case 10: c10_chapter5_laws(ck); break;
        case 11: c11_bijections(ck, cfg); break;
        case 12: c12_equivalences(ck, cfg); break;
        default: throw std::invalid_argument("run_criterion: index must be 1..12");
    }
    auto stop = std::chrono::steady_clock::now();
    CriterionResult r;
    r.id = "c" + std::to_string(index);
    r.name = names[index - 1];
    r.pass = ck.pass;
    r.detail = ck.summary();
    r.seconds = std::chrono::duration<double>(stop - start).count();
    return r;
}

std::vector<CriterionResult> run_acceptance(const std::vector<std::string>& selection, int workers) {
    std::vector<int> picks;
    if (selection.empty()) {
        for (int i = 1; i <= 12; ++i) picks.push_back(i);
    } else {
        for (const auto& sel : selection) {
            if (sel == "all") {
                for (int i = 1; i <= 12; ++i) picks.push_back(i);
            } else if (sel == "paper-tables") {
                for (int i : {1, 2, 3, 5, 8}) picks.push_back(i);
            } else {
                std::string t = sel;
                if (!t.empty() && (t[0] == 'c' || t[0] == 'C')) t = t.substr(1);
                picks.push_back(std::stoi(t));
            }
        }
    }
    std::vector<CriterionResult> out;
    for (int i : picks) out.push_back(run_criterion(i, workers));
    return out;
}

} // namespace permpat
