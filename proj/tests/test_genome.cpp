#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "permpat/genome.hpp"

#include <numeric>

using namespace permpat;

namespace {

PegPerm G(const std::string& s) { return PegPerm::parse(s); }
Permutation P(const std::string& s) { return Permutation::parse(s); }

long long gf_count(const PolyclassResult& r, int n) {
    Series s = r.gf.to_series(n);
    REQUIRE(s.coeff(n).is_integer());
    return s.coeff(n).num().to_int64();
}

bool same_class(const std::set<PegPerm>& a, const std::set<PegPerm>& b, int up_to = 8) {
    for (int n = 1; n <= up_to; ++n)
        if (brute_class_set(a, n) != brute_class_set(b, n)) return false;
    return true;
}

} // namespace

TEST_CASE("single moves from the identity match the figures") {
    std::set<PegPerm> id{G("+1")};
    auto rev = apply_to_pegset(BlockOp::block_reversal, id);
    CHECK(same_class(rev, {G("+1 -2 +3")}));
    auto prev = apply_to_pegset(BlockOp::prefix_reversal, id);
    CHECK(same_class(prev, {G("-1 +2")}));
    auto trans = apply_to_pegset(BlockOp::block_transposition, id);
    CHECK(same_class(trans, {G("+1 +3 +2 +4")}));
}

TEST_CASE("two block reversals match the four-peg description") {
    auto ball2 = ball_pegset(BlockOp::block_reversal, 2);
    std::set<PegPerm> four{G("+1 -4 +3 -2 +5"), G("+1 -2 +3 -4 +5"), G("+1 +4 -2 -3 +5"),
                           G("+1 -3 -4 +2 +5")};
    CHECK(same_class(ball2, four, 7));
}

TEST_CASE("ball polynomials reproduce the printed rows") {
    {
        auto res = ball_polynomial(BlockOp::block_transposition, 2);
        long long want[] = {1, 2, 6, 23, 89, 295, 827, 2017, 4405, 8812};
        for (int n = 1; n <= 10; ++n) CHECK(gf_count(res, n) == want[n - 1]);
    }
    {
        auto res = ball_polynomial(BlockOp::prefix_reversal, 3);
        long long want[] = {1, 2, 6, 21, 52, 105, 186, 301, 456, 657};
        for (int n = 1; n <= 10; ++n) CHECK(gf_count(res, n) == want[n - 1]);
        std::vector<long long> basis;
        for (const auto& b : res.poly.binomial_coeffs) basis.push_back(b.to_int64());
        CHECK(basis == std::vector<long long>{-3, 3, -2, 6});
    }
    {
        auto res = ball_polynomial(BlockOp::cut_paste, 1);
        long long want[] = {1, 2, 6, 16, 35, 66, 112, 176, 261, 370};
        for (int n = 1; n <= 10; ++n) CHECK(gf_count(res, n) == want[n - 1]);
    }
}

TEST_CASE("bfs oracle agrees on small cases") {
    CHECK(bfs_ball(BlockOp::block_interchange, 1, 6) == 71);
    CHECK(bfs_ball(BlockOp::block_reversal, 2, 7) == 288);
    for (BlockOp op : all_block_ops()) CHECK(bfs_ball(op, 0, 5) == 1);
    for (BlockOp op : all_block_ops())
        for (int k = 1; k <= 2; ++k) {
            auto res = ball_polynomial(op, k);
            Series s = res.gf.to_series(7);
            for (int n = 1; n <= 7; ++n) {
                INFO(to_string(op), " k=", k, " n=", n);
                CHECK(bfs_ball(op, k, n) == s.coeff(n).num().to_int64());
            }
        }
}

TEST_CASE("balls nest as classes") {
    for (BlockOp op : all_block_ops()) {
        Series small = ball_polynomial(op, 1).gf.to_series(9);
        Series large = ball_polynomial(op, 2).gf.to_series(9);
        for (int n = 1; n <= 9; ++n) CHECK(small.coeff(n) <= large.coeff(n));
    }
}

TEST_CASE("reversal balls are closed under reverse-complement") {
    auto rc = [](const PegPerm& p) {
        int m = p.size();
        std::vector<int> r(m);
        std::string d(m, '.');
        for (int i = 0; i < m; ++i) {
            r[m - 1 - i] = m + 1 - p.ranks[i];
            d[m - 1 - i] = p.decs[i];
        }
        return PegPerm(std::move(r), std::move(d));
    };
    for (int k = 1; k <= 2; ++k) {
        auto ball = ball_pegset(BlockOp::block_reversal, k);
        std::set<PegPerm> mirrored;
        for (const auto& p : ball) mirrored.insert(rc(p));
        CHECK(same_class(ball, mirrored, 7));
    }
}

TEST_CASE("distances match ball membership") {
    // prefix reversal distance of the reversed identity
    CHECK(op_distance(P("3 2 1"), BlockOp::prefix_reversal) == 1);
    CHECK(op_distance(P("1 2 3"), BlockOp::prefix_reversal) == 0);
    CHECK(op_distance(P("3 4 1 2"), BlockOp::block_transposition) == 1);
    // every op is reversible, so distance <= k iff inside the BFS ball
    for (BlockOp op : all_block_ops()) {
        std::vector<int> v{1, 2, 3, 4, 5};
        int within1 = 0;
        long long b1 = bfs_ball(op, 1, 5);
        do {
            Permutation p{std::vector<int>(v)};
            if (op_distance(p, op) <= 1) ++within1;
        } while (std::next_permutation(v.begin(), v.end()));
        CHECK(within1 == b1);
    }
}

TEST_CASE("blow-up guard") {
    BallConfig tight;
    tight.max_set_size = 10;
    CHECK_THROWS_AS(ball_pegset(BlockOp::cut_paste, 2, tight), std::runtime_error);
}

TEST_CASE("neighbour generation sanity") {
    // a single cut-paste can reverse in place, a transposition cannot
    auto has = [](const std::vector<Permutation>& v, const Permutation& p) {
        return std::find(v.begin(), v.end(), p) != v.end();
    };
    CHECK(has(op_neighbours(P("1 2 3"), BlockOp::cut_paste), P("3 2 1")));
    CHECK(!has(op_neighbours(P("1 2 3"), BlockOp::block_transposition), P("3 2 1")));
    CHECK(has(op_neighbours(P("1 2 3 4"), BlockOp::block_interchange), P("4 3 2 1")) == false);
    CHECK(has(op_neighbours(P("1 2 3 4"), BlockOp::block_interchange), P("3 4 1 2")));
    CHECK(has(op_neighbours(P("1 2 3"), BlockOp::prefix_transposition), P("2 3 1")));
}
