#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "permpat/catalog.hpp"
#include "permpat/dyck.hpp"
#include "permpat/oracle.hpp"

#include <map>
#include <set>

using namespace permpat;

namespace {

Permutation P(const std::string& s) { return Permutation::parse(s); }

std::vector<Permutation> members(const char* basis, int n) {
    std::vector<Permutation> out;
    enumerate_class({{Permutation::parse(basis)}, false, n}, {}, &out);
    return out;
}

} // namespace

TEST_CASE("path validation") {
    CHECK(DyckPath::parse("uudd").semilength() == 2);
    CHECK(DyckPath::parse("").semilength() == 0);
    CHECK_THROWS(DyckPath::parse("du"));
    CHECK_THROWS(DyckPath::parse("uud"));
    CHECK_THROWS(DyckPath::parse("uxd"));
    CHECK(peak_heights(DyckPath::parse("uudd")) == std::vector<int>{2});
    CHECK(peak_heights(DyckPath::parse("ududud")) == std::vector<int>{1, 1, 1});
}

TEST_CASE("dyck path counts are Catalan") {
    long long want[] = {1, 1, 2, 5, 14, 42, 132};
    for (int n = 0; n <= 6; ++n)
        CHECK(static_cast<long long>(all_dyck(n).size()) == want[n]);
}

TEST_CASE("phi on the worked example") {
    // the printed source string is one 'd' short of a balanced path; the
    // recursion pins the corrected value
    CHECK(phi(P("7 4 3 5 2 6 8 1")).to_string() == "uuduuududdudddud");
    CHECK(phi(P("2 1")).to_string() == "udud");
    CHECK(phi(P("1")).to_string() == "ud");
    CHECK(phi(Permutation()).to_string() == "");
    CHECK_THROWS_WITH_AS(phi(P("1 3 2")), doctest::Contains("contains 132 at positions 1,2,3"),
                         std::invalid_argument);
}

TEST_CASE("phi inverse") {
    CHECK(phi_inverse(DyckPath::parse("ud")) == P("1"));
    CHECK(phi_inverse(DyckPath::parse("udud")) == P("2 1"));
    CHECK(phi_inverse(DyckPath::parse("uuduuududdudddud")) == P("7 4 3 5 2 6 8 1"));
    for (int n = 0; n <= 8; ++n)
        for (const auto& d : all_dyck(n)) CHECK(phi(phi_inverse(d)) == d);
}

TEST_CASE("phi bijects Av(132) onto Dyck paths") {
    for (int n = 1; n <= 8; ++n) {
        std::set<DyckPath> image;
        for (const auto& p : members("1 3 2", n)) {
            DyckPath d = phi(p);
            CHECK(d.semilength() == n);
            CHECK(phi_inverse(d) == p);
            image.insert(d);
        }
        CHECK(image.size() == all_dyck(n).size());
    }
}

TEST_CASE("phi_prime bijects Av(123) onto Dyck paths") {
    CHECK(phi_prime(P("1")).to_string() == "ud");
    CHECK_THROWS(phi_prime(P("1 2 3")));
    for (int n = 1; n <= 8; ++n) {
        std::set<DyckPath> image;
        for (const auto& p : members("1 2 3", n)) {
            DyckPath d = phi_prime(p);
            CHECK(d.semilength() == n);
            image.insert(d);
        }
        CHECK(image.size() == all_dyck(n).size());
    }
}

TEST_CASE("the composite bijection preserves ltr-minima positions") {
    for (int n = 1; n <= 8; ++n)
        for (const auto& p : members("1 2 3", n)) {
            Permutation q = phi_inverse(phi_prime(p));
            CHECK(!contains(P("1 3 2"), q));
            CHECK(ltr_minima_positions(q) == ltr_minima_positions(p));
        }
}

TEST_CASE("phi_star worked example and peak spans") {
    Permutation pi = P("4 8 3 7 1 6 5 2");
    DyckPath d = phi_star(pi);
    CHECK(d.to_string() == "uduuduududddud");
    CHECK(d.semilength() == pi.size() - 1);
    // each rtl-max of span s gives a peak of height s
    std::multiset<int> spans;
    for (int i : rtl_maxima_positions(pi)) spans.insert(span_of_entry(pi, i));
    auto peaks = peak_heights(d);
    CHECK(std::multiset<int>(peaks.begin(), peaks.end()) == spans);
    // the unique length-2 domain member (single rtl-max of span 1); 21 is
    // skew decomposable and outside the domain
    CHECK(phi_star(P("1 2")).to_string() == "ud");
    CHECK_THROWS(phi_star(P("2 1")));
    CHECK_THROWS(phi_star(P("3 2 1")));  // skew decomposable
    CHECK_THROWS(phi_star(P("1 2 3")));
}

TEST_CASE("peak correspondence counts 213 patterns") {
    const Permutation p213 = P("2 1 3");
    for (int n = 2; n <= 9; ++n) {
        long long total_weighted = 0;
        for (const auto& p : members("1 2 3", n)) {
            if (is_skew_decomposable(p)) continue;
            long long weighted = 0;
            for (int h : peak_heights(phi_star(p)))
                weighted += static_cast<long long>(h) * (h - 1) / 2;
            CHECK(weighted == count_occurrences(p213, p));
            total_weighted += weighted;
        }
        // aggregate equals the 213-star series: 1, 7, 38, 187, 874 from n = 3
        static const std::map<int, long long> agg{{3, 1}, {4, 7}, {5, 38}, {6, 187}, {7, 874}};
        if (auto it = agg.find(n); it != agg.end()) CHECK(total_weighted == it->second);
    }
}

TEST_CASE("peak-height table matches the marking series") {
    PolySeries H = peaks_H(8);
    for (int n = 1; n <= 8; ++n) {
        std::map<int, long long> by_height;
        for (const auto& d : all_dyck(n))
            for (int h : peak_heights(d)) ++by_height[h];
        for (int k = 1; k <= n; ++k) {
            long long want = by_height.count(k) ? by_height[k] : 0;
            CHECK(H.coeff(n).coeff(k) == Rational(want));
        }
    }
}

TEST_CASE("aggregate peak heights match the H series check") {
    // sum over peaks of C(h,2) across all paths of semilength 4 equals the
    // coefficient 38 of x^5 in the 213-star series
    long long total = 0;
    for (const auto& d : all_dyck(4))
        for (int h : peak_heights(d)) total += static_cast<long long>(h) * (h - 1) / 2;
    CHECK(total == 38);
}
