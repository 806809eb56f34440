#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "permpat/bigint.hpp"
#include "permpat/rational.hpp"

#include <random>

using namespace permpat;

TEST_CASE("bigint small arithmetic") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-17).to_string() == "-17");
    CHECK((BigInt(1000000007) * BigInt(998244353)).to_string() == "998244359987710471");
    CHECK((BigInt(-5) + BigInt(3)).to_int64() == -2);
    CHECK((BigInt(-5) * BigInt(-3)).to_int64() == 15);
    CHECK((BigInt(7) / BigInt(2)).to_int64() == 3);
    CHECK((BigInt(-7) / BigInt(2)).to_int64() == -3);
    CHECK((BigInt(-7) % BigInt(2)).to_int64() == -1);
    CHECK(BigInt(123456789) < BigInt(123456790));
    CHECK(BigInt::from_string("-12345678901234567890123").to_string() ==
          "-12345678901234567890123");
}

TEST_CASE("bigint randomized against int128") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 4000; ++trial) {
        long long a = static_cast<long long>(rng() % (1ull << 54)) - (1ll << 53);
        long long b = static_cast<long long>(rng() % (1ull << 54)) - (1ll << 53);
        BigInt A(a), B(b);
        CHECK((A + B).to_int64() == a + b);
        CHECK((A - B).to_int64() == a - b);
        __int128 prod = static_cast<__int128>(a) * b;
        BigInt P = A * B;
        // compare via string
        bool neg = prod < 0;
        unsigned __int128 u = neg ? -static_cast<unsigned __int128>(prod)
                                  : static_cast<unsigned __int128>(prod);
        std::string want;
        if (u == 0) want = "0";
        while (u) {
            want.insert(want.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
            u /= 10;
        }
        if (neg && want != "0") want.insert(want.begin(), '-');
        CHECK(P.to_string() == want);
        if (b != 0) {
            CHECK((A / B).to_int64() == a / b);
            CHECK((A % B).to_int64() == a % b);
        }
    }
}

TEST_CASE("bigint multi-limb division") {
    BigInt big = BigInt::from_string("340282366920938463463374607431768211455");  // 2^128 - 1
    BigInt d = BigInt::from_string("18446744073709551616");                       // 2^64
    CHECK((big / d).to_string() == "18446744073709551615");
    CHECK((big % d).to_string() == "18446744073709551615");
    BigInt q, r;
    BigInt::divmod(big * big, big, q, r);
    CHECK(q == big);
    CHECK(r.is_zero());
    CHECK(gcd(BigInt::factorial(20), BigInt::factorial(15)) == BigInt::factorial(15));
}

TEST_CASE("binomial and factorial") {
    CHECK(BigInt::binomial(10, 5).to_int64() == 252);
    CHECK(BigInt::binomial(0, 0).to_int64() == 1);
    CHECK(BigInt::binomial(5, 7).is_zero());
    CHECK(BigInt::binomial(7, -1).is_zero());
    CHECK(BigInt::factorial(12).to_int64() == 479001600);
    CHECK(BigInt::binomial(40, 20).to_string() == "137846528820");
}

TEST_CASE("rational arithmetic") {
    Rational a(1, 3), b(1, 6);
    CHECK((a + b) == Rational(1, 2));
    CHECK((a - b) == Rational(1, 6));
    CHECK((a * b) == Rational(1, 18));
    CHECK((a / b) == Rational(2));
    CHECK(Rational(2, -4).to_string() == "-1/2");
    CHECK(Rational(-6, -3).to_string() == "2");
    CHECK(Rational(4, 3) > Rational(5, 4));
    CHECK_THROWS(Rational(1, 0));
}
