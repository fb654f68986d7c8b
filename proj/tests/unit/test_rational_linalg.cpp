#include "support.hpp"
#include "symtutte/error.hpp"
#include "symtutte/linalg.hpp"

#include <doctest.h>

using namespace symtutte;

TEST_CASE("parse_rational accepts integers and fractions") {
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK(parse_rational("-1/2") == Rational(-1, 2));
    CHECK(to_string(parse_rational("10/5")) == "2");
}

TEST_CASE("parse_rational rejects malformed input") {
    for (const char* bad : {"", "1/0", "a", "1/", "/2", "1.5", "--1", "1 2"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_rational(bad), InvalidArgument);
    }
}

TEST_CASE("binomial and residue") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(2, 5) == 0);
    CHECK(binomial(60, 30) == Integer("118264581564861424"));
    CHECK(residue(Integer(-1), 5) == 4);
    CHECK(residue(Integer(12), 5) == 2);
}

TEST_CASE("primitive_integer_row clears denominators and content") {
    std::vector<Rational> row{Rational(1, 2), Rational(1), Rational(1)};
    CHECK(linalg::primitive_integer_row(row) == std::vector<Integer>{1, 2, 2});
    std::vector<Rational> row2{Rational(2, 3), Rational(4, 3)};
    CHECK(linalg::primitive_integer_row(row2) == std::vector<Integer>{1, 2});
}

TEST_CASE("echelon insert and pop track rank") {
    linalg::RationalEchelon<std::int64_t> e(3);
    const std::vector<std::int64_t> a{1, -1, 0}, b{0, 1, -1}, c{1, 0, -1};
    CHECK(e.insert(a));
    CHECK(e.insert(b));
    CHECK_FALSE(e.insert(c));
    CHECK(e.rank() == 2);
    e.pop();
    CHECK(e.insert(c));
    CHECK(e.rank() == 2);
}

TEST_CASE("int64 echelon reports overflow instead of wrapping") {
    linalg::RationalEchelon<std::int64_t> e(2);
    const std::int64_t big = std::int64_t{1} << 62;
    const std::vector<std::int64_t> a{big, 3}, b{3, big};
    CHECK(e.insert(a));
    CHECK_THROWS_AS(e.insert(b), std::overflow_error);
}

TEST_CASE("modular echelon sees rank drops mod p") {
    linalg::ModularEchelon e(2, 5);
    const std::vector<std::uint32_t> a{1, 2}, b{2, 4}, c{1, 3};
    CHECK(e.insert(a));
    CHECK_FALSE(e.insert(b));
    CHECK(e.insert(c));
    CHECK(linalg::inverse_mod(3, 7) == 5);
}

TEST_CASE("property: echelon rank matches oracle rank on random matrices") {
    std::mt19937_64 rng(20261019);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 5;
        std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols));
        for (auto& r : m)
            for (auto& v : r) v = testing::frac(entry(rng), 1 + rng() % 3);
        CHECK(linalg::rank(m, cols) == testing::oracle_rank(m));
        linalg::RationalEchelon<Integer> big(cols);
        std::size_t inserted = 0;
        for (const auto& r : m) {
            const auto ints = linalg::primitive_integer_row(r);
            bool zero = true;
            for (const auto& v : ints) zero = zero && v == 0;
            if (!zero && big.insert(ints)) ++inserted;
        }
        CHECK(inserted == testing::oracle_rank(m));
    }
}
