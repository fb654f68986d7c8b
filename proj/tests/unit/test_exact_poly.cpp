#include "support.hpp"
#include "symtutte/error.hpp"
#include "symtutte/exact_poly.hpp"
#include "symtutte/subset_engine.hpp"

#include <doctest.h>

using namespace symtutte;

namespace {

const CoboundaryPoly Q = CoboundaryPoly::first_var();
const CoboundaryPoly T = CoboundaryPoly::second_var();
const TuttePoly X = TuttePoly::first_var();
const TuttePoly Y = TuttePoly::second_var();

TuttePoly random_bipoly(std::mt19937_64& rng) {
    TuttePoly p;
    for (int k = 0; k < 4; ++k) p.add_term(rng() % 3, rng() % 3, testing::frac(static_cast<long>(rng() % 7) - 3, 1 + rng() % 2));
    return p;
}

}  // namespace

TEST_CASE("ring operations") {
    CHECK((X + 1) + (X - 1) == 2 * X);
    CHECK((X * X + X + Y).eval_at(2, 3) == 9);
    CHECK(pow(T - 1, 2) == T * T - 2 * T + 1);
    CHECK((X + Y) - (X + Y) == TuttePoly());
    CHECK((X * Y).to_string() == "x*y");
}

TEST_CASE("graded-lex rendering") {
    CHECK((X * X + X + Y).to_string() == "x^2 + x + y");
    CHECK((Q + 3 * T - 3).to_string() == "q + 3t - 3");
    CHECK((Rational(1, 2) * X - Y * Y).to_string() == "-y^2 + (1/2)x");
    CHECK(TuttePoly().to_string() == "0");
    CHECK(CharPoly::variable().to_string() == "q");
    CHECK((pow(TPoly::variable(), 3) * Rational(-2) + 1).to_string() == "-2t^3 + 1");
}

TEST_CASE("tutte_from_coboundary examples") {
    CHECK(tutte_from_coboundary(Q + T - 1, 1) == X);
    // ((x - 1)(y - 1) + 3(y - 1)) / (y - 1)
    CHECK(tutte_from_coboundary(Q + 3 * T - 3, 1) == X + 2);
    CHECK(tutte_from_coboundary(CoboundaryPoly(1), 0) == TuttePoly(1));
}

TEST_CASE("tutte_from_coboundary rejects a wrong rank") {
    CHECK_THROWS_AS(tutte_from_coboundary(Q + T - 1, 2), IntegrityAlarm);
    CHECK_THROWS_AS(tutte_from_coboundary(Q + 2 * T, 1), IntegrityAlarm);
}

TEST_CASE("characteristic_from_coboundary examples") {
    const CharPoly q = CharPoly::variable();
    CHECK(characteristic_from_coboundary(Q + 3 * T - 3, 2, 1) == q * q - 3 * q);
    CHECK(characteristic_from_coboundary(Q + T - 1, 2, 1) == q * q - q);
    CHECK(characteristic_from_coboundary(CoboundaryPoly(1), 3, 0) == pow(q, 3));
}

TEST_CASE("region counts") {
    const CharPoly q = CharPoly::variable();
    CHECK(regions(q * q - 3 * q, 2) == 4);
    CHECK(regions(q * q - 5 * q + 6, 2) == 12);
    CHECK(bounded_regions(q * q - 5 * q + 6, 2) == 2);
    CHECK(regions(q * q - 2 * q, 2) == 3);
    CHECK(bounded_regions(q * q - 2 * q, 1) == 1);
    CHECK_THROWS_AS(regions(q * q + 3 * q, 2), IntegrityAlarm);
    CHECK_THROWS_AS(regions(q * Rational(1, 2), 1), IntegrityAlarm);
}

TEST_CASE("property: ring axioms on random polynomials") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_bipoly(rng), b = random_bipoly(rng), c = random_bipoly(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a + b) - b == a);
        const Rational u = testing::frac(static_cast<long>(rng() % 9) - 4, 3), v = testing::frac(static_cast<long>(rng() % 9) - 4, 5);
        CHECK((a * b).eval_at(u, v) == a.eval_at(u, v) * b.eval_at(u, v));
    }
}

TEST_CASE("property: tutte/coboundary round trip at random rational points") {
    std::mt19937_64 rng(19);
    for (const auto& name : testing::family_names()) {
        for (std::size_t n = 2; n <= 3; ++n) {
            const auto a = testing::family(name, n);
            const auto cb = coboundary_by_definition(a);
            const auto tp = tutte_from_coboundary(cb, a.rank());
            for (int k = 0; k < 20; ++k) {
                const Rational q0 = testing::frac(static_cast<long>(rng() % 21) - 10, 1 + rng() % 4);
                Rational t0 = testing::frac(static_cast<long>(rng() % 21) - 10, 1 + rng() % 4);
                if (t0 == 1) t0 = 2;
                Rational scale = 1;
                for (std::size_t i = 0; i < a.rank(); ++i) scale *= t0 - 1;
                CHECK(tp.eval_at((q0 + t0 - 1) / (t0 - 1), t0) * scale == cb.eval_at(q0, t0));
            }
        }
    }
}

TEST_CASE("property: T(2,2) = 2^|A| on central fixtures") {
    for (std::size_t n = 2; n <= 5; ++n) {
        const auto a = testing::family("weyl-a", n);
        CHECK(tutte_by_definition(a).eval_at(2, 2) == Rational(Integer(1) << a.size()));
    }
    const auto braid_plus = testing::arr(3, {testing::hp({1, 0, 0}, 0), testing::hp({1, 1, 0}, 0), testing::hp({0, 1, 1}, 0),
                                             testing::hp({1, 1, 1}, 0)});
    CHECK(tutte_by_definition(braid_plus).eval_at(2, 2) == 16);
}
