#include "support.hpp"
#include "symtutte/error.hpp"
#include "symtutte/fq_engine.hpp"
#include "symtutte/subset_engine.hpp"
#include "symtutte/symmetric_engine.hpp"

#include <doctest.h>

#include <set>

using namespace symtutte;
using testing::arr;
using testing::hp;

namespace {

const TPoly t = TPoly::variable();

RepEquation rep(std::vector<long> coeffs, long rhs) {
    return RepEquation(std::vector<Rational>(coeffs.begin(), coeffs.end()), Rational(rhs));
}

std::vector<std::vector<std::uint32_t>> tuples(const std::vector<CanonicalSolution>& s) {
    std::vector<std::vector<std::uint32_t>> out;
    for (const auto& x : s) out.push_back(x.tuple);
    return out;
}

using Tuples = std::vector<std::vector<std::uint32_t>>;

}  // namespace

TEST_CASE("RepEquation invariants") {
    CHECK_THROWS_AS(rep({}, 0), InvalidArgument);
    CHECK_THROWS_AS(rep({1, 0}, 0), InvalidArgument);
    CHECK(rep({1, -1}, 1).hyperplane(3) == hp({1, -1, 0}, 1));
    CHECK(rep({1, -1}, 1).to_string() == "x_1 - x_2 = 1");
}

TEST_CASE("extract_representatives examples") {
    const auto i2 = extract_representatives(testing::family("i-arrangement", 2));
    REQUIRE(i2.size() == 3);
    CHECK(i2[0] == rep({1}, 0));
    CHECK(i2[1] == rep({1}, 1));
    CHECK(i2[2] == rep({1, 1}, 1));
    const auto st3 = extract_representatives(testing::family("shi-threshold", 3));
    CHECK(st3 == std::vector<RepEquation>{rep({1, 1}, 0), rep({1, 1}, 1)});
    const auto c4 = extract_representatives(testing::family("catalan", 4));
    CHECK(c4 == std::vector<RepEquation>{rep({1, -1}, 0), rep({1, -1}, 1)});
    CHECK(extract_representatives(Arrangement(3)).empty());
}

TEST_CASE("extract_representatives rejects non-symmetric input") {
    const auto a = arr(3, {hp({1, -1, 0}, 0), hp({1, 0, -1}, 0)});
    CHECK_THROWS_WITH_AS(extract_representatives(a), doctest::Contains("not symmetric"), InvalidArgument);
}

TEST_CASE("stabilizers") {
    CHECK(Stabilizer::of(rep({1, -1}, 0)).order() == 2);
    CHECK(Stabilizer::of(rep({1, -1}, 1)).order() == 1);
    CHECK(Stabilizer::of(rep({1, 1, 1}, 2)).order() == 6);
    CHECK(Stabilizer::of(rep({1, 1, 2}, 2)).order() == 2);
}

TEST_CASE("solutions_mod_q examples") {
    CHECK(tuples(solutions_mod_q(rep({1, -1}, 0), 5)) == Tuples{{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}});
    const auto e1 = tuples(solutions_mod_q(rep({1, -1}, 1), 5));
    CHECK(std::set<std::vector<std::uint32_t>>(e1.begin(), e1.end()) ==
          std::set<std::vector<std::uint32_t>>{{1, 0}, {2, 1}, {3, 2}, {4, 3}, {0, 4}});
    CHECK(tuples(solutions_mod_q(rep({1, 1}, 1), 5)) == Tuples{{0, 1}, {2, 4}, {3, 3}});
    CHECK(tuples(solutions_mod_q(rep({1}, 1), 7)) == Tuples{{1}});
    CHECK_THROWS_AS(solutions_mod_q(rep({1, 5}, 1), 5), CertificationError);
}

TEST_CASE("shi-threshold solutions include (0, 1)") {
    const auto s = tuples(solutions_mod_q(rep({1, 1}, 1), 7));
    CHECK(s == Tuples{{0, 1}, {2, 6}, {3, 5}, {4, 4}});
}

TEST_CASE("canonical solution statistics") {
    const auto s = solutions_mod_q(rep({1, 1}, 1), 5);
    CHECK(s[2].tuple == std::vector<std::uint32_t>{3, 3});
    CHECK(s[2].support == std::vector<std::uint32_t>{3});
    CHECK(s[2].occurrences == std::vector<std::pair<std::uint32_t, unsigned>>{{3, 2}});
    CHECK(s[2].orbit_size == 1);
    CHECK(s[0].orbit_size == 2);
}

TEST_CASE("h_symbolic examples") {
    const auto c2 = analyze_representatives(extract_representatives(testing::family("catalan", 2)), 5);
    CHECK(h_symbolic(c2.solutions, FqPoint{{0, 0}, 5}) == 1);
    const auto st2 = analyze_representatives(extract_representatives(testing::family("shi-threshold", 2)), 5);
    CHECK(h_symbolic(st2.solutions, FqPoint{{2, 3}, 5}) == 1);
    // weyl-a: sum_k C(|A_k(y)|, 2)
    const auto a = analyze_representatives({rep({1, -1}, 0)}, 7);
    CHECK(h_symbolic(a.solutions, FqPoint{{3, 3, 3, 1, 1, 0}, 7}) == 3 + 1);
}

TEST_CASE("indice partition examples") {
    const auto a = analyze_representatives({rep({1, -1}, 0)}, 5);
    REQUIRE(a.partition.blocks.size() == 5);
    for (std::uint32_t k = 0; k < 5; ++k) CHECK(a.partition.blocks[k].support == std::vector<std::uint32_t>{k});

    const auto c = analyze_representatives(extract_representatives(testing::family("catalan", 3)), 5);
    REQUIRE(c.partition.blocks.size() == 1);
    CHECK(c.partition.blocks[0].members.size() == 10);

    const auto i = analyze_representatives(extract_representatives(testing::family("i-arrangement", 3)), 7);
    REQUIRE(i.partition.blocks.size() == 4);
    CHECK(i.partition.blocks[0].support == std::vector<std::uint32_t>{0, 1});
    CHECK(i.partition.blocks[0].members.size() == 3);
    CHECK(i.partition.blocks[1].support == std::vector<std::uint32_t>{2, 6});
    CHECK(i.partition.blocks[2].support == std::vector<std::uint32_t>{3, 5});
    CHECK(i.partition.blocks[3].support == std::vector<std::uint32_t>{4});
    CHECK(i.partition.free_residues().empty());

    const auto st = analyze_representatives({rep({1}, 0)}, 5);
    CHECK(st.partition.free_residues() == std::vector<std::uint32_t>{1, 2, 3, 4});
}

TEST_CASE("coboundary_closed_form examples") {
    CHECK(coboundary_closed_form(testing::family("weyl-a", 2), 3) == t + 2);
    CHECK(coboundary_closed_form(testing::family("catalan", 2), 5) == 3 * t + 2);
    CHECK(coboundary_closed_form(Arrangement(3), 7) == TPoly(1));
    CHECK_THROWS_AS(coboundary_closed_form(testing::family("catalan", 5), 5), CertificationError);
    CHECK_THROWS_AS(coboundary_closed_form(arr(2, {hp({1, 0}, 0)}), 5), InvalidArgument);
}

TEST_CASE("equations outside binomial counting are refused") {
    // x_1 + 2x_2 = 0 has a trivial stabilizer but the solution (0, 0) repeats a residue.
    const auto a = symmetric_arrangement(3, std::vector<RepEquation>{rep({1, 2}, 0)});
    CHECK_THROWS_AS(coboundary_closed_form(a, 7), Unsupported);
    CHECK_THROWS_AS(analyze_representatives({rep({1, 2}, 0)}, 7), Unsupported);
    // (0, 0, 1) solves x_1 + 2x_2 + x_3 = 1 with the repeated residue on non-interchangeable positions
    const auto b = symmetric_arrangement(3, std::vector<RepEquation>{rep({1, 1, 2}, 1)});
    CHECK_THROWS_WITH_AS(coboundary_closed_form(b, 7), doctest::Contains("(0, 0, 1)"), Unsupported);
    // x_1 + x_2 + x_3 = 1: every repeat is interchangeable
    const auto c = symmetric_arrangement(4, std::vector<RepEquation>{rep({1, 1, 1}, 1)});
    CHECK(coboundary_closed_form(c, 7) == coboundary_at_prime(c, 7));
}

TEST_CASE("symmetric_arrangement rejects equivalent representatives") {
    CHECK_THROWS_AS(symmetric_arrangement(2, std::vector<RepEquation>{rep({1, -1}, 1), rep({1, -1}, -1)}), InvalidArgument);
}

TEST_CASE("property: h_symbolic equals h_count on 500 random points per fixture") {
    std::mt19937_64 rng(37);
    for (const auto& name : testing::family_names()) {
        for (std::size_t n = 2; n <= 5; ++n) {
            const auto a = testing::family(name, n);
            for (std::uint32_t q : {5u, 7u, 11u}) {
                if (!certify_prime(a, q)) continue;
                const auto analysis = analyze_representatives(extract_representatives(a), q);
                const ReducedArrangement reduced(clear_denominators(a), q);
                for (int k = 0; k < 500; ++k) {
                    FqPoint y{std::vector<std::uint32_t>(n), q};
                    for (auto& v : y.coords) v = static_cast<std::uint32_t>(rng() % q);
                    CHECK(h_symbolic(analysis.solutions, y) == h_count(reduced, y));
                }
            }
        }
    }
}

TEST_CASE("property: closed form equals fq engine on all fixtures") {
    for (const auto& name : testing::family_names()) {
        for (std::size_t n = 2; n <= 4; ++n) {
            const auto a = testing::family(name, n);
            for (std::uint32_t q : {5u, 7u, 11u}) {
                CAPTURE(name);
                CAPTURE(n);
                CAPTURE(q);
                REQUIRE(certify_prime(a, q));
                CHECK(coboundary_closed_form(a, q) == coboundary_at_prime(a, q));
            }
        }
    }
}

TEST_CASE("property: partition soundness") {
    for (const auto& name : testing::family_names()) {
        for (std::uint32_t q : {5u, 7u, 11u}) {
            const auto analysis = analyze_representatives(extract_representatives(testing::family(name, 3)), q);
            std::size_t members = 0;
            std::set<std::uint32_t> seen;
            for (const auto& block : analysis.partition.blocks) {
                members += block.members.size();
                for (auto k : block.support) CHECK(seen.insert(k).second);
            }
            CHECK(members == analysis.solutions.size());

            IndicePartition singletons{q, {}};
            for (const auto& s : analysis.solutions) singletons.blocks.push_back({s.support, {s}});
            for (std::size_t n = 2; n <= 5; ++n) {
                CHECK(composition_sum(singletons, n) == composition_sum(analysis.partition, n));
            }
        }
    }
}

TEST_CASE("property: orbit sizes add up to raw solution counts") {
    for (const auto& e : {rep({1, -1}, 0), rep({1, -1}, 1), rep({1, 1}, 1), rep({1}, 0), rep({1, 1, 1}, 2),
                          rep({1, 1, -1}, 0), rep({2, 1, 1}, 3)}) {
        for (std::uint32_t q : {5u, 7u, 11u, 13u}) {
            std::size_t total = 0;
            for (const auto& s : solutions_mod_q(e, q)) total += s.orbit_size;
            CHECK(total == raw_solution_count(e, q));
        }
    }
}

TEST_CASE("property: composition sum independent of thread count") {
    const auto analysis = analyze_representatives(extract_representatives(testing::family("catalan", 6)), 7);
    const auto base = composition_sum(analysis.partition, 6, 1);
    CHECK(composition_sum(analysis.partition, 6, 3) == base);
}
