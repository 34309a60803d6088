#include "doctest.h"

#include "codelat/constructions.hpp"

using namespace codelat;

TEST_CASE("A_{n-1} basics")
{
    for (int n : {2, 3, 5}) {
        Lattice a = an_lattice(n);
        CHECK(a.rank() == n - 1);
        CHECK(a.det() == n);
        CHECK(is_even(a));
        CHECK(vectors_of_norm(a, 2).size() == static_cast<std::size_t>(n * (n - 1)));
    }
    for (int n = 2; n <= 7; ++n) {
        for (int i = 1; i <= n; ++i) {
            CHECK(norm(an_epsilon(n, i)) == Rational(n - 1, n));
            for (int j = i + 1; j <= n; ++j) CHECK(rat_dot(an_epsilon(n, i), an_epsilon(n, j)) == Rational(-1, n));
        }
        for (int i = 1; i < n; ++i) CHECK(rat_dot(an_alpha(n, i), an_rho(n)) == 1);
    }
}

TEST_CASE("lambda lifts")
{
    CHECK(norm(lambda_lift(3, {1})) == Rational(2, 3));
    // frozen from the brute-force oracle
    std::vector<Rational> n5{0, Rational(4, 5), Rational(6, 5), Rational(6, 5), Rational(4, 5)};
    std::vector<Rational> n7{0, Rational(6, 7), Rational(10, 7), Rational(12, 7), Rational(12, 7), Rational(10, 7), Rational(6, 7)};
    for (int j = 0; j < 5; ++j) CHECK(norm(lambda_j(5, j)) == n5[j]);
    for (int j = 0; j < 7; ++j) CHECK(norm(lambda_j(7, j)) == n7[j]);
    for (int p : {3, 5, 7})
        for (int j = 0; j < p; ++j) {
            auto w = glue_word(p, lambda_j(p, j));
            REQUIRE(w);
            CHECK((*w)[0] == j);
        }
    CHECK(lambda_lift(5, {0, 0}).num == IntVec(10, 0));
    CHECK_THROWS(lambda_j(5, 5));
}

TEST_CASE("chi pairs to 1/p with every simple root")
{
    for (int p : {3, 5, 7}) {
        RatVec chi = chi_vector(p, 2);
        for (int b = 0; b < 2; ++b)
            for (int i = 1; i < p; ++i) CHECK(rat_dot(embed_block(an_alpha(p, i), p, 2, b), chi) == Rational(1, p));
    }
}

TEST_CASE("construction A")
{
    Code zero = Code::zero(3, 2);
    CHECK(construction_A(zero) == root_power(3, 2));

    Code c(3, 3, std::vector<FpVec>{{1, 1, 1}});
    Lattice l = construction_A(c);
    CHECK(is_even(l));
    CHECK(l.det() == 3);
    CHECK(vectors_of_norm(l, 2).size() == 72);

    Code bad(3, 2, std::vector<FpVec>{{1, 0}});
    CHECK_FALSE(is_even(construction_A(bad)));

    Code d(7, 3, std::vector<FpVec>{{1, 2, 3}});
    CHECK(construction_A(d).det() == 7);
    CHECK(vectors_of_norm(construction_A(d), 2).size() == 126);

    // brute-force root counts from the oracle
    CHECK(vectors_of_norm(construction_A(Code(5, 2, std::vector<FpVec>{{1, 2}})), 2).size() == 240);
    CHECK(vectors_of_norm(construction_A(Code(5, 3, std::vector<FpVec>{{1, 2, 0}})), 2).size() == 260);
    CHECK(vectors_of_norm(construction_A(Code(3, 4, std::vector<FpVec>{{1, 1, 1, 0}, {0, 1, 2, 1}})), 2).size() == 240);
}

TEST_CASE("construction A matches the preimage definition")
{
    for (auto c : {Code(3, 3, std::vector<FpVec>{{1, 1, 1}}), Code(3, 2, std::vector<FpVec>{{1, 2}}),
                   Code(3, 3, std::vector<FpVec>{{1, 2, 0}, {0, 0, 1}})})
        CHECK(construction_A(c) == construction_A_preimage(c));
}

TEST_CASE("construction B")
{
    Code c(3, 3, std::vector<FpVec>{{1, 1, 1}});
    Lattice a = construction_A(c), b = construction_B(c);
    CHECK(index(b, a) == 3);
    CHECK(dual(b) == join(construction_A(dual_code(c)), Lattice::from_rational_rows(9, {to_rationals(chi_vector(3, 3))})));
    CHECK(index(construction_B(Code::zero(3, 1)), an_lattice(3)) == 3);
    CHECK_THROWS(construction_B(Code(3, 2, std::vector<FpVec>{{1, 0}})));
}

TEST_CASE("alpha coordinates are partial sums")
{
    CHECK(alpha_coordinates({1, 0, -1}) == IntVec{1, 1});
    CHECK(alpha_coordinates({0, 1, 0, -1}) == IntVec{0, 1, 1});
}
