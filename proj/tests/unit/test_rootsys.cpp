#include "doctest.h"

#include "codelat/rootsys.hpp"

#include <random>

using namespace codelat;

TEST_CASE("decompose labels")
{
    Lattice a22 = root_power(3, 2);
    auto parts = decompose(roots(a22), a22.denom());
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].type == "A2");
    CHECK(parts[1].type == "A2");

    Lattice e8 = e8_lattice();
    auto e = decompose(roots(e8), e8.denom());
    REQUIRE(e.size() == 1);
    CHECK(e[0].type == "E8");
    CHECK(e[0].base.size() == 8);

    Lattice l = construction_A(Code(3, 3, std::vector<FpVec>{{1, 1, 1}}));
    auto one = decompose(roots(l), l.denom());
    REQUIRE(one.size() == 1);
    CHECK(one[0].roots.size() == 72);
    CHECK(one[0].type == "E6");
}

TEST_CASE("frames")
{
    CHECK(find_frames(an_lattice(3), 3).size() == 1);
    Lattice l7 = construction_A(Code(7, 3, std::vector<FpVec>{{1, 2, 3}}));
    auto f7 = find_frames(l7, 7);
    REQUIRE(f7.size() == 1);
    CHECK(is_frame(f7[0], 7, l7.rank()));

    Lattice l3 = construction_A(Code(3, 3, std::vector<FpVec>{{1, 1, 1}}));
    auto f3 = find_frames(l3, 3);
    CHECK(f3.size() > 1);
    for (const auto& f : f3) CHECK(is_frame(f, 3, l3.rank()));
    CHECK_THROWS_AS(find_frames(l3, 3, 10), std::length_error);
}

TEST_CASE("recover code")
{
    Code c(3, 3, std::vector<FpVec>{{1, 1, 1}});
    CHECK(recover_code(3, construction_A(c)) == c);
    CHECK(recover_code(5, root_power(5, 2)) == Code::zero(5, 2));
}

TEST_CASE("normalize scrambled frames")
{
    for (auto c : {Code(3, 3, std::vector<FpVec>{{1, 1, 1}}), Code(5, 2, std::vector<FpVec>{{1, 2}}),
                   Code(3, 4, std::vector<FpVec>{{1, 1, 1, 0}, {0, 1, 2, 1}})}) {
        Lattice l = construction_A(c);
        auto rs = roots(l);
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<IntVec> word;
            for (int i = 0; i < 6; ++i) word.push_back(rs[rng() % rs.size()]);
            Frame f = apply_reflections(standard_frame(c.p(), c.length(), l.denom()), word);
            auto g = normalize_frame(c, f);
            CHECK(transform(l, g.ambient) == l);
            CHECK(g.generic_steps == 0);
            Frame back = apply_reflections(f, g.word);
            CHECK(back.all_roots().size() == standard_frame(c.p(), c.length(), l.denom()).all_roots().size());
            Lattice charted = transform(l, frame_chart(f, c.p()));
            CHECK(equivalent(recover_code(c.p(), charted), c));
        }
    }
}

TEST_CASE("E8 chain facts")
{
    auto counts = e8_chain_counts();
    CHECK(counts.completions == 24192);
    CHECK(counts.chains == 2903040);
    CHECK(counts.orthogonal_roots == 20);
    CHECK(counts.orthogonal_type == "A4");

    auto rs = e8_roots();
    std::vector<IntVec> s1{{2, 2, 0, 0, 0, 0, 0, 0}};
    // extend to a chain by search
    for (const auto& a : rs)
        if (s1.size() == 1 && dot_ck(a, s1[0]) == -4) s1.push_back(a);
    for (const auto& a : rs)
        if (s1.size() == 2 && dot_ck(a, s1[1]) == -4 && dot_ck(a, s1[0]) == 0) s1.push_back(a);
    for (const auto& a : rs)
        if (s1.size() == 3 && dot_ck(a, s1[2]) == -4 && dot_ck(a, s1[0]) == 0 && dot_ck(a, s1[1]) == 0) s1.push_back(a);
    REQUIRE(is_chain(s1, 2));
    std::vector<IntVec> s2(s1.rbegin(), s1.rend());
    auto w = e8_chain_transport(rs, 2, s1, s2);
    REQUIRE(w);
    for (int i = 0; i < 4; ++i) {
        IntVec v = s1[i];
        for (const auto& a : *w) v = reflect(v, a, 2);
        CHECK(v == s2[i]);
    }
    auto same = e8_chain_transport(rs, 2, s1, s1);
    REQUIRE(same);
    CHECK(same->empty());
}

TEST_CASE("E8 from glue")
{
    auto g = e8_glue_check();
    CHECK(g.lambdas == 400);
    CHECK(g.even == 400);
    CHECK(g.unimodular == 400);
    CHECK(g.with_240_roots == 400);
}
