#include "doctest.h"

#include "codelat/special.hpp"

using namespace codelat;

TEST_CASE("codes from K_3 and d_5")
{
    K3Code zero1 = make_k3_code(1, {});
    CHECK(code_construction_A3(zero1) == Code(3, 3, std::vector<FpVec>{{1, 1, 1}}));
    CHECK(code_construction_B3(zero1) == Code::zero(3, 3));
    CHECK(code_construction_B3(make_k3_code(2, {})) == Code(3, 6, std::vector<FpVec>{{1, 1, 1, 2, 2, 2}}));

    K3Code k1 = make_k3_code(1, {{1, 2, 0}});
    Code ca = code_construction_A3(k1);
    CHECK(ca == Code(3, 3, std::vector<FpVec>{{1, 2, 0}, {1, 1, 1}}));
    CHECK_FALSE(is_self_orthogonal(k1.code));
    CHECK_FALSE(is_self_orthogonal(ca));
    CHECK_THROWS_AS(make_k3_code(1, {{1, 1, 0}}), std::invalid_argument);

    CHECK(d5_code(1) == Code(5, 2, std::vector<FpVec>{{1, 2}}));
    CHECK(d5_zero_code(1) == Code::zero(5, 2));
    CHECK(d5_zero_code(2) == Code(5, 4, std::vector<FpVec>{{1, 2, 4, 3}}));
    for (int m = 1; m <= 4; ++m) {
        CHECK(is_self_orthogonal(d5_code(m)));
        CHECK(d5_code(m).dim() == m);
        CHECK(d5_zero_code(m).dim() == m - 1);
        CHECK(is_subcode(d5_zero_code(m), d5_code(m)));
    }
}

TEST_CASE("self-orthogonality passes between K and C_A(K)")
{
    std::size_t counts[] = {0, 2, 6, 28};
    for (int m = 1; m <= 3; ++m) {
        auto all = k3_subcodes(m);
        CHECK(all.size() == counts[m]);
        for (const auto& k : all) {
            CHECK(is_self_orthogonal(k.code) == is_self_orthogonal(code_construction_A3(k)));
            CHECK(is_subcode(code_construction_B3(k), code_construction_A3(k)));
        }
    }
}

TEST_CASE("realization over F_3")
{
    // (1,2,0,1,2,0) has norm 1, so C_B of its span is not self-orthogonal
    CHECK_FALSE(realizes_B3(code_construction_B3(make_k3_code(2, {{1, 2, 0, 1, 2, 0}}))));

    K3Code k = make_k3_code(3, {{1, 2, 0, 1, 2, 0, 1, 2, 0}});
    Code cb = code_construction_B3(k);
    auto r = realizes_B3(cb);
    REQUIRE(r);
    CHECK(equivalent(r->k.code, k.code));
    CHECK(r->g.apply(cb) == code_construction_B3(r->k));
    CHECK(r->y_prime == FpVec{0, 0, 1, 0, 0, 1, 0, 0, 1});

    // a scrambled copy is recognized as well
    auto h = random_signed_permutation(9, 7);
    auto r2 = realizes_B3(h.apply(cb));
    REQUIRE(r2);
    CHECK(equivalent(r2->k.code, k.code));

    CHECK_FALSE(realizes_B3(d3_code(1), FpVec{1, 1, 1}));
    CHECK_FALSE(realizes_B3(Code::zero(3, 4)));
}

TEST_CASE("realization over F_5")
{
    for (int m = 1; m <= 3; ++m) {
        auto r = realizes_B5(d5_zero_code(m));
        REQUIRE(r);
        CHECK(r->g.apply(d5_zero_code(m)) == d5_zero_code(m));
        auto h = random_signed_permutation(2 * m, 11 + m);
        CHECK(realizes_B5(h.apply(d5_zero_code(m))));
    }
    CHECK_FALSE(realizes_B5(d5_code(2)));
    CHECK_FALSE(realizes_B5(Code::zero(5, 3)));
}

TEST_CASE("bridge tables")
{
    BridgeMap phi = bridge_map(3, 1);
    CHECK(phi.matrix.rows() == 9);
    CHECK(is_orthogonal(phi.matrix));
    // (0, 0, alpha_1) goes to (eps_1, eps_1, eps_1)
    RatVec a = embed_block(an_alpha(3, 1), 3, 3, 2);
    RatVec img = normalize(codelat::apply(phi.matrix, a));
    CHECK(img.den == 3);
    CHECK(img.num == IntVec{2, -1, -1, 2, -1, -1, 2, -1, -1});

    BridgeMap psi = bridge_map(5, 1);
    RatVec b = embed_block(an_alpha(5, 1), 5, 2, 0);
    RatVec pimg = normalize(codelat::apply(psi.matrix, b));
    CHECK(pimg.den == 5);
    // (eps_1, -(eps_1 + eps_2 + eps_4))
    CHECK(pimg.num == IntVec{4, -1, -1, -1, -1, -2, -2, 3, -2, 3});
    for (int m = 1; m <= 3; ++m) {
        CHECK(is_orthogonal(bridge_map(3, m).matrix));
        CHECK(is_orthogonal(bridge_map(5, m).matrix));
    }
    CHECK_THROWS_AS(bridge_map(7, 1), std::invalid_argument);
}

TEST_CASE("bridge certificates")
{
    auto c3 = verify_bridge3(make_k3_code(1, {}));
    CHECK(c3.coefficients_match);
    CHECK(c3.echelon_match);
    CHECK(c3.equal);
    CHECK(c3.echelon(5, 5) == 3);
    for (int m = 1; m <= 3; ++m)
        for (const auto& k : k3_subcodes(m)) {
            if (!is_self_orthogonal(k.code)) continue;
            CHECK(verify_bridge3(k).ok());
        }
    for (int m = 1; m <= 4; ++m) {
        auto c5 = verify_bridge5(m);
        CHECK(c5.ok());
        CHECK(c5.echelon(7, 7) == 5);
    }
    CHECK_THROWS_AS(verify_bridge3(make_k3_code(1, {{1, 2, 0}})), std::invalid_argument);
}
