#include "doctest.h"

#include "codelat/fpcodes.hpp"

using namespace codelat;

namespace {

Code tetracode() { return Code(3, 4, std::vector<FpVec>{{1, 1, 1, 0}, {0, 1, 2, 1}}); }

}  // namespace

TEST_CASE("rref and membership")
{
    Code c(5, 3, std::vector<FpVec>{{2, 4, 1}, {4, 3, 2}});
    CHECK(c.dim() == 1);
    CHECK(c.gens().row_vec(0) == FpVec{1, 2, 3});
    CHECK(c.contains({3, 1, 4}));
    CHECK_FALSE(c.contains({1, 0, 0}));
    CHECK(c.codewords().size() == 5);
}

TEST_CASE("prime checks")
{
    CHECK_THROWS(Code(9, 2, std::vector<FpVec>{}));
    CHECK_THROWS(Code(2, 2, std::vector<FpVec>{}));
    CHECK(is_prime(11));
    CHECK(fp_inv(3, 7) == 5);
}

TEST_CASE("tetracode is self-dual")
{
    Code t = tetracode();
    CHECK(is_self_orthogonal(t));
    CHECK(dual_code(t) == t);
    CHECK(weight_distribution(t) == std::vector<long long>{1, 0, 0, 8, 0});
}

TEST_CASE("dual and coset counts")
{
    Code c(3, 3, std::vector<FpVec>{{1, 1, 1}});
    Code d = dual_code(c);
    CHECK(d.dim() == 2);
    CHECK(is_subcode(c, d));
    CHECK(coset_weight_count(c, {1, 0, 0}, 1) == 1);
    CHECK(coset_weight_count(c, {1, 0, 0}, 3) == 1);
    CHECK(coset_weight_count(c, {1, 0, 0}, 2) == 1);
}

TEST_CASE("signed permutation action")
{
    SignedPermutation g{{1, 2, 0}, {1, -1, 1}};
    CHECK(g.is_valid());
    // (g x)_{perm[i]} = signs[perm[i]] x_i
    CHECK(g.apply(FpVec{1, 2, 0}, 5) == FpVec{0, 4, 2});
    auto h = g.inverse();
    CHECK(compose(g, h) == SignedPermutation::identity(3));
    auto r = random_signed_permutation(6, 7);
    FpVec x{1, 2, 3, 4, 0, 1};
    CHECK(compose(r, r.inverse()).apply(x, 7) == x);
}

TEST_CASE("equivalence finds a witness")
{
    Code t = tetracode();
    auto g = random_signed_permutation(4, 11);
    Code u = g.apply(t);
    auto w = equivalent(t, u);
    REQUIRE(w);
    CHECK(w->apply(t) == u);

    Code a(5, 4, std::vector<FpVec>{{1, 2, 0, 0}});
    Code b(5, 4, std::vector<FpVec>{{1, 1, 1, 1}});
    CHECK_FALSE(equivalent(a, b));
    // over F_5 the group has signs only, so <(1,2)> and <(1,1)> differ
    CHECK_FALSE(equivalent(Code(5, 2, std::vector<FpVec>{{1, 2}}), Code(5, 2, std::vector<FpVec>{{1, 1}})));
}

TEST_CASE("canonical form is a class invariant")
{
    Code t = tetracode();
    auto base = canonical_form(t);
    CHECK(base.witness.apply(t) == base.code);
    for (std::uint64_t s = 1; s <= 10; ++s) {
        Code u = random_signed_permutation(4, s).apply(t);
        auto cf = canonical_form(u);
        CHECK(cf.key == base.key);
        CHECK(cf.witness.apply(u) == cf.code);
    }
}

TEST_CASE("catalog representatives are pairwise inequivalent")
{
    for (auto [p, k] : {std::pair{3, 4}, std::pair{5, 4}, std::pair{7, 3}}) {
        Catalog cat = enumerate_self_orthogonal(p, k);
        REQUIRE(!cat.entries.empty());
        CHECK(cat.entries.front().code.dim() == 0);
        for (std::size_t i = 0; i < cat.entries.size(); ++i) {
            CHECK(is_self_orthogonal(cat.entries[i].code));
            for (std::size_t j = i + 1; j < cat.entries.size(); ++j)
                CHECK_FALSE(equivalent(cat.entries[i].code, cat.entries[j].code));
        }
    }
}

TEST_CASE("catalog covers every self-orthogonal line")
{
    // every 1-dimensional self-orthogonal code of length 4 over F_3 is equivalent to a catalog entry
    Catalog cat = enumerate_self_orthogonal(3, 4);
    Code full = Code::full(3, 4);
    for (const auto& v : full.codewords()) {
        if (weight(v) == 0 || fp_dot(v, v, 3) != 0) continue;
        Code c(3, 4, std::vector<FpVec>{v});
        int hits = 0;
        for (const auto& e : cat.entries)
            if (e.code.dim() == 1 && equivalent(c, e.code)) ++hits;
        CHECK(hits == 1);
    }
}
