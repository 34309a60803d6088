#include "doctest.h"

#include "codelat/lattice.hpp"

using namespace codelat;

namespace {

Lattice e8()
{
    IntMatrix g(0, 8);
    for (int i = 0; i < 7; ++i) {
        IntVec v(8, 0);
        v[i] = 2;
        v[i + 1] = -2;
        g.append_row(v);
    }
    g.append_row(IntVec{0, 0, 0, 0, 0, 0, 2, 2});
    g.append_row(IntVec(8, 1));
    return Lattice(8, 2, g);
}

Lattice d4()
{
    return Lattice(4, 1, IntMatrix::from_rows({{1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}, {0, 0, 1, 1}}, 4));
}

// A_{n-1} inside Z^n
Lattice root_a(int n)
{
    IntMatrix g(0, n);
    for (int i = 0; i + 1 < n; ++i) {
        IntVec v(n, 0);
        v[i] = 1;
        v[i + 1] = -1;
        g.append_row(v);
    }
    return Lattice(n, 1, g);
}

}  // namespace

TEST_CASE("hnf is canonical")
{
    IntMatrix a = IntMatrix::from_rows({{2, 4, 6}, {1, 1, 1}, {0, 3, 3}}, 3);
    IntMatrix h = hnf(a);
    CHECK(h == IntMatrix::from_rows({{1, 0, 2}, {0, 1, 5}, {0, 0, 6}}, 3));
    IntMatrix b = IntMatrix::from_rows({{3, 5, 7}, {1, 1, 1}, {1, 4, 4}}, 3);
    CHECK(hnf(b) == h);
}

TEST_CASE("denominator is reduced")
{
    Lattice l(2, 6, IntMatrix::from_rows({{2, 0}, {0, 4}}, 2));
    CHECK(l.denom() == 3);
    CHECK(l.basis() == IntMatrix::from_rows({{1, 0}, {0, 2}}, 2));
    CHECK(Lattice::zero(3).denom() == 1);
}

TEST_CASE("E8 invariants")
{
    Lattice l = e8();
    CHECK(l.rank() == 8);
    CHECK(l.det() == 1);
    CHECK(is_even(l));
    CHECK(dual(l) == l);
    CHECK(vectors_of_norm(l, 2).size() == 240);
    auto layers = norm_layers(l, 2);
    REQUIRE(layers.size() == 2);
    CHECK(layers[0] == std::pair<Rational, long long>{2, 240});
    CHECK(layers[1] == std::pair<Rational, long long>{4, 2160});
}

TEST_CASE("dual of A_n")
{
    Lattice a = root_a(5);
    Lattice ad = dual(a);
    CHECK(ad.det() == Rational(1, 5));
    CHECK(min_norms(ad, 2) == std::vector<Rational>{Rational(4, 5), Rational(6, 5)});
    CHECK(index(a, ad) == 5);
    CHECK(ad.contains(a));
    CHECK_FALSE(a.contains(ad));
    CHECK(min_norms(dual(root_a(12)), 2) == std::vector<Rational>{Rational(11, 12), Rational(5, 3)});
}

TEST_CASE("short vector ordering")
{
    Lattice z(2, 1, IntMatrix::identity(2));
    auto sv = short_vectors(z, 1);
    REQUIRE(sv.size() == 4);
    CHECK(sv[0].num == IntVec{0, 1});
    CHECK(sv[1].num == IntVec{0, -1});
    CHECK(sv[2].num == IntVec{1, 0});
    CHECK(sv[3].num == IntVec{-1, 0});
}

TEST_CASE("kernel sublattice")
{
    Lattice z(3, 1, IntMatrix::identity(3));
    RatVec f{{1, 1, 1}, 3};
    Lattice k = kernel_sublattice(z, f, 3);
    CHECK(index(k, z) == 3);
    CHECK(k.contains(RatVec{{1, 2, 0}, 1}));
    CHECK_FALSE(k.contains(RatVec{{1, 0, 0}, 1}));
    CHECK_THROWS(kernel_sublattice(z, f, 2));
}

TEST_CASE("coset minimum")
{
    Lattice z(1, 1, IntMatrix::identity(1));
    CHECK(coset_min_norm(z, RatVec{{7}, 3}) == Rational(1, 9));
    Lattice a = root_a(3);
    // (1/3)(1,1,-2) + A_2 contains a vector of norm 2/3
    CHECK(coset_min_norm(a, RatVec{{1, 1, -2}, 3}) == Rational(2, 3));
    CHECK_THROWS(coset_min_norm(a, RatVec{{1, 0, 0}, 1}));
}

TEST_CASE("transform and join")
{
    Lattice z(2, 1, IntMatrix::identity(2));
    RatMatrix m(2, 2);
    m(0, 0) = 1;
    m(0, 1) = 1;
    m(1, 0) = 1;
    m(1, 1) = -1;
    Lattice t = transform(z, m);
    CHECK(t.det() == 4);
    CHECK(join(t, Lattice(2, 1, IntMatrix::from_rows({{1, 0}}, 2))) == z);
}

TEST_CASE("isometry search")
{
    Lattice a = d4();
    IntMatrix shuffle = IntMatrix::from_rows({{0, 0, 1, 0}, {1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 0, 1}}, 4);
    RatMatrix m(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = shuffle(i, j);
    Lattice b = transform(a, m);
    auto w = is_isometric(a, b);
    REQUIRE(w);
    CHECK(verify_witness(a, b, w->u));

    Lattice z4(4, 1, IntMatrix::identity(4));
    auto r = isometry_search(a, z4);
    CHECK_FALSE(r.witness);
    CHECK(r.reason == "determinant");

    Lattice e = e8();
    Lattice e2 = Lattice(8, 1, hnf(IntMatrix::from_rows(
        {{2, 0, 0, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0, 0, 0}, {1, 0, 1, 0, 0, 0, 0, 0}, {1, 0, 0, 1, 0, 0, 0, 0},
         {1, 0, 0, 0, 1, 0, 0, 0}, {1, 0, 0, 0, 0, 1, 0, 0}, {1, 0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 0, 0, 0}},
        8)));
    CHECK(e2.rank() == 7);
    CHECK_FALSE(isometry_search(e, e2).witness);

    // both have determinant 3
    Lattice sq(4, 1, IntMatrix::from_rows({{1, 0, 0, 0}, {0, 1, 1, 1}}, 4));
    Lattice hex = root_a(3);
    auto rr = isometry_search(sq, hex);
    CHECK_FALSE(rr.witness);
    CHECK(rr.reason == "norm layers");
}
