#include "codelat/special.hpp"

#include <stdexcept>

namespace codelat {

namespace {

BridgeTable make_phi()
{
    BridgeTable t;
    t.p = 3;
    t.group = 3;
    // image[b][l - 1][target block] = coefficients of eps_1, eps_2, eps_3
    t.image = {
        {
            {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}},  // phi((alpha_1, 0, 0)) = (eps_3, eps_2, eps_1)
            {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}},  // phi((alpha_2, 0, 0)) = (eps_2, eps_1, eps_3)
        },
        {
            {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},  // phi((0, alpha_1, 0)) = (eps_1, eps_2, eps_3)
            {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}},  // phi((0, alpha_2, 0)) = (eps_3, eps_1, eps_2)
        },
        {
            {{1, 0, 0}, {1, 0, 0}, {1, 0, 0}},  // phi((0, 0, alpha_1)) = (eps_1, eps_1, eps_1)
            {{0, 0, 1}, {0, 0, 1}, {0, 0, 1}},  // phi((0, 0, alpha_2)) = (eps_3, eps_3, eps_3)
        },
    };
    t.coefficients = IntMatrix::from_rows({
                                              {-1, -1, -1, 0, 0, 0},
                                              {-1, 0, 0, 0, -1, -1},
                                              {0, 0, -1, 0, -1, -1},
                                              {-1, -1, 0, 0, -1, 0},
                                              {2, 1, 2, 1, 2, 1},
                                              {-1, -1, -1, -1, -1, -1},
                                          },
                                          6);
    t.echelon = IntMatrix::from_rows({
                                         {1, 0, 0, 0, 0, 2},
                                         {0, 1, 0, 0, 0, 2},
                                         {0, 0, 1, 0, 0, 2},
                                         {0, 0, 0, 1, 0, 2},
                                         {0, 0, 0, 0, 1, 2},
                                         {0, 0, 0, 0, 0, 3},
                                     },
                                     6);
    return t;
}

BridgeTable make_psi()
{
    BridgeTable t;
    t.p = 5;
    t.group = 2;
    // image[b][l - 1][target block] = coefficients of eps_1, ..., eps_5
    t.image = {
        {
            {{1, 0, 0, 0, 0}, {-1, -1, 0, -1, 0}},  // psi((alpha_1, 0)) = (eps_1, -(eps_1 + eps_2 + eps_4))
            {{0, 0, 1, 0, 0}, {0, 1, 0, 1, 0}},     // psi((alpha_2, 0)) = (eps_3, eps_2 + eps_4)
            {{0, 0, 0, 0, 1}, {1, 0, 1, 0, 0}},     // psi((alpha_3, 0)) = (eps_5, eps_1 + eps_3)
            {{0, 1, 0, 0, 0}, {-1, 0, -1, -1, 0}},  // psi((alpha_4, 0)) = (eps_2, -(eps_1 + eps_3 + eps_4))
        },
        {
            {{1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}},     // psi((0, alpha_1)) = (eps_1, eps_1 + eps_2)
            {{0, 1, 0, 0, 0}, {0, 0, 1, 1, 0}},     // psi((0, alpha_2)) = (eps_2, eps_3 + eps_4)
            {{0, 0, 1, 0, 0}, {0, -1, -1, -1, 0}},  // psi((0, alpha_3)) = (eps_3, -(eps_2 + eps_3 + eps_4))
            {{0, 0, 0, 1, 0}, {0, 1, 1, 0, 0}},     // psi((0, alpha_4)) = (eps_4, eps_2 + eps_3)
        },
    };
    t.coefficients = IntMatrix::from_rows({
                                              {0, 0, 0, 0, -1, -2, -1, -1},
                                              {-1, -1, 0, 0, -1, -1, -1, 0},
                                              {-1, -1, -1, -1, 0, -1, 0, 0},
                                              {-1, 0, 0, 0, -1, -1, -1, -1},
                                              {4, 3, 2, 1, 3, 6, 4, 2},
                                              {-1, 0, 0, 0, -1, -2, -1, 0},
                                              {-1, -1, 0, 0, 0, -1, -1, -1},
                                              {-1, -1, -1, 0, -1, -1, 0, 0},
                                          },
                                          8);
    IntMatrix e = IntMatrix::identity(8);
    for (int i = 0; i < 7; ++i) e(i, 7) = 4;
    e(7, 7) = 5;
    t.echelon = e;
    return t;
}

}  // namespace

const BridgeTable& bridge_table(int p)
{
    static const BridgeTable phi = make_phi();
    static const BridgeTable psi = make_psi();
    if (p == 3) return phi;
    if (p == 5) return psi;
    throw std::invalid_argument("bridge_table: only p = 3 and p = 5 have a bridge map");
}

}  // namespace codelat
