#pragma once

#include "codelat/constructions.hpp"

#include <optional>
#include <vector>

namespace codelat {

// ---- codes built from K_3 = <(1,2,0)> and d_5 = <(1,2)> ----

/// A subcode of K_3^m inside F_3^{3m}.
struct K3Code {
    int m = 1;
    Code code = Code::zero(3, 3);
};

/// Throws std::invalid_argument if some generator has a 3-block outside K_3.
K3Code make_k3_code(int m, const std::vector<FpVec>& gens);
/// The subcode of K_3^m whose coefficient vectors (one per block) span `coeffs`.
K3Code k3_from_coefficients(const Code& coeffs);
/// Every subcode of K_3^m.
std::vector<K3Code> k3_subcodes(int m);

/// u_i (p = 3, blocks of three ones) and v_i (p = 5, blocks (1,2)); i is 1-based.
FpVec u_vector(int m, int i);
FpVec v_vector(int m, int i);

Code d3_code(int m);
Code d3_zero_code(int m);
Code d5_code(int m);
Code d5_zero_code(int m);

/// C_A(K) = K + d_3^m and C_B(K) = K + (d_3^m)_0.
Code code_construction_A3(const K3Code& k);
Code code_construction_B3(const K3Code& k);

struct RealizationB3 {
    K3Code k;
    FpVec coset;                       // the u_1-type vector of C that was used
    std::vector<SignedPermutation> steps;  // alignment moves, then the in-block permutation
    FpVec y_prime;                     // (0,0,1, ..., 0,0,1) after the last step
    SignedPermutation g;               // g(C) = C_B(K), g(C + F_3 coset) = C_A(K)
};

/// Runs the realization argument for a self-orthogonal C over F_3. With no
/// coset given, the lexicographically least weight-3 vector of C^perp \ C
/// satisfying k/3 + #C(3) <= #(t + C)(3) is used. Empty when the hypothesis fails.
std::optional<RealizationB3> realizes_B3(const Code& c, const std::optional<FpVec>& coset = std::nullopt);

struct RealizationB5 {
    FpVec coset;
    std::vector<SignedPermutation> steps;
    SignedPermutation g;  // g(C) = (d_5^{k/2})_0, g(C + F_5 coset) = d_5^{k/2}
};

/// p = 5 analogue with the criterion k/2 + #C(2) <= #(t + C)(2).
std::optional<RealizationB5> realizes_B5(const Code& c, const std::optional<FpVec>& coset = std::nullopt);

// ---- bridge isometries ----

/// Per-block table of phi (p = 3, groups of three A_2 blocks) or psi (p = 5,
/// groups of two A_4 blocks): image[b][l-1] is the image of alpha_l in block b
/// of a group, given as eps-coefficients per target block.
struct BridgeTable {
    int p = 3;
    int group = 3;
    std::vector<std::vector<std::vector<std::vector<int>>>> image;
    IntMatrix coefficients;  // expected coefficient display
    IntMatrix echelon;       // expected echelon display
};
const BridgeTable& bridge_table(int p);

struct BridgeMap {
    int p = 3;
    int m = 1;
    RatMatrix matrix;  // x -> x M on Q^{p * group * m}
};

/// Block-diagonal extension over m groups. The matrix fixes every block's
/// all-ones vector. Throws std::logic_error if it is not exactly orthogonal.
BridgeMap bridge_map(int p, int m);
bool is_orthogonal(const RatMatrix& m);

struct BridgeCertificate {
    int p = 3;
    int m = 1;
    IntMatrix coefficients;
    IntMatrix echelon;
    bool coefficients_match = false;
    bool echelon_match = false;
    bool orthogonal = false;
    Lattice image = Lattice::zero(1);   // bridge image of L_A of the B-side code
    Lattice target = Lattice::zero(1);  // L_B of the A-side code
    bool equal = false;

    bool ok() const { return coefficients_match && echelon_match && orthogonal && equal; }
};

/// phi~(L_A(C_B(K))) against L_B(C_A(K)). K must be self-orthogonal.
BridgeCertificate verify_bridge3(const K3Code& k);
/// psi~(L_A((d_5^m)_0)) against L_B(d_5^m).
BridgeCertificate verify_bridge5(int m);

}  // namespace codelat
