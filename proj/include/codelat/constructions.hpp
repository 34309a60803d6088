#pragma once

#include "codelat/fpcodes.hpp"
#include "codelat/lattice.hpp"

namespace codelat {

// A_{n-1} sits in Z^n as the sum-zero sublattice. Vectors of A*_{n-1} are
// written with denominator n. For codes of length k over F_p the ambient space
// is Q^{pk}, one block of p coordinates per code coordinate, and the code
// coordinate j is identified with the class of j*eps_1 in A*/A.

/// A_{n-1} in Z^n.
Lattice an_lattice(int n);
/// alpha_i = e_i - e_{i+1}, i = 1..n-1.
RatVec an_alpha(int n, int i);
/// eps_i = e_i - (1/n)(1,...,1), i = 1..n.
RatVec an_epsilon(int n, int i);
/// rho = half the sum of the positive roots.
RatVec an_rho(int n);

/// v placed in block `block` of a k-block ambient space of block width n.
RatVec embed_block(const RatVec& v, int n, int k, int block);

/// lambda_j = j eps_1 - sum_{i<j} (j - i) alpha_i, over denominator p.
RatVec lambda_j(int p, int j);
/// (lambda_{c_1}, ..., lambda_{c_k}).
RatVec lambda_lift(int p, const FpVec& c);
/// (1/p)(rho, ..., rho).
RatVec chi_vector(int p, int k);

/// A_{p-1}^k and (A*_{p-1})^k.
Lattice root_power(int p, int k);
Lattice dual_root_power(int p, int k);

/// Class of x in (A*)^k / A^k as a word over F_p; empty when x is not in (A*)^k.
std::optional<FpVec> glue_word(int p, const RatVec& x);

/// Lattice generated by lambda_c over the generators of C and A_{p-1}^k.
Lattice construction_A(const Code& c);
/// {x in L_A(C) : (x, chi) in Z}. Requires C self-orthogonal.
Lattice construction_B(const Code& c);
/// pi^{-1}(C) computed straight from the definition by testing every class
/// of (A*)^k / A^k; meant for small instances.
Lattice construction_A_preimage(const Code& c);

/// Coordinates of a block vector x in A_{n-1} with respect to alpha_1..alpha_{n-1}.
IntVec alpha_coordinates(const IntVec& x);

}  // namespace codelat
