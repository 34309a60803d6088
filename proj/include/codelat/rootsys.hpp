#pragma once

#include "codelat/constructions.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace codelat {

// Root vectors are integer numerators over a shared denominator, the
// denominator of the lattice they were taken from.

/// All norm-2 vectors of an even lattice, ordered as by short_vectors.
std::vector<IntVec> roots(const Lattice& l);

struct RootComponent {
    std::vector<IntVec> roots;
    std::string type;           // "A4", "D5", "E8", or "other(rank,count)"
    int rank = 0;
    std::vector<IntVec> base;   // simple roots for `functional`
    IntVec functional;          // positive roots: dot(r, functional) > 0
};

/// Orthogonal decomposition into irreducible components, in order of first
/// appearance in the input. The base uses a generic functional drawn from a
/// fixed seed.
std::vector<RootComponent> decompose(const std::vector<IntVec>& roots, Int denom, std::uint64_t seed = 1);

/// Simple roots of an irreducible component reordered as a path
/// a_1, ..., a_n with (a_i, a_{i+1}) = -1. Only meaningful for type A.
std::vector<IntVec> chain_order(const std::vector<IntVec>& base, Int denom);

struct Frame {
    Int denom = 1;
    std::vector<std::vector<IntVec>> components;  // each sorted

    std::vector<IntVec> all_roots() const;
};

/// Standard frame R(2) of (A*_{p-1})^k-type lattices over denominator `denom`.
Frame standard_frame(int p, int k, Int denom);

bool is_frame(const Frame& f, int p, int rank);

/// Every A_{p-1}-frame of L. Throws std::length_error past `max_nodes`.
std::vector<Frame> find_frames(const Lattice& l, int p, long long max_nodes = 1'000'000);

/// Ambient reflection x -> x - (x, v) v for a root v (row convention).
RatMatrix reflection_matrix(const RatVec& v);
IntVec reflect(const IntVec& x, const IntVec& v, Int denom);
Frame apply_reflections(const Frame& f, const std::vector<IntVec>& word);

struct FrameNormalization {
    std::vector<IntVec> word;  // roots of L, reflections applied first to last
    RatMatrix ambient;         // product of the reflections, x -> x M
    IntMatrix u;               // action on the stored basis of L
    int steps = 0;             // loop iterations
    int generic_steps = 0;     // iterations that needed the greedy fallback
};

/// An automorphism g of L_A(C) with g(F) = R(2).
FrameNormalization normalize_frame(const Code& c, const Frame& f);

/// Orthogonal ambient map sending each component's chain to alpha_1..alpha_{p-1}
/// of its own block (and each block's all-ones vector to itself).
RatMatrix frame_chart(const Frame& f, int p);

/// Glue code of L relative to the standard frame.
Code recover_code(int p, const Lattice& l);

// ---- E8 ----

/// The 240 roots of E8 in the even coordinate system, over denominator 2.
std::vector<IntVec> e8_roots();
/// Root lattice E8 in the same coordinates.
Lattice e8_lattice();

bool is_chain(const std::vector<IntVec>& s, Int denom);

/// Reflection word w (applied first to last) in the roots of an E8 root
/// system with w(s1[i]) = s2[i]; empty optional when no such element exists.
std::optional<std::vector<IntVec>> e8_chain_transport(const std::vector<IntVec>& roots, Int denom,
                                                      const std::vector<IntVec>& s1,
                                                      const std::vector<IntVec>& s2);

struct E8ChainCounts {
    long long completions = 0;  // chains starting at (1,1,0,...,0)
    long long chains = 0;       // unordered chains
    int orthogonal_roots = 0;   // roots orthogonal to a fixed chain
    std::string orthogonal_type;
};
E8ChainCounts e8_chain_counts();

struct E8GlueCheck {
    int lambdas = 0;
    int even = 0;
    int unimodular = 0;
    int with_240_roots = 0;
};
/// L_lambda = Z lambda + A_4^2 for each lambda in (A_4^*)^2(2) outside A_4^2.
E8GlueCheck e8_glue_check();

}  // namespace codelat
