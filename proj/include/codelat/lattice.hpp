#pragma once

#include "codelat/types.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace codelat {

/// Row-style Hermite normal form: zero rows dropped, pivot columns strictly
/// increasing, pivots positive, entries above a pivot in [0, pivot).
IntMatrix hnf(const IntMatrix& m);

BigInt det_bareiss(const BigMatrix& m);
/// Solves x A = b for square invertible A; empty when singular.
std::optional<std::vector<Rational>> solve_left(const RatMatrix& a, const std::vector<Rational>& b);
RatMatrix inverse(const RatMatrix& a);

/// Lattice in Q^N given by integer numerator rows over a common denominator.
/// Stored canonically (HNF numerators, smallest denominator), so two equal
/// lattices compare equal field by field.
class Lattice {
public:
    Lattice(int ambient_dim, Int denom, const IntMatrix& generators);
    static Lattice zero(int ambient_dim);
    /// Lattice generated by rational rows (each row with its own denominator).
    static Lattice from_rational_rows(int ambient_dim, const std::vector<std::vector<Rational>>& rows);

    int ambient_dim() const { return ambient_dim_; }
    int rank() const { return static_cast<int>(basis_.rows()); }
    Int denom() const { return denom_; }
    const IntMatrix& basis() const { return basis_; }
    RatVec basis_vector(int i) const { return {basis_.row_vec(i), denom_}; }

    /// B B^T; the Gram matrix is this divided by denom^2.
    IntMatrix gram_numerators() const;
    RatMatrix gram() const;
    Rational det() const;
    /// Numerators of the basis over a multiple `d` of denom.
    IntMatrix basis_over(Int d) const;

    /// Coordinates of x in the stored basis, if x lies in the rational span.
    std::optional<std::vector<Rational>> coordinates(const RatVec& x) const;
    bool contains(const RatVec& x) const;
    bool contains(const Lattice& other) const;

    friend bool operator==(const Lattice& a, const Lattice& b)
    {
        return a.ambient_dim_ == b.ambient_dim_ && a.denom_ == b.denom_ && a.basis_ == b.basis_;
    }

private:
    int ambient_dim_;
    Int denom_;
    IntMatrix basis_;
};

Rational rat_dot(const RatVec& a, const RatVec& b);
Rational norm(const RatVec& a);
RatVec normalize(RatVec v);
RatVec to_ratvec(const std::vector<Rational>& v);
std::vector<Rational> to_rationals(const RatVec& v);

Lattice dual(const Lattice& l);
bool is_integral(const Lattice& l);
bool is_even(const Lattice& l);
Lattice join(const Lattice& a, const Lattice& b);
/// {x in L : (x, f) in Z}; throws if the resulting index does not divide m.
Lattice kernel_sublattice(const Lattice& l, const RatVec& f, Int m);
/// |sup / sub| for sub inside sup of equal rank.
Int index(const Lattice& sub, const Lattice& sup);
/// Image of L under x -> x M (row vectors, M is N x N rational).
Lattice transform(const Lattice& l, const RatMatrix& m);
RatVec apply(const RatMatrix& m, const RatVec& x);

// ---- short vectors ----

struct ShortVector {
    IntVec num;      // ambient numerators over the lattice denominator
    Rational norm;
};

/// All nonzero vectors with norm <= bound, each +/- pair listed as the
/// representative with positive first nonzero entry followed by its negation,
/// pairs sorted lexicographically by representative.
std::vector<ShortVector> short_vectors(const Lattice& l, const Rational& bound);
std::vector<IntVec> vectors_of_norm(const Lattice& l, const Rational& r);
/// First `count` distinct nonzero norms.
std::vector<Rational> min_norms(const Lattice& l, int count);
/// First `count` norm layers with their cardinalities.
std::vector<std::pair<Rational, long long>> norm_layers(const Lattice& l, int count);
/// min (x, x) over x in t + L; t must lie in the rational span.
Rational coset_min_norm(const Lattice& l, const RatVec& t);

// ---- isometry ----

struct IsometryWitness {
    IntMatrix u;  // u * gram(a) * u^T == gram(b)
};

struct IsometryOptions {
    int invariant_depth = 3;
    long long node_budget = 50'000'000;
    std::size_t fingerprint_limit = 4000;
};

struct IsometryResult {
    std::optional<IsometryWitness> witness;
    /// Empty on success; otherwise the separating invariant or "exhausted".
    std::string reason;
    long long nodes = 0;
};

IsometryResult isometry_search(const Lattice& a, const Lattice& b, const IsometryOptions& opt = {});
std::optional<IsometryWitness> is_isometric(const Lattice& a, const Lattice& b);
bool verify_witness(const Lattice& a, const Lattice& b, const IntMatrix& u);

}  // namespace codelat
