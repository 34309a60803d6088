#pragma once

#include "codelat/types.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace codelat {

using FpVec = std::vector<int>;
using FpMatrix = Matrix<int>;

bool is_prime(int n);
int fp_inv(int a, int p);

/// Reduced row-echelon form over F_p in place; returns pivot columns.
std::vector<std::size_t> fp_rref(FpMatrix& m, int p);
/// Basis of {x : m x^T = 0}, as rows in reduced echelon form.
FpMatrix fp_nullspace(const FpMatrix& m, int p);
int fp_dot(const FpVec& a, const FpVec& b, int p);
int weight(const FpVec& v);

/// Linear code over F_p (p an odd prime) held by its RREF generator matrix.
class Code {
public:
    Code(int p, int length, const FpMatrix& generators);
    Code(int p, int length, const std::vector<FpVec>& generators);

    static Code zero(int p, int length);
    static Code full(int p, int length);

    int p() const { return p_; }
    int length() const { return length_; }
    int dim() const { return static_cast<int>(gens_.rows()); }
    const FpMatrix& gens() const { return gens_; }

    bool contains(const FpVec& x) const;
    /// All p^dim codewords, indexed by coefficient vector in base p.
    std::vector<FpVec> codewords() const;
    FpVec combine(const std::vector<int>& coeffs) const;

    friend bool operator==(const Code& a, const Code& b)
    {
        return a.p_ == b.p_ && a.length_ == b.length_ && a.gens_ == b.gens_;
    }

private:
    int p_;
    int length_;
    FpMatrix gens_;
};

Code dual_code(const Code& c);
bool is_self_orthogonal(const Code& c);
/// Code spanned by c and the extra vectors.
Code extend(const Code& c, const std::vector<FpVec>& extra);
bool is_subcode(const Code& sub, const Code& sup);

/// #{x in t + C : wt(x) = n}.
long long coset_weight_count(const Code& c, const FpVec& t, int n);
std::vector<long long> weight_distribution(const Code& c);

/// Coordinate permutation plus per-coordinate signs acting on F_p^k by
/// (g x)_{perm[i]} = signs[perm[i]] * x_i.
struct SignedPermutation {
    std::vector<int> perm;
    std::vector<int> signs;

    static SignedPermutation identity(int k);
    int size() const { return static_cast<int>(perm.size()); }
    FpVec apply(const FpVec& x, int p) const;
    Code apply(const Code& c) const;
    SignedPermutation inverse() const;
    bool is_valid() const;

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};

/// g o h.
SignedPermutation compose(const SignedPermutation& g, const SignedPermutation& h);
SignedPermutation random_signed_permutation(int k, std::uint64_t seed);

/// A signed permutation g with g(C) = D, if one exists. The group is generated
/// by coordinate permutations and coordinate negations only.
std::optional<SignedPermutation> equivalent(const Code& c, const Code& d);

struct CanonicalForm {
    Code code;                 // lexicographically least image, columns compared first to last
    SignedPermutation witness; // maps the input onto `code`
    std::string key;
};

/// Orbit-minimal generator matrix under signed permutations.
CanonicalForm canonical_form(const Code& c, long long node_budget = 2'000'000);

struct CatalogEntry {
    Code code;
    std::string key;
    std::vector<long long> weights;
};

struct Catalog {
    int p;
    int length;
    std::vector<CatalogEntry> entries;
};

/// One representative per equivalence class of self-orthogonal codes, sorted
/// by (dim, key). Throws std::length_error when p^k exceeds `budget`.
Catalog enumerate_self_orthogonal(int p, int k, long long budget = 1'000'000);

std::string code_key(const Code& c);

}  // namespace codelat
