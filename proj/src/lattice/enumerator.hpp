#pragma once

#include "codelat/lattice.hpp"

#include <functional>
#include <vector>

namespace codelat::detail {

/// LLL-reduced view of a positive definite integer Gram matrix, with
/// Fincke-Pohst enumeration. Floating point only steers the search; every
/// reported vector is checked with exact integer arithmetic.
class Enumerator {
public:
    explicit Enumerator(const IntMatrix& gram);

    int rank() const { return n_; }
    const IntMatrix& reduced_gram() const { return g_; }
    /// Rows: reduced basis in terms of the input basis.
    const IntMatrix& transform() const { return t_; }
    const IntMatrix& inverse_transform() const { return tinv_; }

    /// Nonzero x (reduced coordinates) with x G x^T <= bound; one of each
    /// +/- pair (the one whose last nonzero coordinate is positive).
    void enumerate(Int bound, const std::function<void(const IntVec&, Int)>& visit) const;

    /// min over integer x of (x + c) G (x + c)^T, c in reduced coordinates.
    Rational closest(const std::vector<Rational>& c) const;

    Int quad(const IntVec& x) const;
    IntVec to_input(const IntVec& x) const;  // x * T

private:
    void lll();
    void gso();
    void exact_ldl();

    int n_;
    IntMatrix g_;
    IntMatrix t_;
    IntMatrix tinv_;
    std::vector<std::vector<long double>> mu_;
    std::vector<long double> bn_;
};

}  // namespace codelat::detail
