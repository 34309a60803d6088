#include "enumerator.hpp"

#include <cmath>
#include <stdexcept>

namespace codelat::detail {

namespace {

constexpr long double kDelta = 0.99L;
constexpr long double kRel = 1e-10L;
constexpr long double kAbs = 1e-6L;

}  // namespace

Enumerator::Enumerator(const IntMatrix& gram)
    : n_(static_cast<int>(gram.rows())), g_(gram), t_(IntMatrix::identity(gram.rows())),
      tinv_(IntMatrix::identity(gram.rows()))
{
    if (n_ > 0) {
        lll();
        exact_ldl();
    }
}

void Enumerator::gso()
{
    mu_.assign(n_, std::vector<long double>(n_, 0.0L));
    bn_.assign(n_, 0.0L);
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < i; ++j) {
            long double s = static_cast<long double>(g_(i, j));
            for (int l = 0; l < j; ++l) s -= mu_[j][l] * mu_[i][l] * bn_[l];
            mu_[i][j] = s / bn_[j];
        }
        long double s = static_cast<long double>(g_(i, i));
        for (int l = 0; l < i; ++l) s -= mu_[i][l] * mu_[i][l] * bn_[l];
        bn_[i] = s;
        mu_[i][i] = 1.0L;
        if (!(bn_[i] > 0)) throw std::domain_error("Gram matrix is not positive definite");
    }
}

void Enumerator::lll()
{
    auto reduce = [&](int k, int j, Int q) {
        for (int i = 0; i < n_; ++i) g_(k, i) = sub_ck(g_(k, i), mul_ck(q, g_(j, i)));
        for (int i = 0; i < n_; ++i) g_(i, k) = sub_ck(g_(i, k), mul_ck(q, g_(i, j)));
        for (int i = 0; i < n_; ++i) t_(k, i) = sub_ck(t_(k, i), mul_ck(q, t_(j, i)));
        for (int i = 0; i < n_; ++i) tinv_(i, j) = add_ck(tinv_(i, j), mul_ck(q, tinv_(i, k)));
    };
    auto swap = [&](int k) {
        g_.swap_rows(k, k - 1);
        for (int i = 0; i < n_; ++i) std::swap(g_(i, k), g_(i, k - 1));
        t_.swap_rows(k, k - 1);
        for (int i = 0; i < n_; ++i) std::swap(tinv_(i, k), tinv_(i, k - 1));
    };
    gso();
    int k = 1;
    long long guard = 0;
    while (k < n_) {
        if (++guard > 10'000'000) throw std::runtime_error("LLL did not terminate");
        for (int j = k - 1; j >= 0; --j) {
            long double m = mu_[k][j];
            if (std::fabs(m) > 0.5L) {
                Int q = static_cast<Int>(std::llround(m));
                reduce(k, j, q);
                gso();
            }
        }
        if (bn_[k] >= (kDelta - mu_[k][k - 1] * mu_[k][k - 1]) * bn_[k - 1]) {
            ++k;
        } else {
            swap(k);
            gso();
            k = std::max(k - 1, 1);
        }
    }
}

void Enumerator::exact_ldl()
{
    std::vector<std::vector<Rational>> mu(n_, std::vector<Rational>(n_, 0));
    std::vector<Rational> bn(n_);
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < i; ++j) {
            Rational s = g_(i, j);
            for (int l = 0; l < j; ++l) s -= mu[j][l] * mu[i][l] * bn[l];
            mu[i][j] = s / bn[j];
        }
        Rational s = g_(i, i);
        for (int l = 0; l < i; ++l) s -= mu[i][l] * mu[i][l] * bn[l];
        if (s <= 0) throw std::domain_error("Gram matrix is not positive definite");
        bn[i] = s;
    }
    for (int i = 0; i < n_; ++i) {
        bn_[i] = static_cast<long double>(bn[i]);
        for (int j = 0; j < i; ++j) mu_[i][j] = static_cast<long double>(mu[i][j]);
    }
}

Int Enumerator::quad(const IntVec& x) const
{
    __int128 s = 0;
    for (int i = 0; i < n_; ++i) {
        if (x[i] == 0) continue;
        __int128 row = 0;
        for (int j = 0; j < n_; ++j) row += static_cast<__int128>(g_(i, j)) * x[j];
        s += row * x[i];
    }
    return narrow(s);
}

IntVec Enumerator::to_input(const IntVec& x) const
{
    IntVec y(n_, 0);
    for (int i = 0; i < n_; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < n_; ++j) y[j] = add_ck(y[j], mul_ck(x[i], t_(i, j)));
    }
    return y;
}

void Enumerator::enumerate(Int bound, const std::function<void(const IntVec&, Int)>& visit) const
{
    if (n_ == 0 || bound <= 0) return;
    const long double limit = static_cast<long double>(bound) * (1 + kRel) + kAbs;
    IntVec x(n_, 0);
    std::function<void(int, long double, bool)> rec = [&](int j, long double partial, bool zero_above) {
        long double c = 0;
        for (int i = j + 1; i < n_; ++i) c -= static_cast<long double>(x[i]) * mu_[i][j];
        long double rem = limit - partial;
        if (rem < 0) return;
        long double s = std::sqrt(rem / bn_[j]);
        Int lo = static_cast<Int>(std::ceil(c - s - 1e-9L));
        Int hi = static_cast<Int>(std::floor(c + s + 1e-9L));
        if (zero_above && lo < 0) lo = 0;
        for (Int v = lo; v <= hi; ++v) {
            long double y = static_cast<long double>(v) - c;
            long double np = partial + bn_[j] * y * y;
            if (np > limit) continue;
            x[j] = v;
            if (j == 0) {
                if (!(zero_above && v == 0)) {
                    Int q = quad(x);
                    if (q <= bound) visit(x, q);
                }
            } else {
                rec(j - 1, np, zero_above && v == 0);
            }
        }
        x[j] = 0;
    };
    rec(n_ - 1, 0.0L, true);
}

Rational Enumerator::closest(const std::vector<Rational>& c) const
{
    if (n_ == 0) return 0;
    Int d = 1;
    for (const auto& q : c) d = lcm_ck(d, narrow(BigInt(denominator(q))));
    IntVec cn(n_);
    std::vector<long double> cf(n_);
    for (int i = 0; i < n_; ++i) {
        cn[i] = narrow(BigInt(numerator(Rational(c[i] * d))));
        cf[i] = static_cast<long double>(c[i]);
    }
    auto exact = [&](const IntVec& x) {
        IntVec w(n_);
        for (int i = 0; i < n_; ++i) w[i] = add_ck(mul_ck(d, x[i]), cn[i]);
        return Rational(quad(w), BigInt(d) * d);
    };
    // Babai rounding for an initial bound.
    IntVec x(n_, 0);
    for (int j = n_ - 1; j >= 0; --j) {
        long double ctr = -cf[j];
        for (int i = j + 1; i < n_; ++i) ctr -= (static_cast<long double>(x[i]) + cf[i]) * mu_[i][j];
        x[j] = static_cast<Int>(std::llround(ctr));
    }
    Rational best = exact(x);
    long double limit = static_cast<long double>(best) * (1 + kRel) + kAbs;
    std::fill(x.begin(), x.end(), 0);
    std::function<void(int, long double)> rec = [&](int j, long double partial) {
        long double ctr = -cf[j];
        for (int i = j + 1; i < n_; ++i) ctr -= (static_cast<long double>(x[i]) + cf[i]) * mu_[i][j];
        long double rem = limit - partial;
        if (rem < 0) return;
        long double s = std::sqrt(rem / bn_[j]);
        Int lo = static_cast<Int>(std::ceil(ctr - s - 1e-9L));
        Int hi = static_cast<Int>(std::floor(ctr + s + 1e-9L));
        for (Int v = lo; v <= hi; ++v) {
            long double y = static_cast<long double>(v) - ctr;
            long double np = partial + bn_[j] * y * y;
            if (np > limit) continue;
            x[j] = v;
            if (j == 0) {
                Rational e = exact(x);
                if (e < best) {
                    best = e;
                    limit = static_cast<long double>(best) * (1 + kRel) + kAbs;
                }
            } else {
                rec(j - 1, np);
            }
        }
        x[j] = 0;
    };
    rec(n_ - 1, 0.0L);
    return best;
}

}  // namespace codelat::detail
