#include "codelat/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace codelat {

namespace {

Int content(const IntMatrix& m)
{
    Int g = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (Int x : m.row(i)) g = std::gcd(g, x < 0 ? -x : x);
    return g;
}

std::vector<int> pivot_columns(const IntMatrix& b)
{
    std::vector<int> piv;
    for (std::size_t i = 0; i < b.rows(); ++i) {
        std::size_t j = 0;
        while (b(i, j) == 0) ++j;
        piv.push_back(static_cast<int>(j));
    }
    return piv;
}

Int to_int(const Rational& q)
{
    if (denominator(q) != 1) throw std::domain_error("expected an integer");
    return narrow(BigInt(numerator(q)));
}

}  // namespace

Lattice::Lattice(int ambient_dim, Int denom, const IntMatrix& generators)
    : ambient_dim_(ambient_dim), denom_(denom), basis_(0, ambient_dim)
{
    if (ambient_dim < 0) throw std::invalid_argument("Lattice: negative ambient dimension");
    if (denom <= 0) throw std::invalid_argument("Lattice: denominator must be positive");
    if (generators.rows() > 0 && generators.cols() != static_cast<std::size_t>(ambient_dim))
        throw std::invalid_argument("Lattice: generator width does not match ambient dimension");
    if (generators.rows() > 0) basis_ = hnf(generators);
    if (basis_.rows() == 0) {
        denom_ = 1;
        return;
    }
    Int g = std::gcd(content(basis_), denom_);
    if (g > 1) {
        for (std::size_t i = 0; i < basis_.rows(); ++i)
            for (auto& x : basis_.row(i)) x /= g;
        denom_ /= g;
    }
}

Lattice Lattice::zero(int ambient_dim) { return Lattice(ambient_dim, 1, IntMatrix(0, ambient_dim)); }

Lattice Lattice::from_rational_rows(int ambient_dim, const std::vector<std::vector<Rational>>& rows)
{
    Int d = 1;
    for (const auto& r : rows)
        for (const auto& q : r) d = lcm_ck(d, narrow(BigInt(denominator(q))));
    IntMatrix m(0, ambient_dim);
    for (const auto& r : rows) {
        IntVec v(ambient_dim);
        for (int j = 0; j < ambient_dim; ++j) v[j] = to_int(r[j] * d);
        m.append_row(v);
    }
    return Lattice(ambient_dim, d, m);
}

IntMatrix Lattice::gram_numerators() const
{
    const std::size_t r = basis_.rows();
    IntMatrix g(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j) g(i, j) = g(j, i) = dot_ck(basis_.row(i), basis_.row(j));
    return g;
}

RatMatrix Lattice::gram() const
{
    IntMatrix n = gram_numerators();
    RatMatrix g(n.rows(), n.cols());
    Rational d2 = Rational(denom_) * denom_;
    for (std::size_t i = 0; i < n.rows(); ++i)
        for (std::size_t j = 0; j < n.cols(); ++j) g(i, j) = Rational(n(i, j)) / d2;
    return g;
}

Rational Lattice::det() const
{
    IntMatrix n = gram_numerators();
    BigMatrix b(n.rows(), n.cols());
    for (std::size_t i = 0; i < n.rows(); ++i)
        for (std::size_t j = 0; j < n.cols(); ++j) b(i, j) = n(i, j);
    BigInt scale = 1;
    for (int i = 0; i < rank(); ++i) scale *= BigInt(denom_) * denom_;
    return Rational(det_bareiss(b), scale);
}

IntMatrix Lattice::basis_over(Int d) const
{
    if (d % denom_ != 0) throw std::invalid_argument("basis_over: not a multiple of the denominator");
    IntMatrix m = basis_;
    Int f = d / denom_;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (auto& x : m.row(i)) x = mul_ck(x, f);
    return m;
}

std::optional<std::vector<Rational>> Lattice::coordinates(const RatVec& x) const
{
    if (static_cast<int>(x.num.size()) != ambient_dim_) throw std::invalid_argument("coordinates: dimension mismatch");
    std::vector<Rational> y(ambient_dim_);
    for (int j = 0; j < ambient_dim_; ++j) y[j] = Rational(x.num[j]) * denom_ / x.den;
    auto piv = pivot_columns(basis_);
    std::vector<Rational> c(basis_.rows());
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        Rational s = y[piv[i]];
        for (std::size_t j = 0; j < i; ++j) s -= c[j] * basis_(j, piv[i]);
        c[i] = s / basis_(i, piv[i]);
    }
    for (int j = 0; j < ambient_dim_; ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < basis_.rows(); ++i)
            if (basis_(i, j) != 0) s += c[i] * basis_(i, j);
        if (s != y[j]) return std::nullopt;
    }
    return c;
}

bool Lattice::contains(const RatVec& x) const
{
    auto c = coordinates(x);
    if (!c) return false;
    return std::all_of(c->begin(), c->end(), [](const Rational& q) { return denominator(q) == 1; });
}

bool Lattice::contains(const Lattice& other) const
{
    if (other.ambient_dim_ != ambient_dim_) return false;
    for (int i = 0; i < other.rank(); ++i)
        if (!contains(other.basis_vector(i))) return false;
    return true;
}

Rational rat_dot(const RatVec& a, const RatVec& b)
{
    __int128 s = 0;
    for (std::size_t i = 0; i < a.num.size(); ++i) s += static_cast<__int128>(a.num[i]) * b.num[i];
    return Rational(BigInt(narrow(s)), BigInt(a.den) * b.den);
}

Rational norm(const RatVec& a) { return rat_dot(a, a); }

RatVec normalize(RatVec v)
{
    Int g = v.den;
    for (Int x : v.num) g = std::gcd(g, x < 0 ? -x : x);
    if (g > 1) {
        for (auto& x : v.num) x /= g;
        v.den /= g;
    }
    return v;
}

RatVec to_ratvec(const std::vector<Rational>& v)
{
    Int d = 1;
    for (const auto& q : v) d = lcm_ck(d, narrow(BigInt(denominator(q))));
    RatVec r{IntVec(v.size()), d};
    for (std::size_t i = 0; i < v.size(); ++i) r.num[i] = to_int(v[i] * d);
    return r;
}

std::vector<Rational> to_rationals(const RatVec& v)
{
    std::vector<Rational> r(v.num.size());
    for (std::size_t i = 0; i < v.num.size(); ++i) r[i] = Rational(v.num[i], v.den);
    return r;
}

Lattice dual(const Lattice& l)
{
    if (l.rank() == 0) return Lattice::zero(l.ambient_dim());
    IntMatrix gn = l.gram_numerators();
    RatMatrix g(gn.rows(), gn.cols());
    for (std::size_t i = 0; i < gn.rows(); ++i)
        for (std::size_t j = 0; j < gn.cols(); ++j) g(i, j) = gn(i, j);
    RatMatrix gi = inverse(g);
    std::vector<std::vector<Rational>> rows;
    for (int i = 0; i < l.rank(); ++i) {
        std::vector<Rational> v(l.ambient_dim(), 0);
        for (int j = 0; j < l.rank(); ++j) {
            if (gi(i, j) == 0) continue;
            for (int t = 0; t < l.ambient_dim(); ++t) v[t] += gi(i, j) * l.basis()(j, t);
        }
        for (auto& q : v) q *= l.denom();
        rows.push_back(std::move(v));
    }
    return Lattice::from_rational_rows(l.ambient_dim(), rows);
}

bool is_integral(const Lattice& l)
{
    IntMatrix g = l.gram_numerators();
    Int d2 = mul_ck(l.denom(), l.denom());
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            if (g(i, j) % d2 != 0) return false;
    return true;
}

bool is_even(const Lattice& l)
{
    if (!is_integral(l)) return false;
    IntMatrix g = l.gram_numerators();
    Int d2 = mul_ck(l.denom(), l.denom());
    for (std::size_t i = 0; i < g.rows(); ++i)
        if ((g(i, i) / d2) % 2 != 0) return false;
    return true;
}

Lattice join(const Lattice& a, const Lattice& b)
{
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("join: ambient dimensions differ");
    Int d = lcm_ck(a.denom(), b.denom());
    IntMatrix m = a.basis_over(d);
    IntMatrix mb = b.basis_over(d);
    for (std::size_t i = 0; i < mb.rows(); ++i) m.append_row(mb.row(i));
    return Lattice(a.ambient_dim(), d, m);
}

Lattice kernel_sublattice(const Lattice& l, const RatVec& f, Int m)
{
    if (static_cast<int>(f.num.size()) != l.ambient_dim()) throw std::invalid_argument("kernel_sublattice: dimension mismatch");
    const int r = l.rank();
    if (r == 0) return l;
    // values (b_i, f) = n_i / D
    std::vector<Rational> vals(r);
    Int d = 1;
    for (int i = 0; i < r; ++i) {
        vals[i] = rat_dot(l.basis_vector(i), f);
        d = lcm_ck(d, narrow(BigInt(denominator(vals[i]))));
    }
    IntVec w(r);
    for (int i = 0; i < r; ++i) w[i] = mod_pos(narrow(BigInt(numerator(Rational(vals[i] * d)))), d);
    // column operations bringing w to (g, 0, ..., 0); u tracks them
    IntMatrix u = IntMatrix::identity(r);
    for (int i = 1; i < r; ++i) {
        if (w[i] == 0) continue;
        Int a0 = w[0], ai = w[i];
        Int x0 = 1, y0 = 0, x1 = 0, y1 = 1, aa = a0, bb = ai;
        while (bb != 0) {
            Int q = floor_div(aa, bb);
            Int rr = aa - q * bb;
            aa = bb;
            bb = rr;
            Int t = x0 - q * x1;
            x0 = x1;
            x1 = t;
            t = y0 - q * y1;
            y0 = y1;
            y1 = t;
        }
        Int g = aa;  // = x0*a0 + y0*ai
        if (g < 0) {
            g = -g;
            x0 = -x0;
            y0 = -y0;
        }
        for (int row = 0; row < r; ++row) {
            Int c0 = u(row, 0), ci = u(row, i);
            u(row, 0) = add_ck(mul_ck(x0, c0), mul_ck(y0, ci));
            u(row, i) = sub_ck(mul_ck(ai / g, c0), mul_ck(a0 / g, ci));
        }
        w[0] = g;
        w[i] = 0;
    }
    Int g = std::gcd(w[0], d);
    Int idx = g == 0 ? 1 : d / g;
    if (m <= 0 || m % idx != 0) throw std::invalid_argument("kernel_sublattice: index does not divide the modulus");
    IntMatrix gens(0, l.ambient_dim());
    for (int c = 0; c < r; ++c) {
        Int s = c == 0 ? idx : 1;
        IntVec v(l.ambient_dim(), 0);
        for (int row = 0; row < r; ++row) {
            Int coef = mul_ck(u(row, c), s);
            if (coef == 0) continue;
            for (int t = 0; t < l.ambient_dim(); ++t) v[t] = add_ck(v[t], mul_ck(coef, l.basis()(row, t)));
        }
        gens.append_row(v);
    }
    return Lattice(l.ambient_dim(), l.denom(), gens);
}

Int index(const Lattice& sub, const Lattice& sup)
{
    if (sub.rank() != sup.rank()) throw std::invalid_argument("index: rank mismatch");
    const int r = sub.rank();
    if (r == 0) return 1;
    BigMatrix c(r, r);
    for (int i = 0; i < r; ++i) {
        auto co = sup.coordinates(sub.basis_vector(i));
        if (!co) throw std::invalid_argument("index: not a sublattice");
        for (int j = 0; j < r; ++j) {
            if (denominator((*co)[j]) != 1) throw std::invalid_argument("index: not a sublattice");
            c(i, j) = numerator((*co)[j]);
        }
    }
    BigInt dt = det_bareiss(c);
    return narrow(dt < 0 ? BigInt(-dt) : dt);
}

RatVec apply(const RatMatrix& m, const RatVec& x)
{
    std::vector<Rational> y(m.cols(), 0);
    for (std::size_t i = 0; i < x.num.size(); ++i) {
        if (x.num[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) y[j] += m(i, j) * x.num[i];
    }
    for (auto& q : y) q /= x.den;
    return to_ratvec(y);
}

Lattice transform(const Lattice& l, const RatMatrix& m)
{
    std::vector<std::vector<Rational>> rows;
    for (int i = 0; i < l.rank(); ++i) rows.push_back(to_rationals(codelat::apply(m, l.basis_vector(i))));
    return Lattice::from_rational_rows(static_cast<int>(m.cols()), rows);
}

}  // namespace codelat
