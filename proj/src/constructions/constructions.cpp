#include "codelat/constructions.hpp"

#include <stdexcept>

namespace codelat {

namespace {

void check_n(int n)
{
    if (n < 2) throw std::invalid_argument("A_{n-1} needs n >= 2");
}

void check_code_prime(int p)
{
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("expected an odd prime");
}

RatVec scaled_to(const RatVec& v, Int d)
{
    if (d % v.den != 0) throw std::invalid_argument("denominator does not divide target");
    RatVec r{v.num, d};
    for (auto& x : r.num) x = mul_ck(x, d / v.den);
    return r;
}

void add_into(IntVec& acc, const IntVec& v, Int s = 1)
{
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = add_ck(acc[i], mul_ck(s, v[i]));
}

}  // namespace

Lattice an_lattice(int n)
{
    check_n(n);
    IntMatrix g(0, n);
    for (int i = 1; i < n; ++i) g.append_row(an_alpha(n, i).num);
    return Lattice(n, 1, g);
}

RatVec an_alpha(int n, int i)
{
    check_n(n);
    if (i < 1 || i >= n) throw std::out_of_range("alpha index");
    IntVec v(n, 0);
    v[i - 1] = 1;
    v[i] = -1;
    return {v, 1};
}

RatVec an_epsilon(int n, int i)
{
    check_n(n);
    if (i < 1 || i > n) throw std::out_of_range("epsilon index");
    IntVec v(n, -1);
    v[i - 1] = n - 1;
    return {v, n};
}

RatVec an_rho(int n)
{
    check_n(n);
    IntVec v(n);
    for (int i = 0; i < n; ++i) v[i] = n - 1 - 2 * i;
    return normalize({v, 2});
}

RatVec embed_block(const RatVec& v, int n, int k, int block)
{
    if (static_cast<int>(v.num.size()) != n || block < 0 || block >= k)
        throw std::invalid_argument("embed_block: bad block");
    IntVec out(static_cast<std::size_t>(n) * k, 0);
    for (int t = 0; t < n; ++t) out[block * n + t] = v.num[t];
    return {out, v.den};
}

RatVec lambda_j(int p, int j)
{
    check_code_prime(p);
    if (j < 0 || j >= p) throw std::out_of_range("lambda_j: entry out of range");
    IntVec v(p, 0);
    add_into(v, an_epsilon(p, 1).num, j);
    for (int i = 1; i < j; ++i) add_into(v, an_alpha(p, i).num, -static_cast<Int>(p) * (j - i));
    return {v, p};
}

RatVec lambda_lift(int p, const FpVec& c)
{
    const int k = static_cast<int>(c.size());
    IntVec v(static_cast<std::size_t>(p) * k, 0);
    for (int b = 0; b < k; ++b) {
        RatVec l = lambda_j(p, c[b]);
        for (int t = 0; t < p; ++t) v[b * p + t] = l.num[t];
    }
    return {v, p};
}

RatVec chi_vector(int p, int k)
{
    check_code_prime(p);
    IntVec v(static_cast<std::size_t>(p) * k);
    for (int b = 0; b < k; ++b)
        for (int t = 0; t < p; ++t) v[b * p + t] = p - 1 - 2 * t;
    return {v, 2 * static_cast<Int>(p)};
}

Lattice root_power(int p, int k)
{
    IntMatrix g(0, static_cast<std::size_t>(p) * k);
    for (int b = 0; b < k; ++b)
        for (int i = 1; i < p; ++i) g.append_row(embed_block(an_alpha(p, i), p, k, b).num);
    return Lattice(p * k, 1, g);
}

Lattice dual_root_power(int p, int k)
{
    IntMatrix g(0, static_cast<std::size_t>(p) * k);
    for (int b = 0; b < k; ++b) {
        g.append_row(embed_block(an_epsilon(p, 1), p, k, b).num);
        for (int i = 1; i < p; ++i) g.append_row(scaled_to(embed_block(an_alpha(p, i), p, k, b), p).num);
    }
    return Lattice(p * k, p, g);
}

std::optional<FpVec> glue_word(int p, const RatVec& x)
{
    if (x.num.size() % p != 0) throw std::invalid_argument("glue_word: ambient not a multiple of p");
    const int k = static_cast<int>(x.num.size()) / p;
    FpVec w(k);
    for (int b = 0; b < k; ++b) {
        Int sum = 0;
        Int cls = -1;
        for (int t = 0; t < p; ++t) {
            __int128 y = static_cast<__int128>(x.num[b * p + t]) * p;
            if (y % x.den != 0) return std::nullopt;
            Int yi = narrow(y / x.den);
            sum = add_ck(sum, yi);
            Int c = mod_pos(-yi, p);
            if (cls >= 0 && c != cls) return std::nullopt;
            cls = c;
        }
        if (sum != 0) return std::nullopt;
        w[b] = static_cast<int>(cls);
    }
    return w;
}

Lattice construction_A(const Code& c)
{
    const int p = c.p(), k = c.length();
    IntMatrix g(0, static_cast<std::size_t>(p) * k);
    for (std::size_t r = 0; r < c.gens().rows(); ++r) g.append_row(lambda_lift(p, c.gens().row_vec(r)).num);
    Lattice roots = root_power(p, k);
    for (int i = 0; i < roots.rank(); ++i) g.append_row(scaled_to(roots.basis_vector(i), p).num);
    return Lattice(p * k, p, g);
}

Lattice construction_B(const Code& c)
{
    if (!is_self_orthogonal(c)) throw std::invalid_argument("construction_B: code is not self-orthogonal");
    return kernel_sublattice(construction_A(c), chi_vector(c.p(), c.length()), c.p());
}

Lattice construction_A_preimage(const Code& c)
{
    const int p = c.p(), k = c.length();
    IntMatrix g(0, static_cast<std::size_t>(p) * k);
    Code full = Code::full(p, k);
    for (const FpVec& w : full.codewords()) {
        if (!c.contains(w)) continue;
        IntVec v(static_cast<std::size_t>(p) * k, 0);
        for (int b = 0; b < k; ++b)
            for (int t = 0; t < p; ++t) v[b * p + t] = mul_ck(w[b], an_epsilon(p, 1).num[t]);
        g.append_row(v);
    }
    Lattice roots = root_power(p, k);
    for (int i = 0; i < roots.rank(); ++i) g.append_row(scaled_to(roots.basis_vector(i), p).num);
    return Lattice(p * k, p, g);
}

IntVec alpha_coordinates(const IntVec& x)
{
    IntVec c(x.size() > 0 ? x.size() - 1 : 0);
    Int s = 0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        s = add_ck(s, x[i]);
        c[i] = s;
    }
    return c;
}

}  // namespace codelat
