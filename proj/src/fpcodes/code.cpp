#include "codelat/fpcodes.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace codelat {

bool is_prime(int n)
{
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int fp_inv(int a, int p)
{
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw std::domain_error("fp_inv: zero has no inverse");
    int r = 1, b = a, e = p - 2;
    while (e > 0) {
        if (e & 1) r = static_cast<int>(static_cast<long long>(r) * b % p);
        b = static_cast<int>(static_cast<long long>(b) * b % p);
        e >>= 1;
    }
    return r;
}

std::vector<std::size_t> fp_rref(FpMatrix& m, int p)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(r, piv);
        int inv = fp_inv(m(r, c), p);
        for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = m(r, j) * inv % p;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            int f = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = ((m(i, j) - f * m(r, j)) % p + p) % p;
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

FpMatrix fp_nullspace(const FpMatrix& m, int p)
{
    FpMatrix a = m;
    auto pivots = fp_rref(a, p);
    std::size_t n = a.cols();
    std::vector<bool> is_piv(n, false);
    for (auto c : pivots) is_piv[c] = true;
    FpMatrix basis(0, n);
    for (std::size_t f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        FpVec v(n, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = (p - a(i, f)) % p;
        basis.append_row(v);
    }
    fp_rref(basis, p);
    return basis;
}

int fp_dot(const FpVec& a, const FpVec& b, int p)
{
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
    return static_cast<int>(s % p);
}

int weight(const FpVec& v)
{
    return static_cast<int>(std::count_if(v.begin(), v.end(), [](int x) { return x != 0; }));
}

Code::Code(int p, int length, const FpMatrix& generators) : p_(p), length_(length), gens_(0, length)
{
    if (!is_prime(p) || p == 2) throw std::invalid_argument("Code: p must be an odd prime");
    if (length < 1) throw std::invalid_argument("Code: length must be positive");
    if (generators.cols() != static_cast<std::size_t>(length) && generators.rows() > 0)
        throw std::invalid_argument("Code: generator width does not match length");
    FpMatrix m(0, length);
    for (std::size_t i = 0; i < generators.rows(); ++i) {
        FpVec r(length);
        for (int j = 0; j < length; ++j) r[j] = ((generators(i, j) % p) + p) % p;
        m.append_row(r);
    }
    auto piv = fp_rref(m, p);
    for (std::size_t i = 0; i < piv.size(); ++i) gens_.append_row(m.row(i));
}

Code::Code(int p, int length, const std::vector<FpVec>& generators)
    : Code(p, length, FpMatrix::from_rows(generators, length))
{
}

Code Code::zero(int p, int length) { return Code(p, length, FpMatrix(0, length)); }
Code Code::full(int p, int length) { return Code(p, length, FpMatrix::identity(length)); }

bool Code::contains(const FpVec& x) const
{
    if (static_cast<int>(x.size()) != length_) throw std::invalid_argument("contains: length mismatch");
    FpMatrix m = gens_;
    FpVec r(length_);
    for (int j = 0; j < length_; ++j) r[j] = ((x[j] % p_) + p_) % p_;
    m.append_row(r);
    return fp_rref(m, p_).size() == gens_.rows();
}

FpVec Code::combine(const std::vector<int>& coeffs) const
{
    FpVec v(length_, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        for (int j = 0; j < length_; ++j) v[j] = (v[j] + coeffs[i] * gens_(i, j)) % p_;
    }
    return v;
}

std::vector<FpVec> Code::codewords() const
{
    std::vector<FpVec> out;
    std::vector<int> coeffs(dim(), 0);
    while (true) {
        out.push_back(combine(coeffs));
        int i = dim() - 1;
        while (i >= 0 && coeffs[i] == p_ - 1) coeffs[i--] = 0;
        if (i < 0) break;
        ++coeffs[i];
    }
    return out;
}

Code dual_code(const Code& c)
{
    return Code(c.p(), c.length(), fp_nullspace(c.gens(), c.p()));
}

bool is_self_orthogonal(const Code& c)
{
    for (int i = 0; i < c.dim(); ++i)
        for (int j = i; j < c.dim(); ++j)
            if (fp_dot(c.gens().row_vec(i), c.gens().row_vec(j), c.p()) != 0) return false;
    return true;
}

Code extend(const Code& c, const std::vector<FpVec>& extra)
{
    FpMatrix m = c.gens();
    for (const auto& v : extra) m.append_row(v);
    return Code(c.p(), c.length(), m);
}

bool is_subcode(const Code& sub, const Code& sup)
{
    for (int i = 0; i < sub.dim(); ++i)
        if (!sup.contains(sub.gens().row_vec(i))) return false;
    return true;
}

long long coset_weight_count(const Code& c, const FpVec& t, int n)
{
    if (static_cast<int>(t.size()) != c.length()) throw std::invalid_argument("coset_weight_count: length mismatch");
    long long count = 0;
    for (auto w : c.codewords()) {
        for (int j = 0; j < c.length(); ++j) w[j] = ((w[j] + t[j]) % c.p() + c.p()) % c.p();
        if (weight(w) == n) ++count;
    }
    return count;
}

std::vector<long long> weight_distribution(const Code& c)
{
    std::vector<long long> dist(c.length() + 1, 0);
    for (const auto& w : c.codewords()) ++dist[weight(w)];
    return dist;
}

SignedPermutation SignedPermutation::identity(int k)
{
    SignedPermutation g;
    g.perm.resize(k);
    std::iota(g.perm.begin(), g.perm.end(), 0);
    g.signs.assign(k, 1);
    return g;
}

bool SignedPermutation::is_valid() const
{
    if (perm.size() != signs.size()) return false;
    std::vector<bool> seen(perm.size(), false);
    for (int v : perm) {
        if (v < 0 || v >= size() || seen[v]) return false;
        seen[v] = true;
    }
    return std::all_of(signs.begin(), signs.end(), [](int s) { return s == 1 || s == -1; });
}

FpVec SignedPermutation::apply(const FpVec& x, int p) const
{
    FpVec out(x.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        int t = perm[i];
        out[t] = ((signs[t] * x[i]) % p + p) % p;
    }
    return out;
}

Code SignedPermutation::apply(const Code& c) const
{
    FpMatrix m(0, c.length());
    for (int i = 0; i < c.dim(); ++i) m.append_row(apply(c.gens().row_vec(i), c.p()));
    return Code(c.p(), c.length(), m);
}

SignedPermutation SignedPermutation::inverse() const
{
    SignedPermutation h;
    h.perm.assign(perm.size(), 0);
    h.signs.assign(perm.size(), 1);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        h.perm[perm[i]] = static_cast<int>(i);
        h.signs[i] = signs[perm[i]];
    }
    return h;
}

SignedPermutation compose(const SignedPermutation& g, const SignedPermutation& h)
{
    auto ginv = g.inverse();
    SignedPermutation r;
    r.perm.resize(g.perm.size());
    r.signs.resize(g.perm.size());
    for (std::size_t i = 0; i < g.perm.size(); ++i) r.perm[i] = g.perm[h.perm[i]];
    for (std::size_t t = 0; t < g.perm.size(); ++t) r.signs[t] = g.signs[t] * h.signs[ginv.perm[t]];
    return r;
}

SignedPermutation random_signed_permutation(int k, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    auto g = SignedPermutation::identity(k);
    for (int i = k - 1; i > 0; --i) {
        std::uniform_int_distribution<int> d(0, i);
        std::swap(g.perm[i], g.perm[d(rng)]);
    }
    for (auto& s : g.signs) s = (rng() & 1) ? -1 : 1;
    return g;
}

std::string code_key(const Code& c)
{
    std::string s = std::to_string(c.p()) + ":" + std::to_string(c.length()) + ":";
    for (std::size_t i = 0; i < c.gens().rows(); ++i) {
        if (i) s += '|';
        for (int j = 0; j < c.length(); ++j) s += "0123456789abcdefghijklmnopqrstuvwxyz"[c.gens()(i, j) % 36];
    }
    return s;
}

}  // namespace codelat
