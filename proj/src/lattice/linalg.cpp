#include "codelat/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace codelat {

namespace {

std::tuple<Int, Int, Int> ext_gcd(Int a, Int b)
{
    Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        Int q = floor_div(a, b);
        Int r = sub_ck(a, mul_ck(q, b));
        std::tie(a, b) = std::make_tuple(b, r);
        std::tie(x0, x1) = std::make_tuple(x1, sub_ck(x0, mul_ck(q, x1)));
        std::tie(y0, y1) = std::make_tuple(y1, sub_ck(y0, mul_ck(q, y1)));
    }
    if (a < 0) return {-a, -x0, -y0};
    return {a, x0, y0};
}

int lead(const IntVec& v)
{
    for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0) return static_cast<int>(j);
    return -1;
}

// dst = a*x + b*y
IntVec lincomb(Int a, const IntVec& x, Int b, const IntVec& y)
{
    IntVec r(x.size());
    for (std::size_t j = 0; j < x.size(); ++j)
        r[j] = narrow(static_cast<__int128>(a) * x[j] + static_cast<__int128>(b) * y[j]);
    return r;
}

void reduce_above(std::vector<IntVec>& rows)
{
    for (std::size_t i = 0; i < rows.size(); ++i) {
        int c = lead(rows[i]);
        Int piv = rows[i][c];
        for (std::size_t j = 0; j < i; ++j) {
            Int q = floor_div(rows[j][c], piv);
            if (q != 0) rows[j] = lincomb(1, rows[j], -q, rows[i]);
        }
    }
}

}  // namespace

IntMatrix hnf(const IntMatrix& m)
{
    std::vector<IntVec> rows;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        IntVec v = m.row_vec(r);
        std::size_t i = 0;
        while (true) {
            int lv = lead(v);
            if (lv < 0) break;
            while (i < rows.size() && lead(rows[i]) < lv) ++i;
            if (i == rows.size() || lead(rows[i]) > lv) {
                if (v[lv] < 0)
                    for (auto& x : v) x = -x;
                rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(i), v);
                break;
            }
            IntVec& h = rows[i];
            auto [g, a, b] = ext_gcd(h[lv], v[lv]);
            Int hc = h[lv] / g, vc = v[lv] / g;
            IntVec nh = lincomb(a, h, b, v);
            IntVec nv = lincomb(vc, h, -hc, v);
            h = std::move(nh);
            v = std::move(nv);
            ++i;
        }
        reduce_above(rows);
    }
    IntMatrix out(0, m.cols());
    for (const auto& r : rows) out.append_row(r);
    return out;
}

BigInt det_bareiss(const BigMatrix& a)
{
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    BigMatrix m = a;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t s = k + 1;
            while (s < n && m(s, k) == 0) ++s;
            if (s == n) return 0;
            m.swap_rows(k, s);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::optional<std::vector<Rational>> solve_left(const RatMatrix& a, const std::vector<Rational>& b)
{
    // x A = b  <=>  A^T x^T = b^T
    const std::size_t n = a.rows();
    RatMatrix m(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = a(j, i);
        m(i, n) = b[i];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m(piv, c) == 0) ++piv;
        if (piv == n) return std::nullopt;
        m.swap_rows(c, piv);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m(i, c) == 0) continue;
            Rational f = m(i, c) / m(c, c);
            for (std::size_t j = c; j <= n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = m(i, n) / m(i, i);
    return x;
}

RatMatrix inverse(const RatMatrix& a)
{
    const std::size_t n = a.rows();
    RatMatrix m(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
        m(i, n + i) = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m(piv, c) == 0) ++piv;
        if (piv == n) throw std::domain_error("inverse: singular matrix");
        m.swap_rows(c, piv);
        Rational inv = 1 / m(c, c);
        for (std::size_t j = 0; j < 2 * n; ++j) m(c, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (std::size_t j = 0; j < 2 * n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    RatMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = m(i, n + j);
    return out;
}

}  // namespace codelat
