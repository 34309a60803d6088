#include "codelat/rootsys.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace codelat {

namespace {

Int ipr(const IntVec& a, const IntVec& b, Int d) { return dot_ck(a, b) / mul_ck(d, d); }

std::vector<Rational> rat(const IntVec& v, Int d)
{
    std::vector<Rational> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i], d);
    return r;
}

// Basis of the rational orthogonal complement of the row space of m.
std::vector<std::vector<Rational>> complement(const std::vector<std::vector<Rational>>& rows, std::size_t n)
{
    RatMatrix m(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m.rows(); ++c) {
        std::size_t s = r;
        while (s < m.rows() && m(s, c) == 0) ++s;
        if (s == m.rows()) continue;
        m.swap_rows(r, s);
        Rational inv = 1 / m(r, c);
        for (std::size_t j = 0; j < n; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (std::size_t j = 0; j < n; ++j) m(i, j) -= f * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    std::vector<std::vector<Rational>> out;
    for (std::size_t c = 0; c < n; ++c) {
        if (std::find(piv.begin(), piv.end(), c) != piv.end()) continue;
        std::vector<Rational> v(n, 0);
        v[c] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m(i, c);
        out.push_back(v);
    }
    return out;
}

RatMatrix mul(const RatMatrix& a, const RatMatrix& b)
{
    RatMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

std::vector<Rational> row_times(const std::vector<Rational>& x, const RatMatrix& m)
{
    std::vector<Rational> y(m.cols(), 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) y[j] += x[i] * m(i, j);
    }
    return y;
}

BigInt gram_det(const std::vector<IntVec>& vs)
{
    BigMatrix g(vs.size(), vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < vs.size(); ++j) g(i, j) = dot_ck(vs[i], vs[j]);
    return det_bareiss(g);
}

}  // namespace

std::vector<IntVec> e8_roots()
{
    std::vector<IntVec> out;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            for (int si : {2, -2})
                for (int sj : {2, -2}) {
                    IntVec v(8, 0);
                    v[i] = si;
                    v[j] = sj;
                    out.push_back(v);
                }
    for (int mask = 0; mask < 256; ++mask) {
        if (__builtin_popcount(mask) % 2 != 0) continue;
        IntVec v(8);
        for (int i = 0; i < 8; ++i) v[i] = (mask >> i) & 1 ? -1 : 1;
        out.push_back(v);
    }
    return out;
}

Lattice e8_lattice()
{
    IntMatrix g(0, 8);
    for (const auto& r : e8_roots()) g.append_row(r);
    return Lattice(8, 2, g);
}

bool is_chain(const std::vector<IntVec>& s, Int denom)
{
    if (s.size() != 4) return false;
    const Int d2 = mul_ck(denom, denom);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i; j < 4; ++j) {
            Int v = dot_ck(s[i], s[j]);
            Int want = i == j ? 2 : (j == i + 1 ? -1 : 0);
            if (v != want * d2) return false;
        }
    return true;
}

std::optional<std::vector<IntVec>> e8_chain_transport(const std::vector<IntVec>& rs, Int d,
                                                      const std::vector<IntVec>& s1,
                                                      const std::vector<IntVec>& s2)
{
    if (!is_chain(s1, d) || !is_chain(s2, d)) throw std::invalid_argument("e8_chain_transport: input is not a chain");
    if (rs.size() != 240) throw std::invalid_argument("e8_chain_transport: expected the 240 roots of E8");
    const std::size_t n = rs[0].size();
    std::set<IntVec> rootset(rs.begin(), rs.end());

    // Extend s1 to 8 independent roots.
    std::vector<IntVec> b1 = s1;
    for (const auto& r : rs) {
        if (b1.size() == 8) break;
        b1.push_back(r);
        if (gram_det(b1) == 0) b1.pop_back();
    }
    if (b1.size() != 8) throw std::invalid_argument("e8_chain_transport: roots do not span rank 8");

    std::vector<std::vector<Rational>> span;
    for (const auto& v : b1) span.push_back(rat(v, d));
    auto comp = complement(span, n);
    RatMatrix x(n, n);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < n; ++j) x(i, j) = span[i][j];
    for (std::size_t i = 0; i < comp.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) x(8 + i, j) = comp[i][j];
    const RatMatrix xinv = inverse(x);

    // Backtrack images of the extra basis roots; accept the first map that
    // permutes the root system.
    std::vector<IntVec> img = s2;
    std::optional<RatMatrix> h;
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == 8) {
            RatMatrix t = x;
            for (std::size_t a = 0; a < 8; ++a)
                for (std::size_t j = 0; j < n; ++j) t(a, j) = Rational(img[a][j], d);
            RatMatrix m = mul(xinv, t);
            for (const auto& r : rs) {
                auto y = row_times(rat(r, d), m);
                IntVec yn(n);
                for (std::size_t j = 0; j < n; ++j) {
                    Rational q = y[j] * d;
                    if (denominator(q) != 1) return false;
                    yn[j] = narrow(BigInt(numerator(q)));
                }
                if (!rootset.count(yn)) return false;
            }
            h = m;
            return true;
        }
        for (const auto& r : rs) {
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) ok = ipr(r, img[j], d) == ipr(b1[i], b1[j], d);
            if (!ok) continue;
            img.push_back(r);
            if (rec(i + 1)) return true;
            img.pop_back();
        }
        return false;
    };
    if (!rec(4)) return std::nullopt;

    // Write h as a product of simple reflections: while h sends some simple
    // root a to a negative root, replace h by h s_a.
    auto parts = decompose(rs, d);
    const auto& base = parts.at(0).base;
    const auto& f = parts.at(0).functional;
    RatMatrix hm = *h;
    std::vector<IntVec> word;
    for (int guard = 0; guard < 1000; ++guard) {
        bool moved = false;
        for (const auto& a : base) {
            auto y = row_times(rat(a, d), hm);
            Rational fy = 0;
            for (std::size_t j = 0; j < n; ++j) fy += y[j] * f[j];
            if (fy < 0) {
                hm = mul(reflection_matrix(RatVec{a, d}), hm);
                word.push_back(a);
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    if (hm != RatMatrix::identity(n)) throw std::logic_error("e8_chain_transport: reflection word did not reduce to 1");
    for (std::size_t i = 0; i < 4; ++i) {
        IntVec v = s1[i];
        for (const auto& a : word) v = reflect(v, a, d);
        if (v != s2[i]) throw std::logic_error("e8_chain_transport: word does not map the chain");
    }
    return word;
}

E8ChainCounts e8_chain_counts()
{
    const auto rs = e8_roots();
    const Int d = 2;
    IntVec x1{2, 2, 0, 0, 0, 0, 0, 0};
    E8ChainCounts out;
    std::vector<IntVec> first;
    for (const auto& x2 : rs) {
        if (ipr(x1, x2, d) != -1) continue;
        for (const auto& x3 : rs) {
            if (ipr(x2, x3, d) != -1 || ipr(x1, x3, d) != 0) continue;
            for (const auto& x4 : rs) {
                if (ipr(x3, x4, d) != -1 || ipr(x1, x4, d) != 0 || ipr(x2, x4, d) != 0) continue;
                ++out.completions;
                if (first.empty()) first = {x1, x2, x3, x4};
            }
        }
    }
    out.chains = static_cast<long long>(rs.size()) * out.completions / 2;
    std::vector<IntVec> perp;
    for (const auto& r : rs)
        if (std::all_of(first.begin(), first.end(), [&](const IntVec& s) { return dot_ck(r, s) == 0; }))
            perp.push_back(r);
    out.orthogonal_roots = static_cast<int>(perp.size());
    auto parts = decompose(perp, d);
    out.orthogonal_type = parts.size() == 1 ? parts[0].type : "reducible";
    return out;
}

E8GlueCheck e8_glue_check()
{
    Lattice a4d = dual_root_power(5, 1);
    auto to5 = [&](const IntVec& v) {
        IntVec r = v;
        for (auto& x : r) x = mul_ck(x, 5 / a4d.denom());
        return r;
    };
    std::vector<IntVec> small, large;
    for (const auto& v : vectors_of_norm(a4d, Rational(4, 5))) small.push_back(to5(v));
    for (const auto& v : vectors_of_norm(a4d, Rational(6, 5))) large.push_back(to5(v));
    Lattice r2 = root_power(5, 2);
    E8GlueCheck out;
    for (int order = 0; order < 2; ++order)
        for (const auto& s : small)
            for (const auto& t : large) {
                IntVec lam(10);
                const IntVec& first = order == 0 ? s : t;
                const IntVec& second = order == 0 ? t : s;
                for (int j = 0; j < 5; ++j) {
                    lam[j] = first[j];
                    lam[5 + j] = second[j];
                }
                IntMatrix g(0, 10);
                g.append_row(lam);
                for (int i = 0; i < r2.rank(); ++i) {
                    IntVec v = r2.basis().row_vec(i);
                    for (auto& x : v) x *= 5;
                    g.append_row(v);
                }
                Lattice l(10, 5, g);
                ++out.lambdas;
                bool even = is_even(l);
                if (even) ++out.even;
                if (l.det() == 1) ++out.unimodular;
                if (even && roots(l).size() == 240) ++out.with_240_roots;
            }
    return out;
}

}  // namespace codelat
