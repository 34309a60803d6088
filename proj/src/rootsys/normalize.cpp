#include "codelat/rootsys.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace codelat {

namespace {

Int ipr(const IntVec& a, const IntVec& b, Int d) { return dot_ck(a, b) / mul_ck(d, d); }

IntVec sub(const IntVec& a, const IntVec& b)
{
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = sub_ck(a[i], b[i]);
    return r;
}

Frame rescaled(const Frame& f, Int d)
{
    Frame out = f;
    out.denom = d;
    for (auto& comp : out.components) {
        for (auto& r : comp)
            for (auto& x : r) {
                __int128 y = static_cast<__int128>(x) * d;
                if (y % f.denom != 0) throw std::invalid_argument("frame root not representable over the lattice denominator");
                x = narrow(y / f.denom);
            }
        std::sort(comp.begin(), comp.end());
    }
    return out;
}

int count_in(const Frame& f, const std::set<IntVec>& r)
{
    int c = 0;
    for (const auto& comp : f.components)
        for (const auto& x : comp) c += r.count(x) ? 1 : 0;
    return c;
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

struct Step {
    const Lattice& l;
    int p;
    int k;
    Int d;
    const std::set<IntVec>& standard;

    const IntVec* first_outside(const Frame& f, std::size_t* comp_index) const
    {
        for (std::size_t i = 0; i < f.components.size(); ++i)
            for (const auto& x : f.components[i])
                if (!standard.count(x)) {
                    *comp_index = i;
                    return &x;
                }
        return nullptr;
    }

    // p = 3: a reflection r_v with v = lambda - beta, beta a standard root
    // with (lambda, beta) = 1 and v orthogonal to F inside R(2); it sends
    // lambda to beta and fixes F inside R(2).
    std::optional<std::vector<IntVec>> three(const Frame& f) const
    {
        std::size_t ci = 0;
        const IntVec* lam = first_outside(f, &ci);
        if (!lam) return std::nullopt;
        std::vector<IntVec> inside;
        for (const auto& comp : f.components)
            for (const auto& x : comp)
                if (standard.count(x)) inside.push_back(x);
        for (const auto& beta : standard) {
            if (ipr(*lam, beta, d) != 1) continue;
            IntVec v = sub(*lam, beta);
            if (std::all_of(inside.begin(), inside.end(), [&](const IntVec& x) { return dot_ck(x, v) == 0; }))
                return std::vector<IntVec>{v};
        }
        return std::nullopt;
    }

    // p = 5: lambda glues a 4/5 block i1 to a 6/5 block i2 and
    // L_lambda = Z lambda + A_4^{i1} + A_4^{i2} is E8. A Weyl element of
    // L_lambda moving the chain of lambda's component onto alpha_1..alpha_4
    // of block i1.
    std::optional<std::vector<IntVec>> five(const Frame& f) const
    {
        std::size_t ci = 0;
        const IntVec* lam = first_outside(f, &ci);
        if (!lam) return std::nullopt;
        const Int d2 = mul_ck(d, d);
        int i1 = -1, i2 = -1;
        for (int b = 0; b < k; ++b) {
            Int s = 0;
            for (int t = 0; t < p; ++t) s += (*lam)[b * p + t] * (*lam)[b * p + t];
            if (s == 0) continue;
            if (s * 5 == 4 * d2)
                i1 = b;
            else if (s * 5 == 6 * d2)
                i2 = b;
            else
                return std::nullopt;
        }
        if (i1 < 0 || i2 < 0) return std::nullopt;
        IntMatrix g(0, l.ambient_dim());
        g.append_row(*lam);
        for (int b : {i1, i2})
            for (int i = 1; i < p; ++i) {
                IntVec v = embed_block(an_alpha(p, i), p, k, b).num;
                for (auto& x : v) x = mul_ck(x, d);
                g.append_row(v);
            }
        Lattice ll(l.ambient_dim(), d, g);
        std::vector<IntVec> rs;
        for (auto v : roots(ll)) {
            for (auto& x : v) x = mul_ck(x, d / ll.denom());
            rs.push_back(v);
        }
        std::set<IntVec> rset(rs.begin(), rs.end());
        const auto& comp = f.components[ci];
        if (!std::all_of(comp.begin(), comp.end(), [&](const IntVec& x) { return rset.count(x) > 0; }))
            return std::nullopt;
        auto parts = decompose(comp, d);
        std::vector<IntVec> chain = chain_order(parts.at(0).base, d);
        std::vector<IntVec> target;
        for (int i = 1; i < p; ++i) {
            IntVec v = embed_block(an_alpha(p, i), p, k, i1).num;
            for (auto& x : v) x = mul_ck(x, d);
            target.push_back(v);
        }
        return e8_chain_transport(rs, d, chain, target);
    }

    // Any single root reflection of L that raises #(F cap R(2)).
    std::optional<std::vector<IntVec>> greedy(const Frame& f, const std::vector<IntVec>& all) const
    {
        const int now = count_in(f, standard);
        int best = now;
        const IntVec* pick = nullptr;
        for (const auto& v : all) {
            int c = count_in(apply_reflections(f, {v}), standard);
            if (c > best) {
                best = c;
                pick = &v;
            }
        }
        if (!pick) return std::nullopt;
        return std::vector<IntVec>{*pick};
    }
};

}  // namespace

FrameNormalization normalize_frame(const Code& c, const Frame& f0)
{
    const int p = c.p(), k = c.length();
    Lattice l = construction_A(c);
    const Int d = l.denom();
    Frame f = rescaled(f0, d);
    if (!is_frame(f, p, l.rank())) throw std::invalid_argument("normalize_frame: not an A_{p-1}-frame");
    for (const auto& x : f.all_roots())
        if (!l.contains(RatVec{x, d})) throw std::invalid_argument("normalize_frame: frame root outside L_A(C)");

    const auto std_roots = standard_frame(p, k, d).all_roots();
    const std::set<IntVec> standard(std_roots.begin(), std_roots.end());
    const int total = static_cast<int>(standard.size());
    Step step{l, p, k, d, standard};
    std::vector<IntVec> all_roots;

    FrameNormalization out;
    int inside = count_in(f, standard);
    while (inside < total) {
        if (++out.steps > total) throw std::logic_error("normalize_frame: iteration cap reached");
        if (p >= 7) throw std::logic_error("normalize_frame: root outside R(2) for p >= 7");
        std::optional<std::vector<IntVec>> w = p == 3 ? step.three(f) : p == 5 ? step.five(f) : std::nullopt;
        Frame next;
        bool ok = false;
        if (w) {
            next = apply_reflections(f, *w);
            ok = count_in(next, standard) > inside;
        }
        if (!ok) {
            if (all_roots.empty()) all_roots = roots(l);
            w = step.greedy(f, all_roots);
            if (!w) throw std::runtime_error("normalize_frame: no reflection improves the frame");
            next = apply_reflections(f, *w);
            ++out.generic_steps;
        }
        out.word.insert(out.word.end(), w->begin(), w->end());
        f = std::move(next);
        inside = count_in(f, standard);
    }

    const std::size_t n = static_cast<std::size_t>(l.ambient_dim());
    out.ambient = RatMatrix::identity(n);
    for (const auto& v : out.word) out.ambient = mul(out.ambient, reflection_matrix(RatVec{v, d}));
    out.u = IntMatrix(l.rank(), l.rank());
    for (int i = 0; i < l.rank(); ++i) {
        auto co = l.coordinates(codelat::apply(out.ambient, l.basis_vector(i)));
        if (!co) throw std::logic_error("normalize_frame: image left the span");
        for (int j = 0; j < l.rank(); ++j) {
            if (denominator((*co)[j]) != 1) throw std::logic_error("normalize_frame: image left the lattice");
            out.u(i, j) = narrow(BigInt(numerator((*co)[j])));
        }
    }
    return out;
}

RatMatrix frame_chart(const Frame& f, int p)
{
    const int k = static_cast<int>(f.components.size());
    const std::size_t n = static_cast<std::size_t>(p) * k;
    RatMatrix x(n, n), y(n, n);
    std::size_t row = 0;
    for (int b = 0; b < k; ++b) {
        auto parts = decompose(f.components[b], f.denom);
        if (parts.size() != 1) throw std::invalid_argument("frame_chart: component is not irreducible");
        auto chain = chain_order(parts[0].base, f.denom);
        for (int i = 0; i < p - 1; ++i, ++row) {
            RatVec a = embed_block(an_alpha(p, i + 1), p, k, b);
            for (std::size_t j = 0; j < n; ++j) {
                x(row, j) = Rational(chain[i][j], f.denom);
                y(row, j) = a.num[j];
            }
        }
    }
    for (int b = 0; b < k; ++b, ++row)
        for (int t = 0; t < p; ++t) x(row, b * p + t) = y(row, b * p + t) = 1;
    return mul(inverse(x), y);
}

Code recover_code(int p, const Lattice& l)
{
    if (l.ambient_dim() % p != 0) throw std::invalid_argument("recover_code: ambient dimension not a multiple of p");
    const int k = l.ambient_dim() / p;
    if (l.rank() != (p - 1) * k) throw std::invalid_argument("recover_code: rank mismatch");
    if (!l.contains(root_power(p, k))) throw std::invalid_argument("recover_code: frame is not standard");
    std::vector<FpVec> words;
    for (int i = 0; i < l.rank(); ++i) {
        auto w = glue_word(p, l.basis_vector(i));
        if (!w) throw std::invalid_argument("recover_code: lattice not inside (A*)^k");
        words.push_back(*w);
    }
    return Code(p, k, words);
}

}  // namespace codelat
