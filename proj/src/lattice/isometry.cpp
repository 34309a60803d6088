#include "codelat/lattice.hpp"
#include "enumerator.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace codelat {

namespace {

IntMatrix scaled_gram(const Lattice& l, Int d)
{
    IntMatrix g = l.gram_numerators();
    Int f = d / l.denom();
    Int f2 = mul_ck(f, f);
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (auto& x : g.row(i)) x = mul_ck(x, f2);
    return g;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b)
{
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = add_ck(c(i, j), mul_ck(a(i, k), b(k, j)));
        }
    return c;
}

IntVec mat_vec(const IntMatrix& g, const IntVec& v)
{
    IntVec r(g.rows(), 0);
    for (std::size_t i = 0; i < g.rows(); ++i) r[i] = dot_ck(g.row(i), v);
    return r;
}

struct ShortSet {
    std::vector<IntVec> vecs;  // reduced coordinates, both signs
    std::vector<Int> norms;
    std::vector<IntVec> gv;    // G v for fast inner products
};

ShortSet collect(const detail::Enumerator& e, Int bound)
{
    ShortSet s;
    e.enumerate(bound, [&](const IntVec& x, Int q) {
        IntVec y = x;
        for (auto& c : y) c = -c;
        s.vecs.push_back(x);
        s.norms.push_back(q);
        s.vecs.push_back(std::move(y));
        s.norms.push_back(q);
    });
    for (const auto& v : s.vecs) s.gv.push_back(mat_vec(e.reduced_gram(), v));
    return s;
}

using Fingerprint = std::map<std::pair<Int, Int>, long long>;

Fingerprint fingerprint(const ShortSet& s, const IntVec& gv)
{
    Fingerprint f;
    for (std::size_t j = 0; j < s.vecs.size(); ++j) ++f[{s.norms[j], dot_ck(s.vecs[j], gv)}];
    return f;
}

}  // namespace

IsometryResult isometry_search(const Lattice& a, const Lattice& b, const IsometryOptions& opt)
{
    IsometryResult res;
    if (a.rank() != b.rank()) {
        res.reason = "rank";
        return res;
    }
    const int n = a.rank();
    if (n == 0) {
        res.witness = IsometryWitness{IntMatrix(0, 0)};
        return res;
    }
    if (a.det() != b.det()) {
        res.reason = "determinant";
        return res;
    }
    if (norm_layers(a, opt.invariant_depth) != norm_layers(b, opt.invariant_depth)) {
        res.reason = "norm layers";
        return res;
    }

    const Int d = lcm_ck(a.denom(), b.denom());
    detail::Enumerator ea(scaled_gram(a, d));
    detail::Enumerator eb(scaled_gram(b, d));
    const IntMatrix& rb = eb.reduced_gram();

    Int bound = 0;
    for (int i = 0; i < n; ++i) bound = std::max(bound, rb(i, i));
    ShortSet sa = collect(ea, bound);
    ShortSet sb = collect(eb, bound);
    if (sa.vecs.size() != sb.vecs.size()) {
        res.reason = "short vector count";
        return res;
    }

    // Candidate images in A for each reduced basis vector of B.
    const bool use_fp = sa.vecs.size() <= opt.fingerprint_limit;
    std::vector<Fingerprint> fpa;
    if (use_fp) {
        std::map<Fingerprint, long long> ma, mb;
        for (std::size_t i = 0; i < sa.vecs.size(); ++i) {
            fpa.push_back(fingerprint(sa, sa.gv[i]));
            ++ma[fpa.back()];
        }
        for (std::size_t i = 0; i < sb.vecs.size(); ++i) ++mb[fingerprint(sb, sb.gv[i])];
        if (ma != mb) {
            res.reason = "short vector fingerprints";
            return res;
        }
    }
    std::vector<std::vector<std::size_t>> cand(n);
    for (int i = 0; i < n; ++i) {
        IntVec ei(n, 0);
        ei[i] = 1;
        Fingerprint fb;
        if (use_fp) fb = fingerprint(sb, mat_vec(rb, ei));
        for (std::size_t j = 0; j < sa.vecs.size(); ++j) {
            if (sa.norms[j] != rb(i, i)) continue;
            if (use_fp && fpa[j] != fb) continue;
            cand[i].push_back(j);
        }
        if (cand[i].empty()) {
            res.reason = "no candidate image";
            return res;
        }
    }

    // Forward checking: after fixing an image, prune the candidate lists of all
    // unassigned basis vectors and branch on the smallest remaining list.
    std::vector<std::size_t> chosen(n);
    std::vector<char> assigned(n, 0);
    bool found = false;
    bool over = false;
    std::function<void(int, const std::vector<std::vector<std::size_t>>&)> rec =
        [&](int depth, const std::vector<std::vector<std::size_t>>& cs) {
            if (depth == n) {
                found = true;
                return;
            }
            int i = -1;
            for (int t = 0; t < n; ++t)
                if (!assigned[t] && (i < 0 || cs[t].size() < cs[i].size())) i = t;
            assigned[i] = 1;
            for (std::size_t j : cs[i]) {
                if (++res.nodes > opt.node_budget) {
                    over = true;
                    break;
                }
                // -1 is always an isometry, so the first image can be taken up to sign.
                if (depth == 0 && (j % 2) == 1) continue;
                std::vector<std::vector<std::size_t>> next(n);
                bool dead = false;
                for (int t = 0; t < n && !dead; ++t) {
                    if (assigned[t]) continue;
                    for (std::size_t c : cs[t])
                        if (c != j && dot_ck(sa.vecs[c], sa.gv[j]) == rb(t, i)) next[t].push_back(c);
                    dead = next[t].empty();
                }
                if (dead) continue;
                chosen[i] = j;
                rec(depth + 1, next);
                if (found || over) break;
            }
            assigned[i] = 0;
        };
    rec(0, cand);
    if (over) {
        res.reason = "node budget exceeded";
        return res;
    }
    if (!found) {
        res.reason = "exhausted";
        return res;
    }

    IntMatrix up(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) up(i, j) = sa.vecs[chosen[i]][j];
    IntMatrix u = mat_mul(mat_mul(eb.inverse_transform(), up), ea.transform());
    if (!verify_witness(a, b, u)) throw std::logic_error("isometry_search: witness failed verification");
    res.witness = IsometryWitness{u};
    return res;
}

std::optional<IsometryWitness> is_isometric(const Lattice& a, const Lattice& b)
{
    auto r = isometry_search(a, b);
    if (!r.witness && r.reason == "node budget exceeded")
        throw std::runtime_error("is_isometric: search budget exceeded");
    return r.witness;
}

bool verify_witness(const Lattice& a, const Lattice& b, const IntMatrix& u)
{
    const int n = a.rank();
    if (b.rank() != n) return false;
    if (u.rows() != static_cast<std::size_t>(n) || (n > 0 && u.cols() != static_cast<std::size_t>(n))) return false;
    if (n == 0) return true;
    RatMatrix ga = a.gram(), gb = b.gram();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational s = 0;
            for (int k = 0; k < n; ++k) {
                if (u(i, k) == 0) continue;
                for (int l = 0; l < n; ++l)
                    if (u(j, l) != 0) s += Rational(u(i, k)) * ga(k, l) * u(j, l);
            }
            if (s != gb(i, j)) return false;
        }
    BigMatrix bu(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) bu(i, j) = u(i, j);
    BigInt dt = det_bareiss(bu);
    return dt == 1 || dt == -1;
}

}  // namespace codelat
