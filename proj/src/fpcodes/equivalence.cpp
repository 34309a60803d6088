#include "codelat/fpcodes.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace codelat {

namespace {

// Per-coordinate profile: how many codewords of each weight and residue class
// {a, -a} are nonzero there. Invariant under signed permutations.
std::vector<std::vector<long long>> coordinate_profiles(const Code& c)
{
    const int k = c.length();
    const int p = c.p();
    std::vector<std::vector<long long>> prof(k, std::vector<long long>((k + 1) * (p / 2 + 1), 0));
    long long total = 1;
    for (int i = 0; i < c.dim() && total <= 200000; ++i) total *= p;
    if (total > 200000) return prof;
    for (const auto& w : c.codewords()) {
        int wt = weight(w);
        for (int j = 0; j < k; ++j) {
            if (w[j] == 0) continue;
            int cls = std::min(w[j], p - w[j]);
            ++prof[j][wt * (p / 2 + 1) + cls];
        }
    }
    return prof;
}

FpMatrix projected_rref(const FpMatrix& g, const std::vector<int>& cols, const std::vector<int>& signs, int p)
{
    FpMatrix m(g.rows(), cols.size());
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t t = 0; t < cols.size(); ++t) m(i, t) = ((signs[t] * g(i, cols[t])) % p + p) % p;
    fp_rref(m, p);
    return m;
}

struct EquivSearch {
    const Code& c;
    const Code& d;
    std::vector<int> order;                 // C coordinates in processing order
    std::vector<std::vector<int>> cand;     // candidate D coordinates per C coordinate
    std::vector<bool> c_zero_col;
    std::vector<bool> used;
    std::vector<int> ccols, dcols, signs;

    bool run(std::size_t depth)
    {
        if (depth == order.size()) return true;
        int ci = order[depth];
        for (int dj : cand[ci]) {
            if (used[dj]) continue;
            for (int s : {1, -1}) {
                if (s == -1 && c_zero_col[ci]) break;
                ccols.push_back(ci);
                dcols.push_back(dj);
                signs.push_back(s);
                std::vector<int> ones(dcols.size(), 1);
                bool ok = projected_rref(c.gens(), ccols, signs, c.p()) == projected_rref(d.gens(), dcols, ones, d.p());
                if (ok) {
                    used[dj] = true;
                    if (run(depth + 1)) return true;
                    used[dj] = false;
                }
                ccols.pop_back();
                dcols.pop_back();
                signs.pop_back();
            }
        }
        return false;
    }
};

}  // namespace

std::optional<SignedPermutation> equivalent(const Code& c, const Code& d)
{
    if (c.p() != d.p() || c.length() != d.length())
        throw std::invalid_argument("equivalent: codes differ in p or length");
    if (c.dim() != d.dim()) return std::nullopt;
    if (weight_distribution(c) != weight_distribution(d)) return std::nullopt;

    const int k = c.length();
    auto pc = coordinate_profiles(c);
    auto pd = coordinate_profiles(d);
    EquivSearch s{c, d, {}, std::vector<std::vector<int>>(k), std::vector<bool>(k, false), std::vector<bool>(k, false),
                  {}, {}, {}};
    for (int i = 0; i < k; ++i) {
        bool zero = true;
        for (int r = 0; r < c.dim(); ++r) zero = zero && c.gens()(r, i) == 0;
        s.c_zero_col[i] = zero;
        for (int j = 0; j < k; ++j)
            if (pc[i] == pd[j]) s.cand[i].push_back(j);
        if (s.cand[i].empty()) return std::nullopt;
    }
    s.order.resize(k);
    std::iota(s.order.begin(), s.order.end(), 0);
    std::stable_sort(s.order.begin(), s.order.end(),
                     [&](int a, int b) { return s.cand[a].size() < s.cand[b].size(); });
    if (!s.run(0)) return std::nullopt;

    SignedPermutation g = SignedPermutation::identity(k);
    for (int t = 0; t < k; ++t) {
        g.perm[s.ccols[t]] = s.dcols[t];
        g.signs[s.dcols[t]] = s.signs[t];
    }
    if (!(g.apply(c) == d)) throw std::logic_error("equivalent: witness failed final check");
    return g;
}

namespace {

struct CanonNode {
    FpMatrix m;              // row-reduced generators, original column order
    std::vector<int> order;  // chosen original coordinates
    std::vector<int> sgn;
    std::vector<bool> used;
    std::size_t rank = 0;
};

// Column the candidate (a, s) would occupy next in the running RREF.
FpVec next_column(const CanonNode& n, int a, int s, int p)
{
    FpVec v(n.m.rows());
    for (std::size_t r = 0; r < n.m.rows(); ++r) v[r] = ((s * n.m(r, a)) % p + p) % p;
    for (std::size_t r = n.rank; r < v.size(); ++r) {
        if (v[r] != 0) {
            FpVec e(v.size(), 0);
            e[n.rank] = 1;
            return e;
        }
    }
    return v;
}

CanonNode advance(const CanonNode& n, int a, int s, int p)
{
    CanonNode c = n;
    const std::size_t rows = c.m.rows();
    if (s == -1)
        for (std::size_t r = 0; r < rows; ++r) c.m(r, a) = (p - c.m(r, a)) % p;
    std::size_t piv = c.rank;
    while (piv < rows && c.m(piv, a) == 0) ++piv;
    if (piv < rows) {
        c.m.swap_rows(c.rank, piv);
        int inv = fp_inv(c.m(c.rank, a), p);
        for (std::size_t j = 0; j < c.m.cols(); ++j) c.m(c.rank, j) = c.m(c.rank, j) * inv % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == c.rank || c.m(i, a) == 0) continue;
            int f = c.m(i, a);
            for (std::size_t j = 0; j < c.m.cols(); ++j) c.m(i, j) = ((c.m(i, j) - f * c.m(c.rank, j)) % p + p) % p;
        }
        ++c.rank;
    }
    c.order.push_back(a);
    c.sgn.push_back(s);
    c.used[a] = true;
    return c;
}

}  // namespace

CanonicalForm canonical_form(const Code& c, long long node_budget)
{
    const int k = c.length();
    const int p = c.p();
    CanonNode root{c.gens(), {}, {}, std::vector<bool>(k, false), 0};
    std::vector<CanonNode> level{root};
    long long nodes = 0;
    for (int depth = 0; depth < k; ++depth) {
        std::vector<std::pair<std::size_t, std::pair<int, int>>> best;
        FpVec best_col;
        for (std::size_t ni = 0; ni < level.size(); ++ni) {
            const auto& n = level[ni];
            std::set<FpVec> seen_cols;
            for (int a = 0; a < k; ++a) {
                if (n.used[a]) continue;
                for (int s : {1, -1}) {
                    FpVec raw(n.m.rows());
                    for (std::size_t r = 0; r < n.m.rows(); ++r) raw[r] = ((s * n.m(r, a)) % p + p) % p;
                    if (!seen_cols.insert(raw).second) continue;
                    if (++nodes > node_budget) throw std::length_error("canonical_form: node budget exceeded");
                    FpVec col = next_column(n, a, s, p);
                    if (best.empty() || col < best_col) {
                        best.clear();
                        best_col = col;
                    }
                    if (col == best_col) best.push_back({ni, {a, s}});
                }
            }
        }
        std::vector<CanonNode> next;
        std::set<std::pair<std::vector<bool>, std::vector<int>>> seen_states;
        for (const auto& [ni, as] : best) {
            CanonNode child = advance(level[ni], as.first, as.second, p);
            std::vector<int> rest;
            for (int a = 0; a < k; ++a)
                if (!child.used[a])
                    for (std::size_t r = 0; r < child.m.rows(); ++r) rest.push_back(child.m(r, a));
            if (!seen_states.insert({child.used, rest}).second) continue;
            next.push_back(std::move(child));
        }
        level = std::move(next);
    }

    const CanonNode& win = level.front();
    SignedPermutation g = SignedPermutation::identity(k);
    for (int t = 0; t < k; ++t) {
        g.perm[win.order[t]] = t;
        g.signs[t] = win.sgn[t];
    }
    Code image = g.apply(c);
    return CanonicalForm{image, g, code_key(image)};
}

}  // namespace codelat
