#include "codelat/rootsys.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace codelat {

namespace {

Int ip(const IntVec& a, const IntVec& b, Int d)
{
    Int s = dot_ck(a, b);
    Int d2 = mul_ck(d, d);
    if (s % d2 != 0) throw std::domain_error("root inner product is not an integer");
    return s / d2;
}

IntVec neg(IntVec v)
{
    for (auto& x : v) x = -x;
    return v;
}

IntVec sub(const IntVec& a, const IntVec& b)
{
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = sub_ck(a[i], b[i]);
    return r;
}

std::string type_label(int rank, std::size_t count)
{
    const long long n = rank;
    const auto c = static_cast<long long>(count);
    if (c == n * (n + 1)) return "A" + std::to_string(n);
    if (n >= 4 && c == 2 * n * (n - 1)) return "D" + std::to_string(n);
    if (n == 6 && c == 72) return "E6";
    if (n == 7 && c == 126) return "E7";
    if (n == 8 && c == 240) return "E8";
    return "other(" + std::to_string(n) + "," + std::to_string(c) + ")";
}

}  // namespace

std::vector<IntVec> roots(const Lattice& l)
{
    if (!is_even(l)) throw std::invalid_argument("roots: lattice is not even");
    return vectors_of_norm(l, 2);
}

std::vector<RootComponent> decompose(const std::vector<IntVec>& rs, Int denom, std::uint64_t seed)
{
    const std::size_t n = rs.size();
    std::map<IntVec, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) {
        if (ip(rs[i], rs[i], denom) != 2) throw std::invalid_argument("decompose: vector of norm other than 2");
        index[rs[i]] = i;
    }
    for (const auto& r : rs)
        if (!index.count(neg(r))) throw std::invalid_argument("decompose: root set not closed under negation");

    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<std::size_t> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < n; ++j) {
                if (comp[j] >= 0) continue;
                Int v = ip(rs[i], rs[j], denom);
                if (v < -2 || v > 2) throw std::invalid_argument("decompose: inner product out of range");
                if (v != 0) {
                    comp[j] = ncomp;
                    stack.push_back(j);
                }
            }
        }
        ++ncomp;
    }

    const std::size_t dim = n ? rs[0].size() : 0;
    std::vector<RootComponent> out(ncomp);
    for (std::size_t i = 0; i < n; ++i) out[comp[i]].roots.push_back(rs[i]);
    for (auto& c : out) {
        IntMatrix g(0, dim);
        for (const auto& r : c.roots) g.append_row(r);
        c.rank = Lattice(static_cast<int>(dim), denom, g).rank();
        c.type = type_label(c.rank, c.roots.size());

        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<Int> dist(-1'000'000, 1'000'000);
        while (true) {
            IntVec w(dim);
            for (auto& x : w) x = dist(rng);
            if (std::none_of(c.roots.begin(), c.roots.end(), [&](const IntVec& r) { return dot_ck(r, w) == 0; })) {
                c.functional = w;
                break;
            }
        }
        std::set<IntVec> positive;
        for (const auto& r : c.roots)
            if (dot_ck(r, c.functional) > 0) positive.insert(r);
        for (const auto& r : positive) {
            bool simple = true;
            for (const auto& s : positive) {
                if (positive.count(sub(r, s))) {
                    simple = false;
                    break;
                }
            }
            if (simple) c.base.push_back(r);
        }
        if (static_cast<int>(c.base.size()) != c.rank) throw std::logic_error("decompose: base size differs from rank");
    }
    return out;
}

std::vector<IntVec> chain_order(const std::vector<IntVec>& base, Int denom)
{
    const std::size_t n = base.size();
    if (n <= 1) return base;
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && ip(base[i], base[j], denom) == -1) adj[i].push_back(j);
    std::size_t start = n;
    for (std::size_t i = 0; i < n; ++i)
        if (adj[i].size() == 1) {
            start = i;
            break;
        }
    if (start == n) throw std::invalid_argument("chain_order: base is not a path");
    std::vector<IntVec> out{base[start]};
    std::size_t prev = n, cur = start;
    while (out.size() < n) {
        std::size_t next = n;
        for (std::size_t j : adj[cur])
            if (j != prev) next = j;
        if (next == n || adj[cur].size() > 2) throw std::invalid_argument("chain_order: base is not a path");
        out.push_back(base[next]);
        prev = cur;
        cur = next;
    }
    return out;
}

std::vector<IntVec> Frame::all_roots() const
{
    std::vector<IntVec> out;
    for (const auto& c : components) out.insert(out.end(), c.begin(), c.end());
    return out;
}

Frame standard_frame(int p, int k, Int denom)
{
    Frame f;
    f.denom = denom;
    for (int b = 0; b < k; ++b) {
        std::vector<IntVec> comp;
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j) {
                if (i == j) continue;
                IntVec v(static_cast<std::size_t>(p) * k, 0);
                v[b * p + i] = denom;
                v[b * p + j] = -denom;
                comp.push_back(v);
            }
        std::sort(comp.begin(), comp.end());
        f.components.push_back(comp);
    }
    return f;
}

bool is_frame(const Frame& f, int p, int rank)
{
    if (static_cast<int>(f.components.size()) * (p - 1) != rank) return false;
    const Int d = f.denom;
    for (std::size_t i = 0; i < f.components.size(); ++i) {
        const auto& c = f.components[i];
        if (c.size() != static_cast<std::size_t>(p) * (p - 1)) return false;
        try {
            auto parts = decompose(c, d);
            if (parts.size() != 1 || parts[0].type != "A" + std::to_string(p - 1)) return false;
        } catch (const std::exception&) {
            return false;
        }
        for (std::size_t j = i + 1; j < f.components.size(); ++j)
            for (const auto& x : c)
                for (const auto& y : f.components[j])
                    if (dot_ck(x, y) != 0) return false;
    }
    return true;
}

std::vector<Frame> find_frames(const Lattice& l, int p, long long max_nodes)
{
    if (p < 3) throw std::invalid_argument("find_frames: p must be an odd prime");
    if (l.rank() % (p - 1) != 0) throw std::invalid_argument("find_frames: rank not divisible by p - 1");
    const int k = l.rank() / (p - 1);
    const Int d = l.denom();
    std::vector<IntVec> rs = roots(l);
    const std::size_t n = rs.size();
    std::map<IntVec, int> index;
    for (std::size_t i = 0; i < n; ++i) index[rs[i]] = static_cast<int>(i);
    std::vector<std::vector<signed char>> g(n, std::vector<signed char>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) g[i][j] = g[j][i] = static_cast<signed char>(ip(rs[i], rs[j], d));

    long long nodes = 0;
    auto tick = [&] {
        if (++nodes > max_nodes) throw std::length_error("find_frames: node budget exceeded");
    };

    // A_{p-1} subsystems from (p-1)-cliques of roots with pairwise inner product 1.
    std::set<std::vector<int>> systems;
    std::vector<int> clique;
    std::function<void(std::size_t)> grow = [&](std::size_t from) {
        tick();
        if (static_cast<int>(clique.size()) == p - 1) {
            std::vector<int> sys;
            for (std::size_t a = 0; a < clique.size(); ++a) {
                sys.push_back(clique[a]);
                sys.push_back(index.at(neg(rs[clique[a]])));
                for (std::size_t b = 0; b < clique.size(); ++b)
                    if (a != b) sys.push_back(index.at(sub(rs[clique[a]], rs[clique[b]])));
            }
            std::sort(sys.begin(), sys.end());
            systems.insert(sys);
            return;
        }
        for (std::size_t j = from; j < n; ++j) {
            bool ok = true;
            for (int c : clique)
                if (g[c][j] != 1) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            clique.push_back(static_cast<int>(j));
            grow(j + 1);
            clique.pop_back();
        }
    };
    grow(0);

    std::vector<std::vector<int>> sys(systems.begin(), systems.end());
    auto orthogonal = [&](const std::vector<int>& a, const std::vector<int>& b) {
        for (int x : a)
            for (int y : b)
                if (g[x][y] != 0) return false;
        return true;
    };
    std::vector<Frame> frames;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t)> pick = [&](std::size_t from) {
        tick();
        if (static_cast<int>(chosen.size()) == k) {
            Frame f;
            f.denom = d;
            for (std::size_t s : chosen) {
                std::vector<IntVec> comp;
                for (int i : sys[s]) comp.push_back(rs[i]);
                std::sort(comp.begin(), comp.end());
                f.components.push_back(comp);
            }
            frames.push_back(std::move(f));
            return;
        }
        for (std::size_t s = from; s < sys.size(); ++s) {
            bool ok = true;
            for (std::size_t c : chosen)
                if (!orthogonal(sys[c], sys[s])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(s);
            pick(s + 1);
            chosen.pop_back();
        }
    };
    pick(0);
    return frames;
}

RatMatrix reflection_matrix(const RatVec& v)
{
    const std::size_t n = v.num.size();
    Rational nv = norm(v);
    RatMatrix m = RatMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (v.num[i] != 0 && v.num[j] != 0)
                m(i, j) -= Rational(2) * v.num[i] * v.num[j] / (nv * v.den * v.den);
    return m;
}

IntVec reflect(const IntVec& x, const IntVec& v, Int denom)
{
    Int c = ip(x, v, denom);
    IntVec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = sub_ck(x[i], mul_ck(c, v[i]));
    return r;
}

Frame apply_reflections(const Frame& f, const std::vector<IntVec>& word)
{
    Frame out = f;
    for (auto& comp : out.components) {
        for (auto& r : comp)
            for (const auto& v : word) r = reflect(r, v, f.denom);
        std::sort(comp.begin(), comp.end());
    }
    return out;
}

}  // namespace codelat
