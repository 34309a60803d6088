#include "codelat/special.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace codelat {

namespace {

FpVec add_mod(const FpVec& a, const FpVec& b, int p)
{
    FpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % p;
    return r;
}

FpVec scale_mod(const FpVec& a, int s, int p)
{
    FpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] * s) % p;
    return r;
}

FpVec block_pattern(int m, int i, const FpVec& pattern)
{
    const int w = static_cast<int>(pattern.size());
    if (i < 1 || i > m) throw std::invalid_argument("block index out of range");
    FpVec v(static_cast<std::size_t>(w) * m, 0);
    for (int j = 0; j < w; ++j) v[(i - 1) * w + j] = pattern[j];
    return v;
}

// Signed permutation moving the support of x onto positions start..start+w-1
// with values pattern (up to sign), keeping all other coordinates in order.
std::optional<SignedPermutation> move_onto(const FpVec& x, int p, int start, const FpVec& pattern)
{
    const int k = static_cast<int>(x.size());
    const int w = static_cast<int>(pattern.size());
    std::vector<int> supp;
    for (int i = 0; i < k; ++i)
        if (x[i] != 0) supp.push_back(i);
    if (static_cast<int>(supp.size()) != w || start + w > k) return std::nullopt;
    if (supp.front() < start) return std::nullopt;
    do {
        bool ok = true;
        for (int j = 0; j < w && ok; ++j) ok = x[supp[j]] == pattern[j] || x[supp[j]] == (p - pattern[j]) % p;
        if (!ok) continue;
        SignedPermutation g = SignedPermutation::identity(k);
        std::vector<bool> in_supp(k, false);
        for (int j = 0; j < w; ++j) {
            in_supp[supp[j]] = true;
            g.perm[supp[j]] = start + j;
            g.signs[start + j] = x[supp[j]] == pattern[j] ? 1 : -1;
        }
        int target = 0;
        for (int i = 0; i < k; ++i) {
            if (in_supp[i]) continue;
            if (target == start) target += w;
            g.perm[i] = target++;
        }
        return g;
    } while (std::next_permutation(supp.begin(), supp.end()));
    return std::nullopt;
}

bool in_dual(const Code& c, const FpVec& t)
{
    for (int i = 0; i < c.dim(); ++i)
        if (fp_dot(c.gens().row_vec(i), t, c.p()) != 0) return false;
    return true;
}

// k/w + #C(w) <= #(t + C)(w), with t of the right shape in C^perp \ C.
bool criterion(const Code& c, const FpVec& t, const FpVec& pattern)
{
    const int w = static_cast<int>(pattern.size());
    if (static_cast<int>(t.size()) != c.length() || weight(t) != w) return false;
    if (!in_dual(c, t) || c.contains(t)) return false;
    const long long k = c.length();
    const FpVec zero(t.size(), 0);
    return k + w * coset_weight_count(c, zero, w) <= w * coset_weight_count(c, t, w);
}

// All weight-w vectors of F_p^k in lexicographic order.
std::vector<FpVec> weight_vectors(int p, int k, int w)
{
    std::vector<FpVec> out;
    std::vector<int> supp(w);
    std::function<void(int, int)> choose = [&](int from, int depth) {
        if (depth == w) {
            std::vector<int> vals(w, 1);
            while (true) {
                FpVec v(k, 0);
                for (int j = 0; j < w; ++j) v[supp[j]] = vals[j];
                out.push_back(v);
                int j = w - 1;
                while (j >= 0 && vals[j] == p - 1) vals[j--] = 1;
                if (j < 0) break;
                ++vals[j];
            }
            return;
        }
        for (int i = from; i < k; ++i) {
            supp[depth] = i;
            choose(i + 1, depth + 1);
        }
    };
    choose(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

struct Aligned {
    Code code;
    SignedPermutation g;
    std::vector<SignedPermutation> steps;
};

// Moves t to the first pattern block, then repeatedly moves a weight-w word of
// t + C supported past the aligned blocks onto the next block.
std::optional<Aligned> align_blocks(const Code& c, const FpVec& t, const FpVec& pattern)
{
    const int p = c.p(), k = c.length();
    const int w = static_cast<int>(pattern.size());
    auto h = move_onto(t, p, 0, pattern);
    if (!h) return std::nullopt;
    Aligned a{h->apply(c), *h, {*h}};
    FpVec first(k, 0);
    for (int j = 0; j < w; ++j) first[j] = pattern[j];
    for (int r = 1; r * w < k; ++r) {
        std::optional<FpVec> best;
        for (const auto& cw : a.code.codewords()) {
            FpVec x = add_mod(first, cw, p);
            if (weight(x) != w) continue;
            if (std::any_of(x.begin(), x.begin() + r * w, [](int v) { return v != 0; })) continue;
            if (!best || x < *best) best = x;
        }
        if (!best) return std::nullopt;
        auto mv = move_onto(*best, p, r * w, pattern);
        if (!mv) return std::nullopt;
        a.code = mv->apply(a.code);
        a.g = compose(*mv, a.g);
        a.steps.push_back(*mv);
    }
    if (k % w != 0) return std::nullopt;
    return a;
}

template <class Try>
auto search_coset(const Code& c, const std::optional<FpVec>& coset, const FpVec& pattern, Try attempt)
    -> decltype(attempt(coset.value()))
{
    if (coset) {
        if (!criterion(c, *coset, pattern)) return std::nullopt;
        return attempt(*coset);
    }
    for (const auto& t : weight_vectors(c.p(), c.length(), static_cast<int>(pattern.size()))) {
        if (!criterion(c, t, pattern)) continue;
        if (auto r = attempt(t)) return r;
    }
    return std::nullopt;
}

}  // namespace

FpVec u_vector(int m, int i) { return block_pattern(m, i, {1, 1, 1}); }
FpVec v_vector(int m, int i) { return block_pattern(m, i, {1, 2}); }

K3Code make_k3_code(int m, const std::vector<FpVec>& gens)
{
    if (m < 1) throw std::invalid_argument("make_k3_code: m must be positive");
    for (const auto& g : gens) {
        if (static_cast<int>(g.size()) != 3 * m) throw std::invalid_argument("make_k3_code: length is not 3m");
        for (int i = 0; i < m; ++i) {
            int a = ((g[3 * i] % 3) + 3) % 3;
            if ((((g[3 * i + 1] - 2 * a) % 3) + 3) % 3 != 0 || g[3 * i + 2] % 3 != 0)
                throw std::invalid_argument("make_k3_code: generator has a block outside <(1,2,0)>");
        }
    }
    return K3Code{m, Code(3, 3 * m, gens)};
}

K3Code k3_from_coefficients(const Code& coeffs)
{
    if (coeffs.p() != 3) throw std::invalid_argument("k3_from_coefficients: code must be over F_3");
    const int m = coeffs.length();
    std::vector<FpVec> gens;
    for (int r = 0; r < coeffs.dim(); ++r) {
        FpVec w(3 * m, 0);
        for (int i = 0; i < m; ++i) {
            w[3 * i] = coeffs.gens()(r, i);
            w[3 * i + 1] = (2 * coeffs.gens()(r, i)) % 3;
        }
        gens.push_back(w);
    }
    return make_k3_code(m, gens);
}

std::vector<K3Code> k3_subcodes(int m)
{
    if (m < 1 || m > 5) throw std::invalid_argument("k3_subcodes: m must lie in 1..5");
    std::vector<FpVec> all;
    for (const auto& c : Code::full(3, m).codewords())
        if (weight(c) > 0) all.push_back(c);
    std::vector<Code> found{Code::zero(3, m)};
    std::set<std::vector<std::vector<int>>> seen{found[0].gens().to_rows()};
    for (std::size_t i = 0; i < found.size(); ++i)
        for (const auto& v : all) {
            if (found[i].contains(v)) continue;
            Code e = extend(found[i], {v});
            if (seen.insert(e.gens().to_rows()).second) found.push_back(e);
        }
    std::vector<K3Code> out;
    for (const auto& c : found) out.push_back(k3_from_coefficients(c));
    return out;
}

Code d3_code(int m)
{
    std::vector<FpVec> g;
    for (int i = 1; i <= m; ++i) g.push_back(u_vector(m, i));
    return Code(3, 3 * m, g);
}

Code d3_zero_code(int m)
{
    std::vector<FpVec> g;
    for (int i = 1; i < m; ++i) g.push_back(add_mod(u_vector(m, i), scale_mod(u_vector(m, m), 2, 3), 3));
    return Code(3, 3 * m, g);
}

Code d5_code(int m)
{
    if (m < 1) throw std::invalid_argument("d5_code: m must be positive");
    std::vector<FpVec> g;
    for (int i = 1; i <= m; ++i) g.push_back(v_vector(m, i));
    return Code(5, 2 * m, g);
}

Code d5_zero_code(int m)
{
    if (m < 1) throw std::invalid_argument("d5_zero_code: m must be positive");
    std::vector<FpVec> g;
    for (int i = 1; i < m; ++i) g.push_back(add_mod(v_vector(m, i), scale_mod(v_vector(m, m), 4, 5), 5));
    return Code(5, 2 * m, g);
}

Code code_construction_A3(const K3Code& k)
{
    const Code d = d3_code(k.m);
    std::vector<FpVec> extra;
    for (int i = 0; i < d.dim(); ++i) extra.push_back(d.gens().row_vec(i));
    return extend(k.code, extra);
}

Code code_construction_B3(const K3Code& k)
{
    const Code d = d3_zero_code(k.m);
    std::vector<FpVec> extra;
    for (int i = 0; i < d.dim(); ++i) extra.push_back(d.gens().row_vec(i));
    return extend(k.code, extra);
}

std::optional<RealizationB3> realizes_B3(const Code& c, const std::optional<FpVec>& coset)
{
    if (c.p() != 3) throw std::invalid_argument("realizes_B3: code must be over F_3");
    if (!is_self_orthogonal(c)) return std::nullopt;
    const FpVec pattern{1, 1, 1};
    return search_coset(c, coset, pattern, [&](const FpVec& t) -> std::optional<RealizationB3> {
        auto a = align_blocks(c, t, pattern);
        if (!a) return std::nullopt;
        const int k = c.length(), m = k / 3;
        const FpVec u1 = u_vector(m, 1);

        // y in C^perp with (y, u_1) = 1.
        const Code dual = dual_code(a->code);
        std::optional<FpVec> y;
        for (int i = 0; i < dual.dim() && !y; ++i) {
            FpVec row = dual.gens().row_vec(i);
            int s = fp_dot(row, u1, 3);
            if (s != 0) y = scale_mod(row, s == 1 ? 1 : 2, 3);
        }
        if (!y) throw std::logic_error("realizes_B3: u_1 is orthogonal to C^perp");
        SignedPermutation sigma = SignedPermutation::identity(k);
        FpVec yp = *y;
        for (int i = 0; i < m; ++i) {
            if ((yp[3 * i] + yp[3 * i + 1] + yp[3 * i + 2]) % 3 != 1)
                throw std::logic_error("realizes_B3: block of y not pairing to 1 with (1,1,1)");
            int q = -1;
            for (int s = 0; s < 3 && q < 0; ++s) {
                FpVec b{(yp[3 * i] + s) % 3, (yp[3 * i + 1] + s) % 3, (yp[3 * i + 2] + s) % 3};
                if (weight(b) == 1) {
                    for (int j = 0; j < 3; ++j) yp[3 * i + j] = b[j];
                    q = static_cast<int>(std::find(b.begin(), b.end(), 1) - b.begin());
                }
            }
            if (q < 0) throw std::logic_error("realizes_B3: no shift of a block of y is a unit vector");
            std::swap(sigma.perm[3 * i + q], sigma.perm[3 * i + 2]);
        }
        yp = sigma.apply(yp, 3);
        Code aligned = sigma.apply(a->code);

        std::vector<FpVec> kgens;
        for (int r = 0; r < aligned.dim(); ++r) {
            FpVec x = aligned.gens().row_vec(r), w(k, 0);
            for (int i = 0; i < m; ++i) {
                int b = x[3 * i + 2];
                int s = ((x[3 * i] - b) % 3 + 3) % 3;
                if ((2 * s + b) % 3 != x[3 * i + 1]) throw std::logic_error("realizes_B3: block not orthogonal to (1,1,1)");
                w[3 * i] = s;
                w[3 * i + 1] = (2 * s) % 3;
            }
            kgens.push_back(w);
        }
        RealizationB3 out;
        out.k = make_k3_code(m, kgens);
        out.coset = t;
        out.steps = a->steps;
        out.steps.push_back(sigma);
        out.y_prime = yp;
        out.g = compose(sigma, a->g);
        if (out.g.apply(c) != code_construction_B3(out.k) || out.g.apply(extend(c, {t})) != code_construction_A3(out.k))
            throw std::logic_error("realizes_B3: projected code does not reproduce C");
        return out;
    });
}

std::optional<RealizationB5> realizes_B5(const Code& c, const std::optional<FpVec>& coset)
{
    if (c.p() != 5) throw std::invalid_argument("realizes_B5: code must be over F_5");
    if (!is_self_orthogonal(c)) return std::nullopt;
    const FpVec pattern{1, 2};
    return search_coset(c, coset, pattern, [&](const FpVec& t) -> std::optional<RealizationB5> {
        auto a = align_blocks(c, t, pattern);
        if (!a) return std::nullopt;
        const int m = c.length() / 2;
        if (a->code != d5_zero_code(m) || a->g.apply(extend(c, {t})) != d5_code(m))
            throw std::logic_error("realizes_B5: aligned code is not (d_5^m)_0");
        return RealizationB5{t, a->steps, a->g};
    });
}

}  // namespace codelat
