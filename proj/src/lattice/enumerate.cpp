#include "codelat/lattice.hpp"
#include "enumerator.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace codelat {

namespace {

Int scaled_bound(const Rational& bound, Int d)
{
    if (bound < 0) return -1;
    Rational s = bound * d * d;
    BigInt f = numerator(s) / denominator(s);
    return narrow(f);
}

IntVec ambient(const IntMatrix& basis, const IntVec& coords)
{
    IntVec v(basis.cols(), 0);
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        if (coords[i] == 0) continue;
        for (std::size_t j = 0; j < basis.cols(); ++j) v[j] = add_ck(v[j], mul_ck(coords[i], basis(i, j)));
    }
    return v;
}

IntVec negated(IntVec v)
{
    for (auto& x : v) x = -x;
    return v;
}

void positive_first(IntVec& v)
{
    for (Int x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : v) y = -y;
        return;
    }
}

// Counts of vectors (both signs) by scaled norm, up to `bound`.
std::map<Int, long long> layer_counts(const detail::Enumerator& e, Int bound)
{
    std::map<Int, long long> counts;
    e.enumerate(bound, [&](const IntVec&, Int q) { counts[q] += 2; });
    return counts;
}

template <class Done>
std::map<Int, long long> grow_until(const detail::Enumerator& e, Done done)
{
    const auto& g = e.reduced_gram();
    Int bound = g(0, 0);
    for (int i = 1; i < e.rank(); ++i) bound = std::min(bound, g(i, i));
    while (true) {
        auto counts = layer_counts(e, bound);
        if (done(counts)) return counts;
        bound = mul_ck(bound, 2);
    }
}

}  // namespace

std::vector<ShortVector> short_vectors(const Lattice& l, const Rational& bound)
{
    std::vector<ShortVector> out;
    if (l.rank() == 0) return out;
    const Int d = l.denom();
    Int b = scaled_bound(bound, d);
    if (b <= 0) return out;
    detail::Enumerator e(l.gram_numerators());
    std::vector<std::pair<IntVec, Int>> reps;
    e.enumerate(b, [&](const IntVec& x, Int q) {
        IntVec v = ambient(l.basis(), e.to_input(x));
        positive_first(v);
        reps.emplace_back(std::move(v), q);
    });
    std::sort(reps.begin(), reps.end());
    const Rational d2 = Rational(d) * d;
    out.reserve(2 * reps.size());
    for (auto& [v, q] : reps) {
        Rational n = Rational(q) / d2;
        IntVec w = negated(v);
        out.push_back({std::move(v), n});
        out.push_back({std::move(w), n});
    }
    return out;
}

std::vector<IntVec> vectors_of_norm(const Lattice& l, const Rational& r)
{
    std::vector<IntVec> out;
    for (auto& s : short_vectors(l, r))
        if (s.norm == r) out.push_back(std::move(s.num));
    return out;
}

std::vector<std::pair<Rational, long long>> norm_layers(const Lattice& l, int count)
{
    std::vector<std::pair<Rational, long long>> out;
    if (l.rank() == 0 || count <= 0) return out;
    detail::Enumerator e(l.gram_numerators());
    auto counts = grow_until(e, [&](const std::map<Int, long long>& c) {
        return static_cast<int>(c.size()) >= count;
    });
    const Rational d2 = Rational(l.denom()) * l.denom();
    for (const auto& [q, n] : counts) {
        if (static_cast<int>(out.size()) == count) break;
        out.emplace_back(Rational(q) / d2, n);
    }
    return out;
}

std::vector<Rational> min_norms(const Lattice& l, int count)
{
    std::vector<Rational> out;
    for (const auto& [n, c] : norm_layers(l, count)) out.push_back(n);
    return out;
}

Rational coset_min_norm(const Lattice& l, const RatVec& t)
{
    auto c = l.coordinates(t);
    if (!c) throw std::invalid_argument("coset_min_norm: vector outside the rational span");
    if (l.rank() == 0) return norm(t);
    detail::Enumerator e(l.gram_numerators());
    const auto& tinv = e.inverse_transform();
    const int n = l.rank();
    std::vector<Rational> r(n, 0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if (tinv(i, j) != 0) r[j] += (*c)[i] * tinv(i, j);
    return e.closest(r) / (Rational(l.denom()) * l.denom());
}

}  // namespace codelat
