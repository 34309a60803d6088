#include "codelat/fpcodes.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace codelat {

Catalog enumerate_self_orthogonal(int p, int k, long long budget)
{
    if (!is_prime(p) || p == 2) throw std::invalid_argument("enumerate_self_orthogonal: p must be an odd prime");
    if (k < 1) throw std::invalid_argument("enumerate_self_orthogonal: k must be positive");
    long long space = 1;
    for (int i = 0; i < k; ++i) {
        space *= p;
        if (space > budget) throw std::length_error("enumerate_self_orthogonal: p^k exceeds budget");
    }

    std::map<std::string, Code> all;
    std::vector<Code> frontier{Code::zero(p, k)};
    all.emplace(canonical_form(frontier.front()).key, frontier.front());
    while (!frontier.empty()) {
        std::map<std::string, Code> found;
        for (const auto& c : frontier) {
            std::set<std::string> tried;
            for (const auto& v : dual_code(c).codewords()) {
                if (fp_dot(v, v, p) != 0 || c.contains(v)) continue;
                Code e = extend(c, {v});
                if (!tried.insert(code_key(e)).second) continue;
                auto cf = canonical_form(e);
                if (all.count(cf.key) || found.count(cf.key)) continue;
                found.emplace(cf.key, cf.code);
            }
        }
        frontier.clear();
        for (auto& [key, code] : found) {
            all.emplace(key, code);
            frontier.push_back(code);
        }
    }

    Catalog cat{p, k, {}};
    for (auto& [key, code] : all) cat.entries.push_back({code, key, weight_distribution(code)});
    std::stable_sort(cat.entries.begin(), cat.entries.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        if (a.code.dim() != b.code.dim()) return a.code.dim() < b.code.dim();
        return a.key < b.key;
    });
    return cat;
}

}  // namespace codelat
