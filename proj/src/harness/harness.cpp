#include "codelat/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace codelat {

bool Report::pass() const
{
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void Report::add(std::string name, bool ok, json data) { checks.push_back({std::move(name), ok, std::move(data)}); }

json Report::to_json(bool timing) const
{
    json cs = json::array();
    for (const auto& c : checks) cs.push_back({{"name", c.name}, {"pass", c.pass}, {"data", c.data}});
    json j = {{"suite", suite}, {"params", params}, {"pass", pass()}, {"summary", summary}, {"checks", cs}};
    if (timing) j["seconds"] = seconds;
    return j;
}

std::string Report::to_text(bool timing, bool verbose) const
{
    std::ostringstream out;
    const auto passed = std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    out << "suite " << suite << ": " << (pass() ? "PASS" : "FAIL") << " (" << passed << "/" << checks.size()
        << " checks)";
    if (timing) out << " in " << seconds << " s";
    out << '\n';
    for (const auto& [k, v] : summary.items()) out << "  " << k << " = " << v.dump() << '\n';
    for (const auto& c : checks) {
        if (!verbose && c.pass) continue;
        out << "  " << (c.pass ? "ok   " : "FAIL ") << c.name;
        if (!c.data.empty()) out << "  " << c.data.dump();
        out << '\n';
    }
    return out.str();
}

namespace {

using Clock = std::chrono::steady_clock;

int iparam(const json& p, const char* key, int def) { return p.contains(key) ? p.at(key).get<int>() : def; }

std::vector<std::pair<int, int>> ranges(const json& p, std::vector<std::pair<int, int>> def)
{
    if (!p.contains("ranges")) return def;
    std::vector<std::pair<int, int>> out;
    for (const auto& r : p.at("ranges")) out.emplace_back(r.at(0).get<int>(), r.at(1).get<int>());
    return out;
}

std::string label(const Code& c)
{
    std::ostringstream s;
    s << "p=" << c.p() << " k=" << c.length() << " " << code_key(c);
    return s.str();
}

std::set<std::pair<IntVec, Int>> as_set(const std::vector<IntVec>& vs, Int d)
{
    std::set<std::pair<IntVec, Int>> s;
    for (const auto& v : vs) {
        RatVec r = normalize(RatVec{v, d});
        s.insert({r.num, r.den});
    }
    return s;
}

std::set<std::pair<IntVec, Int>> as_set(const std::vector<RatVec>& vs)
{
    std::set<std::pair<IntVec, Int>> s;
    for (const auto& v : vs) {
        RatVec r = normalize(v);
        s.insert({r.num, r.den});
    }
    return s;
}

RatVec neg(RatVec v)
{
    for (auto& x : v.num) x = -x;
    return v;
}

RatVec sum(const std::vector<RatVec>& vs)
{
    RatVec r = vs.at(0);
    for (std::size_t i = 1; i < vs.size(); ++i)
        for (std::size_t j = 0; j < r.num.size(); ++j) r.num[j] += vs[i].num[j];
    return r;
}

// Every subspace of F_p^k.
std::vector<Code> all_subspaces(int p, int k)
{
    std::vector<FpVec> vecs;
    for (const auto& v : Code::full(p, k).codewords())
        if (weight(v) > 0) vecs.push_back(v);
    std::vector<Code> found{Code::zero(p, k)};
    std::set<std::vector<std::vector<int>>> seen{found[0].gens().to_rows()};
    for (std::size_t i = 0; i < found.size(); ++i)
        for (const auto& v : vecs) {
            if (found[i].contains(v)) continue;
            Code e = extend(found[i], {v});
            if (seen.insert(e.gens().to_rows()).second) found.push_back(e);
        }
    return found;
}

Code random_code(int p, int k, std::mt19937_64& rng)
{
    const int d = static_cast<int>(rng() % (k + 1));
    std::vector<FpVec> rows;
    for (int i = 0; i < d; ++i) {
        FpVec v(k);
        for (auto& x : v) x = static_cast<int>(rng() % p);
        rows.push_back(v);
    }
    return Code(p, k, rows);
}

// ---- suites ----

void dual_minimum(const json& params, Report& r)
{
    const int lo = iparam(params, "n_min", 2), hi = iparam(params, "n_max", 12);
    for (int n = lo; n <= hi; ++n) {
        Rational got = min_norms(dual(an_lattice(n)), 1).at(0);
        Rational want(n - 1, n);
        r.add("n=" + std::to_string(n), got == want, {{"min", got.str()}, {"expected", want.str()}});
    }
}

void dual_second_layer(const json& params, Report& r)
{
    const int lo = iparam(params, "n_min", 7), hi = iparam(params, "n_max", 12);
    for (int n = lo; n <= hi; ++n) {
        Rational second = min_norms(dual(an_lattice(n)), 2).at(1);
        Rational bound(n + 1, n);
        r.add("n=" + std::to_string(n), second > bound, {{"second", second.str()}, {"bound", bound.str()}});
    }
}

void coset_minima(const json& params, Report& r)
{
    std::vector<int> primes = params.contains("primes") ? params.at("primes").get<std::vector<int>>()
                                                        : std::vector<int>{3, 5, 7, 11};
    for (int p : primes) {
        Lattice ad = dual_root_power(p, 1);
        RatVec rho = an_rho(p);
        Rational bound(Int(p - 1) * (p + 1), Int(12) * p);
        Rational worst = -1;
        for (int l = 1; l < p; ++l) {
            RatVec t{rho.num, mul_ck(rho.den, p)};
            for (auto& x : t.num) x *= l;
            Rational m = coset_min_norm(ad, normalize(t));
            if (worst < 0 || m < worst) worst = m;
            r.add("p=" + std::to_string(p) + " l=" + std::to_string(l), m >= bound,
                  {{"min", m.str()}, {"bound", bound.str()}});
        }
        r.summary["threshold p=" + std::to_string(p)] = bound.str();
        r.summary["minimum p=" + std::to_string(p)] = worst.str();
    }
}

void evenness(const json& params, Report& r)
{
    const int p = iparam(params, "p", 3), k = iparam(params, "k", 3);
    const int samples = iparam(params, "samples", 200);
    std::mt19937_64 rng(static_cast<std::uint64_t>(iparam(params, "seed", 1)));
    Catalog cat = enumerate_self_orthogonal(p, k);
    int so = 0, other = 0;
    for (int s = 0; s < samples; ++s) {
        Code c = Code::zero(p, k);
        if (s % 2 == 0) {
            c = random_code(p, k, rng);
        } else {
            const auto& e = cat.entries[rng() % cat.entries.size()];
            c = random_signed_permutation(k, rng()).apply(e.code);
        }
        const bool sorth = is_self_orthogonal(c);
        (sorth ? so : other)++;
        const bool even = is_even(construction_A(c));
        r.add("sample " + std::to_string(s), even == sorth,
              {{"code", to_json(c)}, {"even", even}, {"self_orthogonal", sorth}});
    }
    r.summary["self_orthogonal_samples"] = so;
    r.summary["other_samples"] = other;
    r.add("both classes sampled", so > 0 && other > 0, {{"self_orthogonal", so}, {"other", other}});
}

void dual_identity(const json& params, Report& r)
{
    for (auto [p, kmax] : ranges(params, {{3, 5}, {5, 3}}))
        for (int k = 1; k <= kmax; ++k)
            for (const auto& e : enumerate_self_orthogonal(p, k).entries) {
                Lattice lhs = dual(construction_B(e.code));
                RatVec chi = chi_vector(p, k);
                IntMatrix g(0, p * k);
                g.append_row(chi.num);
                Lattice rhs = join(construction_A(dual_code(e.code)), Lattice(p * k, chi.den, g));
                json data = json::object();
                if (!(lhs == rhs)) data = {{"code", to_json(e.code)}, {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}};
                r.add(label(e.code), lhs == rhs, data);
            }
}

void census(const json&, Report& r)
{
    std::vector<RatVec> e3, e5;
    for (int i = 1; i <= 3; ++i) e3.push_back(an_epsilon(3, i));
    for (int i = 1; i <= 5; ++i) e5.push_back(an_epsilon(5, i));

    auto check = [&](const std::string& name, int p, const Rational& n, const std::vector<RatVec>& want) {
        Lattice l = dual_root_power(p, 1);
        auto got = vectors_of_norm(l, n);
        auto gs = as_set(got, l.denom());
        auto ws = as_set(want);
        r.add(name, gs == ws && got.size() == want.size(),
              {{"count", got.size()}, {"expected", want.size()}});
    };

    std::vector<RatVec> a2;
    for (const auto& e : e3) {
        a2.push_back(e);
        a2.push_back(neg(e));
    }
    check("A2* norm 2/3", 3, Rational(2, 3), a2);

    std::vector<RatVec> small, large;
    for (const auto& e : e5) {
        small.push_back(e);
        small.push_back(neg(e));
    }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            large.push_back(sum({e5[i], e5[j]}));
            large.push_back(neg(sum({e5[i], e5[j]})));
            for (int k = j + 1; k < 4; ++k) {
                large.push_back(sum({e5[i], e5[j], e5[k]}));
                large.push_back(neg(sum({e5[i], e5[j], e5[k]})));
            }
        }
    check("A4* norm 4/5", 5, Rational(4, 5), small);
    check("A4* norm 6/5", 5, Rational(6, 5), large);
    auto layers = norm_layers(dual_root_power(5, 1), 2);
    r.add("A4* has no norms below 6/5 other than 4/5",
          layers.size() == 2 && layers[0].first == Rational(4, 5) && layers[1].first == Rational(6, 5));
}

void root_system(const json& params, Report& r)
{
    for (auto [p, kmax] : ranges(params, {{7, 3}, {11, 2}}))
        for (int k = 1; k <= kmax; ++k)
            for (const auto& e : enumerate_self_orthogonal(p, k).entries) {
                Lattice l = construction_A(e.code);
                auto rs = roots(l);
                auto std_roots = standard_frame(p, k, l.denom()).all_roots();
                const bool same = as_set(rs, l.denom()) == as_set(std_roots, l.denom());
                const auto frames = find_frames(l, p).size();
                r.add(label(e.code), same && frames == 1,
                      {{"roots", rs.size()}, {"standard", std_roots.size()}, {"frames", frames}});
            }
}

void e8_glue(const json&, Report& r)
{
    auto g = e8_glue_check();
    r.summary["lambdas"] = g.lambdas;
    r.add("400 glue vectors", g.lambdas == 400, {{"lambdas", g.lambdas}});
    r.add("all even", g.even == g.lambdas, {{"even", g.even}});
    r.add("all unimodular", g.unimodular == g.lambdas, {{"unimodular", g.unimodular}});
    r.add("all with 240 roots", g.with_240_roots == g.lambdas, {{"with_240_roots", g.with_240_roots}});
}

void chain_counts(const json&, Report& r)
{
    auto c = e8_chain_counts();
    r.summary["completions"] = c.completions;
    r.summary["chains"] = c.chains;
    r.add("completions from a fixed root", c.completions == 24192, {{"completions", c.completions}});
    r.add("number of chains", c.chains == 2903040, {{"chains", c.chains}});
    r.add("roots orthogonal to a chain form A4", c.orthogonal_roots == 20 && c.orthogonal_type == "A4",
          {{"roots", c.orthogonal_roots}, {"type", c.orthogonal_type}});
}

void frame_pipeline(const json& params, Report& r)
{
    const int trials = iparam(params, "trials", 20), length = iparam(params, "word_length", 6);
    const auto seed = static_cast<std::uint64_t>(iparam(params, "seed", 1));
    long long generic = 0, steps = 0;
    for (auto [p, kmax] : ranges(params, {{3, 4}, {5, 3}}))
        for (int k = 1; k <= kmax; ++k)
            for (const auto& e : enumerate_self_orthogonal(p, k).entries) {
                const Code& c = e.code;
                Lattice l = construction_A(c);
                auto rs = roots(l);
                const Frame standard = standard_frame(p, k, l.denom());
                std::mt19937_64 rng(seed);
                int failures = 0;
                json first_failure;
                for (int t = 0; t < trials; ++t) {
                    std::vector<IntVec> word;
                    for (int i = 0; i < length; ++i) word.push_back(rs[rng() % rs.size()]);
                    Frame f = apply_reflections(standard, word);
                    auto g = normalize_frame(c, f);
                    steps += g.steps;
                    generic += g.generic_steps;
                    const bool aut = transform(l, g.ambient) == l;
                    const bool normal = as_set(apply_reflections(f, g.word).all_roots(), l.denom()) ==
                                        as_set(standard.all_roots(), l.denom());
                    Code rec = recover_code(p, transform(l, frame_chart(f, p)));
                    const bool eq = equivalent(rec, c).has_value();
                    if (!(aut && normal && eq)) {
                        if (failures++ == 0)
                            first_failure = {{"trial", t}, {"automorphism", aut}, {"normalized", normal},
                                             {"recovered", to_json(rec)}};
                    }
                }
                json data = {{"trials", trials}, {"failures", failures}};
                if (failures) data["first_failure"] = first_failure;
                r.add(label(c), failures == 0, data);
            }
    r.summary["normalization_steps"] = steps;
    r.summary["fallback_steps"] = generic;
}

void k3_self_orthogonality(const json& params, Report& r)
{
    const int mmax = iparam(params, "m_max", 3);
    for (int m = 1; m <= mmax; ++m) {
        int total = 0, bad = 0;
        for (const auto& k : k3_subcodes(m)) {
            ++total;
            if (is_self_orthogonal(k.code) != is_self_orthogonal(code_construction_A3(k))) ++bad;
        }
        r.add("m=" + std::to_string(m), bad == 0, {{"subcodes", total}, {"mismatches", bad}});
    }
}

void realization(const json& params, Report& r)
{
    long long realized = 0, examined = 0;
    for (auto [p, kmax] : ranges(params, {{3, 6}, {5, 4}}))
        for (int k = 1; k <= kmax; ++k)
            for (const auto& e : enumerate_self_orthogonal(p, k).entries) {
                const Code& c = e.code;
                ++examined;
                if (p == 3) {
                    auto res = realizes_B3(c);
                    if (!res) continue;
                    ++realized;
                    const bool ok = k % 3 == 0 && is_self_orthogonal(res->k.code) &&
                                    equivalent(c, code_construction_B3(res->k)) &&
                                    equivalent(extend(c, {res->coset}), code_construction_A3(res->k));
                    r.add(label(c), ok, {{"K", to_json(res->k.code)}, {"coset", res->coset}, {"g", to_json(res->g)}});
                } else if (p == 5) {
                    auto res = realizes_B5(c);
                    if (!res) continue;
                    ++realized;
                    const int m = k / 2;
                    const bool ok = k % 2 == 0 && equivalent(c, d5_zero_code(m)) &&
                                    equivalent(extend(c, {res->coset}), d5_code(m));
                    r.add(label(c), ok, {{"coset", res->coset}, {"g", to_json(res->g)}});
                }
            }
    // round trips through C_B(K) for every self-orthogonal K
    const int mmax = iparam(params, "m_max", 2);
    for (int m = 1; m <= mmax; ++m)
        for (const auto& k : k3_subcodes(m)) {
            if (!is_self_orthogonal(k.code)) continue;
            Code cb = code_construction_B3(k);
            auto res = realizes_B3(cb);
            if (!res) continue;
            ++realized;
            r.add("C_B(K) " + label(k.code), equivalent(code_construction_B3(res->k), cb).has_value(),
                  {{"K", to_json(k.code)},
                   {"recovered", to_json(res->k.code)},
                   {"recovered_equivalent", equivalent(res->k.code, k.code).has_value()}});
        }
    for (int m = 1; m <= 4; ++m) r.add("(d_5^" + std::to_string(m) + ")_0 realized", realizes_B5(d5_zero_code(m)).has_value());
    r.summary["catalog_codes"] = examined;
    r.summary["realized"] = realized;
}

void bridge(const json& params, Report& r)
{
    const int m3 = iparam(params, "m3_max", 3), m5 = iparam(params, "m5_max", 4);
    for (int m = 1; m <= m3; ++m)
        for (const auto& k : k3_subcodes(m)) {
            if (!is_self_orthogonal(k.code)) continue;
            auto c = verify_bridge3(k);
            r.add("phi K=" + label(k.code), c.ok(),
                  {{"orthogonal", c.orthogonal}, {"coefficients", c.coefficients_match}, {"echelon", c.echelon_match},
                   {"equal", c.equal}});
        }
    for (int m = 1; m <= m5; ++m) {
        auto c = verify_bridge5(m);
        r.add("psi m=" + std::to_string(m), c.ok(),
              {{"orthogonal", c.orthogonal}, {"coefficients", c.coefficients_match}, {"echelon", c.echelon_match},
               {"equal", c.equal}});
    }
    r.summary["phi_echelon"] = to_json(hnf(bridge_table(3).coefficients));
    r.summary["psi_echelon"] = to_json(hnf(bridge_table(5).coefficients));
}

void classification(const json&, Report& r)
{
    auto c73 = enumerate_self_orthogonal(7, 3);
    bool has123 = false;
    json keys = json::array();
    for (const auto& e : c73.entries) {
        keys.push_back(label(e.code));
        if (equivalent(e.code, Code(7, 3, std::vector<FpVec>{{1, 2, 3}}))) has123 = true;
    }
    r.add("p=7 k=3 has two classes", c73.entries.size() == 2 && c73.entries[0].code.dim() == 0 && has123,
          {{"classes", keys}});
    auto c112 = enumerate_self_orthogonal(11, 2);
    r.add("p=11 k=2 has one class", c112.entries.size() == 1 && c112.entries[0].code.dim() == 0,
          {{"classes", c112.entries.size()}});
    for (auto [p, k] : std::vector<std::pair<int, int>>{{7, 1}, {7, 2}, {11, 1}}) {
        auto c = enumerate_self_orthogonal(p, k);
        r.summary["classes p=" + std::to_string(p) + " k=" + std::to_string(k)] = c.entries.size();
    }
}

void preimage_oracle(const json& params, Report& r)
{
    const int nmax = iparam(params, "max_ambient", 9);
    for (int p : {3, 5, 7, 11, 13})
        for (int k = 1; p * k <= nmax; ++k)
            for (const auto& c : all_subspaces(p, k)) {
                const bool eq = construction_A(c) == construction_A_preimage(c);
                r.add(label(c), eq, eq ? json::object() : json{{"code", to_json(c)}});
            }
}

void root_count_formula(const json& params, Report& r)
{
    for (auto [p, kmax] : ranges(params, {{3, 5}, {5, 3}, {7, 2}}))
        for (int k = 1; k <= kmax; ++k)
            for (const auto& e : enumerate_self_orthogonal(p, k).entries) {
                const auto got = static_cast<long long>(roots(construction_A(e.code)).size());
                const long long want = predicted_root_count(e.code);
                r.add(label(e.code), got == want, {{"roots", got}, {"predicted", want}});
            }
}

struct SuiteDef {
    std::string name;
    std::string alias;
    std::function<void(const json&, Report&)> run;
};

const std::vector<SuiteDef>& suites()
{
    static const std::vector<SuiteDef> s = {
        {"dual-minimum", "lemma-2.4", dual_minimum},
        {"dual-second-layer", "", dual_second_layer},
        {"coset-minima", "", coset_minima},
        {"evenness", "prop-2.1", evenness},
        {"dual-identity", "", dual_identity},
        {"census", "", census},
        {"root-system", "", root_system},
        {"e8-glue", "", e8_glue},
        {"chain-counts", "lemma-3.10-counts", chain_counts},
        {"frame-pipeline", "", frame_pipeline},
        {"k3-self-orthogonality", "", k3_self_orthogonality},
        {"realization", "", realization},
        {"bridge", "", bridge},
        {"classification", "", classification},
        {"preimage-oracle", "", preimage_oracle},
        {"root-count-formula", "", root_count_formula},
    };
    return s;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> suite_names()
{
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& s : suites()) out.emplace_back(s.name, s.alias);
    return out;
}

Report verify_suite(const std::string& name, const json& params)
{
    for (const auto& s : suites()) {
        if (s.name != name && s.alias != name) continue;
        Report r;
        r.suite = s.name;
        r.params = params;
        const auto t0 = Clock::now();
        s.run(params, r);
        r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        return r;
    }
    throw std::invalid_argument("unknown suite: " + name);
}

long long predicted_root_count(const Code& c)
{
    const long long p = c.p(), k = c.length();
    long long n = p * (p - 1) * k;
    if (p == 3) return n + 27 * coset_weight_count(c, FpVec(k, 0), 3);
    if (p == 5) {
        for (const auto& w : c.codewords()) {
            if (weight(w) != 2) continue;
            int small = 0, large = 0;
            for (int x : w) {
                if (x == 1 || x == 4) ++small;
                if (x == 2 || x == 3) ++large;
            }
            if (small == 1 && large == 1) n += 50;
        }
    }
    return n;
}

bool theorem_within_budget(int p, int k, ConstructionKind)
{
    if (k < 1) return false;
    switch (p) {
    case 3: return k <= 5;
    case 5: return k <= 3;
    case 7: return k <= 3;
    case 11: return k <= 2;
    default: return false;
    }
}

Report theorem_matrix(int p, int k, ConstructionKind x, const TheoremOptions& opt)
{
    const auto t0 = Clock::now();
    if (!opt.force && opt.sample_pairs == 0 && !theorem_within_budget(p, k, x))
        throw std::length_error("theorem: (p, k) outside the desk-scale budget; pass force or sample");
    Report r;
    r.suite = "theorem";
    r.params = {{"p", p}, {"k", k}, {"construction", x == ConstructionKind::A ? "A" : "B"}};
    if (opt.sample_pairs) r.params["sample_pairs"] = opt.sample_pairs;

    const Catalog cat = enumerate_self_orthogonal(p, k);
    const std::size_t n = cat.entries.size();
    auto build = [&](const Code& c) { return x == ConstructionKind::A ? construction_A(c) : construction_B(c); };
    std::vector<Lattice> lat;
    for (const auto& e : cat.entries) lat.push_back(build(e.code));

    if (x == ConstructionKind::A)
        for (std::size_t i = 0; i < n; ++i) {
            const auto got = static_cast<long long>(roots(lat[i]).size());
            const long long want = predicted_root_count(cat.entries[i].code);
            r.add("root count " + label(cat.entries[i].code), got == want, {{"roots", got}, {"predicted", want}});
        }

    struct Task {
        std::size_t i;
        std::size_t j;  // n means the scrambled copy of class i
        Code other;
    };
    std::vector<Task> tasks;
    std::mt19937_64 rng(opt.seed);
    for (std::size_t i = 0; i < n; ++i) {
        auto g = random_signed_permutation(k, opt.seed * 1000003 + i);
        tasks.push_back({i, n, g.apply(cat.entries[i].code)});
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    if (opt.sample_pairs > 0 && static_cast<std::size_t>(opt.sample_pairs) < pairs.size()) {
        std::shuffle(pairs.begin(), pairs.end(), rng);
        pairs.resize(opt.sample_pairs);
        std::sort(pairs.begin(), pairs.end());
    }
    for (auto [i, j] : pairs) tasks.push_back({i, j, cat.entries[j].code});

    std::vector<Check> results(tasks.size());
    std::atomic<std::size_t> next{0};
    std::atomic<long long> calls{0};
    auto worker = [&] {
        for (std::size_t t; (t = next++) < tasks.size();) {
            const Task& task = tasks[t];
            const Code& c = cat.entries[task.i].code;
            try {
                const Lattice lc = lat[task.i];
                const Lattice ld = task.j == n ? build(task.other) : lat[task.j];
                auto eq = equivalent(c, task.other);
                ++calls;
                IsometryResult iso = isometry_search(lc, ld);
                const bool witness_ok = !iso.witness || verify_witness(lc, ld, iso.witness->u);
                const bool eq_ok = !eq || eq->apply(c) == task.other;
                const bool undecided = iso.reason == "node budget exceeded";
                const bool agree = !undecided && eq.has_value() == iso.witness.has_value();
                json data = {{"equivalent", eq.has_value()}, {"isometric", iso.witness.has_value()}, {"nodes", iso.nodes}};
                if (undecided) data["isometric"] = "undecided";
                if (!iso.witness) data["separator"] = iso.reason;
                if (iso.witness) data["witness"] = to_json(iso.witness->u);
                if (eq) data["code_witness"] = to_json(*eq);
                if (!agree && !undecided) data["counterexample"] = {{"C", to_json(c)}, {"D", to_json(task.other)}};
                const std::string name = task.j == n ? "class " + std::to_string(task.i) + " vs scrambled copy"
                                                     : "classes " + std::to_string(task.i) + "," + std::to_string(task.j);
                results[t] = {name, agree && witness_ok && eq_ok, data};
            } catch (const std::exception& ex) {
                results[t] = {"task " + std::to_string(t), false, {{"error", ex.what()}}};
            }
        }
    };
    const int jobs = std::max(1, opt.jobs);
    std::vector<std::thread> pool;
    for (int i = 1; i < jobs; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (auto& c : results) r.checks.push_back(std::move(c));

    json classes = json::array();
    for (const auto& e : cat.entries) classes.push_back(e.key);
    r.summary["classes"] = n;
    r.summary["class_keys"] = classes;
    r.summary["pairs"] = pairs.size();
    r.summary["isometry_calls"] = calls.load();
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
}

}  // namespace codelat
