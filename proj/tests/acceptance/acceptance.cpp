#include "codelat/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>

using namespace codelat;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;

    void need(bool ok, const std::string& what)
    {
        if (ok) return;
        pass = false;
        detail += (detail.empty() ? "" : "; ") + what;
    }
};

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void suite(Outcome& o, const std::string& name, const json& params = json::object())
{
    Report r = verify_suite(name, params);
    if (r.pass()) return;
    for (const auto& c : r.checks)
        if (!c.pass) o.need(false, name + ": " + c.name + " " + c.data.dump());
}

void theorem(Outcome& o, int p, int k, ConstructionKind x, int sample = 0)
{
    TheoremOptions opt;
    opt.sample_pairs = sample;
    Report r = theorem_matrix(p, k, x, opt);
    const std::string tag = std::string(x == ConstructionKind::A ? "A" : "B") + " p=" + std::to_string(p) +
                            " k=" + std::to_string(k);
    for (const auto& c : r.checks)
        if (!c.pass) o.need(false, tag + " " + c.name + " " + c.data.dump());
}

Outcome norm_bounds()
{
    Outcome o;
    const auto t0 = Clock::now();
    suite(o, "dual-minimum", {{"n_min", 2}, {"n_max", 12}});
    const double s = since(t0);
    o.need(s < 1.0, "first minima took " + std::to_string(s) + " s");
    suite(o, "dual-second-layer", {{"n_min", 7}, {"n_max", 12}});
    return o;
}

Outcome coset_minima()
{
    Outcome o;
    suite(o, "coset-minima", {{"primes", {3, 5, 7, 11}}});
    return o;
}

Outcome census()
{
    Outcome o;
    suite(o, "census");
    return o;
}

Outcome dual_identity()
{
    Outcome o;
    const auto t0 = Clock::now();
    suite(o, "dual-identity");
    const double s = since(t0);
    o.need(s < 60.0, "took " + std::to_string(s) + " s");
    return o;
}

Outcome e8_facts()
{
    Outcome o;
    suite(o, "e8-glue");
    suite(o, "chain-counts");
    return o;
}

Outcome bridge()
{
    Outcome o;
    suite(o, "bridge");
    return o;
}

Outcome classifications()
{
    Outcome o;
    suite(o, "classification");
    const Catalog c7 = enumerate_self_orthogonal(7, 3);
    o.need(c7.entries.size() == 2, "p=7 k=3 classes " + std::to_string(c7.entries.size()));
    if (c7.entries.size() == 2) {
        o.need(c7.entries[0].code.dim() == 0, "first p=7 class is not {0}");
        o.need(equivalent(c7.entries[1].code, Code(7, 3, {{1, 2, 3}})).has_value(), "second p=7 class is not <123>");
    }
    o.need(enumerate_self_orthogonal(11, 2).entries.size() == 1, "p=11 k=2 is not a single class");
    return o;
}

Outcome main_theorem()
{
    Outcome o;
    for (auto x : {ConstructionKind::A, ConstructionKind::B}) {
        for (int k = 1; k <= 5; ++k) theorem(o, 3, k, x);
        for (int k = 1; k <= 3; ++k) theorem(o, 5, k, x);
        for (int k = 1; k <= 2; ++k) theorem(o, 7, k, x);
    }
    theorem(o, 7, 3, ConstructionKind::B);
    // Random pairs from the larger ranges.
    theorem(o, 3, 9, ConstructionKind::B, 6);
    theorem(o, 5, 5, ConstructionKind::B, 6);
    return o;
}

Outcome frame_pipeline()
{
    Outcome o;
    suite(o, "frame-pipeline", {{"trials", 20}});
    return o;
}

Outcome large_p()
{
    Outcome o;
    const Code c(7, 3, {{1, 2, 3}});
    const Lattice l = construction_A(c);
    auto rs = roots(l);
    auto standard = standard_frame(7, 3, l.denom()).all_roots();
    o.need(rs.size() == 126, "roots " + std::to_string(rs.size()));
    std::sort(rs.begin(), rs.end());
    std::sort(standard.begin(), standard.end());
    o.need(rs == standard, "roots differ from R(2)");
    const auto fs = find_frames(l, 7);
    o.need(fs.size() == 1, "frames " + std::to_string(fs.size()));
    return o;
}

Outcome preimage_oracle()
{
    Outcome o;
    suite(o, "preimage-oracle");
    return o;
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"norm bounds", norm_bounds},
        {"coset minima", coset_minima},
        {"short-vector census", census},
        {"dual identity", dual_identity},
        {"E8 facts", e8_facts},
        {"bridge isometries", bridge},
        {"classifications", classifications},
        {"main theorem desk matrix", main_theorem},
        {"frame pipeline", frame_pipeline},
        {"uniqueness for large p", large_p},
        {"oracle equivalence", preimage_oracle},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto t0 = Clock::now();
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.need(false, std::string("exception: ") + e.what());
        }
        std::printf("%s  %2zu. %-26s %8.2f s%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    since(t0), o.detail.empty() ? "" : "  ", o.detail.c_str());
        std::fflush(stdout);
        failed += !o.pass;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
