#include "codelat/harness.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace codelat;

namespace {

// Exit codes: 0 success, 1 the mathematics says no (or a check failed), 2 misuse.
constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;

struct Output {
    std::string json_path;
    bool timing = false;
    bool verbose = false;

    // Writes the JSON mirror when requested; text goes to stdout unless the
    // JSON itself was sent there.
    void emit(const std::string& text, const json& j) const
    {
        if (json_path == "-") {
            std::cout << j.dump(2) << '\n';
            return;
        }
        std::cout << text;
        if (!json_path.empty()) write_json_file(json_path, j);
    }
};

Code load_code(const std::string& path, int p)
{
    Code c = code_from_json(read_json_file(path));
    if (p != 0 && c.p() != p) throw std::invalid_argument("--p " + std::to_string(p) + " disagrees with the code file");
    return c;
}

Lattice build(const Code& c, const std::string& x) { return x == "A" ? construction_A(c) : construction_B(c); }

std::string rat_list(const std::vector<Rational>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].str();
    return s;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"codelat: lattices from self-orthogonal codes over F_p"};
    app.require_subcommand(1);
    app.fallthrough();
    Output out;
    app.add_option("--json", out.json_path, "Also write the report as JSON to this path ('-' for stdout only)");
    app.add_flag("--timing", out.timing, "Include wall-clock time in reports");
    app.add_flag("-v,--verbose", out.verbose, "List passing checks too");

    int p = 0, k = 0, m = 1, count = 3, jobs = 1, sample = 0;
    long long max_nodes = 1'000'000;
    std::uint64_t seed = 1;
    std::string code_path, code2_path, lattice_path, lattice2_path, out_path, construction = "A", suite, params = "{}";
    bool emit_hnf = false, force = false, list = false;

    auto* construct = app.add_subcommand("construct", "Build L_A(C) or L_B(C) from a code file");
    construct->add_option("--p", p, "Field size (checked against the code file)");
    construct->add_option("--code", code_path, "Code JSON file")->required();
    construct->add_option("--construction", construction)->check(CLI::IsMember({"A", "B"}));
    construct->add_option("--out", out_path, "Write the lattice JSON here");

    auto* roots_cmd = app.add_subcommand("roots", "Norm-2 vectors and their root system type");
    roots_cmd->add_option("--code", code_path, "Code JSON file");
    roots_cmd->add_option("--construction", construction)->check(CLI::IsMember({"A", "B"}));
    roots_cmd->add_option("--lattice", lattice_path, "Lattice JSON file");

    auto* minima = app.add_subcommand("minima", "First norm layers of a lattice");
    minima->add_option("--code", code_path, "Code JSON file");
    minima->add_option("--construction", construction)->check(CLI::IsMember({"A", "B"}));
    minima->add_option("--lattice", lattice_path, "Lattice JSON file");
    minima->add_option("--count", count, "Number of layers")->check(CLI::PositiveNumber);

    auto* isometric = app.add_subcommand("isometric", "Decide whether two lattices are isometric");
    isometric->add_option("--a", lattice_path, "First lattice JSON file")->required();
    isometric->add_option("--b", lattice2_path, "Second lattice JSON file")->required();

    auto* equiv = app.add_subcommand("equivalent", "Decide signed-permutation equivalence of two codes");
    equiv->add_option("--c", code_path, "First code JSON file")->required();
    equiv->add_option("--d", code2_path, "Second code JSON file")->required();

    auto* enumerate = app.add_subcommand("enumerate", "Self-orthogonal codes up to equivalence");
    enumerate->add_option("--p", p)->required();
    enumerate->add_option("--k", k)->required()->check(CLI::PositiveNumber);

    auto* frames = app.add_subcommand("frames", "A_{p-1}-frames of L_A(C)");
    frames->add_option("--code", code_path, "Code JSON file")->required();
    frames->add_option("--max-nodes", max_nodes, "Search budget")->check(CLI::PositiveNumber);

    auto* recover = app.add_subcommand("recover-code", "Glue code of a lattice relative to the standard frame");
    recover->add_option("--p", p)->required();
    recover->add_option("--lattice", lattice_path, "Lattice JSON file")->required();

    auto* bridge_cmd = app.add_subcommand("bridge", "Certify the bridge isometry for p = 3 or p = 5");
    bridge_cmd->add_option("--p", p)->required()->check(CLI::IsMember({3, 5}));
    bridge_cmd->add_option("--m", m, "Number of groups")->check(CLI::PositiveNumber);
    bridge_cmd->add_option("--code", code_path, "K as a code of length 3m over F_3 (default {0})");
    bridge_cmd->add_flag("--emit-hnf", emit_hnf, "Print the coefficient and echelon matrices");

    auto* verify = app.add_subcommand("verify", "Run a named verification suite");
    verify->add_option("--suite", suite, "Suite name");
    verify->add_option("--params", params, "Suite parameters as a JSON object");
    verify->add_flag("--list", list, "List suites");

    auto* theorem = app.add_subcommand("theorem", "Isometry versus equivalence over a whole catalog");
    theorem->add_option("--p", p)->required();
    theorem->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    theorem->add_option("--construction", construction)->check(CLI::IsMember({"A", "B"}));
    theorem->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    theorem->add_option("--seed", seed);
    theorem->add_option("--sample", sample, "Check this many random class pairs")->check(CLI::NonNegativeNumber);
    theorem->add_flag("--force", force, "Run outside the built-in budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    auto lattice_arg = [&]() {
        if (!lattice_path.empty()) return lattice_from_json(read_json_file(lattice_path));
        if (!code_path.empty()) return build(load_code(code_path, 0), construction);
        throw std::invalid_argument("pass --lattice or --code");
    };

    try {
        if (*construct) {
            Code c = load_code(code_path, p);
            Lattice l = build(c, construction);
            json j = to_json(l);
            j["construction"] = construction;
            j["code"] = to_json(c);
            j["even"] = is_even(l);
            if (!out_path.empty()) write_json_file(out_path, to_json(l));
            std::ostringstream s;
            s << "L_" << construction << "(C): rank " << l.rank() << ", det " << l.det() << ", denominator "
              << l.denom() << (is_even(l) ? ", even" : ", not even") << '\n';
            out.emit(s.str(), j);
            return kOk;
        }
        if (*roots_cmd) {
            Lattice l = lattice_arg();
            auto rs = roots(l);
            json comps = json::array();
            std::ostringstream s;
            s << rs.size() << " roots";
            if (!rs.empty()) {
                s << ":";
                for (const auto& c : decompose(rs, l.denom())) {
                    comps.push_back({{"type", c.type}, {"roots", c.roots.size()}});
                    s << " " << c.type;
                }
            }
            s << '\n';
            out.emit(s.str(), {{"roots", rs.size()}, {"components", comps}});
            return kOk;
        }
        if (*minima) {
            Lattice l = lattice_arg();
            json layers = json::array();
            std::ostringstream s;
            for (const auto& [n, c] : norm_layers(l, count)) {
                layers.push_back({{"norm", n.str()}, {"count", c}});
                s << n << "  " << c << '\n';
            }
            out.emit(s.str(), {{"layers", layers}});
            return kOk;
        }
        if (*isometric) {
            Lattice a = lattice_from_json(read_json_file(lattice_path));
            Lattice b = lattice_from_json(read_json_file(lattice2_path));
            IsometryResult r = isometry_search(a, b);
            json j = {{"isometric", r.witness.has_value()}, {"nodes", r.nodes}};
            std::string text;
            if (r.witness) {
                j["witness"] = to_json(r.witness->u);
                j["verified"] = verify_witness(a, b, r.witness->u);
                text = "isometric (witness verified)\n";
            } else {
                j["reason"] = r.reason;
                text = "not isometric: " + r.reason + '\n';
            }
            out.emit(text, j);
            return r.witness ? kOk : kNo;
        }
        if (*equiv) {
            Code c = load_code(code_path, 0), d = load_code(code2_path, 0);
            auto g = equivalent(c, d);
            json j = {{"equivalent", g.has_value()}};
            if (g) j["witness"] = to_json(*g);
            out.emit(g ? "equivalent\n" : "not equivalent\n", j);
            return g ? kOk : kNo;
        }
        if (*enumerate) {
            Catalog cat = enumerate_self_orthogonal(p, k);
            json entries = json::array();
            std::ostringstream s;
            s << cat.entries.size() << " classes of self-orthogonal codes, p=" << p << " k=" << k << '\n';
            for (const auto& e : cat.entries) {
                json c = to_json(e.code);
                c["weights"] = e.weights;
                entries.push_back(c);
                s << "  dim " << e.code.dim() << "  " << e.key << '\n';
            }
            out.emit(s.str(), {{"p", p}, {"k", k}, {"classes", entries}});
            return kOk;
        }
        if (*frames) {
            Code c = load_code(code_path, 0);
            auto fs = find_frames(construction_A(c), c.p(), max_nodes);
            out.emit(std::to_string(fs.size()) + " frames\n", {{"frames", fs.size()}});
            return kOk;
        }
        if (*recover) {
            Code c = recover_code(p, lattice_from_json(read_json_file(lattice_path)));
            std::ostringstream s;
            s << "code of dimension " << c.dim() << ": " << code_key(c) << '\n';
            out.emit(s.str(), to_json(c));
            return kOk;
        }
        if (*bridge_cmd) {
            BridgeCertificate cert;
            if (p == 3) {
                K3Code kc = make_k3_code(m, {});
                if (!code_path.empty()) {
                    Code c = load_code(code_path, 3);
                    if (c.length() % 3 != 0) throw std::invalid_argument("K must have length 3m");
                    std::vector<FpVec> g;
                    for (int i = 0; i < c.dim(); ++i) g.push_back(c.gens().row_vec(i));
                    kc = make_k3_code(c.length() / 3, g);
                }
                cert = verify_bridge3(kc);
            } else {
                cert = verify_bridge5(m);
            }
            json j = {{"p", cert.p},
                      {"m", cert.m},
                      {"orthogonal", cert.orthogonal},
                      {"coefficients_match", cert.coefficients_match},
                      {"echelon_match", cert.echelon_match},
                      {"lattices_equal", cert.equal},
                      {"coefficients", to_json(cert.coefficients)},
                      {"echelon", to_json(cert.echelon)}};
            std::ostringstream s;
            s << std::boolalpha << "bridge p=" << cert.p << " m=" << cert.m << ": " << (cert.ok() ? "PASS" : "FAIL") << '\n'
              << "  orthogonal " << cert.orthogonal << ", coefficient display " << cert.coefficients_match
              << ", echelon display " << cert.echelon_match << ", lattices equal " << cert.equal << '\n';
            if (emit_hnf) {
                auto print = [&](const char* title, const IntMatrix& mtx) {
                    s << title << '\n';
                    for (std::size_t i = 0; i < mtx.rows(); ++i) {
                        s << " ";
                        for (std::size_t c = 0; c < mtx.cols(); ++c) s << ' ' << mtx(i, c);
                        s << '\n';
                    }
                };
                print("coefficients", cert.coefficients);
                print("echelon", cert.echelon);
            }
            out.emit(s.str(), j);
            return cert.ok() ? kOk : kNo;
        }
        if (*verify) {
            if (list) {
                std::ostringstream s;
                json names = json::array();
                for (const auto& [n, a] : suite_names()) {
                    s << n << (a.empty() ? "" : "  (" + a + ")") << '\n';
                    names.push_back(n);
                }
                out.emit(s.str(), names);
                return kOk;
            }
            if (suite.empty()) throw std::invalid_argument("--suite is required");
            json pj;
            try {
                pj = json::parse(params);
            } catch (const json::exception&) {
                throw std::invalid_argument("--params is not valid JSON");
            }
            Report r = verify_suite(suite, pj);
            out.emit(r.to_text(out.timing, out.verbose), r.to_json(out.timing));
            return r.pass() ? kOk : kNo;
        }
        if (*theorem) {
            TheoremOptions opt;
            opt.jobs = jobs;
            opt.seed = seed;
            opt.force = force;
            opt.sample_pairs = sample;
            Report r = theorem_matrix(p, k, construction == "A" ? ConstructionKind::A : ConstructionKind::B, opt);
            out.emit(r.to_text(out.timing, out.verbose), r.to_json(out.timing));
            return r.pass() ? kOk : kNo;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed input: " << e.what() << '\n';
        return kUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kNo;
    }
    return kUsage;
}
