#pragma once

#include "codelat/io.hpp"
#include "codelat/special.hpp"

#include <string>
#include <vector>

namespace codelat {

struct Check {
    std::string name;
    bool pass = false;
    json data;  // witness on success, counterexample on failure
};

struct Report {
    std::string suite;
    json params = json::object();
    std::vector<Check> checks;
    json summary = json::object();
    double seconds = 0;

    bool pass() const;
    void add(std::string name, bool pass, json data = json::object());
    json to_json(bool timing = false) const;
    /// One line per check; failing checks include their payload.
    std::string to_text(bool timing = false, bool verbose = false) const;
};

/// Canonical suite names; each also accepts the aliases listed by suite_names().
std::vector<std::pair<std::string, std::string>> suite_names();
/// Throws std::invalid_argument for an unknown suite and std::length_error past a budget.
Report verify_suite(const std::string& name, const json& params = json::object());

enum class ConstructionKind { A, B };

struct TheoremOptions {
    int jobs = 1;
    std::uint64_t seed = 1;
    /// Allow (p, k) outside the built-in budget table.
    bool force = false;
    /// When positive, check only this many random pairs instead of all of them.
    int sample_pairs = 0;
};

bool theorem_within_budget(int p, int k, ConstructionKind x);

/// For every pair of catalog classes (and one scrambled copy of each class):
/// L_X(C) isometric to L_X(D) exactly when C and D are equivalent.
Report theorem_matrix(int p, int k, ConstructionKind x, const TheoremOptions& opt = {});

/// #L_A(C)(2) predicted from the weight statistics of C (p = 3, 5; p >= 7 gives p(p-1)k).
long long predicted_root_count(const Code& c);

}  // namespace codelat
