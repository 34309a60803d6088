#pragma once

#include "codelat/rootsys.hpp"

#include "json.hpp"

#include <string>

namespace codelat {

using json = nlohmann::ordered_json;

json to_json(const Rational& q);
json to_json(const IntMatrix& m);
json to_json(const RatMatrix& m);
json to_json(const Code& c);
json to_json(const Lattice& l);
json to_json(const SignedPermutation& g);

/// {"p", "k", "generators"}; entries are reduced mod p and the code is canonicalized.
Code code_from_json(const json& j);
/// {"ambient_dim", "denom", "basis"}.
Lattice lattice_from_json(const json& j);
Rational rational_from_json(const json& j);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace codelat
