#include "codelat/io.hpp"

#include <fstream>
#include <stdexcept>

namespace codelat {

json to_json(const Rational& q) { return q.str(); }

json to_json(const IntMatrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row_vec(i));
    return rows;
}

json to_json(const RatMatrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).str());
        rows.push_back(r);
    }
    return rows;
}

json to_json(const Code& c)
{
    json rows = json::array();
    for (int i = 0; i < c.dim(); ++i) rows.push_back(c.gens().row_vec(i));
    return {{"p", c.p()}, {"k", c.length()}, {"generators", rows}};
}

json to_json(const Lattice& l)
{
    return {{"ambient_dim", l.ambient_dim()},
            {"denom", l.denom()},
            {"rank", l.rank()},
            {"det", l.det().str()},
            {"basis", to_json(l.basis())}};
}

json to_json(const SignedPermutation& g) { return {{"perm", g.perm}, {"signs", g.signs}}; }

Code code_from_json(const json& j)
{
    const int p = j.at("p").get<int>();
    const int k = j.at("k").get<int>();
    if (!is_prime(p) || p == 2) throw std::invalid_argument("code file: p must be an odd prime");
    if (k < 1) throw std::invalid_argument("code file: k must be positive");
    std::vector<FpVec> gens;
    for (const auto& row : j.value("generators", json::array())) {
        FpVec v = row.get<FpVec>();
        if (static_cast<int>(v.size()) != k) throw std::invalid_argument("code file: generator length differs from k");
        for (auto& x : v) x = ((x % p) + p) % p;
        gens.push_back(v);
    }
    return Code(p, k, gens);
}

Lattice lattice_from_json(const json& j)
{
    const int n = j.at("ambient_dim").get<int>();
    const Int d = j.at("denom").get<Int>();
    IntMatrix b(0, n);
    for (const auto& row : j.at("basis")) b.append_row(row.get<IntVec>());
    return Lattice(n, d, b);
}

Rational rational_from_json(const json& j)
{
    if (j.is_number_integer()) return Rational(j.get<Int>());
    return Rational(j.get<std::string>());
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return json::parse(in);
}

void write_json_file(const std::string& path, const json& j)
{
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
}

}  // namespace codelat
