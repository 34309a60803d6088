#include "codelat/harness.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace codelat;

namespace {

py::object fraction(const Rational& q) { return py::module_::import("fractions").attr("Fraction")(q.str()); }

py::list fractions(const std::vector<Rational>& v)
{
    py::list out;
    for (const auto& q : v) out.append(fraction(q));
    return out;
}

std::vector<std::vector<Int>> rows(const IntMatrix& m)
{
    std::vector<std::vector<Int>> out;
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row_vec(i));
    return out;
}

std::vector<std::vector<int>> rows(const FpMatrix& m)
{
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row_vec(i));
    return out;
}

py::object loads(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

json dumps(const py::object& o) { return json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>()); }

}  // namespace

PYBIND11_MODULE(_codelat, m)
{
    m.doc() = "Lattices from self-orthogonal codes over F_p";

    py::class_<Code>(m, "Code")
        .def(py::init<int, int, const std::vector<FpVec>&>(), py::arg("p"), py::arg("k"), py::arg("generators"))
        .def_property_readonly("p", &Code::p)
        .def_property_readonly("k", &Code::length)
        .def_property_readonly("dim", &Code::dim)
        .def_property_readonly("generators", [](const Code& c) { return rows(c.gens()); })
        .def("contains", &Code::contains)
        .def("codewords", &Code::codewords)
        .def("dual", &dual_code)
        .def("is_self_orthogonal", &is_self_orthogonal)
        .def("weight_distribution", &weight_distribution)
        .def("key", &code_key)
        .def(py::self == py::self)
        .def("__repr__", [](const Code& c) { return "<Code " + code_key(c) + ">"; });

    py::class_<SignedPermutation>(m, "SignedPermutation")
        .def(py::init<>())
        .def_readwrite("perm", &SignedPermutation::perm)
        .def_readwrite("signs", &SignedPermutation::signs)
        .def("apply", py::overload_cast<const Code&>(&SignedPermutation::apply, py::const_))
        .def("__repr__", [](const SignedPermutation& g) { return "<SignedPermutation " + to_json(g).dump() + ">"; });

    py::class_<Lattice>(m, "Lattice")
        .def(py::init([](int n, Int d, const std::vector<IntVec>& basis) {
                 IntMatrix b(0, n);
                 for (const auto& r : basis) b.append_row(r);
                 return Lattice(n, d, b);
             }),
             py::arg("ambient_dim"), py::arg("denom"), py::arg("basis"))
        .def_property_readonly("ambient_dim", &Lattice::ambient_dim)
        .def_property_readonly("rank", &Lattice::rank)
        .def_property_readonly("denom", &Lattice::denom)
        .def_property_readonly("basis", [](const Lattice& l) { return rows(l.basis()); })
        .def_property_readonly("det", [](const Lattice& l) { return fraction(l.det()); })
        .def("gram", [](const Lattice& l) {
            RatMatrix g = l.gram();
            py::list out;
            for (std::size_t i = 0; i < g.rows(); ++i) out.append(fractions(g.row_vec(i)));
            return out;
        })
        .def("is_even", &is_even)
        .def("is_integral", &is_integral)
        .def("dual", &dual)
        .def(py::self == py::self)
        .def("__repr__", [](const Lattice& l) {
            return "<Lattice rank " + std::to_string(l.rank()) + " det " + l.det().str() + ">";
        });

    m.def("construction_A", &construction_A, py::arg("code"));
    m.def("construction_B", &construction_B, py::arg("code"));
    m.def("construction_A_preimage", &construction_A_preimage, py::arg("code"));

    m.def("enumerate_self_orthogonal", [](int p, int k) {
        std::vector<Code> out;
        for (const auto& e : enumerate_self_orthogonal(p, k).entries) out.push_back(e.code);
        return out;
    }, py::arg("p"), py::arg("k"));
    m.def("equivalent", &equivalent, py::arg("c"), py::arg("d"));

    m.def("min_norms", [](const Lattice& l, int count) { return fractions(min_norms(l, count)); },
          py::arg("lattice"), py::arg("count"));
    m.def("norm_layers", [](const Lattice& l, int count) {
        py::list out;
        for (const auto& [n, c] : norm_layers(l, count)) out.append(py::make_tuple(fraction(n), c));
        return out;
    }, py::arg("lattice"), py::arg("count"));
    m.def("is_isometric", [](const Lattice& a, const Lattice& b) -> std::optional<std::vector<IntVec>> {
        auto w = is_isometric(a, b);
        if (!w) return std::nullopt;
        return rows(w->u);
    }, py::arg("a"), py::arg("b"));

    m.def("roots", &roots, py::arg("lattice"));
    m.def("root_system_type", [](const Lattice& l) {
        std::vector<std::string> out;
        auto rs = roots(l);
        if (!rs.empty())
            for (const auto& c : decompose(rs, l.denom())) out.push_back(c.type);
        return out;
    }, py::arg("lattice"));
    m.def("frame_count", [](const Code& c) { return find_frames(construction_A(c), c.p()).size(); }, py::arg("code"));
    m.def("recover_code", &recover_code, py::arg("p"), py::arg("lattice"));

    m.def("bridge_ok", [](int p, int mm) {
        return p == 3 ? verify_bridge3(make_k3_code(mm, {})).ok() : verify_bridge5(mm).ok();
    }, py::arg("p"), py::arg("m"));

    m.def("suite_names", [] {
        std::vector<std::string> out;
        for (const auto& [n, a] : suite_names()) out.push_back(n);
        return out;
    });
    m.def("verify_suite", [](const std::string& name, const py::object& params) {
        return loads(verify_suite(name, params.is_none() ? json::object() : dumps(params)).to_json());
    }, py::arg("name"), py::arg("params") = py::none());
    m.def("theorem_matrix", [](int p, int k, const std::string& x, int jobs, std::uint64_t seed, int sample) {
        if (x != "A" && x != "B") throw std::invalid_argument("construction must be 'A' or 'B'");
        TheoremOptions opt;
        opt.jobs = jobs;
        opt.seed = seed;
        opt.sample_pairs = sample;
        const Report r = [&] {
            py::gil_scoped_release release;
            return theorem_matrix(p, k, x == "A" ? ConstructionKind::A : ConstructionKind::B, opt);
        }();
        return loads(r.to_json());
    }, py::arg("p"), py::arg("k"), py::arg("construction") = "A", py::arg("jobs") = 1, py::arg("seed") = 1,
       py::arg("sample") = 0);
}
