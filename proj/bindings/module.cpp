// Python bindings for the main operations: algebras, frames, kites,
// embeddings and induced maps.  Reports cross the boundary as plain dicts.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kites/embed.hpp"
#include "kites/enumerate.hpp"
#include "kites/error.hpp"
#include "kites/frame.hpp"
#include "kites/hom.hpp"
#include "kites/io.hpp"
#include "kites/kite.hpp"
#include "kites/lattice.hpp"
#include "kites/report.hpp"

namespace py = pybind11;
using namespace kites;

namespace {

py::dict report_to_dict(const Report& rep) {
    py::dict d;
    d["title"] = rep.title;
    d["pass"] = rep.pass();
    d["truncated"] = rep.truncated;
    py::list checks;
    for (const auto& r : rep.records) {
        py::dict c;
        c["name"] = r.name;
        c["mode"] = r.mode;
        c["checked"] = r.checked;
        c["space"] = r.space;
        c["pass"] = r.pass;
        c["witness"] = r.witness;
        c["note"] = r.note;
        checks.append(c);
    }
    d["checks"] = checks;
    return d;
}

RunConfig cfg_of(int depth, long long samples, std::uint64_t seed, long long budget) {
    RunConfig cfg;
    cfg.depth = depth;
    cfg.samples = samples;
    cfg.seed = seed;
    cfg.budget = budget;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "finite integral residuated lattices and the kites built over frames";

    py::register_exception<StructuralError>(m, "StructuralError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

    py::class_<FiniteResLat>(m, "Algebra")
        .def(py::init([](int size, int unit, std::vector<int> meet, std::vector<int> join,
                         std::vector<int> mul, std::vector<int> ldiv, std::vector<int> rdiv) {
                 return FiniteResLat(size, unit, std::move(meet), std::move(join),
                                     std::move(mul), std::move(ldiv), std::move(rdiv));
             }),
             py::arg("size"), py::arg("unit"), py::arg("meet"), py::arg("join"),
             py::arg("mul"), py::arg("ldiv"), py::arg("rdiv"))
        .def_property_readonly("size", &FiniteResLat::size)
        .def_property_readonly("unit", &FiniteResLat::unit)
        .def("meet", &FiniteResLat::meet)
        .def("join", &FiniteResLat::join)
        .def("mul", &FiniteResLat::mul)
        .def("ldiv", &FiniteResLat::ldiv)
        .def("rdiv", &FiniteResLat::rdiv)
        .def("leq", &FiniteResLat::leq)
        .def("__repr__", [](const FiniteResLat& g) {
            return "<Algebra size=" + std::to_string(g.size()) + ">";
        });

    m.def("builtin", [](const std::string& name) {
        if (auto b = builtin_lattice(name)) return *b;
        throw DomainError("unknown builtin algebra '" + name + "'");
    });
    m.def("builtin_names", [] {
        std::vector<std::string> out;
        for (const auto& [n, g] : builtin_lattices()) out.push_back(n);
        return out;
    });
    m.def("parse_algebra", &parse_lattice_string);
    m.def("serialize_algebra", [](const FiniteResLat& g) { return serialize(g); });
    m.def("verify_algebra", [](const FiniteResLat& g) {
        const AxiomReport ax = verify_axioms(g);
        py::dict d;
        d["pass"] = ax.pass;
        d["first_failure"] = ax.first_failure() ? ax.first_failure()->law : "";
        return d;
    });
    m.def("classify_algebra",
          [](const FiniteResLat& g) { return classify_algebra(g).to_string(); });
    m.def("enumerate_algebras", &enumerate_residuated_lattices);

    py::class_<Frame>(m, "Frame")
        .def_static("finite",
                    [](int size, std::vector<int> i1, std::vector<std::pair<int, int>> lam) {
                        return Frame::finite(size, std::move(i1), lam);
                    })
        .def_static("z_shift", &Frame::z_shift)
        .def_static("n_forward", &Frame::n_forward)
        .def_static("n_backward", &Frame::n_backward)
        .def_property_readonly("is_finite", &Frame::is_finite)
        .def("__eq__", [](const Frame& a, const Frame& b) { return a == b; })
        .def("__repr__", [](const Frame& f) { return "<Frame " + canonical_frame_form(f) + ">"; });

    m.def("cycle", &cycle_frame);
    m.def("path", &path_frame);
    m.def("loops", &loops_frame);
    m.def("parse_frame", &parse_frame_string);
    m.def("serialize_frame", [](const Frame& f) { return serialize(f); });
    m.def("classify_frame", [](const Frame& f) {
        const FrameClass c = classify_frame(f);
        py::dict d;
        d["tag"] = to_string(c.tag);
        d["cycle_len"] = c.cycle_len;
        d["path_len"] = c.path_len;
        d["si_shape"] = c.si_shape;
        d["detail"] = c.detail;
        return d;
    });
    m.def("canonical_form", &canonical_frame_form);
    m.def("enumerate_frames", &enumerate_frames);

    py::class_<KiteElement>(m, "Element")
        .def(py::init([](int level, std::vector<int> values) {
                 return KiteElement{level, std::move(values)};
             }),
             py::arg("level"), py::arg("values"))
        .def_readwrite("level", &KiteElement::level)
        .def_readwrite("values", &KiteElement::values)
        .def("__eq__", [](const KiteElement& a, const KiteElement& b) { return a == b; });

    py::class_<Kite>(m, "Kite")
        .def(py::init<FiniteResLat, Frame, int>(), py::arg("algebra"), py::arg("frame"),
             py::arg("max_level"))
        .def_property_readonly("max_level", &Kite::max_level)
        .def("labels", &Kite::labels)
        .def("top", &Kite::top)
        .def("all_e", &Kite::all_e)
        .def("leq", &Kite::leq)
        .def("meet", &Kite::meet)
        .def("join", &Kite::join)
        .def("mul", &Kite::mul)
        .def("ldiv", &Kite::ldiv)
        .def("rdiv", &Kite::rdiv)
        .def("parse", [](const Kite& k, const std::string& s) { return parse_element(s, k); })
        .def("str", [](const Kite& k, const KiteElement& x) { return k.to_string(x); });

    m.def(
        "kite_axiom_report",
        [](const FiniteResLat& g, const Frame& f, int depth, long long samples,
           std::uint64_t seed, long long budget) {
            const Kite k(g, f, 3 * depth);
            return report_to_dict(kite_axiom_suite(k, cfg_of(depth, samples, seed, budget)));
        },
        py::arg("algebra"), py::arg("frame"), py::arg("depth") = 2, py::arg("samples") = 1000,
        py::arg("seed") = 1, py::arg("budget") = 1000000);

    m.def("si_kite", [](const FiniteResLat& g, const Frame& f) {
        const SiKiteResult r = is_si_kite(g, f);
        py::dict d;
        d["si"] = r.si;
        d["reason"] = r.reason;
        return d;
    });

    m.def(
        "embedding_report",
        [](const FiniteResLat& g, const std::string& family, int trunc_k, int depth,
           int support, long long samples, std::uint64_t seed) {
            EmbedCheckConfig ec;
            ec.trunc_k = trunc_k;
            ec.depth = depth;
            ec.support = support;
            ec.samples = samples;
            ec.seed = seed;
            if (family == "phi1") return report_to_dict(check_embedding_phi1(g, ec));
            if (family == "phi2") return report_to_dict(check_embedding_phi2(g, ec));
            if (family == "phi3") return report_to_dict(check_embedding_phi3(g, ec));
            if (family == "approx1")
                return report_to_dict(check_congruence(ApproxKind::Approx1, g, ec));
            if (family == "approx3")
                return report_to_dict(check_congruence(ApproxKind::Approx3, g, ec));
            throw DomainError("unknown family '" + family + "'");
        },
        py::arg("algebra"), py::arg("family"), py::arg("trunc_k") = 12, py::arg("depth") = 3,
        py::arg("support") = 4, py::arg("samples") = 1000, py::arg("seed") = 1);

    py::class_<FrameTransformation>(m, "Transformation")
        .def_static("explicit", &FrameTransformation::explicit_map)
        .def_static("shift", &FrameTransformation::shift_map)
        .def_static("mod_collapse", &FrameTransformation::mod_collapse)
        .def("__repr__",
             [](const FrameTransformation& t) { return "<Transformation " + to_string(t) + ">"; });

    m.def("is_transformation", [](const FrameTransformation& t) {
        const TransformationCheck c = is_transformation(t);
        py::dict d;
        d["valid"] = c.valid;
        d["note"] = c.note;
        py::list vs;
        for (const auto& v : c.violations) {
            py::dict e;
            e["condition"] = v.condition;
            e["witness"] = v.witness;
            e["detail"] = v.detail;
            vs.append(e);
        }
        d["violations"] = vs;
        return d;
    });

    m.def(
        "hom_report",
        [](const FrameTransformation& t, const FiniteResLat& g, int depth, long long samples,
           std::uint64_t seed, long long budget) {
            return report_to_dict(check_hom(t, g, cfg_of(depth, samples, seed, budget)));
        },
        py::arg("transformation"), py::arg("algebra"), py::arg("depth") = 2,
        py::arg("samples") = 1000, py::arg("seed") = 1, py::arg("budget") = 1000000);

    m.def(
        "lemma_report",
        [](const FrameTransformation& t, int depth) {
            return report_to_dict(lemma_checks(t, depth));
        },
        py::arg("transformation"), py::arg("depth") = 8);
}
