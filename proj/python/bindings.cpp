// Python bindings. JSON crosses the boundary as text; the kg_workbench
// package decodes it.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kgwb/demo_data.hpp"
#include "kgwb/error.hpp"
#include "kgwb/jsonl.hpp"
#include "kgwb/query.hpp"
#include "kgwb/workbench.hpp"

namespace py = pybind11;
using namespace kgwb;

namespace {

std::string envelope(const Versioned& v) {
    return Json{{"graphVersion", v.graph_version}, {"payload", v.payload}}.dump();
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::InvalidArgument, std::string("malformed JSON: ") + e.what());
    }
}

Json error_json(const Error& e) {
    Json body{{"code", to_string(e.code())}, {"message", e.what()}};
    if (const auto* s = dynamic_cast<const SyntaxError*>(&e)) {
        body["position"] = s->position();
        body["expected"] = s->expected();
    }
    return body;
}

}  // namespace

PYBIND11_MODULE(_kgwb, m) {
    m.doc() = "Knowledge-graph workbench core";
    static py::exception<Error> error_type(m, "NativeError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(error_type.ptr(), error_json(e).dump().c_str());
        }
    });

    py::class_<Workbench>(m, "Workbench")
        .def(py::init([](std::optional<std::string> data_dir, std::size_t node_cap) {
                 WorkbenchConfig cfg;
                 if (data_dir) cfg.data_dir = *data_dir;
                 cfg.node_cap_default = node_cap;
                 return std::make_unique<Workbench>(cfg);
             }),
             py::arg("data_dir") = py::none(), py::arg("node_cap") = analytics::kDefaultNodeCap)
        .def_property_readonly("graph_version", &Workbench::graph_version)
        .def_static("operation_names", [] {
            const auto& names = Workbench::operation_names();
            return std::vector<std::string>(names.begin(), names.end());
        })
        .def("invoke", [](const Workbench& wb, const std::string& op, const std::string& params) {
            return envelope(wb.invoke(op, parse_json(params)));
        })
        .def("ingest_graph", [](Workbench& wb, const std::string& nodes, const std::string& edges) {
            return envelope(wb.ingest_graph(read_json_lines(nodes), read_json_lines(edges)));
        })
        .def("ingest_corpus", [](Workbench& wb, const std::string& docs) {
            return envelope(wb.ingest_corpus(read_json_lines(docs)));
        })
        .def("create_seed_session", [](Workbench& wb, const std::string& type) { return envelope(wb.create_seed_session(type)); })
        .def("add_seed", [](Workbench& wb, const std::string& s, const std::string& n) { return envelope(wb.add_seed(s, n)); })
        .def("remove_seed", [](Workbench& wb, const std::string& s, const std::string& n) { return envelope(wb.remove_seed(s, n)); })
        .def("export_seeds", [](const Workbench& wb, const std::string& s) { return envelope(wb.export_seeds(s)); })
        .def("import_seeds", [](Workbench& wb, const std::string& file) { return envelope(wb.import_seeds(parse_json(file))); })
        .def("create_verification_session", [](Workbench& wb, const std::string& candidates) {
            return envelope(wb.create_verification_session(read_json_lines(candidates)));
        })
        .def("set_decision",
             [](Workbench& wb, const std::string& s, const std::string& c, const std::string& decision) {
                 return envelope(wb.set_decision(s, c, workflows::parse_decision(decision)));
             })
        .def("export_decisions", [](const Workbench& wb, const std::string& s) { return envelope(wb.export_decisions(s)); })
        .def("import_decisions",
             [](Workbench& wb, const std::string& file) { return envelope(wb.import_decisions(parse_json(file))); })
        .def("apply_merge", [](Workbench& wb, const std::string& s) { return envelope(wb.apply_merge(s)); })
        .def("record_state",
             [](Workbench& wb, const std::string& op, const std::string& params, const std::string& view_hint,
                std::optional<std::string> parent) {
                 return history::to_json(wb.record_state(op, parse_json(params), parse_json(view_hint), parent)).dump();
             },
             py::arg("op"), py::arg("params"), py::arg("view_hint") = "null", py::arg("parent") = py::none())
        .def("list_states", [](const Workbench& wb) {
            Json out = Json::array();
            for (const auto& s : wb.list_states()) out.push_back(history::to_json(s));
            return out.dump();
        })
        .def("restore_state", [](const Workbench& wb, const std::string& id) {
            auto r = wb.restore_state(id);
            return Json{{"state", history::to_json(r.state)}, {"graphVersion", r.graph_version}, {"result", r.result}}.dump();
        });

    m.def("canonical_query", [](const std::string& text) { return query::print(query::parse(text)); },
          "Parse a query and print it in canonical form.");
    m.def("demo_generate", [](std::uint64_t seed) {
        auto d = demo::generate(seed);
        return Json{{"nodes", d.nodes}, {"edges", d.edges}, {"documents", d.documents}, {"candidates", d.candidates}}.dump();
    }, py::arg("seed") = demo::kDefaultSeed);
    m.def("demo_write", [](const std::string& dir, std::uint64_t seed, bool overwrite) {
        demo::write(demo::generate(seed), dir, overwrite);
    }, py::arg("dir"), py::arg("seed") = demo::kDefaultSeed, py::arg("overwrite") = false);
}
