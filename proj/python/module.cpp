#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "princong/json_io.hpp"
#include "princong/randgen.hpp"

namespace py = pybind11;
using namespace princong;

namespace {

std::vector<std::vector<std::string>> labelled_blocks(const Carrier& carrier,
                                                      const Congruence& c) {
  std::vector<std::vector<std::string>> out;
  for (const auto& block : c.blocks()) {
    std::vector<std::string> labels;
    for (int x : block) labels.push_back(carrier.label(x));
    out.push_back(std::move(labels));
  }
  return out;
}

std::vector<int> indices_of(const FiniteLattice& l, const std::vector<std::string>& labels) {
  std::vector<int> out;
  out.reserve(labels.size());
  for (const auto& s : labels) out.push_back(l.index_of(s));
  return out;
}

py::dict map_as_dict(const MonotoneMap& f) {
  py::dict out;
  for (int x = 0; x < f.source.size(); ++x) {
    out[py::str(f.source.label(x))] = f.target.label(f(x));
  }
  return out;
}

py::list report_violations(const Report& r) {
  py::list out;
  for (const auto& v : r.violations) {
    py::dict item;
    item["code"] = v.code;
    item["message"] = v.message;
    py::dict witness;
    for (const auto& [key, value] : v.witness) witness[py::str(key)] = value;
    item["witness"] = witness;
    out.append(item);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(princong, m) {
  m.doc() = "principal lattice congruences: Princ posets, zeta maps, colimit "
            "quasiorders and representation checking";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
  py::register_exception<InternalError>(m, "InvariantError", PyExc_AssertionError);

  py::class_<Poset>(m, "Poset")
      .def(py::init([](const std::vector<std::string>& elements,
                       const std::vector<std::pair<std::string, std::string>>& le) {
             return Poset::from_le_pairs(Carrier(elements), le);
           }),
           py::arg("elements"), py::arg("le") = std::vector<std::pair<std::string, std::string>>{})
      .def_property_readonly("elements",
                             [](const Poset& p) { return p.carrier().labels(); })
      .def("leq",
           [](const Poset& p, const std::string& a, const std::string& b) {
             return p.leq(p.index_of(a), p.index_of(b));
           })
      .def("covers",
           [](const Poset& p) {
             std::vector<std::pair<std::string, std::string>> out;
             for (const auto& [a, b] : p.covers()) out.emplace_back(p.label(a), p.label(b));
             return out;
           })
      .def_property_readonly("bounded", &Poset::bounded)
      .def_property_readonly("zero", [](const Poset& p) { return p.label(p.zero()); })
      .def_property_readonly("one", [](const Poset& p) { return p.label(p.one()); })
      .def("__len__", &Poset::size)
      .def("__eq__", [](const Poset& p, const Poset& q) { return p == q; })
      .def("__repr__", [](const Poset& p) {
        return "Poset(" + std::to_string(p.size()) + " elements)";
      });

  py::class_<FiniteLattice>(m, "Lattice")
      .def_static(
          "from_covers",
          [](const std::vector<std::string>& elements,
             const std::vector<std::pair<std::string, std::string>>& covers) {
            return FiniteLattice::from_covers(elements, covers);
          },
          py::arg("elements"), py::arg("covers"))
      .def_property_readonly("elements",
                             [](const FiniteLattice& l) { return l.carrier().labels(); })
      .def_property_readonly("poset", &FiniteLattice::poset)
      .def("meet",
           [](const FiniteLattice& l, const std::string& a, const std::string& b) {
             return l.label(l.meet(l.index_of(a), l.index_of(b)));
           })
      .def("join",
           [](const FiniteLattice& l, const std::string& a, const std::string& b) {
             return l.label(l.join(l.index_of(a), l.index_of(b)));
           })
      .def("leq",
           [](const FiniteLattice& l, const std::string& a, const std::string& b) {
             return l.leq(l.index_of(a), l.index_of(b));
           })
      .def_property_readonly("zero", [](const FiniteLattice& l) { return l.label(l.zero()); })
      .def_property_readonly("one", [](const FiniteLattice& l) { return l.label(l.one()); })
      .def("__len__", &FiniteLattice::size)
      .def("__eq__", [](const FiniteLattice& l, const FiniteLattice& k) { return l == k; })
      .def("__repr__", [](const FiniteLattice& l) {
        return "Lattice(" + std::to_string(l.size()) + " elements)";
      });

  py::class_<PosetFunctor>(m, "Functor")
      .def_property_readonly("base", [](const PosetFunctor& f) { return f.base; })
      .def("object",
           [](const PosetFunctor& f, const std::string& i) {
             return f.object(f.base.index_of(i));
           })
      .def("morphism",
           [](const PosetFunctor& f, const std::string& i, const std::string& j) {
             return map_as_dict(f.morphism(f.base.index_of(i), f.base.index_of(j)));
           })
      .def("__repr__", [](const PosetFunctor& f) {
        return "Functor(base of " + std::to_string(f.base.size()) + ")";
      });

  py::class_<EmbeddingFunctor>(m, "EmbeddingFunctor")
      .def_property_readonly("base", [](const EmbeddingFunctor& e) { return e.base; })
      .def_property_readonly("lattice", [](const EmbeddingFunctor& e) { return e.ambient; })
      .def("assignment", [](const EmbeddingFunctor& e, const std::string& i) {
        std::vector<std::string> out;
        for (int x : e.assignment[static_cast<size_t>(e.base.index_of(i))]) {
          out.push_back(e.ambient.label(x));
        }
        return out;
      });

  // JSON bridges; the file formats documented for the CLI.
  m.def("load_poset", [](const std::string& text) { return poset_from_json(json::parse(text)); });
  m.def("load_lattice",
        [](const std::string& text) { return lattice_from_json(json::parse(text)); });
  m.def("load_functor",
        [](const std::string& text) { return functor_from_json(json::parse(text)); });
  m.def(
      "load_embedding",
      [](const std::string& text, const FiniteLattice* lattice) {
        return embedding_from_json(json::parse(text), lattice);
      },
      py::arg("text"), py::arg("lattice") = nullptr);
  m.def("functor_json",
        [](const PosetFunctor& f) { return functor_to_json(f).dump(); });

  m.def(
      "quasiorder_closure",
      [](const std::vector<std::string>& elements,
         const std::vector<std::pair<std::string, std::string>>& seed) {
        QuasiOrder q = quasiorder_generated(Carrier(elements), seed);
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& [a, b] : q.rel().pairs()) {
          out.emplace_back(q.carrier().label(a), q.carrier().label(b));
        }
        return out;
      },
      py::arg("elements"), py::arg("seed"));

  m.def(
      "kernel_quotient",
      [](const std::vector<std::string>& elements,
         const std::vector<std::pair<std::string, std::string>>& seed) {
        QuasiOrder q = quasiorder_generated(Carrier(elements), seed);
        Quotient quot = quotient_by_kernel(q);
        std::vector<std::vector<std::string>> blocks;
        for (const auto& block : quot.blocks) {
          std::vector<std::string> labels;
          for (int x : block) labels.push_back(q.carrier().label(x));
          blocks.push_back(std::move(labels));
        }
        return py::make_tuple(quot.poset, blocks);
      },
      py::arg("elements"), py::arg("seed"));

  m.def(
      "principal_congruence",
      [](const FiniteLattice& l, const std::string& a, const std::string& b) {
        return labelled_blocks(l.carrier(),
                               principal_congruence(l, l.index_of(a), l.index_of(b)));
      },
      py::arg("lattice"), py::arg("a"), py::arg("b"));

  m.def(
      "congruence_generated",
      [](const FiniteLattice& l, const std::vector<std::pair<std::string, std::string>>& seed) {
        std::vector<std::pair<int, int>> pairs;
        for (const auto& [a, b] : seed) pairs.emplace_back(l.index_of(a), l.index_of(b));
        return labelled_blocks(l.carrier(), congruence_generated(l, pairs));
      },
      py::arg("lattice"), py::arg("seed"));

  m.def("con_lattice", [](const FiniteLattice& l) {
    std::vector<std::vector<std::vector<std::string>>> out;
    for (const Congruence& c : con_lattice(l)) out.push_back(labelled_blocks(l.carrier(), c));
    return out;
  });

  m.def("princ_poset", [](const FiniteLattice& l) {
    PrincPoset pp = princ_poset(l);
    py::dict out;
    py::list elements;
    for (size_t i = 0; i < pp.elements.size(); ++i) {
      py::dict item;
      item["congruence"] = labelled_blocks(l.carrier(), pp.elements[i]);
      item["witness"] =
          py::make_tuple(l.label(pp.witnesses[i].first), l.label(pp.witnesses[i].second));
      elements.append(item);
    }
    out["elements"] = elements;
    out["order"] = pp.order;
    out["bottom"] = pp.bottom;
    out["top"] = pp.top;
    return out;
  });

  m.def(
      "is_01_sublattice",
      [](const FiniteLattice& l, const std::vector<std::string>& subset) {
        return is_01_sublattice(l, indices_of(l, subset));
      },
      py::arg("lattice"), py::arg("subset"));

  m.def(
      "sublattices",
      [](const FiniteLattice& l, std::optional<int> max_count) {
        SublatticeList subs = enumerate_01_sublattices(l, max_count);
        std::vector<std::vector<std::string>> out;
        for (const auto& emb : subs.items) {
          std::vector<std::string> labels;
          for (int x : emb.injection) labels.push_back(l.label(x));
          out.push_back(std::move(labels));
        }
        return py::make_tuple(out, subs.truncated);
      },
      py::arg("lattice"), py::arg("max_count") = std::nullopt);

  m.def(
      "zeta",
      [](const FiniteLattice& l, const std::vector<std::string>& subset) {
        ZetaMap z = zeta_map(sublattice_from_subset(l, indices_of(l, subset)));
        return map_as_dict(z.map);
      },
      py::arg("lattice"), py::arg("subset"),
      "congruence-generation map Princ(K) -> Princ(L), keyed by witness labels");

  m.def("validate_functor", [](const PosetFunctor& f) {
    Report r = validate_functor(f);
    return py::make_tuple(r.ok, report_violations(r));
  });

  m.def("normalize_functor", [](const PosetFunctor& f) {
    NormalizedFunctor nf = normalize_functor(f);
    py::dict alpha;
    for (int i = 0; i < f.base.size(); ++i) {
      alpha[py::str(f.base.label(i))] = map_as_dict(nf.alpha[static_cast<size_t>(i)]);
    }
    return py::make_tuple(nf.functor, alpha, nf.trivial);
  });

  m.def(
      "colimit",
      [](const PosetFunctor& f, const std::string& j) {
        ColimitData cd = colimit_quasiorder(f, f.base.index_of(j));
        py::dict out;
        out["carrier"] = cd.carrier.labels();
        std::vector<std::vector<std::string>> blocks;
        for (const auto& block : cd.quotient.blocks) {
          std::vector<std::string> labels;
          for (int x : block) labels.push_back(cd.carrier.label(x));
          blocks.push_back(std::move(labels));
        }
        out["blocks"] = blocks;
        out["quotient"] = cd.quotient.poset;
        return out;
      },
      py::arg("functor"), py::arg("j"));

  m.def(
      "kappa",
      [](const PosetFunctor& f, const std::string& j) {
        return map_as_dict(kappa_map(f, f.base.index_of(j)));
      },
      py::arg("functor"), py::arg("j"),
      "block-to-object map of the colimit quotient; aborts if it is not an "
      "order isomorphism");

  m.def("princ_functor", [](const EmbeddingFunctor& e) { return princ_functor(e); });

  m.def(
      "check_representation",
      [](const PosetFunctor& f, const EmbeddingFunctor& e) -> py::object {
        RepresentationResult r = check_representation(f, e);
        if (!r.iso) return py::none();
        py::dict xi;
        for (int i = 0; i < f.base.size(); ++i) {
          xi[py::str(f.base.label(i))] = map_as_dict(r.iso->components[static_cast<size_t>(i)]);
        }
        return xi;
      },
      py::arg("functor"), py::arg("embedding"));

  m.def(
      "oracle_congruences",
      [](const FiniteLattice& l) {
        std::vector<std::vector<std::vector<std::string>>> out;
        for (const Congruence& c : oracle_congruences(l)) {
          out.push_back(labelled_blocks(l.carrier(), c));
        }
        return out;
      },
      py::arg("lattice"));

  m.def("enumerate_small_lattices", &enumerate_small_lattices, py::arg("n"));

  m.def(
      "search_representation",
      [](const PosetFunctor& f, int max_size, double time_limit) -> py::object {
        OracleBudget budget;
        budget.max_lattice_size = max_size;
        budget.time_limit_seconds = time_limit;
        SearchOutcome outcome = search_representation(f, budget);
        py::dict out;
        out["found"] = outcome.found();
        out["lattices_examined"] = outcome.lattices_examined;
        out["assignments_examined"] = outcome.assignments_examined;
        out["timed_out"] = outcome.timed_out;
        if (outcome.found()) {
          out["lattice"] = *outcome.lattice;
          py::dict assignment;
          const EmbeddingFunctor& e = *outcome.embedding;
          for (int i = 0; i < e.base.size(); ++i) {
            std::vector<std::string> labels;
            for (int x : e.assignment[static_cast<size_t>(i)]) {
              labels.push_back(e.ambient.label(x));
            }
            assignment[py::str(e.base.label(i))] = labels;
          }
          out["assignment"] = assignment;
        }
        return out;
      },
      py::arg("functor"), py::arg("max_size") = 7, py::arg("time_limit") = 60.0);
}
