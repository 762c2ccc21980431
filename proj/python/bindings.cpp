#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "favourlab/construction.hpp"
#include "favourlab/default_logic.hpp"
#include "favourlab/error.hpp"
#include "favourlab/logic.hpp"
#include "favourlab/paradox.hpp"
#include "favourlab/world.hpp"

namespace py = pybind11;
namespace fl = favourlab;

// Rational <-> fractions.Fraction. Loading also accepts int and "n/d" strings.
namespace pybind11::detail {
template <>
struct type_caster<fl::Rational> {
  PYBIND11_TYPE_CASTER(fl::Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src) return false;
    try {
      if (py::isinstance<py::str>(src)) {
        value = fl::Rational::parse(src.cast<std::string>());
        return true;
      }
      if (py::isinstance<py::bool_>(src)) return false;
      if (!py::hasattr(src, "numerator") || !py::hasattr(src, "denominator")) return false;
      const std::string num = py::str(src.attr("numerator"));
      const std::string den = py::str(src.attr("denominator"));
      value = fl::Rational(fl::Integer(num), fl::Integer(den));
      return true;
    } catch (const std::exception&) {
      return false;
    }
  }

  static handle cast(const fl::Rational& r, return_value_policy, handle) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    py::object num = py::int_(py::str(r.numerator().str()));
    py::object den = py::int_(py::str(r.denominator().str()));
    return fraction(num, den).release();
  }
};
}  // namespace pybind11::detail

namespace {

using FormulaLike = std::variant<fl::Formula, std::string>;

fl::Formula resolve(const FormulaLike& f, const fl::Universe& u) {
  if (const auto* text = std::get_if<std::string>(&f)) return fl::parse_formula(*text, u);
  return std::get<fl::Formula>(f);
}

fl::Formula resolve(const FormulaLike& f) {
  if (const auto* text = std::get_if<std::string>(&f)) return fl::parse_formula(*text);
  return std::get<fl::Formula>(f);
}

py::object opt(const std::optional<fl::Rational>& r) {
  return r ? py::cast(*r) : py::none();
}

py::dict verdict(const fl::FavourVerdict& v) {
  py::dict d;
  d["verdict"] = std::string(fl::to_string(v.verdict));
  d["conditional"] = opt(v.conditional);
  d["prior"] = v.prior;
  return d;
}

py::object verdict(const std::optional<fl::FavourVerdict>& v) { return v ? py::object(verdict(*v)) : py::none(); }

py::dict comparison(const fl::Comparison& c) {
  py::dict d;
  d["left"] = opt(c.left);
  d["right"] = opt(c.right);
  d["holds"] = c.holds;
  return d;
}

struct Triple {
  fl::Formula a, b, c;
};
Triple triple(const fl::World& w, const FormulaLike& a, const FormulaLike& b, const FormulaLike& c) {
  return {resolve(a, w.universe()), resolve(b, w.universe()), resolve(c, w.universe())};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact probabilistic favouring, paradox search and normal default logic";

  auto& error = py::register_exception<fl::Error>(m, "Error", PyExc_ValueError);
  py::register_exception<fl::SyntaxError>(m, "FormulaSyntaxError", error.ptr());
  py::register_exception<fl::UnknownAtomError>(m, "UnknownAtomError", error.ptr());
  py::register_exception<fl::BoundExceeded>(m, "BoundExceeded", error.ptr());
  py::register_exception<fl::ZeroMassCondition>(m, "ZeroMassCondition", error.ptr());
  py::register_exception<fl::InvalidInput>(m, "InvalidInput", error.ptr());

  py::class_<fl::Formula>(m, "Formula")
      .def(py::init([](const std::string& text) { return fl::parse_formula(text); }), py::arg("text"))
      .def_static("parse", [](const std::string& text) { return fl::parse_formula(text); })
      .def_static("atom", &fl::Formula::atom)
      .def_static("constant", &fl::Formula::constant)
      .def("atoms", &fl::Formula::atoms)
      .def("implies", [](const fl::Formula& x, const fl::Formula& y) { return fl::implies(x, y); })
      .def("iff", [](const fl::Formula& x, const fl::Formula& y) { return fl::iff(x, y); })
      .def("__and__", [](const fl::Formula& x, const fl::Formula& y) { return x && y; })
      .def("__or__", [](const fl::Formula& x, const fl::Formula& y) { return x || y; })
      .def("__invert__", [](const fl::Formula& x) { return !x; })
      .def(py::self == py::self)
      .def("__hash__", [](const fl::Formula& f) { return py::hash(py::str(f.to_string())); })
      .def("__str__", &fl::Formula::to_string)
      .def("__repr__", [](const fl::Formula& f) { return "Formula('" + f.to_string() + "')"; });

  m.def("entails", [](const std::vector<FormulaLike>& premises, const FormulaLike& conclusion) {
    std::vector<fl::Formula> fs;
    for (const auto& p : premises) fs.push_back(resolve(p));
    return fl::entails(fs, resolve(conclusion));
  }, py::arg("premises"), py::arg("conclusion"));
  m.def("consistent", [](const std::vector<FormulaLike>& formulas) {
    std::vector<fl::Formula> fs;
    for (const auto& f : formulas) fs.push_back(resolve(f));
    return fl::consistent(fs);
  }, py::arg("formulas"));

  py::class_<fl::World>(m, "World")
      .def_static("parse", [](const std::string& text) { return fl::parse_world(text); }, py::arg("text"))
      .def_static("from_outcomes",
                  [](const std::vector<std::string>& atoms,
                     const std::vector<std::pair<std::vector<std::string>, fl::Rational>>& outcomes,
                     const std::string& name) {
                    fl::WorldBuilder builder(atoms, name);
                    for (const auto& [true_atoms, weight] : outcomes) builder.add(true_atoms, weight);
                    return builder.build();
                  },
                  py::arg("atoms"), py::arg("outcomes"), py::arg("name") = "")
      .def_property_readonly("name", &fl::World::name)
      .def_property_readonly("atoms", [](const fl::World& w) { return w.universe().names(); })
      .def_property_readonly("total_weight", &fl::World::total_weight)
      .def_property_readonly("outcomes", [](const fl::World& w) {
        py::list out;
        for (const auto& o : w.outcomes()) {
          std::vector<std::string> true_atoms;
          for (std::size_t i = 0; i < o.truth.size(); ++i)
            if (o.truth[i]) true_atoms.push_back(w.universe()[i]);
          out.append(py::make_tuple(true_atoms, o.weight));
        }
        return out;
      })
      .def("mass", [](const fl::World& w, const FormulaLike& e) { return w.mass(resolve(e, w.universe())); })
      .def("probability", [](const fl::World& w, const FormulaLike& e) {
        return w.probability(resolve(e, w.universe()));
      })
      .def("conditional", [](const fl::World& w, const FormulaLike& e, const FormulaLike& given) {
        return opt(w.try_conditional(resolve(e, w.universe()), resolve(given, w.universe())));
      }, py::arg("event"), py::arg("given"), "p(event | given), or None when p(given) = 0")
      .def("to_text", [](const fl::World& w) { return fl::format_world(w); })
      .def("__str__", [](const fl::World& w) { return fl::format_world(w); });

  m.def("favours", [](const fl::World& w, const FormulaLike& h, const FormulaLike& e) {
    return verdict(fl::favours(w, resolve(h, w.universe()), resolve(e, w.universe())));
  }, py::arg("world"), py::arg("hypothesis"), py::arg("evidence"));

  m.def("check_disjunction_identity", [](const fl::World& w, const FormulaLike& a, const FormulaLike& b,
                                         const FormulaLike& g) {
    auto r = fl::check_disjunction_identity(w, resolve(a, w.universe()), resolve(b, w.universe()),
                                            resolve(g, w.universe()));
    py::dict d;
    d["lhs"] = r.lhs;
    d["rhs"] = r.rhs;
    d["equal"] = r.equal;
    return d;
  });

  m.def("build_two_class_world", &fl::build_two_class_world, py::arg("extra") = 1);
  m.def("build_disjunctive_world", [](const fl::Rational& v1, const fl::Rational& v2, std::size_t extra) {
    auto c = fl::build_disjunctive_world({v1, v2, extra});
    return py::make_tuple(c.world, c.k, c.n);
  }, py::arg("v1"), py::arg("v2"), py::arg("extra") = 0, "Returns (world, k, n).");
  m.def("build_conjunctive_world", &fl::build_conjunctive_world, py::arg("v1"), py::arg("v2"));

  m.def("simpson_check", [](const fl::World& w, const FormulaLike& a, const FormulaLike& b, const FormulaLike& c) {
    auto t = triple(w, a, b, c);
    auto r = fl::simpson_check(w, t.a, t.b, t.c);
    py::dict d;
    d["paradox"] = r.paradox;
    d["within_c"] = comparison(r.within_c);
    d["within_not_c"] = comparison(r.within_not_c);
    d["marginal"] = comparison(r.marginal);
    return d;
  }, py::arg("world"), py::arg("a") = "a", py::arg("b") = "b", py::arg("c") = "c");

  m.def("chung_check", [](const fl::World& w, const std::string& pattern, const FormulaLike& a,
                          const FormulaLike& b, const FormulaLike& c) {
    auto t = triple(w, a, b, c);
    auto r = fl::chung_check(w, t.a, t.b, t.c, fl::parse_search_pattern(pattern));
    py::dict d;
    d["applicable"] = r.applicable;
    d["holds"] = r.holds;
    d["prior"] = r.prior;
    d["given_b"] = opt(r.given_b);
    d["given_c"] = opt(r.given_c);
    d["given_combined"] = opt(r.given_combined);
    return d;
  }, py::arg("world"), py::arg("pattern"), py::arg("a") = "a", py::arg("b") = "b", py::arg("c") = "c");

  m.def("proposition1_check", [](const fl::World& w, const FormulaLike& a, const FormulaLike& b,
                                 const FormulaLike& c) {
    auto t = triple(w, a, b, c);
    auto r = fl::proposition1_check(w, t.a, t.b, t.c);
    py::dict d;
    d["verdict"] = std::string(fl::to_string(r.verdict));
    d["overlap"] = r.overlap;
    d["a_given_c"] = verdict(r.a_given_c);
    d["b_given_c"] = verdict(r.b_given_c);
    d["disjunction_given_c"] = verdict(r.disjunction_given_c);
    return d;
  }, py::arg("world"), py::arg("a") = "a", py::arg("b") = "b", py::arg("c") = "c");

  m.def("proposition2_audit", [](const fl::World& w, const FormulaLike& a, const FormulaLike& b,
                                 const FormulaLike& c) {
    auto t = triple(w, a, b, c);
    auto r = fl::proposition2_audit(w, t.a, t.b, t.c);
    py::dict d;
    d["verdict"] = std::string(fl::to_string(r.verdict));
    d["given_b"] = verdict(r.given_b);
    d["given_c"] = verdict(r.given_c);
    d["given_conjunction"] = verdict(r.given_conjunction);
    d["given_disjunction"] = verdict(r.given_disjunction);
    return d;
  }, py::arg("world"), py::arg("a") = "a", py::arg("b") = "b", py::arg("c") = "c");

  m.def("check_disjunction_principle", [](const fl::World& w, const FormulaLike& a, const FormulaLike& b,
                                          const FormulaLike& c) {
    auto t = triple(w, a, b, c);
    auto r = fl::check_disjunction_principle(w, t.a, t.b, t.c);
    py::dict d;
    d["verdict"] = std::string(fl::to_string(r.verdict));
    d["given_a"] = verdict(r.given_a);
    d["given_b"] = verdict(r.given_b);
    d["given_disjunction"] = verdict(r.given_disjunction);
    return d;
  }, py::arg("world"), py::arg("a") = "a", py::arg("b") = "b", py::arg("c") = "c");

  m.def("nine_antecedent_profile", [](const fl::World& w, const FormulaLike& a, const FormulaLike& b,
                                      const FormulaLike& c) {
    auto t = triple(w, a, b, c);
    auto p = fl::nine_antecedent_profile(w, t.a, t.b, t.c);
    py::dict conditionals;
    for (std::size_t i = 0; i < p.conditionals.size(); ++i)
      conditionals[py::str(std::string(fl::NineAntecedentProfile::kLabels[i]))] = opt(p.conditionals[i]);
    py::list between;
    for (const auto& bt : p.betweenness) {
      py::dict e;
      e["stratum"] = bt.stratum;
      e["refiner"] = bt.refiner;
      e["defined"] = bt.defined;
      e["weak"] = bt.weak;
      e["strict"] = bt.strict;
      between.append(e);
    }
    py::dict d;
    d["conditionals"] = conditionals;
    d["betweenness"] = between;
    d["constraint1"] = p.constraint1;
    d["constraint2"] = p.constraint2;
    d["constraint3_premise"] = p.constraint3_premise;
    d["constraint3"] = p.constraint3;
    return d;
  }, py::arg("world"), py::arg("a") = "a", py::arg("b") = "b", py::arg("c") = "c");

  py::class_<fl::CellTable>(m, "CellTable")
      .def(py::init([](const std::array<std::uint32_t, 8>& counts) { return fl::CellTable{counts}; }),
           py::arg("counts"))
      .def_static("parse", [](const std::string& text) { return fl::CellTable::parse(text); })
      .def_readonly("counts", &fl::CellTable::counts)
      .def_readonly("atoms", &fl::CellTable::atoms)
      .def("total", &fl::CellTable::total)
      .def("to_world", &fl::CellTable::to_world)
      .def("matches", [](const fl::CellTable& t, const std::string& pattern) {
        return fl::matches_pattern(t, fl::parse_search_pattern(pattern));
      })
      .def(py::self == py::self)
      .def("__str__", &fl::CellTable::to_string)
      .def("__repr__", [](const fl::CellTable& t) { return "CellTable.parse('" + t.to_string() + "')"; });

  m.def("search_counterexamples", [](const std::string& pattern, std::uint32_t max_cell, std::size_t limit,
                                     unsigned workers) {
    const auto p = fl::parse_search_pattern(pattern);
    py::gil_scoped_release release;
    return fl::search_counterexamples(p, max_cell, limit, workers);
  }, py::arg("pattern"), py::arg("max_cell"), py::arg("limit"), py::arg("workers") = 0);

  py::class_<fl::DefaultTheory>(m, "Theory")
      .def_static("parse", [](const std::string& text) { return fl::parse_theory(text); }, py::arg("text"))
      .def_property_readonly("atoms", [](const fl::DefaultTheory& t) { return t.universe.names(); })
      .def_readonly("facts", &fl::DefaultTheory::facts)
      .def_property_readonly("rules", [](const fl::DefaultTheory& t) {
        std::vector<std::string> out;
        for (const auto& r : t.rules) out.push_back(r.to_string());
        return out;
      })
      .def("to_text", &fl::format_theory)
      .def("__str__", &fl::format_theory);

  py::class_<fl::Extension>(m, "Extension")
      .def_property_readonly("generating", &fl::Extension::generating)
      .def_property_readonly("base", &fl::Extension::base)
      .def("entails", [](const fl::Extension& e, const fl::Formula& f) { return e.entails(f); })
      .def("entails", [](const fl::Extension& e, const std::string& f) { return e.entails(fl::parse_formula(f)); });

  m.def("compute_extensions", [](const fl::DefaultTheory& t) {
    auto set = fl::compute_extensions(t);
    py::dict d;
    d["facts_inconsistent"] = set.facts_inconsistent;
    d["extensions"] = set.extensions;
    return d;
  }, py::arg("theory"));
  m.def("query", [](const fl::DefaultTheory& t, const FormulaLike& f, const std::string& mode) {
    return fl::query(t, resolve(f, t.universe), fl::parse_query_mode(mode));
  }, py::arg("theory"), py::arg("formula"), py::arg("mode") = "skeptical");
  m.def("to_consequent_form", &fl::to_consequent_form, py::arg("theory"));
}
