#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "liftbraid/braid.hpp"
#include "liftbraid/cosets.hpp"
#include "liftbraid/errors.hpp"
#include "liftbraid/hurwitz.hpp"
#include "liftbraid/lift.hpp"
#include "liftbraid/monodromy.hpp"
#include "liftbraid/orbit.hpp"
#include "liftbraid/permutation.hpp"
#include "liftbraid/restrict.hpp"

namespace py = pybind11;
using namespace liftbraid;

namespace {

MonodromySequence make_sequence(int degree, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Transposition> entries;
  entries.reserve(pairs.size());
  for (auto [a, b] : pairs) entries.emplace_back(a, b);
  return MonodromySequence(degree, std::move(entries));
}

std::vector<std::pair<int, int>> pairs_of(const MonodromySequence& s) {
  std::vector<std::pair<int, int>> out;
  for (const auto& t : s.entries()) out.emplace_back(t.a(), t.b());
  return out;
}

std::vector<int> move_letters(const MoveWord& moves) {
  std::vector<int> out;
  for (const auto& m : moves)
    out.push_back(m.direction == MoveDirection::forward ? m.position : -m.position);
  return out;
}

py::dict block_dict(const ComponentBlock& b) {
  py::dict d;
  d["sheets"] = b.sheets;
  d["branch_count"] = b.branch_count;
  return d;
}

py::list signature_list(const ComponentSignature& sig) {
  py::list out;
  for (const auto& b : sig.blocks) out.append(block_dict(b));
  return out;
}

}  // namespace

PYBIND11_MODULE(_liftbraid, m) {
  m.attr("__version__") = "0.1.0";

  auto base_error = py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<Inconclusive>(m, "Inconclusive", base_error.ptr());
  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<NotRealizable>(m, "NotRealizable", PyExc_ValueError);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<int>(), py::arg("degree") = 1)
      .def_static("from_images", &Permutation::from_images)
      .def_property_readonly("degree", &Permutation::degree)
      .def_property_readonly("images", &Permutation::images)
      .def("__call__", &Permutation::operator())
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("inverse", &Permutation::inverse)
      .def("is_identity", &Permutation::is_identity)
      .def("cycles", &Permutation::cycles)
      .def("__repr__", &Permutation::to_string);

  py::class_<Transposition>(m, "Transposition")
      .def(py::init<int, int>())
      .def_property_readonly("a", &Transposition::a)
      .def_property_readonly("b", &Transposition::b)
      .def("__call__", &Transposition::operator())
      .def(py::self == py::self)
      .def("__repr__", &Transposition::to_string);

  py::class_<CycleType>(m, "CycleType")
      .def(py::init(&CycleType::make), py::arg("degree"), py::arg("parts"))
      .def_readonly("degree", &CycleType::degree)
      .def_readonly("parts", &CycleType::parts)
      .def(py::self == py::self)
      .def("__repr__", &CycleType::to_string);

  py::class_<MonodromySequence>(m, "MonodromySequence")
      .def(py::init(&make_sequence), py::arg("degree"), py::arg("pairs"))
      .def_static("disk", &MonodromySequence::disk)
      .def_property_readonly("degree", &MonodromySequence::degree)
      .def_property_readonly("length", &MonodromySequence::length)
      .def("pairs", &pairs_of)
      .def("relabeled", &MonodromySequence::relabeled)
      .def("__len__", &MonodromySequence::length)
      .def(py::self == py::self)
      .def("__hash__", [](const MonodromySequence& s) { return MonodromySequenceHash{}(s); })
      .def("__repr__", &MonodromySequence::to_string);

  py::class_<BraidWord>(m, "BraidWord")
      .def(py::init<int, std::vector<int>>(), py::arg("strands"), py::arg("letters"))
      .def_property_readonly("strands", &BraidWord::strands)
      .def_property_readonly("letters", &BraidWord::letters)
      .def("inverse", &BraidWord::inverse)
      .def("reduced", &BraidWord::reduced)
      .def("power", &BraidWord::power)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__len__", &BraidWord::size)
      .def("__repr__", &BraidWord::to_string);

  py::class_<CurveRef>(m, "Curve")
      .def(py::init([](int base, const BraidWord& w) { return CurveRef{base, w}; }),
           py::arg("base"), py::arg("word"))
      .def_static("standard", &CurveRef::standard)
      .def_static("alpha", py::overload_cast<int, int, int>(&CurveRef::alpha))
      .def_static("alpha", py::overload_cast<int, int, int, int>(&CurveRef::alpha))
      .def("transported", &CurveRef::transported)
      .def_readonly("base", &CurveRef::base)
      .def_readonly("word", &CurveRef::word)
      .def(py::self == py::self);

  py::class_<IntervalRef>(m, "Interval")
      .def(py::init([](int base, const BraidWord& w) { return IntervalRef{base, w}; }),
           py::arg("base"), py::arg("word"))
      .def_static("x", py::overload_cast<int, int>(&IntervalRef::x))
      .def_static("x", py::overload_cast<int, int, int>(&IntervalRef::x))
      .def_static("xhat", py::overload_cast<int, int, int>(&IntervalRef::xhat))
      .def_static("xhat", py::overload_cast<int, int, int, int>(&IntervalRef::xhat))
      .def("transported", &IntervalRef::transported)
      .def_readonly("base", &IntervalRef::base)
      .def_readonly("word", &IntervalRef::word)
      .def(py::self == py::self);

  m.def("total_monodromy", &total_monodromy);
  m.def("omega_class", &omega_class);
  m.def("is_connected", &is_connected);
  m.def("is_disk", &is_disk);
  m.def("is_equivalent", &is_equivalent);
  m.def("is_realizable", &is_realizable);
  m.def("canonical_target", &canonical_target);
  m.def("components", [](const MonodromySequence& s) { return signature_list(components(s)); });
  m.def("surface_invariants", [](const MonodromySequence& s) {
    auto inv = surface_invariants(s);
    py::dict d;
    d["euler"] = inv.euler;
    d["boundary"] = inv.boundary;
    py::list comps;
    for (const auto& c : inv.components) {
      py::dict cd;
      cd["sheets"] = c.sheets;
      cd["euler"] = c.euler;
      cd["boundary"] = c.boundary;
      cd["genus"] = c.genus;
      comps.append(cd);
    }
    d["components"] = comps;
    return d;
  });

  m.def("act", &act);
  m.def("elementary_move", [](const MonodromySequence& s, int i, bool inverse) {
    return elementary_move(s, i, inverse ? MoveDirection::inverse : MoveDirection::forward);
  }, py::arg("s"), py::arg("i"), py::arg("inverse") = false);
  m.def("canonicalize", [](const MonodromySequence& s) {
    auto r = canonicalize(s);
    py::dict d;
    d["relabel"] = r.relabel;
    d["moves"] = move_letters(r.moves);
    d["braid"] = to_braid(s.length() == 0 ? 1 : s.length(), r.moves);
    d["canonical"] = r.canonical;
    return d;
  });

  m.def("is_liftable", &is_liftable);
  m.def("interval_braid", &interval_braid);
  m.def("interval_power", &interval_power);
  m.def("interval_type", &interval_type);
  m.def("theorem_c_generators", &theorem_c_generators);
  m.def("curve_monodromy", &curve_monodromy);
  m.def("is_regular_curve", &is_regular_curve);
  m.def("carries_curve", &carries_curve);
  m.def("systems_liftable_equivalent", &systems_liftable_equivalent);

  m.def("restrict", [](const MonodromySequence& s, std::vector<int> indices, const std::string& base) {
    if (base != "start" && base != "end") throw InvalidInput("base must be 'start' or 'end'");
    auto spec = RestrictionSpec::make(std::move(indices),
                                      base == "start" ? BasePoint::start : BasePoint::end);
    return restrict(s, spec);
  }, py::arg("s"), py::arg("indices"), py::arg("base") = "start");

  m.def("index_bound", &index_bound);
  m.def("stabilizer_index", &stabilizer_index, py::arg("s"), py::arg("cap") = 0);
  m.def("orbit", [](const MonodromySequence& s, std::size_t cap) {
    auto table = hurwitz_orbit(s, cap);
    return table.elements();
  }, py::arg("s"), py::arg("cap") = 0);
  m.def("schreier_generators",
        py::overload_cast<const MonodromySequence&, std::size_t>(&schreier_generators),
        py::arg("s"), py::arg("cap") = 0);
  m.def("classify_all", [](int degree, int length, std::size_t cap) {
    auto c = classify_all(degree, length, cap);
    py::dict d;
    d["degree"] = c.degree;
    d["length"] = c.length;
    d["total"] = c.total;
    d["connected"] = c.connected;
    py::list classes;
    for (const auto& k : c.classes) {
      py::dict kd;
      kd["representative"] = k.representative;
      kd["count"] = k.count;
      kd["omega"] = k.omega;
      kd["connected"] = k.connected;
      classes.append(kd);
    }
    d["classes"] = classes;
    return d;
  }, py::arg("degree"), py::arg("length"), py::arg("cap") = 0);

  m.def("todd_coxeter", [](int n, const std::vector<BraidWord>& words, std::size_t max_cosets) {
    return todd_coxeter(n, words, max_cosets).index;
  }, py::arg("n"), py::arg("words"), py::arg("max_cosets") = 100000);
  m.def("verify_theorem_c", [](int n, std::size_t max_cosets) {
    auto r = verify_theorem_c(n, max_cosets);
    py::dict d;
    d["n"] = r.n;
    d["generator_count"] = r.generator_count;
    d["generators_liftable"] = r.generators_liftable;
    d["orbit_index"] = r.orbit_index;
    d["tc_index"] = r.tc_index ? py::cast(*r.tc_index) : py::none();
    d["pass"] = r.pass;
    return d;
  }, py::arg("n"), py::arg("max_cosets") = 0);
}
