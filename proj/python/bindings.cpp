#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ecat/alcoved.hpp"
#include "ecat/errors.hpp"
#include "ecat/geometry.hpp"
#include "ecat/numbers.hpp"
#include "ecat/orbit.hpp"
#include "ecat/paths.hpp"
#include "ecat/permcore.hpp"
#include "ecat/serialize.hpp"

namespace py = pybind11;

// Exact counts cross the boundary as Python ints.
namespace pybind11::detail {
template <>
struct type_caster<ecat::ExactCount> {
  PYBIND11_TYPE_CASTER(ecat::ExactCount, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    value = ecat::ExactCount(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const ecat::ExactCount& v, return_value_policy, handle) {
    return PyLong_FromString(v.str().c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

namespace {

py::object to_python(const ecat::Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

ecat::Json from_python(const py::handle& obj) {
  return ecat::Json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

ecat::Permutation perm(const std::vector<int>& word) { return ecat::Permutation(word); }

std::vector<int> word_of(const ecat::Permutation& w) { return {w.word().begin(), w.word().end()}; }

ecat::EnumerationOptions enumeration(int threads, int cap) { return {threads, cap}; }

}  // namespace

PYBIND11_MODULE(_ecat, m) {
  m.doc() = "Exact Eulerian-Catalan enumeration core";

  static py::exception<ecat::ScaleCapExceeded> scale_cap(m, "ScaleCapExceeded", PyExc_RuntimeError);
  static py::exception<ecat::VerificationFailure> verification(m, "VerificationFailure", PyExc_AssertionError);
  static py::exception<ecat::DegeneratePolytope> degenerate(m, "DegeneratePolytope", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ecat::ScaleCapExceeded& e) {
      scale_cap(e.what());
    } catch (const ecat::VerificationFailure& e) {
      verification(e.what());
    } catch (const ecat::DegeneratePolytope& e) {
      degenerate(e.what());
    }
  });

  // numbers
  m.def("eulerian", &ecat::eulerian, py::arg("m"), py::arg("n"));
  m.def("eulerian_catalan", &ecat::eulerian_catalan, py::arg("n"));
  m.def("fuss_eulerian_catalan", &ecat::fuss_eulerian_catalan, py::arg("k"), py::arg("n"));
  m.def("catalan", &ecat::catalan, py::arg("n"));

  // permcore
  m.def("descent_positions", [](const std::vector<int>& w) { return ecat::descent_positions(perm(w)); });
  m.def("cyclic_descent_positions", [](const std::vector<int>& w) { return ecat::cyclic_descent_positions(perm(w)); });
  m.def("ad_vector", [](const std::vector<int>& w) { return ecat::ad_vector(perm(w)).to_string(); });
  m.def("complement", [](const std::vector<int>& w) { return word_of(ecat::complement(perm(w))); });
  m.def("cyclic_shift", [](const std::vector<int>& w, int r) { return word_of(ecat::cyclic_shift(perm(w), r)); },
        py::arg("w"), py::arg("r"));
  m.def(
      "enumerate_by_descent_count",
      [](int size, int d) {
        std::vector<std::vector<int>> out;
        for (const auto& w : ecat::enumerate_by_descent_count(size, d)) out.push_back(word_of(w));
        return out;
      },
      py::arg("m"), py::arg("d"));

  // paths
  m.def("path_from_perm", [](const std::vector<int>& w) { return ecat::path_from_perm(perm(w)).to_string(); });
  m.def("is_k_ballot", [](const std::string& word, int k) { return ecat::is_k_ballot(ecat::BinaryWord::parse(word), k); },
        py::arg("word"), py::arg("k") = 1);
  m.def("is_dyck_permutation", [](const std::vector<int>& w, int k) { return ecat::is_dyck_permutation(perm(w), k); },
        py::arg("w"), py::arg("k") = 1);
  m.def("exceedance", [](const std::string& path) { return ecat::exceedance(ecat::LatticePath::parse(path)); });
  m.def("exceedance_positions",
        [](const std::string& path) { return ecat::exceedance_positions(ecat::LatticePath::parse(path)); });
  m.def("h_step_vector", [](const std::string& path) { return ecat::h_step_vector(ecat::LatticePath::parse(path)).counts; });
  m.def("path_from_h_vector", [](const std::vector<int>& c) { return ecat::path_from_h_vector({c}).to_string(); });
  m.def("chung_feller_orbit", [](const std::string& path) {
    std::vector<std::string> out;
    for (const auto& p : ecat::chung_feller_orbit(ecat::LatticePath::parse(path))) out.push_back(p.to_string());
    return out;
  });

  // orbit
  m.def("analyze_orbit", [](const std::vector<int>& w) { return to_python(ecat::to_json(ecat::analyze_orbit(perm(w)))); });
  m.def(
      "equidistribution_census",
      [](int n, int threads, int cap, bool orbit_mode) {
        return ecat::equidistribution_census(
            n, enumeration(threads, cap),
            orbit_mode ? ecat::CensusMode::OrbitRepresentatives : ecat::CensusMode::Streaming);
      },
      py::arg("n"), py::arg("threads") = 1, py::arg("cap") = 11, py::arg("orbit_mode") = false);
  m.def(
      "count_dyck_permutations",
      [](int n, int k, int threads, int cap) { return ecat::count_dyck_permutations(n, k, enumeration(threads, cap)); },
      py::arg("n"), py::arg("k") = 2, py::arg("threads") = 1, py::arg("cap") = 11);
  m.def("dyck_to_s2n_bijection", [](const std::vector<int>& w) { return word_of(ecat::dyck_to_s2n_bijection(perm(w))); });

  // alcoved
  m.def("spec_for_hypersimplex", [](int k, int n) { return to_python(ecat::to_json(ecat::spec_for_hypersimplex(k, n))); });
  m.def("spec_for_Pkn", [](int k, int n) { return to_python(ecat::to_json(ecat::spec_for_Pkn(k, n))); });
  m.def("spec_for_P2n_flipped",
        [](int n, const std::vector<int>& t) { return to_python(ecat::to_json(ecat::spec_for_P2n_flipped(n, t))); });
  m.def("spec_for_Pkni", [](int k, int n, int i) {
    const auto piece = ecat::spec_for_Pkni(k, n, i);
    py::dict out;
    out["spec"] = to_python(ecat::to_json(piece.spec));
    out["rotation"] = piece.rotation;
    return out;
  });
  m.def(
      "w_set_count",
      [](const py::dict& spec, int threads, int cap) {
        return ecat::w_set_count(ecat::alcoved_spec_from_json(from_python(spec)), enumeration(threads, cap));
      },
      py::arg("spec"), py::arg("threads") = 1, py::arg("cap") = 11);
  m.def(
      "exceedance_position_census",
      [](int n, int threads, int cap) {
        py::dict out;
        for (const auto& [t, count] : ecat::exceedance_position_census(n, enumeration(threads, cap))) {
          out[py::tuple(py::cast(t))] = py::cast(count);
        }
        return out;
      },
      py::arg("n"), py::arg("threads") = 1, py::arg("cap") = 11);

  // geometry
  m.def(
      "count_dilated_lattice_points",
      [](const py::dict& spec, long t) {
        return ecat::count_dilated_lattice_points(ecat::alcoved_spec_from_json(from_python(spec)), t);
      },
      py::arg("spec"), py::arg("t"));
  m.def(
      "ehrhart_volume",
      [](const py::dict& spec, int threads, int max_ambient) {
        return to_python(ecat::to_json(
            ecat::ehrhart_volume(ecat::alcoved_spec_from_json(from_python(spec)), {threads, max_ambient})));
      },
      py::arg("spec"), py::arg("threads") = 1, py::arg("max_ambient") = 10);

  // verification reports
  m.def(
      "verify_equidistribution",
      [](int n, int threads) { return to_python(ecat::to_json(ecat::verify_equidistribution(n, enumeration(threads, 11)))); },
      py::arg("n"), py::arg("threads") = 1);
  m.def(
      "verify_subdivision",
      [](int k, int n, int threads) { return to_python(ecat::to_json(ecat::verify_subdivision(k, n, {threads, 10}))); },
      py::arg("k"), py::arg("n"), py::arg("threads") = 1);
  m.def(
      "verify_alcoved_vs_dyck",
      [](int k, int n, int threads) {
        return to_python(ecat::to_json(ecat::verify_alcoved_vs_dyck(k, n, enumeration(threads, 11))));
      },
      py::arg("k"), py::arg("n"), py::arg("threads") = 1);
  m.def(
      "verify_census_vs_volumes",
      [](int n, int threads) {
        return to_python(ecat::to_json(ecat::verify_census_vs_volumes(n, enumeration(threads, 11), {threads, 10})));
      },
      py::arg("n"), py::arg("threads") = 1);
}
