// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nonne/bounds.hpp"
#include "nonne/eisenstein.hpp"
#include "nonne/error.hpp"
#include "nonne/heilbronn.hpp"

namespace py = pybind11;
using namespace nonne;

namespace {

py::object char_value(CharValue v) {
  if (v.is_zero()) return py::none();
  return py::int_(v.exponent());
}

EngineChoice engine_from(const std::string& name) {
  const auto choice = parse_engine_choice(name);
  if (!choice) throw py::value_error("engine must be auto, table, powmod or cubic");
  return *choice;
}

}  // namespace

PYBIND11_MODULE(_nonne, m) {
  m.doc() = "Norm-Euclidean sieve for Galois fields of odd prime degree";

  static py::exception<Error> error_type(m, "NonneError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error_type, e.what());
    }
  });

  m.def("is_prime", &is_prime, py::arg("n"));
  m.def("primes_up_to", [](u64 limit) {
    const PrimeList p = sieve_eratosthenes(limit);
    return std::vector<u64>(p.begin(), p.end());
  }, py::arg("limit"));

  py::class_<CharacterSpec>(m, "CharacterSpec")
      .def_readonly("f", &CharacterSpec::f)
      .def_readonly("ell", &CharacterSpec::ell)
      .def_readonly("w", &CharacterSpec::w)
      .def_readonly("n0", &CharacterSpec::n0);
  m.def("make_spec", &make_spec, py::arg("f"), py::arg("ell"));

  py::class_<CharacterEngine>(m, "CharacterEngine")
      .def_property_readonly("modulus", &CharacterEngine::modulus)
      .def_property_readonly("order", &CharacterEngine::order)
      .def_property_readonly("kind", [](const CharacterEngine& e) { return std::string(to_string(e.kind())); })
      .def("eval", [](const CharacterEngine& e, u64 n) { return char_value(e.eval(n)); }, py::arg("n"),
           "Exponent j with chi(n) = zeta^j, or None when f divides n.");
  m.def("character", [](u64 f, std::uint32_t ell, const std::string& engine) {
    const PrimeList primes = sieve_eratosthenes(100'000);
    return make_engine(make_spec(f, ell), engine_from(engine), primes, table_max_from_env());
  }, py::arg("f"), py::arg("ell"), py::arg("engine") = "auto");

  m.def("cubic_symbol", [](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return cubic_symbol({a, b}, {c, d});
  }, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"),
        "Exponent j of ((a + b w)/(c + d w))_3 = w^j.");

  py::class_<Witness>(m, "Witness")
      .def(py::init([](u64 f, u64 q1, u64 q2, u64 r, std::uint32_t ell) { return Witness{f, ell, q1, q2, r}; }),
           py::arg("f"), py::arg("q1"), py::arg("q2"), py::arg("r"), py::arg("ell") = 3)
      .def_readonly("f", &Witness::f)
      .def_readonly("ell", &Witness::ell)
      .def_readonly("q1", &Witness::q1)
      .def_readonly("q2", &Witness::q2)
      .def_readonly("r", &Witness::r)
      .def("__str__", &format_witness)
      .def("__repr__", [](const Witness& w) { return "Witness(" + format_witness(w) + ")"; })
      .def("__eq__", [](const Witness& a, const Witness& b) { return a == b; });
  m.def("parse_witness", &parse_witness, py::arg("line"), py::arg("ell") = 3);
  m.def("validate_witness", [](const Witness& w) {
    const CharacterSpec spec = make_spec(w.f, w.ell);
    const auto engine = w.ell == 3 ? build_cubic_engine(spec) : build_powmod_engine(spec);
    return validate_witness(w, *engine);
  }, py::arg("witness"));

  py::class_<SieveReport>(m, "SieveReport")
      .def_readonly("ell", &SieveReport::ell)
      .def_readonly("survivors", &SieveReport::survivors)
      .def_readonly("conductors", &SieveReport::conductors)
      .def_readonly("eliminated", &SieveReport::eliminated)
      .def_readonly("evals", &SieveReport::evals)
      .def_readonly("seconds", &SieveReport::seconds)
      .def_property_readonly("witnesses", [](const SieveReport& r) {
        std::vector<Witness> out;
        for (const auto& o : r.outcomes) {
          if (o.eliminated()) out.push_back(*o.witness);
        }
        return out;
      });
  m.def("sieve", [](std::uint32_t ell, u64 lo, u64 hi, const std::string& engine, unsigned workers,
                    bool witnesses) {
    SieveOptions opt;
    opt.engine = engine_from(engine);
    opt.workers = workers;
    opt.keep_outcomes = witnesses;
    opt.table_max = table_max_from_env();
    py::gil_scoped_release release;
    return sieve_range(ell, lo, hi, opt);
  }, py::arg("ell"), py::arg("lo"), py::arg("hi"), py::arg("engine") = "auto", py::arg("workers") = 1,
        py::arg("witnesses") = false);

  auto b = m.def_submodule("bounds", "Explicit constants");
  b.def("burgess_C", [](int r) { return bounds::burgess_C({.r = r}).value(); }, py::arg("r"));
  b.def("d1", [](int k) { return bounds::d1(k).value(); }, py::arg("k"));
  b.def("d2", [](int k) { return bounds::d2(k).value(); }, py::arg("k"));
  b.def("e", [](int k) { return bounds::e_constant(k).value(); }, py::arg("k"));
  b.def("e_prime", [](int k) { return bounds::eprime_constant(k).value(); }, py::arg("k"));
  b.def("cl_exponent", [](std::uint32_t ell) { return bounds::cl_bound(ell).exponent; }, py::arg("ell"));
  b.def("special_threshold", &bounds::special_threshold, py::arg("case"), py::arg("ell"));
  b.def("pisum_max", [](u64 x) { return bounds::verify_pisum(x).max_ratio; }, py::arg("x"));
}
