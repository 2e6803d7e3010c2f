#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "qseq4/correlate.hpp"
#include "qseq4/error.hpp"
#include "qseq4/fouradic.hpp"
#include "qseq4/gaussalg.hpp"

namespace py = pybind11;
using namespace qseq4;

namespace {

py::int_ to_py(const BigInt& v) { return py::int_(py::module_::import("builtins").attr("int")(to_decimal(v))); }

FamilyParams family_from(const std::string& family, std::optional<unsigned> p, std::optional<unsigned> k,
                         std::optional<unsigned> n) {
  const auto need = [&](const std::optional<unsigned>& v, const char* name) {
    if (!v) throw Error(ErrorCode::InvalidFamily, family + " needs " + name);
    return *v;
  };
  FamilyParams out;
  if (family == "twin-prime") {
    out = TwinPrimeParams{need(p, "p")};
  } else if (family == "gmw") {
    const unsigned order = need(k, "k");
    out = GmwParams{order, default_gmw_config(order)};
  } else if (family == "cyclotomic") {
    out = CyclotomicParams{need(n, "n")};
  } else {
    throw Error(ErrorCode::InvalidFamily, "unknown family '" + family + "'");
  }
  validate_family(out);
  return out;
}

ConstructionSpec spec_from(const std::string& family, const std::string& assignment, const std::string& e,
                           std::optional<unsigned> p, std::optional<unsigned> k, std::optional<unsigned> n) {
  return make_spec(family_from(family, p, k, n), parse_assignment(assignment), parse_e(e));
}

py::dict report_dict(const ComplexityReport& r) {
  py::dict d;
  d["s"] = r.s.to_string();
  d["d"] = to_py(r.complexity.d);
  d["c4"] = r.complexity.c4();
  d["rmax2"] = r.rmax2;
  d["verdict"] = verdict_name(r.verdict);
  d["predicted"] = r.prediction.kind == PredictionKind::None ? py::object(py::none()) : to_py(r.prediction.value);
  d["bound"] = r.prediction.kind == PredictionKind::UpperBound;
  return d;
}

}  // namespace

PYBIND11_MODULE(qseq4, m) {
  m.doc() = "Interleaved quaternary sequences and their 4-adic complexity.";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), (std::string(error_code_name(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.def(
      "base_sequences",
      [](const std::string& family, std::optional<unsigned> p, std::optional<unsigned> k, std::optional<unsigned> n) {
        const auto params = family_from(family, p, k, n);
        py::dict out;
        if (kind_of(params) == FamilyKind::Cyclotomic) {
          const auto structure = cyclotomic_structure(std::get<CyclotomicParams>(params).n);
          for (unsigned i = 1; i <= 6; ++i) {
            out[py::str("t" + std::to_string(i))] = cyclo_sequence(structure, i).to_string();
          }
        } else {
          const auto pair = sequence_pair(params);
          out["t0"] = pair.base.to_string();
          out["t1"] = pair.modified.to_string();
        }
        return out;
      },
      py::arg("family"), py::kw_only(), py::arg("p") = py::none(), py::arg("k") = py::none(),
      py::arg("n") = py::none(), "Base binary sequences of a family as 0/1 strings.");

  m.def(
      "build",
      [](const std::string& family, const std::string& assignment, const std::string& e, std::optional<unsigned> p,
         std::optional<unsigned> k, std::optional<unsigned> n) {
        const auto spec = spec_from(family, assignment, e, p, k, n);
        const auto ab = build_ab(spec);
        py::dict out;
        out["a"] = ab.a.to_string();
        out["b"] = ab.b.to_string();
        out["s"] = gray_map(ab.a, ab.b).to_string();
        return out;
      },
      py::arg("family"), py::arg("assignment"), py::arg("e"), py::kw_only(), py::arg("p") = py::none(),
      py::arg("k") = py::none(), py::arg("n") = py::none(), "Interleaved a, b and the quaternary s.");

  m.def(
      "verify",
      [](const std::string& family, const std::string& assignment, const std::string& e, std::optional<unsigned> p,
         std::optional<unsigned> k, std::optional<unsigned> n) {
        return report_dict(verify_theorem(spec_from(family, assignment, e, p, k, n)));
      },
      py::arg("family"), py::arg("assignment"), py::arg("e"), py::kw_only(), py::arg("p") = py::none(),
      py::arg("k") = py::none(), py::arg("n") = py::none(),
      "Build s, compute d and compare with the closed-form prediction.");

  m.def(
      "complexity",
      [](const std::string& s) {
        const auto c = complexity(QuaternarySequence::parse(s));
        py::dict out;
        out["period"] = c.period;
        out["d"] = to_py(c.d);
        out["c4"] = c.c4();
        return out;
      },
      py::arg("s"), "gcd(S(4), 4^N - 1) and the 4-adic complexity of a 0..3 string.");

  m.def(
      "autocorrelation",
      [](const std::string& s) {
        py::list out;
        for (const auto& v : quaternary_autocorr_profile(QuaternarySequence::parse(s))) {
          out.append(py::make_tuple(v.re, v.im));
        }
        return out;
      },
      py::arg("s"), "Periodic autocorrelation profile as (re, im) pairs.");

  m.def(
      "identities",
      [](unsigned n) {
        const auto structure = cyclotomic_structure(n);
        py::list out;
        for (const auto& c : check_identity_suite(structure, gauss_periods(structure))) {
          out.append(py::make_tuple(c.identity, c.gamma, c.mu, c.pass));
        }
        return out;
      },
      py::arg("n"), "Gauss-period identity suite for a prime n = 4f + 1.");
}
