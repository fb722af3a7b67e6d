#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lieflag/cgmb.hpp"
#include "lieflag/error.hpp"
#include "lieflag/jinv.hpp"
#include "lieflag/magictables.hpp"
#include "lieflag/poincare.hpp"
#include "lieflag/qform.hpp"
#include "lieflag/serialize.hpp"
#include "lieflag/verify.hpp"
#include "lieflag/weyl.hpp"

namespace py = pybind11;
using namespace lieflag;

namespace {

// Polynomials cross the boundary as lists of decimal strings; the Python
// layer turns them into ints so that big coefficients stay exact.
std::vector<std::string> coeffs(const IntPoly& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coefficients()) out.push_back(c.str());
  return out;
}

IntPoly poly(const std::vector<std::string>& c) {
  std::vector<BigInt> v;
  for (const auto& s : c) v.emplace_back(s);
  return IntPoly(std::move(v));
}

std::optional<std::vector<std::string>> maybe(const std::optional<IntPoly>& p) {
  if (!p) return std::nullopt;
  return coeffs(*p);
}

FlagVariety variety(const std::string& type, const std::vector<int>& circled) {
  return {CartanType::parse(type), NodeSet(circled)};
}

DiagramAut star_from(const RootSystem& rs, const std::optional<std::vector<int>>& image) {
  if (!image) return opposition_involution(rs);
  return DiagramAut{*image};
}

}  // namespace

PYBIND11_MODULE(_lieflag, m) {
  m.doc() = "Flag varieties, Weyl group cosets and motivic decomposition bookkeeping";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<NotSpecifiedBySource>(m, "NotSpecifiedBySource", base.ptr());

  m.def("weyl_order", [](const std::string& type) { return weyl_order(CartanType::parse(type)).str(); });
  m.def("fundamental_degrees",
        [](const std::string& type) { return fundamental_degrees(RootSystem(CartanType::parse(type))); });
  m.def("root_system_json", [](const std::string& type) {
    return root_system_to_json(RootSystem(CartanType::parse(type))).dump();
  });
  m.def("double_cosets_json",
        [](const std::string& type, const std::vector<int>& left, const std::vector<int>& right,
           const std::optional<std::vector<int>>& star) {
          RootSystem rs(CartanType::parse(type));
          std::optional<DiagramAut> sigma;
          if (star) sigma = DiagramAut{*star};
          return cells_to_json(rs, double_cosets(rs, NodeSet(left), NodeSet(right), sigma)).dump();
        },
        py::arg("type"), py::arg("left"), py::arg("right"), py::arg("star") = py::none());

  m.def("poincare_poly", [](const std::string& type, const std::vector<int>& circled) {
    py::gil_scoped_release release;
    return coeffs(poincare_poly(variety(type, circled)));
  });
  m.def("conormed_poincare", [](const std::string& type, const std::vector<int>& circled) {
    return coeffs(conormed_poincare(variety(type, circled)));
  });
  m.def("dim_flag",
        [](const std::string& type, const std::vector<int>& circled) { return dim_flag(variety(type, circled)); });

  m.def("divides_ring", [](const std::vector<std::string>& p, const std::vector<std::string>& q) {
    return maybe(divides_ring(poly(p), poly(q)));
  });
  m.def("divides_semiring", [](const std::vector<std::string>& p, const std::vector<std::string>& q) {
    return maybe(divides_semiring(poly(p), poly(q)));
  });
  m.def("eval_rational", [](const std::vector<std::vector<std::string>>& num,
                            const std::vector<std::vector<std::string>>& den) {
    std::vector<IntPoly> n, d;
    for (const auto& f : num) n.push_back(poly(f));
    for (const auto& f : den) d.push_back(poly(f));
    try {
      return coeffs(eval_rational(n, d));
    } catch (const InexactDivision& e) {
      throw InvalidArgument(e.what());
    }
  });

  m.def("upper_motive_poly", [](const std::string& group, std::vector<int> values) {
    return coeffs(upper_motive_poly(make_profile(group, std::move(values))));
  });
  m.def("enumerate_admissible", [](const std::string& group) {
    std::vector<std::vector<int>> out;
    for (const auto& p : enumerate_admissible(group).profiles) out.push_back(p.values);
    return out;
  });

  m.def("tate_skeleton",
        [](const std::string& ambient, const std::vector<int>& kernel, const std::vector<int>& circled,
           const std::optional<std::vector<int>>& star) {
          CartanType ct = CartanType::parse(ambient);
          RootSystem rs(ct);
          return tate_skeleton(rs, NodeSet(kernel), NodeSet(circled).complement(ct.rank),
                               star_from(rs, star));
        },
        py::arg("ambient"), py::arg("kernel"), py::arg("circled"), py::arg("star") = py::none());
  m.def("express_residual",
        [](const std::vector<std::string>& residual, const std::vector<std::vector<std::string>>& blocks,
           int min_shift) -> std::optional<std::vector<std::tuple<std::size_t, int, int>>> {
          std::vector<IntPoly> b;
          for (const auto& f : blocks) b.push_back(poly(f));
          auto w = express_residual(poly(residual), b, min_shift);
          if (!w) return std::nullopt;
          std::vector<std::tuple<std::size_t, int, int>> out;
          for (const auto& t : *w) out.emplace_back(t.block, t.shift, t.multiplicity);
          return out;
        },
        py::arg("residual"), py::arg("blocks"), py::arg("min_shift") = 0);

  m.def("af_killing_form_e7", [](bool q_definite, bool o_definite, std::array<int, 3> gamma) {
    return form_to_json(af_killing_form_e7({CompositionAlgebraR::Kind::Quaternion, q_definite},
                                           {CompositionAlgebraR::Kind::Octonion, o_definite}, gamma))
        .dump();
  });

  m.def("magic_square_json", [] {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : Tables::builtin().magic_cells()) cells.push_back(to_json(c));
    return cells.dump();
  });
  m.def("conditions_json",
        [](const std::string& group) { return to_json(Tables::builtin().conditions_for(group)).dump(); });
  m.def("tits_index_json", [](const std::string& rost) {
    return to_json(Tables::builtin().tits_index_for_rost(parse_rost_condition(rost))).dump();
  });

  m.def("run_verify_json",
        [](const std::optional<std::string>& filter) {
          py::gil_scoped_release release;
          return report_to_json(run_verify(filter), false).dump();
        },
        py::arg("filter") = py::none());
}
