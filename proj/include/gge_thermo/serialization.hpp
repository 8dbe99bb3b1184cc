#pragma once

// JSON wire formats. Operators and states travel as
//   {"dim": d, "re": [[...]], "im": [[...]]}
// with row-major entry tables; doubles are emitted in shortest round-trip
// form, so a dump/parse cycle reproduces matrices bit for bit.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gge_thermo/landauer.hpp"
#include "gge_thermo/maxent.hpp"
#include "gge_thermo/operators.hpp"
#include "gge_thermo/passivity.hpp"
#include "gge_thermo/thermal_ops.hpp"

namespace gge_thermo {

using nlohmann::json;

inline json matrix_to_json(const Matrix& m) {
  json re = json::array(), im = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row_re = json::array(), row_im = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row_re.push_back(m(i, j).real());
      row_im.push_back(m(i, j).imag());
    }
    re.push_back(std::move(row_re));
    im.push_back(std::move(row_im));
  }
  return json{{"dim", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

inline Matrix matrix_from_json(const json& j) {
  if (!j.contains("dim") || !j.contains("re") || !j.contains("im"))
    throw invalid_operator_error("operator JSON needs fields dim, re, im");
  const int d = j.at("dim").get<int>();
  if (d <= 0) throw invalid_operator_error("operator JSON has non-positive dim");
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (static_cast<int>(re.size()) != d || static_cast<int>(im.size()) != d)
    throw invalid_operator_error("operator JSON row count does not match dim");
  Matrix m(d, d);
  for (int i = 0; i < d; ++i) {
    if (static_cast<int>(re[i].size()) != d || static_cast<int>(im[i].size()) != d)
      throw invalid_operator_error("operator JSON column count does not match dim");
    for (int jj = 0; jj < d; ++jj)
      m(i, jj) = Complex(re[i][jj].get<double>(), im[i][jj].get<double>());
  }
  return m;
}

inline json to_json(const HermitianOperator& op) { return matrix_to_json(op.matrix()); }
inline json to_json(const DensityMatrix& rho) { return matrix_to_json(rho.matrix()); }

inline HermitianOperator hermitian_from_json(const json& j) {
  return HermitianOperator(matrix_from_json(j));
}

inline DensityMatrix state_from_json(const json& j) {
  return DensityMatrix(matrix_from_json(j));
}

inline json to_json(const ChargeSet& cs) {
  json charges = json::array();
  for (const auto& c : cs.charges()) charges.push_back(to_json(c));
  return json{{"charges", std::move(charges)}, {"multipliers", cs.multipliers()}};
}

inline ChargeSet charge_set_from_json(const json& j) {
  if (!j.contains("charges") || !j.contains("multipliers"))
    throw invalid_operator_error("charge set JSON needs fields charges, multipliers");
  std::vector<HermitianOperator> charges;
  for (const auto& cj : j.at("charges")) charges.push_back(hermitian_from_json(cj));
  return ChargeSet(std::move(charges), j.at("multipliers").get<std::vector<double>>());
}

inline json to_json(const GGESolution& sol) {
  return json{{"multipliers", sol.multipliers},
              {"achieved", sol.achieved},
              {"residual", sol.residual},
              {"iterations", sol.iterations},
              {"converged", sol.converged},
              {"log_partition", sol.log_partition},
              {"state", to_json(sol.state)}};
}

inline json to_json(const LandauerReport& r) {
  return json{{"dS_S", r.dS_S},
              {"dC", r.dC},
              {"mutual_info", r.mutual_info},
              {"rel_entropy_bath", r.rel_entropy_bath},
              {"lhs", r.lhs},
              {"slack", r.slack},
              {"identity_residual", r.identity_residual}};
}

inline json to_json(const ErgotropyResult& r, double commutator, int copies) {
  return json{{"value", r.value},
              {"passive", r.passive},
              {"optimal_final_expectation", r.optimal_final_expectation},
              {"commutator_norm", commutator},
              {"n", copies},
              {"witness_permutation", r.witness_permutation}};
}

inline json to_json(const ProtocolTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps)
    steps.push_back(json{{"label", s.label},
                         {"level_value", s.level_value},
                         {"population_moved", s.population_moved},
                         {"dH", s.dH},
                         {"dQ", s.dQ}});
  return json{{"steps", std::move(steps)},
              {"totals", json{{"dH_tot", t.dH_total}, {"dQ_tot", t.dQ_total}}},
              {"final_state", to_json(t.final_state)},
              {"parameters", json{{"beta", t.parameters.beta},
                                  {"alpha", t.parameters.alpha},
                                  {"eps_swap", t.parameters.eps_swap},
                                  {"n_steps", t.parameters.n_steps},
                                  {"tail_tol", t.parameters.tail_tol},
                                  {"truncation_level", t.parameters.truncation_level}}}};
}

// Bundle format: {"system": ChargeSet, "bath": ChargeSet,
//                 "unitary": operator, "traced_out": [indices]}.
inline ThermalOpSpec thermal_op_spec_from_json(const json& j) {
  for (const char* field : {"system", "bath", "unitary"})
    if (!j.contains(field))
      throw invalid_operator_error(std::string("thermal operation JSON needs field ") + field);
  std::vector<int> traced = {1};
  if (j.contains("traced_out")) traced = j.at("traced_out").get<std::vector<int>>();
  return ThermalOpSpec(charge_set_from_json(j.at("system")), charge_set_from_json(j.at("bath")),
                       matrix_from_json(j.at("unitary")), std::move(traced));
}

// CSV cell with 17 significant digits (full double round-trip precision).
inline std::string csv_double(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

inline std::string tradeoff_curve_csv(const std::vector<TradeoffPoint>& curve) {
  std::ostringstream out;
  out << "epsilon,dH,dQ,identity_residual\n";
  for (const auto& p : curve)
    out << csv_double(p.eps) << ',' << csv_double(p.dH) << ',' << csv_double(p.dQ) << ','
        << csv_double(p.identity_residual) << '\n';
  return out.str();
}

}  // namespace gge_thermo
