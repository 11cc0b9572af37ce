#include "phasekit/serialize.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace phasekit::serialize {

namespace {

json factor_to_json(const FactorLabel& f) {
  switch (f.kind) {
    case FactorKind::Atom:
      return {{"atom", f.value == 0 ? "e" : "g"}};
    case FactorKind::Photon:
      return {{"photon", f.value}};
    case FactorKind::Spin:
      return {{"spin", f.value}};
    case FactorKind::Level:
      return {{"level", f.value}};
  }
  throw std::logic_error("bad factor kind");
}

FactorLabel factor_from_json(const json& j) {
  if (!j.is_object() || j.size() != 1) {
    throw std::invalid_argument("factor must be a one-key object");
  }
  if (j.contains("atom")) {
    const std::string v = j.at("atom").get<std::string>();
    if (v == "e") return atom_excited();
    if (v == "g") return atom_ground();
    throw std::invalid_argument("atom factor must be \"e\" or \"g\"");
  }
  if (j.contains("photon")) return photon_count(j.at("photon").get<int>());
  if (j.contains("spin")) return spin_index(j.at("spin").get<int>());
  if (j.contains("level")) return level_tag(j.at("level").get<int>());
  throw std::invalid_argument("unknown factor kind in label");
}

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("amplitude must be an [re, im] pair");
  }
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

}  // namespace

json label_to_json(const BasisLabel& label) {
  json out = json::array();
  for (const FactorLabel& f : label.factors()) out.push_back(factor_to_json(f));
  return out;
}

BasisLabel label_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("label must be a factor array");
  std::vector<FactorLabel> fs;
  fs.reserve(j.size());
  for (const json& f : j) fs.push_back(factor_from_json(f));
  return BasisLabel(std::move(fs));
}

json state_to_json(const StateVector& s) {
  json basis = json::array();
  json amps = json::array();
  for (int i = 0; i < s.dimension(); ++i) {
    basis.push_back(label_to_json(s.basis().label(i)));
    amps.push_back(complex_to_json(s.amplitude(i)));
  }
  return {{"basis", basis}, {"amplitudes", amps}};
}

StateVector state_from_json(const json& j) {
  if (!j.contains("basis") || !j.contains("amplitudes")) {
    throw std::invalid_argument("state needs \"basis\" and \"amplitudes\"");
  }
  const json& basis = j.at("basis");
  const json& amps = j.at("amplitudes");
  if (!basis.is_array() || !amps.is_array() || basis.size() != amps.size()) {
    throw std::invalid_argument("basis and amplitudes must be arrays of equal length");
  }
  std::vector<BasisLabel> labels;
  labels.reserve(basis.size());
  for (const json& l : basis) labels.push_back(label_from_json(l));
  Vector v(static_cast<Eigen::Index>(amps.size()));
  for (std::size_t i = 0; i < amps.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = complex_from_json(amps.at(i));
  }
  return StateVector(Basis(std::move(labels)), std::move(v));
}

json witness_to_json(const atomlattice::WitnessReport& report) {
  json expectations = json::array();
  for (int a = 0; a < report.atom_count; ++a) {
    const auto& row = report.expectations[static_cast<std::size_t>(a)];
    expectations.push_back({{"atom", a + 1},
                            {"sigma1", row[0]},
                            {"sigma2", row[1]},
                            {"sigma3", row[2]},
                            {"entropy", report.entropies[static_cast<std::size_t>(a)]}});
  }
  return {{"atom_count", report.atom_count},
          {"expectations", expectations},
          {"max_abs_expectation", report.max_abs_expectation},
          {"tolerance", report.tolerance},
          {"verdict", report.passes ? "passes-criterion" : "fails-criterion"},
          {"min_entropy", report.min_entropy}};
}

json eigencheck_to_json(const nonlocality::PauliWord& word,
                        const nonlocality::EigencheckResult& result) {
  json out = {{"word", word.str()}, {"residual", result.residual}};
  if (result.eigenvalue) {
    out["eigenvalue"] = *result.eigenvalue;
  } else {
    out["eigenvalue"] = nullptr;
  }
  return out;
}

json constraints_to_json(const std::vector<nonlocality::ClassicalConstraint>& constraints) {
  json out = json::array();
  for (const auto& c : constraints) {
    out.push_back({{"word", c.word.str()}, {"sign", c.required_sign}});
  }
  return out;
}

json search_to_json(const nonlocality::SearchResult& result) {
  json out = {{"satisfiable", result.satisfiable},
              {"assignments_checked", result.assignments_checked}};
  if (result.satisfiable) out["assignment"] = result.assignment;
  return out;
}

json chsh_to_json(const nonlocality::ChshSettings& settings,
                  const nonlocality::ChshResult& result) {
  json variants = json::array();
  for (int v = 0; v < 4; ++v) {
    variants.push_back({{"minus_on", nonlocality::kChshVariantNames[static_cast<std::size_t>(v)]},
                        {"value", result.variant_values[static_cast<std::size_t>(v)]}});
  }
  return {{"settings",
           {{"theta_a", settings.theta_a},
            {"theta_a_prime", settings.theta_a_prime},
            {"theta_b", settings.theta_b},
            {"theta_b_prime", settings.theta_b_prime}}},
          {"correlators",
           {{"ab", result.correlators[0]},
            {"ab_prime", result.correlators[1]},
            {"a_prime_b", result.correlators[2]},
            {"a_prime_b_prime", result.correlators[3]}}},
          {"variants", variants},
          {"s_max", result.s_max},
          {"best_variant", nonlocality::kChshVariantNames[static_cast<std::size_t>(result.best_variant)]}};
}

std::string csv_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void trace_to_csv(const dynamics::Trace& trace, std::ostream& out) {
  out << "t,P_plus,P_minus,P_ph,norm,N_expect\n";
  for (const auto& rec : trace.records) {
    out << csv_number(rec.t) << ',' << csv_number(rec.p_plus) << ','
        << csv_number(rec.p_minus) << ',' << csv_number(rec.p_photon) << ','
        << csv_number(rec.norm) << ',' << csv_number(rec.excitation) << '\n';
  }
}

json trace_to_json(const dynamics::Trace& trace) {
  json records = json::array();
  const Basis* basis = nullptr;
  for (const auto& rec : trace.records) {
    if (!basis) basis = &rec.state.basis();
    json amps = json::array();
    for (int i = 0; i < rec.state.dimension(); ++i) {
      amps.push_back(complex_to_json(rec.state.amplitude(i)));
    }
    json r = {{"t", rec.t},
              {"amplitudes", amps},
              {"phase_probs", rec.phase_probs},
              {"P_plus", rec.p_plus},
              {"P_minus", rec.p_minus},
              {"P_ph", rec.p_photon},
              {"norm", rec.norm},
              {"N_expect", rec.excitation}};
    if (rec.analytic) {
      r["analytic"] = {{"C_minus", complex_to_json(rec.analytic->c_minus)},
                       {"C_plus", complex_to_json(rec.analytic->c_plus)},
                       {"C_photon", complex_to_json(rec.analytic->c_photon)},
                       {"deviation", rec.analytic_deviation}};
    }
    records.push_back(std::move(r));
  }
  json basis_json = json::array();
  if (basis) {
    for (int i = 0; i < basis->dimension(); ++i) basis_json.push_back(label_to_json(basis->label(i)));
  }
  json out = {{"basis", basis_json}, {"records", records}};
  if (!std::isnan(trace.max_analytic_deviation)) {
    out["max_analytic_deviation"] = trace.max_analytic_deviation;
  }
  return out;
}

void overlap_scan_to_csv(const dynamics::OverlapScan& scan, std::ostream& out) {
  out << "t,P_subspace";
  for (std::size_t k = 0; k < scan.max_phase.size(); ++k) out << ",P_phase" << k;
  out << '\n';
  for (std::size_t i = 0; i < scan.times.size(); ++i) {
    out << csv_number(scan.times[i]) << ',' << csv_number(scan.subspace_prob[i]);
    for (double p : scan.phase_probs[i]) out << ',' << csv_number(p);
    out << '\n';
  }
}

json overlap_scan_to_json(const dynamics::OverlapScan& scan) {
  return {{"times", scan.times},
          {"subspace_prob", scan.subspace_prob},
          {"phase_probs", scan.phase_probs},
          {"max_subspace", scan.max_subspace},
          {"argmax_time", scan.argmax_time},
          {"max_phase", scan.max_phase}};
}

}  // namespace phasekit::serialize
