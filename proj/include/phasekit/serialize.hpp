// JSON and CSV forms of states, witness/GHZ/CHSH reports and traces.
// These are the wire formats of the command-line tool; outputs are
// deterministic for fixed inputs.

#pragma once

#include "phasekit/atomlattice.hpp"
#include "phasekit/dynamics.hpp"
#include "phasekit/nonlocality.hpp"

#include "json.hpp"  // vendored nlohmann::json

#include <iosfwd>

namespace phasekit::serialize {

using json = nlohmann::json;

// States serialize as { "basis": [[factor…]…], "amplitudes": [[re, im]…] }
// where a factor is {"atom":"e"|"g"}, {"photon":n}, {"spin":k} or {"level":m}.
json label_to_json(const BasisLabel& label);
BasisLabel label_from_json(const json& j);

json state_to_json(const StateVector& s);
StateVector state_from_json(const json& j);

json witness_to_json(const atomlattice::WitnessReport& report);

json eigencheck_to_json(const nonlocality::PauliWord& word,
                        const nonlocality::EigencheckResult& result);
json constraints_to_json(const std::vector<nonlocality::ClassicalConstraint>& constraints);
json search_to_json(const nonlocality::SearchResult& result);
json chsh_to_json(const nonlocality::ChshSettings& settings,
                  const nonlocality::ChshResult& result);

/// Columns: t, P_plus, P_minus, P_ph, norm, N_expect (12 significant digits).
void trace_to_csv(const dynamics::Trace& trace, std::ostream& out);
json trace_to_json(const dynamics::Trace& trace);

void overlap_scan_to_csv(const dynamics::OverlapScan& scan, std::ostream& out);
json overlap_scan_to_json(const dynamics::OverlapScan& scan);

/// "%.12g" rendering used by every CSV emitter.
std::string csv_number(double v);

}  // namespace phasekit::serialize
