#pragma once

#include <json.hpp>

#include "atgrid/choosability.hpp"
#include "atgrid/circulations.hpp"
#include "atgrid/graph.hpp"
#include "atgrid/polycoeff.hpp"
#include "atgrid/transfer.hpp"

namespace atgrid {

nlohmann::json to_json(const Graph& g);
nlohmann::json to_json(const EisensteinInt& x);
nlohmann::json to_json(const CoefficientTable& table);
nlohmann::json to_json(const AlonTarsiResult& result);
nlohmann::json to_json(const Orientation& d);
nlohmann::json to_json(const CirculationCount& counts);
nlohmann::json to_json(const CorrespondenceReport& report);
nlohmann::json to_json(const UpperBoundCertificate& cert);
nlohmann::json to_json(const TorusCertificate& cert);
nlohmann::json to_json(const ChoosabilityVerdict& verdict);

}  // namespace atgrid
