#include "atgrid/jsonio.hpp"

namespace atgrid {

using nlohmann::json;

json to_json(const Graph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.first, e.second});
    return {{"n", g.vertex_count()}, {"edges", edges}};
}

json to_json(const EisensteinInt& x) {
    return {{"a", x.a()}, {"b", x.b()}, {"text", x.to_string()}};
}

json to_json(const CoefficientTable& table) {
    json out = json::array();
    for (const auto& [key, value] : table.entries())
        out.push_back({{"exponents", key}, {"coefficient", value}});
    return out;
}

json to_json(const AlonTarsiResult& result) {
    return {{"alon_tarsi_number", result.number},
            {"witness", result.witness},
            {"coefficient", result.coefficient}};
}

json to_json(const Orientation& d) {
    json arcs = json::array();
    for (int e = 0; e < d.graph().edge_count(); ++e) arcs.push_back({d.tail(e), d.head(e)});
    return {{"n", d.graph().vertex_count()}, {"arcs", arcs}};
}

json to_json(const CirculationCount& counts) {
    return {{"even", counts.even}, {"odd", counts.odd}, {"difference", counts.difference()}};
}

json to_json(const CorrespondenceReport& report) {
    return {{"indegrees", report.indegrees}, {"coefficient", report.coefficient},
            {"sign", report.sign},           {"even", report.counts.even},
            {"odd", report.counts.odd},      {"matches", report.matches}};
}

json to_json(const UpperBoundCertificate& cert) {
    json out = {{"orientation", to_json(cert.orientation)},
                {"indegrees", cert.indegrees},
                {"coefficient", cert.coefficient},
                {"sign", cert.sign}};
    if (cert.counts) {
        out["even"] = cert.counts->even;
        out["odd"] = cert.counts->odd;
    }
    return out;
}

json to_json(const TorusCertificate& cert) {
    json out = {{"m", cert.m},
                {"k", cert.n},
                {"layer", cert.layer},
                {"power", cert.power},
                {"at", cert.at},
                {"sigma", cert.sigma},
                {"conclusion",
                 cert.kind == CertificateKind::theorem_cited ? "cited"
                                                             : "AT=" + std::to_string(cert.at)},
                {"certificate", certificate_kind_name(cert.kind)},
                {"note", cert.note}};
    if (cert.dim) out["dim"] = *cert.dim;
    if (cert.trace) out["trace"] = {{"a", cert.trace->a()}, {"b", cert.trace->b()}};
    if (cert.antihermitian) out["antihermitian"] = *cert.antihermitian;
    if (cert.witness) out["witness"] = to_json(*cert.witness);
    return out;
}

json to_json(const ChoosabilityVerdict& verdict) {
    json out = {{"choosable", verdict.choosable},
                {"universe", verdict.universe_size},
                {"complete", verdict.complete},
                {"assignments", verdict.assignments_total}};
    if (verdict.witness) out["witness"] = {{"lists", *verdict.witness}, {"colorable", false}};
    return out;
}

}  // namespace atgrid
