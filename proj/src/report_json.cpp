#include "specgraph/report_json.hpp"

#include <sstream>

namespace specgraph {

using nlohmann::json;

json to_json(const GraphParams& p) {
    return json{{"schema_version", kSchemaVersion},
                {"n", p.n},
                {"m", p.m},
                {"delta_max", p.delta_max},
                {"delta_min", p.delta_min},
                {"diameter", p.diameter},
                {"edge_connectivity", p.edge_connectivity},
                {"independence_number", p.independence_number},
                {"is_regular", p.is_regular}};
}

json to_json(const SpectralData& sd) {
    std::vector<double> x(sd.x.data(), sd.x.data() + sd.x.size());
    return json{{"schema_version", kSchemaVersion},
                {"rho", sd.rho},
                {"x", x},
                {"residual", sd.residual}};
}

json to_json(const KTreeCertificate& cert) {
    return json{{"schema_version", kSchemaVersion},
                {"k", cert.k},
                {"base", cert.base},
                {"order", cert.order},
                {"attachments", cert.attachments}};
}

json to_json(const BoundReport& report) {
    json entries = json::array();
    for (const auto& e : report.entries) {
        json entry{{"name", e.name}, {"applicable", e.applicable}};
        if (e.applicable) {
            entry["value"] = e.value;
            entry["satisfied"] = e.satisfied;
            entry["slack"] = e.slack;
        }
        entries.push_back(std::move(entry));
    }
    json dominance = json::array();
    for (const auto& c : report.dominance)
        dominance.push_back(json{{"left", c.left},
                                 {"right", c.right},
                                 {"condition_met", c.condition_met},
                                 {"difference", c.difference}});
    return json{{"schema_version", kSchemaVersion},
                {"graph6", report.graph6},
                {"params", to_json(report.params)},
                {"rho", report.rho},
                {"gap", report.gap},
                {"bounds", std::move(entries)},
                {"dominance", std::move(dominance)}};
}

json to_json(const VerificationReport& report) {
    auto violations = [](const std::vector<Violation>& list) {
        json out = json::array();
        for (const auto& v : list) out.push_back(json{{"graph6", v.graph6}, {"detail", v.detail}});
        return out;
    };
    json witnesses = json::array();
    for (const auto& w : report.witnesses)
        witnesses.push_back(json{{"graph6", w.graph6}, {"rho", w.rho}, {"note", w.note}});
    json stats = json::object();
    for (const auto& [k, v] : report.stats) stats[k] = v;
    return json{{"schema_version", kSchemaVersion},
                {"suite", report.suite},
                {"universe", report.universe},
                {"instances", report.instances},
                {"passed", report.passed()},
                {"violation_total", report.violation_total},
                {"violations", violations(report.violations)},
                {"premise_total", report.premise_total},
                {"premise_log", violations(report.premise_log)},
                {"witnesses", std::move(witnesses)},
                {"stats", std::move(stats)},
                {"wall_seconds", report.wall_seconds}};
}

std::string verification_csv_header() {
    return "suite,universe,instances,violations,premise_observations,passed,wall_seconds";
}

std::string verification_csv_row(const VerificationReport& r) {
    std::ostringstream out;
    out.precision(6);
    out << r.suite << ",\"" << r.universe << "\"," << r.instances << "," << r.violation_total << ","
        << r.premise_total << "," << (r.passed() ? 1 : 0) << "," << r.wall_seconds;
    return out.str();
}

}  // namespace specgraph
