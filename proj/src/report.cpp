#include <heronet/ingest.hpp>
#include <heronet/report.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace heronet {

using nlohmann::json;

Format parseFormat(const std::string &name) {
    if (name == "json")
        return Format::Json;
    if (name == "csv")
        return Format::Csv;
    throw UsageError("unknown format '" + name + "' (expected json or csv)");
}

std::string configHash(const json &config) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : config.dump()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json optionalNumber(const std::optional<double> &x) { return x ? number(*x) : json(nullptr); }

json numbers(const std::vector<double> &xs) {
    json a = json::array();
    for (double x : xs)
        a.push_back(number(x));
    return a;
}

std::string csvCell(const json &v) {
    if (v.is_null())
        return "";
    if (v.is_number_float())
        return formatNumber(v.get<double>());
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (s.find_first_of(",\"\n") == std::string::npos)
            return s;
        std::string q = "\"";
        for (char c : s)
            q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    }
    if (v.is_boolean())
        return v.get<bool>() ? "1" : "0";
    return v.dump();
}

} // namespace

std::string emitReport(const Report &report, Format format) {
    if (format == Format::Json) {
        json j;
        j["schema_version"] = report.schemaVersion;
        j["command"] = report.command;
        j["seed"] = report.seed;
        j["config_hash"] = report.configHash;
        j["payload"] = report.payload;
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "# schema_version=" << report.schemaVersion << " command=" << report.command << " seed=" << report.seed
        << " config_hash=" << report.configHash << '\n';
    Table t;
    if (report.table) {
        t = *report.table;
    } else {
        t.columns = {"key", "value"};
        const auto flat = report.payload.flatten();
        for (const auto &[k, v] : flat.items())
            t.rows.push_back({json(k), v});
    }
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        out << (i ? "," : "") << t.columns[i];
    out << '\n';
    for (const auto &row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << csvCell(row[i]);
        out << '\n';
    }
    return out.str();
}

Report parseReport(const std::string &text) {
    const auto j = json::parse(text);
    Report r;
    r.schemaVersion = j.at("schema_version").get<int>();
    r.command = j.at("command").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.configHash = j.at("config_hash").get<std::string>();
    r.payload = j.at("payload");
    return r;
}

json toJson(const Graph &g) {
    json nodes = json::array(), edges = json::array();
    for (node v = 0; v < g.numberOfNodes(); ++v)
        nodes.push_back({{"id", g.id(v)}, {"weight", g.nodeWeight(v)}, {"winner", g.isWinner(v)}});
    for (const auto &e : g.edges())
        edges.push_back(json::array({e.u, e.v, e.weight}));
    return {{"nodes", nodes}, {"edges", edges}};
}

Graph graphFromJson(const json &j) {
    GraphBuilder b;
    for (const auto &n : j.at("nodes"))
        b.addNode(n.at("id").get<std::string>(), n.at("weight").get<std::uint64_t>(), n.at("winner").get<bool>());
    for (const auto &e : j.at("edges")) {
        const auto u = e.at(0).get<node>(), v = e.at(1).get<node>();
        if (u >= b.numberOfNodes() || v >= b.numberOfNodes())
            throw ValidationError("edge references an unknown node index");
        b.addEdge(u, v, e.at(2).get<double>());
    }
    return b.build();
}

json toJson(const HicResult &h) {
    return {{"d_base_active", h.baseActive},
            {"d_base_inactive", h.baseInactive},
            {"d_active_inactive", h.activeInactive},
            {"hic", h.hic},
            {"clamped", h.clamped},
            {"efficiency_active", h.activeEfficiency},
            {"efficiency_inactive", h.inactiveEfficiency}};
}

HicResult hicFromJson(const json &j) {
    HicResult h;
    h.baseActive = j.at("d_base_active").get<double>();
    h.baseInactive = j.at("d_base_inactive").get<double>();
    h.activeInactive = j.at("d_active_inactive").get<double>();
    h.hic = j.at("hic").get<double>();
    h.clamped = j.at("clamped").get<bool>();
    h.activeEfficiency = j.at("efficiency_active").get<double>();
    h.inactiveEfficiency = j.at("efficiency_inactive").get<double>();
    return h;
}

json toJson(const BackboneTrace &trace) {
    json steps = json::array();
    for (const auto &s : trace.steps) {
        json mask = json::array();
        for (bool b : s.activeMask)
            mask.push_back(b ? 1 : 0);
        steps.push_back({{"alpha_t", s.alphaT},
                         {"active_mask", mask},
                         {"base", toJson(s.base)},
                         {"hic", toJson(s.hic)},
                         {"winner_fraction", s.winnerFraction},
                         {"candidates_evaluated", s.candidatesEvaluated},
                         {"active_nodes", s.active.numberOfNodes() - [&] {
                              std::size_t isolated = 0;
                              for (node v = 0; v < s.active.numberOfNodes(); ++v)
                                  isolated += s.active.degree(v) == 0 ? 1 : 0;
                              return isolated;
                          }()},
                         {"active_edges", s.active.numberOfEdges()}});
    }
    return {{"stop_reason", toString(trace.stopReason)}, {"steps", steps}};
}

BackboneTrace traceFromJson(const json &j) {
    BackboneTrace t;
    t.stopReason = stopReasonFromString(j.at("stop_reason").get<std::string>());
    for (const auto &s : j.at("steps")) {
        BackboneStep step;
        step.alphaT = s.at("alpha_t").get<double>();
        step.base = graphFromJson(s.at("base"));
        for (const auto &b : s.at("active_mask"))
            step.activeMask.push_back(b.get<int>() != 0);
        if (step.activeMask.size() != step.base.numberOfEdges())
            throw ValidationError("active mask length differs from the base edge count");
        const EdgePartition part{step.base, step.activeMask};
        step.active = part.activeGraph();
        step.inactive = part.inactiveGraph();
        step.hic = hicFromJson(s.at("hic"));
        step.winnerFraction = s.at("winner_fraction").get<double>();
        step.candidatesEvaluated = s.at("candidates_evaluated").get<std::size_t>();
        t.steps.push_back(std::move(step));
    }
    return t;
}

Table traceTable(const BackboneTrace &trace) {
    Table t;
    t.columns = {"step", "alpha_t", "hic", "d_base_active", "d_base_inactive", "d_active_inactive",
                 "base_nodes", "active_edges", "winner_fraction"};
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto &s = trace.steps[i];
        t.rows.push_back({i + 1, s.alphaT, s.hic.hic, s.hic.baseActive, s.hic.baseInactive, s.hic.activeInactive,
                          s.base.numberOfNodes(), s.active.numberOfEdges(), s.winnerFraction});
    }
    return t;
}

json toJson(const DissimilarityResult &d) {
    return {{"d", d.value}, {"term_distance", d.term1}, {"term_dispersion", d.term2}, {"term_centrality", d.term3}};
}

json toJson(const SweepResult &s) {
    json aux = json::object();
    for (const auto &[k, v] : s.auxiliary)
        aux[k] = numbers(v);
    return {{"grid", numbers(s.grid)}, {"mean", numbers(s.mean)}, {"std", numbers(s.std)}, {"auxiliary", aux}};
}

Table sweepTable(const SweepResult &s, const std::string &gridName) {
    Table t;
    t.columns = {gridName, "mean_hic", "std_hic"};
    for (const auto &entry : s.auxiliary)
        t.columns.push_back(entry.first);
    for (std::size_t i = 0; i < s.grid.size(); ++i) {
        std::vector<json> row{number(s.grid[i]), number(s.mean[i]), number(s.std[i])};
        for (const auto &entry : s.auxiliary)
            row.push_back(number(entry.second[i]));
        t.rows.push_back(std::move(row));
    }
    return t;
}

json toJson(const SensitivityTable &t) {
    json rows = json::array();
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        json r = {{"topology", t.topologies[i]}, {"removals", t.rows[i].removals}};
        const auto scores = t.rows[i].scores();
        for (std::size_t k = 0; k < scores.size(); ++k)
            r[SensitivityRow::metricNames()[k]] = number(scores[k]);
        rows.push_back(r);
    }
    return {{"rows", rows}, {"hic_ranks_first", t.hicRanksFirst()}};
}

Table sensitivityTable(const SensitivityTable &t) {
    Table out;
    out.columns = {"topology"};
    for (const auto &n : SensitivityRow::metricNames())
        out.columns.push_back(n);
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        std::vector<json> row{t.topologies[i]};
        for (double x : t.rows[i].scores())
            row.push_back(number(x));
        out.rows.push_back(std::move(row));
    }
    return out;
}

json toJson(const DetectionReport &r) {
    json runs = json::array();
    for (const auto &run : r.runs) {
        json its = json::array();
        for (const auto &it : run.iterations)
            its.push_back({{"recall", number(it.recall)},
                           {"precision", number(it.precision)},
                           {"retained", it.retained},
                           {"retained_corrupt", it.retainedCorrupt},
                           {"hic", it.hic},
                           {"alpha_t", it.alphaT}});
        runs.push_back({{"seed", run.seed},
                        {"corrupt", run.corrupt},
                        {"stop_reason", toString(run.stopReason)},
                        {"final_contains_corrupt", run.finalContainsCorrupt},
                        {"iterations", its}});
    }
    return {{"runs", runs},
            {"mean_recall", optionalNumber(r.meanRecall)},
            {"mean_precision", optionalNumber(r.meanPrecision)},
            {"final_contains_corrupt_rate", r.finalContainsCorruptRate},
            {"recall_by_iteration", numbers(r.recallByIteration)}};
}

json toJson(const std::vector<ScalingPoint> &points) {
    json a = json::array();
    for (const auto &p : points)
        a.push_back({{"size", p.size},
                     {"mean_robustness", p.meanRobustness},
                     {"mean_peak_hic", p.meanPeakHic},
                     {"robustness", numbers(p.robustness)},
                     {"peak_hic", numbers(p.peakHic)}});
    return {{"points", a}};
}

Table scalingTable(const std::vector<ScalingPoint> &points) {
    Table t;
    t.columns = {"size", "mean_robustness", "mean_peak_hic"};
    for (const auto &p : points)
        t.rows.push_back({p.size, number(p.meanRobustness), number(p.meanPeakHic)});
    return t;
}

json toJson(const AnomalySeries &s) {
    json points = json::array();
    for (const auto &p : s.points)
        points.push_back({{"value", number(p.value)},
                          {"baseline_mean", optionalNumber(p.baselineMean)},
                          {"baseline_std", optionalNumber(p.baselineStd)},
                          {"z", optionalNumber(p.z)},
                          {"flagged", p.flagged}});
    json aux = json::object();
    for (const auto &[k, v] : s.auxiliary)
        aux[k] = numbers(v);
    return {{"trailing_k", s.trailingK}, {"threshold", s.threshold}, {"points", points}, {"auxiliary", aux}};
}

Table anomalyTable(const AnomalySeries &s, const std::vector<DateRange> &windows) {
    Table t;
    t.columns = {"window"};
    if (!windows.empty())
        t.columns.insert(t.columns.end(), {"start", "end"});
    t.columns.insert(t.columns.end(), {"hic", "baseline_mean", "baseline_std", "z", "flagged"});
    for (const auto &entry : s.auxiliary)
        t.columns.push_back(entry.first);
    for (std::size_t i = 0; i < s.points.size(); ++i) {
        const auto &p = s.points[i];
        std::vector<json> row{i};
        if (!windows.empty())
            row.insert(row.end(), {formatDate(*windows[i].begin), formatDate(*windows[i].end)});
        row.insert(row.end(), {number(p.value), optionalNumber(p.baselineMean), optionalNumber(p.baselineStd),
                               optionalNumber(p.z), p.flagged});
        for (const auto &entry : s.auxiliary)
            row.push_back(number(entry.second[i]));
        t.rows.push_back(std::move(row));
    }
    return t;
}

json toJson(const NullTestResult &r) {
    return {{"real_hic", r.realHic},
            {"null_hic_samples", numbers(r.nullHic)},
            {"fraction", number(r.fraction)},
            {"p_value", r.pValue},
            {"significant_at_5pct", r.significant}};
}

} // namespace heronet
