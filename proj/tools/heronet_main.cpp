#include <heronet/backbone.hpp>
#include <heronet/experiments.hpp>
#include <heronet/ingest.hpp>
#include <heronet/report.hpp>
#include <heronet/stats.hpp>
#include <heronet/temporal.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <unordered_map>

using namespace heronet;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Globals {
    std::uint64_t seed = 0;
    std::string out;
    std::string format = "json";
};

struct GraphInput {
    std::string edges;
    std::string nodes;

    void attach(CLI::App *cmd, const std::string &flag = "--input", const std::string &nodeFlag = "--nodes") {
        cmd->add_option(flag, edges, "edge list CSV (u,v[,weight])")->required()->check(CLI::ExistingFile);
        cmd->add_option(nodeFlag, nodes, "node sidecar CSV (node_id,node_weight,winner)")->check(CLI::ExistingFile);
    }
    Graph load() const { return readGraph(edges, nodes); }
};

struct DissimFlags {
    std::vector<double> weights{0.45, 0.45, 0.10};
    std::string convention = "uniform";

    void attach(CLI::App *cmd) {
        cmd->add_option("--weights", weights, "D term weights w1 w2 w3")->expected(3)->capture_default_str();
        cmd->add_option("--convention", convention, "alpha-centrality convention")
            ->check(CLI::IsMember({"uniform", "degree"}))
            ->capture_default_str();
    }
    DissimilarityOptions options() const {
        DissimilarityOptions o;
        o.weights = {weights.at(0), weights.at(1), weights.at(2)};
        o.weights.validate();
        o.convention = convention == "degree" ? AlphaConvention::DegreeExogenous : AlphaConvention::UniformNormalized;
        return o;
    }
};

void writeFile(const fs::path &path, const std::string &content) {
    if (path.has_parent_path())
        fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ValidationError("cannot write " + path.string());
    out << content;
}

bool isDirectoryTarget(const std::string &out) {
    return fs::is_directory(out) || !fs::path(out).has_extension();
}

/// Writes the report to stdout, to a file, or into a directory as <name>.<ext>.
void emit(const Globals &g, const Report &report, const std::string &name) {
    const auto format = parseFormat(g.format);
    const auto text = emitReport(report, format);
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    fs::path target = g.out;
    if (isDirectoryTarget(g.out))
        target /= name + (format == Format::Json ? ".json" : ".csv");
    writeFile(target, text);
}

Report makeReport(const std::string &command, const Globals &g, const CLI::App *cmd) {
    Report r;
    r.command = command;
    r.seed = g.seed;
    r.configHash = configHash(json(cmd->config_to_str(true, false)));
    return r;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Heron information coefficient toolkit for co-bidding and synthetic networks"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "TOML/INI file with option values");
    Globals g;
    app.add_option("--seed", g.seed, "base random seed")->capture_default_str();
    app.add_option("--out", g.out, "output file, or directory for <command>.<format>");
    app.add_option("--format", g.format, "json or csv")->capture_default_str();

    std::function<void()> run;

    // gen
    auto *gen = app.add_subcommand("gen", "generate a synthetic network (edge list + node sidecar)");
    std::string genModel = "er";
    TopologySpec topo;
    CovertSpec covert;
    gen->add_option("--model", genModel,
                    "complete | er | barabasi-albert | watts-strogatz | planted-partition | hub-and-spoke | covert")
        ->capture_default_str();
    gen->add_option("--n", topo.n)->capture_default_str();
    gen->add_option("--p", topo.p, "ER edge probability")->capture_default_str();
    gen->add_option("--m", topo.m, "BA edges per node")->capture_default_str();
    gen->add_option("--k", topo.k, "WS ring degree")->capture_default_str();
    gen->add_option("--beta", topo.beta, "WS rewiring probability")->capture_default_str();
    gen->add_option("--blocks", topo.blocks)->capture_default_str();
    gen->add_option("--p-in", topo.pIn)->capture_default_str();
    gen->add_option("--p-out", topo.pOut)->capture_default_str();
    gen->add_option("--corrupt-fraction", covert.corruptFraction)->capture_default_str();
    gen->add_option("--groups", covert.groups)->capture_default_str();
    gen->add_option("--hierarchy", covert.hierarchyLevels)->capture_default_str();
    gen->add_option("--p-intra-corrupt", covert.pIntraCorrupt)->capture_default_str();
    gen->add_option("--p-inter-corrupt", covert.pInterCorrupt)->capture_default_str();
    gen->add_option("--p-background", covert.pBackground)->capture_default_str();
    gen->callback([&] {
        run = [&] {
            if (g.out.empty() || !isDirectoryTarget(g.out))
                throw UsageError("gen needs --out <directory>");
            const fs::path dir = g.out;
            fs::create_directories(dir);
            Graph graph;
            std::vector<bool> labels;
            if (genModel == "covert") {
                covert.n = topo.n;
                covert.seed = g.seed;
                auto net = generateCovert(covert);
                graph = std::move(net.graph);
                labels = std::move(net.corrupt);
            } else {
                topo.model = topologyModelFromString(genModel);
                topo.seed = g.seed;
                graph = generateTopology(topo);
            }
            std::ostringstream edges, nodes;
            writeEdgeList(edges, graph);
            writeNodeAttributes(nodes, graph);
            writeFile(dir / "edges.csv", edges.str());
            writeFile(dir / "nodes.csv", nodes.str());
            if (!labels.empty()) {
                std::ostringstream lab;
                lab << "node_id,corrupt\n";
                for (node v = 0; v < graph.numberOfNodes(); ++v)
                    lab << graph.id(v) << ',' << (labels[v] ? 1 : 0) << '\n';
                writeFile(dir / "labels.csv", lab.str());
            }
        };
    });

    // dissim
    auto *dissim = app.add_subcommand("dissim", "D measure between two graphs, with its terms");
    GraphInput dA, dB;
    DissimFlags dFlags;
    dA.attach(dissim, "--a", "--a-nodes");
    dB.attach(dissim, "--b", "--b-nodes");
    dFlags.attach(dissim);
    dissim->callback([&] {
        run = [&] {
            auto r = makeReport("dissim", g, dissim);
            const auto d = dissimilarity(dA.load(), dB.load(), dFlags.options());
            r.payload = toJson(d);
            emit(g, r, "dissim");
        };
    });

    // distmat
    auto *distmat = app.add_subcommand("distmat", "pairwise D matrix over several edge lists");
    std::vector<std::string> matInputs;
    DissimFlags mFlags;
    distmat->add_option("inputs", matInputs, "edge list files")->required()->check(CLI::ExistingFile);
    mFlags.attach(distmat);
    distmat->callback([&] {
        run = [&] {
            const auto opts = mFlags.options();
            std::vector<GraphSignature> sigs;
            for (const auto &f : matInputs)
                sigs.push_back(signature(readGraph(f), opts));
            auto r = makeReport("distmat", g, distmat);
            Table t;
            t.columns = {"graph"};
            for (const auto &f : matInputs)
                t.columns.push_back(fs::path(f).filename().string());
            json matrix = json::array();
            for (std::size_t i = 0; i < sigs.size(); ++i) {
                std::vector<json> row{fs::path(matInputs[i]).filename().string()};
                json jr = json::array();
                for (std::size_t j = 0; j < sigs.size(); ++j) {
                    const double d = i == j ? 0.0 : dissimilarity(sigs[i], sigs[j], opts.weights).value;
                    row.push_back(d);
                    jr.push_back(d);
                }
                t.rows.push_back(std::move(row));
                matrix.push_back(jr);
            }
            r.payload = {{"inputs", matInputs}, {"matrix", matrix}};
            r.table = t;
            emit(g, r, "distmat");
        };
    });

    // hic
    auto *hic = app.add_subcommand("hic", "HIC of an active/inactive split of a graph");
    GraphInput hInput;
    DissimFlags hFlags;
    std::string hActive;
    double hAlpha = -1.0;
    hInput.attach(hic);
    hFlags.attach(hic);
    auto *activeOpt = hic->add_option("--active", hActive, "edge list of the active edges")->check(CLI::ExistingFile);
    hic->add_option("--alpha", hAlpha, "split at this disparity significance instead")->excludes(activeOpt);
    hic->callback([&] {
        run = [&] {
            const auto base = hInput.load();
            EdgePartition part;
            if (!hActive.empty()) {
                std::ifstream in(hActive);
                part.base = base;
                part.active.assign(base.numberOfEdges(), false);
                std::unordered_map<std::string, node> index;
                for (node v = 0; v < base.numberOfNodes(); ++v)
                    index.emplace(base.id(v), v);
                for (const auto &e : parseEdgeList(in)) {
                    const auto u = index.find(e.u), v = index.find(e.v);
                    const auto idx = (u == index.end() || v == index.end()) ? base.numberOfEdges()
                                                                            : base.findEdge(u->second, v->second);
                    if (idx == base.numberOfEdges())
                        throw ValidationError("active edge " + e.u + "," + e.v + " is not in the base graph");
                    part.active[idx] = true;
                }
            } else if (hAlpha >= 0.0) {
                part = splitAtAlpha(base, disparitySignificance(base), hAlpha);
            } else {
                throw UsageError("hic needs --active or --alpha");
            }
            auto r = makeReport("hic", g, hic);
            r.payload = toJson(hicOfPartition(part, hFlags.options()));
            r.payload["active_edges"] = part.activeCount();
            emit(g, r, "hic");
        };
    });

    // backbone
    auto *backbone = app.add_subcommand("backbone", "iterative HIC-optimal disparity backbone");
    GraphInput bInput;
    DissimFlags bFlags;
    std::size_t maxSteps = 6;
    bInput.attach(backbone);
    bFlags.attach(backbone);
    backbone->add_option("--max-steps", maxSteps)->capture_default_str()->check(CLI::PositiveNumber);
    backbone->callback([&] {
        run = [&] {
            const auto trace = iterativeBackbone(bInput.load(), maxSteps, bFlags.options());
            auto r = makeReport("backbone", g, backbone);
            r.payload = toJson(trace);
            r.table = traceTable(trace);
            emit(g, r, "backbone");
        };
    });

    // bench
    auto *bench = app.add_subcommand("bench", "characterization and benchmark protocols");
    std::string mode;
    std::size_t seeds = 100, benchN = 100, benchSteps = 0;
    bool heavy = false, edgeRemoval = false;
    std::vector<std::uint64_t> sizes;
    DissimFlags benchFlags;
    bench->add_option("mode", mode)
        ->required()
        ->check(CLI::IsMember({"er-sweep", "gamma-sweep", "sensitivity", "covert", "scaling", "partial"}));
    bench->add_option("--seeds", seeds)->capture_default_str();
    bench->add_option("--n", benchN)->capture_default_str();
    bench->add_option("--max-steps", benchSteps, "backbone steps (0 = protocol default)");
    bench->add_option("--sizes", sizes, "scaling sizes");
    bench->add_flag("--heavy", heavy, "full-size scaling run (up to 1000 nodes, 20 seeds)");
    bench->add_flag("--edge-removal", edgeRemoval, "sensitivity by edge removal instead of node removal");
    benchFlags.attach(bench);
    bench->callback([&] {
        run = [&] {
            const auto opts = benchFlags.options();
            auto r = makeReport("bench " + mode, g, bench);
            if (mode == "er-sweep") {
                const auto s = uniformActivationSweep(benchN, uniformGrid(0.0, 1.0, 0.05), seeds, g.seed, opts);
                r.payload = toJson(s);
                r.table = sweepTable(s, "p");
            } else if (mode == "gamma-sweep") {
                TopologySpec er;
                er.n = benchN;
                er.seed = g.seed;
                const std::vector<double> grid{-2, -1, 0, 1, 2};
                const auto s = gammaSweep(er, grid, seeds, g.seed, 0.10, opts);
                const auto c = stats::spearman(grid, s.mean);
                r.payload = toJson(s);
                r.payload["spearman"] = {{"rho", c.rho}, {"p_value", c.pValue}};
                r.table = sweepTable(s, "gamma");
            } else if (mode == "sensitivity") {
                const auto t = sensitivityComparison(benchN, g.seed, 0.10,
                                                     edgeRemoval ? RemovalMode::Edges : RemovalMode::Nodes, opts);
                r.payload = toJson(t);
                r.table = sensitivityTable(t);
            } else if (mode == "covert") {
                CovertSpec cs;
                cs.n = benchN;
                cs.seed = g.seed;
                const auto d = covertBenchmark(cs, seeds, benchSteps ? benchSteps : 50, opts);
                r.payload = toJson(d);
                Table t{{"iteration", "mean_recall"}, {}};
                for (std::size_t i = 0; i < d.recallByIteration.size(); ++i)
                    t.rows.push_back({i + 1, d.recallByIteration[i]});
                r.table = t;
            } else if (mode == "scaling") {
                std::vector<std::size_t> sz(sizes.begin(), sizes.end());
                std::size_t scalingSeeds = seeds;
                if (sz.empty())
                    sz = heavy ? std::vector<std::size_t>{10, 50, 100, 500, 1000}
                               : std::vector<std::size_t>{10, 25, 50, 100};
                if (heavy)
                    scalingSeeds = std::max<std::size_t>(seeds, 20);
                CovertSpec cs;
                cs.seed = g.seed;
                const auto pts = scalingBenchmark(sz, cs, scalingSeeds, benchSteps ? benchSteps : 6, opts);
                std::vector<double> x, y;
                for (const auto &p : pts) {
                    x.push_back(static_cast<double>(p.size));
                    y.push_back(p.meanRobustness);
                }
                r.payload = toJson(pts);
                if (pts.size() >= 2) {
                    const auto c = stats::spearman(x, y);
                    r.payload["spearman"] = {{"rho", c.rho}, {"p_value", c.pValue}};
                }
                r.table = scalingTable(pts);
            } else {
                CovertSpec cs;
                cs.n = benchN;
                cs.seed = g.seed;
                const auto s = partialInfoBenchmark(cs, uniformGrid(0.1, 1.0, 0.1), seeds, opts);
                r.payload = toJson(s);
                r.table = sweepTable(s, "fraction");
            }
            if (!g.out.empty() && isDirectoryTarget(g.out)) {
                // Directory output gets both the CSV series and the JSON summary.
                const fs::path dir = g.out;
                writeFile(dir / ("bench_" + mode + ".csv"), emitReport(r, Format::Csv));
                writeFile(dir / ("bench_" + mode + ".json"), emitReport(r, Format::Json));
                parseFormat(g.format);
            } else {
                emit(g, r, "bench_" + mode);
            }
        };
    });

    // temporal
    auto *temporal = app.add_subcommand("temporal", "sliding-window HIC series with anomaly scores");
    std::string bidsPath, item;
    int windowMonths = 3, strideMonths = 3;
    std::size_t trailing = 4;
    double threshold = 1.96;
    DissimFlags tFlags;
    temporal->add_option("--bids", bidsPath, "bid records CSV")->required()->check(CLI::ExistingFile);
    temporal->add_option("--item", item, "item code (all items when omitted)");
    temporal->add_option("--window", windowMonths, "window length in months")->capture_default_str();
    temporal->add_option("--stride", strideMonths, "stride in months")->capture_default_str();
    temporal->add_option("--trailing", trailing, "trailing baseline length")->capture_default_str();
    temporal->add_option("--threshold", threshold)->capture_default_str();
    tFlags.attach(temporal);
    temporal->callback([&] {
        run = [&] {
            const auto records = readBids(bidsPath);
            std::vector<BidRecord> selected;
            for (const auto &rec : records)
                if (item.empty() || rec.itemCode == item)
                    selected.push_back(rec);
            const auto spec = windowSpecFor(selected, windowMonths, strideMonths);
            const auto graphs = windowSeries(selected, spec, item);
            auto series = anomalyScores(hicSeries(graphs, tFlags.options()), trailing, threshold);
            series.auxiliary = windowAuxiliary(graphs);
            const auto ws = windows(spec);
            auto r = makeReport("temporal", g, temporal);
            r.payload = toJson(series);
            json bounds = json::array();
            for (const auto &w : ws)
                bounds.push_back({formatDate(*w.begin), formatDate(*w.end)});
            r.payload["windows"] = bounds;
            r.table = anomalyTable(series, ws);
            emit(g, r, "temporal");
        };
    });

    // nulltest
    auto *nulltest = app.add_subcommand("nulltest", "HIC against the participation (Poisson) null");
    GraphInput nInput;
    std::string nBids, nItem, nFrom, nTo;
    std::uint64_t totalBiddings = 0;
    std::size_t samples = 200;
    DissimFlags nFlags;
    nulltest->add_option("--input", nInput.edges, "edge list CSV")->check(CLI::ExistingFile);
    nulltest->add_option("--nodes", nInput.nodes, "node sidecar with participation counts")
        ->check(CLI::ExistingFile);
    nulltest->add_option("--total-biddings", totalBiddings, "number of bids N_b (graph input)");
    nulltest->add_option("--bids", nBids, "bid records CSV instead of a graph")->check(CLI::ExistingFile);
    nulltest->add_option("--item", nItem);
    nulltest->add_option("--from", nFrom, "first date (inclusive, YYYY-MM-DD)");
    nulltest->add_option("--to", nTo, "last date (exclusive, YYYY-MM-DD)");
    nulltest->add_option("--samples", samples)->capture_default_str();
    nFlags.attach(nulltest);
    nulltest->callback([&] {
        run = [&] {
            Graph graph;
            std::uint64_t nb = totalBiddings;
            if (!nBids.empty()) {
                DateRange range;
                if (!nFrom.empty())
                    range.begin = parseDate(nFrom);
                if (!nTo.empty())
                    range.end = parseDate(nTo);
                const auto records = readBids(nBids);
                graph = cobidNetwork(records, nItem, range);
                if (nb == 0) {
                    std::set<std::string> bids;
                    for (const auto &rec : records)
                        if ((nItem.empty() || rec.itemCode == nItem) && range.contains(rec.date))
                            bids.insert(rec.bidId);
                    nb = bids.size();
                }
            } else if (!nInput.edges.empty()) {
                if (nInput.nodes.empty() || nb == 0)
                    throw UsageError("graph input needs --nodes and --total-biddings");
                graph = nInput.load();
            } else {
                throw UsageError("nulltest needs --bids or --input");
            }
            auto r = makeReport("nulltest", g, nulltest);
            r.payload = toJson(poissonNullTest(graph, nb, samples, g.seed, nFlags.options()));
            r.payload["total_biddings"] = nb;
            emit(g, r, "nulltest");
        };
    });

    try {
        app.parse(argc, argv);
        parseFormat(g.format);
        run();
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    } catch (const ValidationError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const nlohmann::json::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
