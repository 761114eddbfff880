#include <heronet/ingest.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <unordered_map>

namespace heronet {

namespace {

std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string where(std::size_t line) { return "line " + std::to_string(line) + ": "; }

bool parseBool(const std::string &s, bool &out) {
    if (s == "1" || s == "true" || s == "TRUE" || s == "True") {
        out = true;
        return true;
    }
    if (s == "0" || s == "false" || s == "FALSE" || s == "False" || s.empty()) {
        out = false;
        return true;
    }
    return false;
}

bool parseDouble(const std::string &s, double &out) {
    if (s.empty())
        return false;
    std::size_t used = 0;
    try {
        out = std::stod(s, &used);
    } catch (const std::exception &) {
        return false;
    }
    return used == s.size();
}

bool parseUnsigned(const std::string &s, std::uint64_t &out) {
    const auto *end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, out);
    return ec == std::errc() && ptr == end;
}

bool isSkippable(const std::string &line) {
    const auto t = trim(line);
    return t.empty() || t.front() == '#';
}

} // namespace

Date parseDate(const std::string &text) {
    const auto t = trim(text);
    int y = 0;
    unsigned m = 0, d = 0;
    const bool shape = t.size() == 10 && t[4] == '-' && t[7] == '-' &&
                       std::all_of(t.begin(), t.end(), [](char c) { return c == '-' || (c >= '0' && c <= '9'); });
    if (!shape)
        throw ValidationError("malformed date '" + text + "' (expected YYYY-MM-DD)");
    y = std::stoi(t.substr(0, 4));
    m = static_cast<unsigned>(std::stoi(t.substr(5, 2)));
    d = static_cast<unsigned>(std::stoi(t.substr(8, 2)));
    const Date date{std::chrono::year{y}, std::chrono::month{m}, std::chrono::day{d}};
    if (!date.ok())
        throw ValidationError("invalid date '" + text + "'");
    return date;
}

std::string formatDate(Date d) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(d.year()), static_cast<unsigned>(d.month()),
                  static_cast<unsigned>(d.day()));
    return buf;
}

std::vector<std::string> splitCsvLine(const std::string &line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (quoted)
        throw ValidationError("unterminated quote");
    fields.push_back(trim(cur));
    return fields;
}

std::vector<BidRecord> parseBids(std::istream &in) {
    std::string line;
    std::size_t lineNo = 0;
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        ++lineNo;
        if (!trim(line).empty()) {
            header = splitCsvLine(line);
            break;
        }
    }
    if (header.empty())
        throw ValidationError("bid file has no header row");
    std::map<std::string, std::size_t> col;
    for (std::size_t i = 0; i < header.size(); ++i)
        col[header[i]] = i;
    for (const char *required : {"bid_id", "item_code", "date", "company_id", "winner"})
        if (!col.count(required))
            throw ValidationError(where(lineNo) + "missing column '" + required + "'");
    const std::optional<std::size_t> valueCol =
        col.count("value") ? std::optional<std::size_t>(col.at("value")) : std::nullopt;

    std::vector<BidRecord> records;
    std::map<std::pair<std::string, std::string>, std::size_t> seen;
    while (std::getline(in, line)) {
        ++lineNo;
        if (isSkippable(line))
            continue;
        std::vector<std::string> f;
        try {
            f = splitCsvLine(line);
        } catch (const ValidationError &e) {
            throw ValidationError(where(lineNo) + e.what());
        }
        if (f.size() < header.size())
            throw ValidationError(where(lineNo) + "expected " + std::to_string(header.size()) + " fields, got " +
                                  std::to_string(f.size()));
        BidRecord r;
        r.bidId = f[col.at("bid_id")];
        r.itemCode = f[col.at("item_code")];
        r.companyId = f[col.at("company_id")];
        if (r.bidId.empty() || r.companyId.empty())
            throw ValidationError(where(lineNo) + "empty bid_id or company_id");
        try {
            r.date = parseDate(f[col.at("date")]);
        } catch (const ValidationError &e) {
            throw ValidationError(where(lineNo) + e.what());
        }
        if (!parseBool(f[col.at("winner")], r.winner))
            throw ValidationError(where(lineNo) + "winner must be 0/1 or true/false");
        if (valueCol && !f[*valueCol].empty()) {
            double v = 0.0;
            if (!parseDouble(f[*valueCol], v) || !(v >= 0.0) || !std::isfinite(v))
                throw ValidationError(where(lineNo) + "value must be a nonnegative number");
            r.value = v;
        }
        const auto key = std::make_pair(r.bidId, r.companyId);
        if (const auto it = seen.find(key); it != seen.end()) {
            records[it->second].winner = records[it->second].winner || r.winner;
            continue;
        }
        seen.emplace(key, records.size());
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<BidRecord> readBids(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open " + path);
    return parseBids(in);
}

bool DateRange::contains(Date d) const {
    return (!begin || d >= *begin) && (!end || d < *end);
}

Graph cobidNetwork(const std::vector<BidRecord> &records, const std::string &item, const DateRange &range) {
    std::map<std::string, std::set<std::string>> bidsOf;   // company -> bids
    std::map<std::string, std::set<std::string>> members;  // bid -> companies
    std::set<std::string> winners;
    for (const auto &r : records) {
        if ((!item.empty() && r.itemCode != item) || !range.contains(r.date))
            continue;
        bidsOf[r.companyId].insert(r.bidId);
        members[r.bidId].insert(r.companyId);
        if (r.winner)
            winners.insert(r.companyId);
    }
    GraphBuilder b;
    for (const auto &[company, bids] : bidsOf)
        b.addNode(company, bids.size(), winners.count(company) > 0);
    std::map<std::pair<node, node>, std::uint64_t> shared;
    std::unordered_map<std::string, node> index;
    node next = 0;
    for (const auto &entry : bidsOf)
        index.emplace(entry.first, next++);
    for (const auto &[bid, companies] : members) {
        const std::vector<std::string> list(companies.begin(), companies.end());
        for (std::size_t i = 0; i < list.size(); ++i)
            for (std::size_t j = i + 1; j < list.size(); ++j)
                ++shared[{index.at(list[i]), index.at(list[j])}];
    }
    for (const auto &[pair, count] : shared)
        b.addEdge(pair.first, pair.second, static_cast<double>(count));
    return b.build();
}

std::vector<EdgeRecord> parseEdgeList(std::istream &in) {
    std::vector<EdgeRecord> edges;
    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (isSkippable(line))
            continue;
        const auto f = splitCsvLine(line);
        if (f.size() < 2 || f.size() > 3)
            throw ValidationError(where(lineNo) + "expected u,v[,weight]");
        EdgeRecord e{f[0], f[1], 1.0};
        if (f.size() == 3 && !parseDouble(f[2], e.weight)) {
            // A header row is tolerated as the first non-comment line.
            if (edges.empty() && f[2] == "weight")
                continue;
            throw ValidationError(where(lineNo) + "weight '" + f[2] + "' is not a number");
        }
        edges.push_back(std::move(e));
    }
    return edges;
}

std::vector<NodeAttributes> parseNodeAttributes(std::istream &in) {
    std::vector<NodeAttributes> nodes;
    std::string line;
    std::size_t lineNo = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++lineNo;
        if (isSkippable(line))
            continue;
        const auto f = splitCsvLine(line);
        if (!header) {
            if (f.size() < 3 || f[0] != "node_id" || f[1] != "node_weight" || f[2] != "winner")
                throw ValidationError(where(lineNo) + "expected header node_id,node_weight,winner");
            header = true;
            continue;
        }
        if (f.size() != 3)
            throw ValidationError(where(lineNo) + "expected node_id,node_weight,winner");
        NodeAttributes a;
        a.id = f[0];
        if (!parseUnsigned(f[1], a.weight))
            throw ValidationError(where(lineNo) + "node_weight must be a nonnegative integer");
        if (!parseBool(f[2], a.winner))
            throw ValidationError(where(lineNo) + "winner must be 0/1 or true/false");
        nodes.push_back(std::move(a));
    }
    return nodes;
}

Graph readGraph(const std::string &edgePath, const std::string &nodePath) {
    std::ifstream edgesIn(edgePath);
    if (!edgesIn)
        throw ValidationError("cannot open " + edgePath);
    const auto edges = parseEdgeList(edgesIn);
    std::vector<NodeAttributes> nodes;
    if (!nodePath.empty()) {
        std::ifstream nodesIn(nodePath);
        if (!nodesIn)
            throw ValidationError("cannot open " + nodePath);
        nodes = parseNodeAttributes(nodesIn);
    }
    return buildGraph(edges, nodes);
}

std::string formatNumber(double x) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

void writeEdgeList(std::ostream &out, const Graph &g) {
    for (const auto &e : g.edges())
        out << g.id(e.u) << ',' << g.id(e.v) << ',' << formatNumber(e.weight) << '\n';
}

void writeNodeAttributes(std::ostream &out, const Graph &g) {
    out << "node_id,node_weight,winner\n";
    for (node v = 0; v < g.numberOfNodes(); ++v)
        out << g.id(v) << ',' << g.nodeWeight(v) << ',' << (g.isWinner(v) ? 1 : 0) << '\n';
}

} // namespace heronet
