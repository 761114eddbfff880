#pragma once

#include <heronet/graph.hpp>

#include <chrono>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace heronet {

using Date = std::chrono::year_month_day;

/// Parses an ISO date (YYYY-MM-DD); throws ValidationError on malformed or impossible dates.
Date parseDate(const std::string &text);
std::string formatDate(Date d);

struct BidRecord {
    std::string bidId;
    std::string itemCode;
    Date date;
    std::string companyId;
    bool winner = false;
    std::optional<double> value;
};

/**
 * Reads `bid_id,item_code,date,company_id,winner[,value]` CSV with a header
 * row (columns in any order). Rows repeating (bid_id, company_id) merge into
 * the first occurrence with winner OR-ed. Errors name the 1-based line.
 */
std::vector<BidRecord> parseBids(std::istream &in);
std::vector<BidRecord> readBids(const std::string &path);

/// Half-open date interval; unset ends are unbounded.
struct DateRange {
    std::optional<Date> begin;
    std::optional<Date> end;

    bool contains(Date d) const;
};

/**
 * Co-bidding network of the records with the given item code (empty = all)
 * inside `range`. Companies are nodes in ascending id order; node weight is
 * the number of distinct bids entered, edge weight the number of distinct
 * bids shared, winner = won at least one of them.
 */
Graph cobidNetwork(const std::vector<BidRecord> &records, const std::string &item = {}, const DateRange &range = {});

/// Edge list `u,v,weight` (weight optional, default 1); blank lines and `#` comments skipped.
std::vector<EdgeRecord> parseEdgeList(std::istream &in);
/// Node sidecar `node_id,node_weight,winner` with header.
std::vector<NodeAttributes> parseNodeAttributes(std::istream &in);

Graph readGraph(const std::string &edgePath, const std::string &nodePath = {});

void writeEdgeList(std::ostream &out, const Graph &g);
void writeNodeAttributes(std::ostream &out, const Graph &g);

/// Shortest round-trip decimal form of x.
std::string formatNumber(double x);

/// Splits one CSV line; double-quoted fields may contain commas and "" escapes.
std::vector<std::string> splitCsvLine(const std::string &line);

} // namespace heronet
