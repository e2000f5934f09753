#ifndef KPS_IO_HPP
#define KPS_IO_HPP

#include <iosfwd>
#include <map>
#include <string>

#include "kps/design.hpp"
#include "kps/graph.hpp"
#include "kps/hierarchy.hpp"
#include "kps/mar.hpp"
#include "kps/metrics.hpp"
#include "kps/target.hpp"

namespace kps {
namespace io {

// All formats are line-oriented text and round-trip exactly.
//   design v=<v> b=<b>      then one block per line (space-separated points)
//   graph n=<n>             then one edge per line "i j" with i < j, sorted
//   target n=<n>            then sections "must" / "forbid" / "may", each an edge list
//   kps nodes=<n> keys=<m>  then one line per node of sorted key indices

std::string serialize(const Design& d);
std::string serialize(const Graph& g);
std::string serialize(const TargetGraph& t);
std::string serialize(const KeyAssignment& a);
std::string serialize(const MarTrace& trace);

Design parse_design(std::istream& in);
Graph parse_graph(std::istream& in);
TargetGraph parse_target(std::istream& in);
KeyAssignment parse_assignment(std::istream& in);

Design read_design(const std::string& path);
Graph read_graph(const std::string& path);
TargetGraph read_target(const std::string& path);
KeyAssignment read_assignment(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// CSV column order is frozen: dcc,dicc,apl,so_max,so_mean,ns, then nr@x per
// requested x. Rationals are printed reduced as p or p/q; infinite apl as inf.
std::string csv_header(const MetricsReport& report);
std::string csv_row(const MetricsReport& report);
std::string text_report(const MetricsReport& report);

// Two metric rows plus a delta row.
std::string csv_comparison(const ComparisonReport& report);

// Per-x NR table: header "x,nr" then one row per entry.
std::string nr_table_csv(const MetricsReport& report);

// Flat key=value config (blank lines and '#' comments ignored).
std::map<std::string, std::string> parse_config(std::istream& in);
std::map<std::string, std::string> read_config(const std::string& path);

}  // namespace io
}  // namespace kps

#endif
