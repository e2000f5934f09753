#include "kps/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "kps/errors.hpp"

namespace kps {
namespace io {

namespace {

struct LineReader {
    std::istream& in;
    int line_no = 0;

    bool next(std::string& line) {
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) { throw ParseError(line_no, what); }
};

long long parse_header_field(LineReader& reader, const std::string& line,
                             const std::string& key, size_t& pos) {
    size_t at = line.find(key + "=", pos);
    if (at == std::string::npos) reader.fail("missing header field " + key);
    pos = at + key.size() + 1;
    size_t end = pos;
    while (end < line.size() && line[end] != ' ') ++end;
    try {
        long long value = std::stoll(line.substr(pos, end - pos));
        pos = end;
        return value;
    } catch (const std::exception&) {
        reader.fail("bad integer in header field " + key);
    }
}

std::vector<int> parse_ints(LineReader& reader, const std::string& line) {
    std::istringstream ss(line);
    std::vector<int> values;
    long long x;
    while (ss >> x) values.push_back(static_cast<int>(x));
    if (!ss.eof()) reader.fail("bad integer");
    return values;
}

void append_edges(std::string& out, const Graph& g) {
    for (const auto& [a, b] : g.edges)
        out += std::to_string(a) + " " + std::to_string(b) + "\n";
}

}  // namespace

std::string serialize(const Design& d) {
    std::string out = "design v=" + std::to_string(d.v) +
                      " b=" + std::to_string(d.blocks.size()) + "\n";
    for (const auto& block : d.blocks) {
        for (size_t i = 0; i < block.size(); ++i)
            out += (i ? " " : "") + std::to_string(block[i]);
        out += "\n";
    }
    return out;
}

std::string serialize(const Graph& g) {
    std::string out = "graph n=" + std::to_string(g.n) + "\n";
    append_edges(out, g);
    return out;
}

std::string serialize(const TargetGraph& t) {
    std::string out = "target n=" + std::to_string(t.n) + "\n";
    out += "must\n";
    append_edges(out, t.must);
    out += "forbid\n";
    append_edges(out, t.forbid);
    out += "may\n";
    append_edges(out, t.may);
    return out;
}

std::string serialize(const KeyAssignment& a) {
    std::string out = "kps nodes=" + std::to_string(a.node_count) +
                      " keys=" + std::to_string(a.key_pool.size()) + "\n";
    for (const auto& ring : a.rings) {
        bool first = true;
        for (int k : ring) {
            if (!first) out += " ";
            out += std::to_string(k);
            first = false;
        }
        out += "\n";
    }
    return out;
}

std::string serialize(const MarTrace& trace) {
    std::string out = "trace edges=" + std::to_string(trace.initial_key_count) + "\n";
    for (const auto& step : trace.steps) {
        out += "l=" + std::to_string(step.iteration) + " clique=";
        for (size_t i = 0; i < step.clique.size(); ++i)
            out += (i ? "," : "") + std::to_string(step.clique[i]);
        out += " keep=" + std::to_string(step.retained_key) +
               " drop=" + std::to_string(step.removed_count) + "\n";
    }
    return out;
}

Design parse_design(std::istream& in) {
    LineReader reader{in};
    std::string line;
    if (!reader.next(line) || line.rfind("design ", 0) != 0)
        reader.fail("expected 'design v=<v> b=<b>' header");
    size_t pos = 0;
    Design d;
    d.v = static_cast<int>(parse_header_field(reader, line, "v", pos));
    long long b = parse_header_field(reader, line, "b", pos);
    for (long long i = 0; i < b; ++i) {
        if (!reader.next(line)) reader.fail("unexpected end of file");
        auto block = parse_ints(reader, line);
        for (int p : block)
            if (p < 0 || p >= d.v) reader.fail("point index out of range");
        d.blocks.push_back(std::move(block));
    }
    return d;
}

namespace {

void parse_edge_lines(LineReader& reader, Graph& g, std::string& pending,
                      bool& have_pending) {
    std::string line;
    while (reader.next(line)) {
        if (!line.empty() && !std::isdigit(static_cast<unsigned char>(line[0])) &&
            line[0] != '-') {
            pending = line;
            have_pending = true;
            return;
        }
        auto values = parse_ints(reader, line);
        if (values.empty()) continue;
        if (values.size() != 2) reader.fail("expected 'i j' edge line");
        if (values[0] >= values[1]) reader.fail("edges must satisfy i < j");
        if (values[0] < 0 || values[1] >= g.n) reader.fail("node index out of range");
        g.edges.insert({values[0], values[1]});
    }
    have_pending = false;
}

}  // namespace

Graph parse_graph(std::istream& in) {
    LineReader reader{in};
    std::string line;
    if (!reader.next(line) || line.rfind("graph ", 0) != 0)
        reader.fail("expected 'graph n=<n>' header");
    size_t pos = 0;
    Graph g;
    g.n = static_cast<int>(parse_header_field(reader, line, "n", pos));
    std::string pending;
    bool have_pending = false;
    parse_edge_lines(reader, g, pending, have_pending);
    if (have_pending) reader.fail("unexpected section in graph file");
    return g;
}

TargetGraph parse_target(std::istream& in) {
    LineReader reader{in};
    std::string line;
    if (!reader.next(line) || line.rfind("target ", 0) != 0)
        reader.fail("expected 'target n=<n>' header");
    size_t pos = 0;
    TargetGraph t;
    t.n = static_cast<int>(parse_header_field(reader, line, "n", pos));
    t.must.n = t.forbid.n = t.may.n = t.n;

    std::string pending;
    bool have_pending = false;
    if (!reader.next(pending)) return t;
    have_pending = true;
    while (have_pending) {
        Graph* section = nullptr;
        if (pending == "must") section = &t.must;
        else if (pending == "forbid") section = &t.forbid;
        else if (pending == "may") section = &t.may;
        else reader.fail("unknown target section '" + pending + "'");
        parse_edge_lines(reader, *section, pending, have_pending);
    }
    auto witness = validate_target(t);
    if (!witness.ok) reader.fail("invalid target: " + witness.detail);
    return t;
}

KeyAssignment parse_assignment(std::istream& in) {
    LineReader reader{in};
    std::string line;
    if (!reader.next(line) || line.rfind("kps ", 0) != 0)
        reader.fail("expected 'kps nodes=<n> keys=<m>' header");
    size_t pos = 0;
    KeyAssignment a;
    a.node_count = static_cast<int>(parse_header_field(reader, line, "nodes", pos));
    long long keys = parse_header_field(reader, line, "keys", pos);
    a.key_pool.resize(keys);
    for (long long k = 0; k < keys; ++k) a.key_pool[k] = static_cast<int>(k);
    for (int n = 0; n < a.node_count; ++n) {
        if (!reader.next(line)) reader.fail("unexpected end of file");
        auto ring = parse_ints(reader, line);
        for (int k : ring)
            if (k < 0 || k >= keys) reader.fail("key index out of range");
        a.rings.emplace_back(ring.begin(), ring.end());
    }
    return a;
}

namespace {

template <typename Parser>
auto read_file(const std::string& path, Parser parser) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    return parser(in);
}

}  // namespace

Design read_design(const std::string& path) {
    return read_file(path, [](std::istream& in) { return parse_design(in); });
}
Graph read_graph(const std::string& path) {
    return read_file(path, [](std::istream& in) { return parse_graph(in); });
}
TargetGraph read_target(const std::string& path) {
    return read_file(path, [](std::istream& in) { return parse_target(in); });
}
KeyAssignment read_assignment(const std::string& path) {
    return read_file(path, [](std::istream& in) { return parse_assignment(in); });
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw ParseError(0, "cannot open " + path + " for writing");
    out << content;
}

std::string csv_header(const MetricsReport& report) {
    std::string out = "dcc,dicc,apl,so_max,so_mean,ns";
    for (const auto& [x, nr] : report.nr) out += ",nr@" + std::to_string(x);
    return out + "\n";
}

std::string csv_row(const MetricsReport& report) {
    std::string out = to_string(report.dcc);
    out += "," + (report.dicc ? to_string(*report.dicc) : std::string("-"));
    out += "," + to_string(report.apl);
    out += "," + std::to_string(report.so_max);
    out += "," + to_string(report.so_mean);
    out += "," + std::to_string(report.ns);
    for (const auto& [x, nr] : report.nr) out += "," + to_string(nr);
    return out + "\n";
}

std::string text_report(const MetricsReport& report) {
    std::string out;
    out += "dcc      " + to_string(report.dcc) + "\n";
    out += "dicc     " + (report.dicc ? to_string(*report.dicc) : std::string("-")) + "\n";
    out += "apl      " + to_string(report.apl) + "\n";
    out += "so_max   " + std::to_string(report.so_max) + "\n";
    out += "so_mean  " + to_string(report.so_mean) + "\n";
    out += "ns       " + std::to_string(report.ns) + "\n";
    for (const auto& [x, nr] : report.nr)
        out += "nr(x=" + std::to_string(x) + ")  " + to_string(nr) + "\n";
    return out;
}

std::string csv_comparison(const ComparisonReport& report) {
    std::string out = "scheme," + csv_header(report.graph_based);
    out += "graph_based," + csv_row(report.graph_based);
    out += "classical," + csv_row(report.classical);
    out += "delta," + to_string(report.dcc_delta) + ",-," +
           (report.apl_delta ? to_string(*report.apl_delta) : std::string("-")) + "," +
           std::to_string(report.so_max_delta) + "," + to_string(report.so_mean_delta) +
           "," + std::to_string(report.ns_delta);
    for (const auto& [x, d] : report.nr_delta) out += "," + to_string(d);
    return out + "\n";
}

std::string nr_table_csv(const MetricsReport& report) {
    std::string out = "x,nr\n";
    for (const auto& [x, nr] : report.nr)
        out += std::to_string(x) + "," + to_string(nr) + "\n";
    return out;
}

std::map<std::string, std::string> parse_config(std::istream& in) {
    std::map<std::string, std::string> config;
    LineReader reader{in};
    std::string line;
    while (reader.next(line)) {
        if (line.empty() || line[0] == '#') continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos) reader.fail("expected key=value");
        config[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return config;
}

std::map<std::string, std::string> read_config(const std::string& path) {
    return read_file(path, [](std::istream& in) { return parse_config(in); });
}

}  // namespace io
}  // namespace kps
