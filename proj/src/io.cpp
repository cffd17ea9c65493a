#include "polytuple/io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "polytuple/combinatorics.hpp"
#include "polytuple/errors.hpp"

namespace polytuple {
namespace {

using Json = nlohmann::ordered_json;

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("malformed JSON: ") + e.what());
    }
}

// Fetches an integral field, rejecting floats, negatives, and overflow.
uint64_t get_count(const Json& j, const char* key) {
    if (!j.contains(key)) throw input_error(std::string("missing field \"") + key + "\"");
    const Json& v = j.at(key);
    if (!v.is_number_integer() || (v.is_number_integer() && v.get<int64_t>() < 0))
        throw input_error(std::string("field \"") + key + "\" must be a nonnegative integer");
    return v.get<uint64_t>();
}

int64_t get_int(const Json& v, const char* what) {
    if (!v.is_number_integer())
        throw input_error(std::string(what) + " must be an integer");
    return v.get<int64_t>();
}

const Json& get_array(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array())
        throw input_error(std::string("missing array field \"") + key + "\"");
    return j.at(key);
}

}  // namespace

std::string points_to_json(const PointSet& points) {
    Json j;
    j["dim"] = points.dim;
    Json coords = Json::array();
    for (const auto& pt : points.coords) coords.push_back(pt);
    j["coords"] = std::move(coords);
    return j.dump();
}

PointSet points_from_json(const std::string& text) {
    const Json j = parse(text);
    const uint64_t dim = get_count(j, "dim");
    if (dim == 0 || dim > 64) throw input_error("dimension out of range");
    std::vector<std::vector<Coord>> coords;
    for (const Json& row : get_array(j, "coords")) {
        if (!row.is_array()) throw input_error("each point must be an array");
        std::vector<Coord> pt;
        for (const Json& c : row) pt.push_back(get_int(c, "coordinate"));
        coords.push_back(std::move(pt));
    }
    return PointSet::make(static_cast<uint32_t>(dim), std::move(coords));
}

std::string hypergraph_to_json(const Hypergraph& h) {
    Json j;
    j["n"] = h.n;
    Json edges = Json::array();
    for (const Edge& e : h.edges) edges.push_back(e);
    j["edges"] = std::move(edges);
    if (h.has_generators()) {
        Json gens = Json::array();
        for (const auto& g : h.generators) gens.push_back(g);
        j["generators"] = std::move(gens);
    }
    return j.dump();
}

Hypergraph hypergraph_from_json(const std::string& text) {
    const Json j = parse(text);
    const uint64_t n = get_count(j, "n");
    if (n > UINT32_MAX) throw input_error("ground set too large");
    std::vector<Edge> edges;
    for (const Json& row : get_array(j, "edges")) {
        if (!row.is_array()) throw input_error("each edge must be an array");
        Edge e;
        for (const Json& v : row) {
            const int64_t vertex = get_int(v, "vertex");
            if (vertex < 0) throw input_error("vertex indices are nonnegative");
            e.push_back(static_cast<Vertex>(vertex));
        }
        edges.push_back(std::move(e));
    }
    std::vector<std::vector<uint32_t>> generators;
    if (j.contains("generators")) {
        for (const Json& row : get_array(j, "generators")) {
            if (!row.is_array()) throw input_error("each generator must be an array");
            std::vector<uint32_t> g;
            for (const Json& v : row) {
                const int64_t idx = get_int(v, "generator index");
                if (idx < 0) throw input_error("generator indices are nonnegative");
                g.push_back(static_cast<uint32_t>(idx));
            }
            generators.push_back(std::move(g));
        }
    }
    // normalized() validates ranges and restores canonical order.
    return Hypergraph::normalized(static_cast<uint32_t>(n), std::move(edges),
                                  std::move(generators));
}

std::string coloring_to_json(const TupleColoring& coloring) {
    coloring.validate();
    Json j;
    j["n"] = coloring.n;
    j["t"] = coloring.t;
    j["k"] = coloring.k;
    Json entries = Json::array();
    std::vector<uint32_t> tuple = first_combination(coloring.t);
    uint64_t rank = 0;
    if (!coloring.colors.empty()) {
        do {
            Json row = Json::array();
            for (const uint32_t v : tuple) row.push_back(v);
            row.push_back(coloring.colors[rank]);
            entries.push_back(std::move(row));
            ++rank;
        } while (next_combination(coloring.n, tuple));
    }
    j["entries"] = std::move(entries);
    return j.dump();
}

TupleColoring coloring_from_json(const std::string& text) {
    const Json j = parse(text);
    const uint64_t n = get_count(j, "n");
    const uint64_t t = get_count(j, "t");
    const uint64_t k = get_count(j, "k");
    if (n > UINT32_MAX || t > UINT32_MAX || k > UINT32_MAX)
        throw input_error("coloring header out of range");
    TupleColoring coloring{static_cast<uint32_t>(n), static_cast<uint32_t>(t),
                           static_cast<uint32_t>(k), {}};
    const Json& entries = get_array(j, "entries");
    const uint64_t total = binom(n, t);
    if (total == binom_saturated || entries.size() != total)
        throw input_error("coloring entry count does not match the tuple space");
    coloring.colors.resize(entries.size());
    std::vector<uint32_t> expected = first_combination(static_cast<uint32_t>(t));
    uint64_t rank = 0;
    for (const Json& row : entries) {
        if (!row.is_array() || row.size() != t + 1)
            throw input_error("each entry must list t vertices and a color");
        for (uint64_t i = 0; i < t; ++i) {
            const int64_t v = get_int(row[i], "tuple member");
            if (v < 0 || static_cast<uint64_t>(v) != expected[i])
                throw input_error("entries must cover all tuples in lex order");
        }
        const int64_t color = get_int(row[t], "color");
        if (color < 0 || static_cast<uint64_t>(color) >= k)
            throw input_error("color out of range");
        coloring.colors[rank] = static_cast<uint32_t>(color);
        ++rank;
        next_combination(static_cast<uint32_t>(n), expected);
    }
    coloring.validate();
    return coloring;
}

std::string report_to_json(const VerificationReport& report) {
    Json j;
    j["ok"] = report.ok;
    j["f"] = report.f;
    Json violations = Json::array();
    for (const Violation& v : report.violations) {
        Json item;
        item["edge"] = v.edge;
        item["missing_colors"] = v.missing_colors;
        violations.push_back(std::move(item));
    }
    j["violations"] = std::move(violations);
    j["stats"] = Json{{"edges_checked", report.edges_checked}, {"nodes", report.nodes}};
    return j.dump();
}

VerificationReport report_from_json(const std::string& text) {
    const Json j = parse(text);
    if (!j.contains("ok") || !j.at("ok").is_boolean())
        throw input_error("missing boolean field \"ok\"");
    VerificationReport report;
    report.ok = j.at("ok").get<bool>();
    report.f = static_cast<uint32_t>(get_count(j, "f"));
    for (const Json& item : get_array(j, "violations")) {
        Violation v;
        for (const Json& u : get_array(item, "edge"))
            v.edge.push_back(static_cast<Vertex>(get_int(u, "vertex")));
        for (const Json& c : get_array(item, "missing_colors"))
            v.missing_colors.push_back(static_cast<uint32_t>(get_int(c, "color")));
        report.violations.push_back(std::move(v));
    }
    if (!j.contains("stats")) throw input_error("missing field \"stats\"");
    report.edges_checked = get_count(j.at("stats"), "edges_checked");
    report.nodes = get_count(j.at("stats"), "nodes");
    return report;
}

std::string decomposition_to_json(const NetDecomposition& nets) {
    Json j;
    j["eps"] = rational_to_double(nets.eps);
    j["t"] = nets.t;
    j["k"] = nets.k;
    j["classes"] = nets.coloring.colors;
    return j.dump();
}

NetDecomposition decomposition_from_json(const std::string& text) {
    const Json j = parse(text);
    if (!j.contains("eps") || !j.at("eps").is_number())
        throw input_error("missing numeric field \"eps\"");
    NetDecomposition nets;
    nets.eps = rational_from_double(j.at("eps").get<double>());
    if (nets.eps <= 0 || nets.eps >= 1) throw input_error("eps must lie strictly between 0 and 1");
    nets.t = static_cast<uint32_t>(get_count(j, "t"));
    nets.k = get_count(j, "k");
    if (nets.t == 0 || nets.k == 0) throw input_error("t and k must be positive");
    const Json& classes = get_array(j, "classes");
    if (classes.empty()) throw input_error("decomposition covers no tuples");
    // The ground set size is the unique n with C(n, t) entries.
    uint64_t n = nets.t;
    while (binom(n, nets.t) < classes.size()) ++n;
    if (binom(n, nets.t) != classes.size() || n > UINT32_MAX)
        throw input_error("class list length is not C(n, t) for any n");
    nets.coloring.n = static_cast<uint32_t>(n);
    nets.coloring.t = nets.t;
    nets.coloring.k = static_cast<uint32_t>(nets.k);
    for (const Json& c : classes) {
        const int64_t cls = get_int(c, "class index");
        if (cls < 0 || static_cast<uint64_t>(cls) >= nets.k)
            throw input_error("class index out of range");
        nets.coloring.colors.push_back(static_cast<uint32_t>(cls));
    }
    nets.classes.resize(nets.k);
    std::vector<uint32_t> tuple = first_combination(nets.t);
    for (const uint32_t cls : nets.coloring.colors) {
        nets.classes[cls].push_back(tuple);
        next_combination(nets.coloring.n, tuple);
    }
    return nets;
}

std::string resample_log_to_text(const std::vector<ResampleRecord>& log) {
    std::string out;
    for (const ResampleRecord& record : log) {
        Json j;
        j["round"] = record.round;
        j["event"] = record.event;
        j["pairs_resampled"] = record.pairs_resampled;
        out += j.dump();
        out += '\n';
    }
    return out;
}

std::vector<ResampleRecord> resample_log_from_text(const std::string& text) {
    std::vector<ResampleRecord> log;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
        if (line.empty()) continue;
        const Json j = parse(line);
        log.push_back({get_count(j, "round"), get_count(j, "event"),
                       get_count(j, "pairs_resampled")});
    }
    return log;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw input_error("short write to " + path);
}

}  // namespace polytuple
