#ifndef POLYTUPLE_IO_HPP
#define POLYTUPLE_IO_HPP

#include <string>
#include <vector>

#include "polytuple/coloring.hpp"
#include "polytuple/hypergraph.hpp"
#include "polytuple/lll.hpp"
#include "polytuple/nets.hpp"
#include "polytuple/points.hpp"
#include "polytuple/search.hpp"

namespace polytuple {

// JSON text forms. Writers emit deterministic field order and compact bodies;
// readers validate shapes and index ranges, reporting input_error on anything
// malformed. write-then-read is the identity on every format.

std::string points_to_json(const PointSet& points);
PointSet points_from_json(const std::string& text);

std::string hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const std::string& text);

// Entries are rows [v_1, ..., v_t, color] sorted lexicographically by tuple.
std::string coloring_to_json(const TupleColoring& coloring);
TupleColoring coloring_from_json(const std::string& text);

std::string report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const std::string& text);

// Stores the class of every tuple in lex-rank order; the ground set size is
// recovered from the array length.
std::string decomposition_to_json(const NetDecomposition& nets);
NetDecomposition decomposition_from_json(const std::string& text);

// One JSON record per line: {"round":..,"event":..,"pairs_resampled":..}.
std::string resample_log_to_text(const std::vector<ResampleRecord>& log);
std::vector<ResampleRecord> resample_log_from_text(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace polytuple

#endif  // POLYTUPLE_IO_HPP
