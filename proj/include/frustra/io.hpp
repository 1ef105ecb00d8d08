#ifndef FRUSTRA_IO_HPP
#define FRUSTRA_IO_HPP

#include <string>
#include <vector>

#include "frustra/graph.hpp"

namespace frustra {

// Parses whitespace/comma-separated edge-list text, one sentiment per line:
//   source target value
// Lines starting with '#' and blank lines are skipped; extra trailing
// columns (e.g. timestamps) are ignored. Throws ParseError with the
// offending line number.
std::vector<RawSentiment> parse_sentiments(const std::string& text);
std::vector<RawSentiment> load_sentiments(const std::string& path);

// Canonical edge-list export: `u v sign` with original labels, u < v,
// lines sorted by (u, v). Re-ingesting the export reproduces the graph.
std::string export_edge_list(const SignedGraph& g);

} // namespace frustra

#endif
