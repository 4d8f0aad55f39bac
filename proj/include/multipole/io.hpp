#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "multipole/graph.hpp"

namespace multipole::io {

// graph6 / sparse6 as produced by nauty's geng and showg. A leading ">>graph6<<" or
// ">>sparse6<<" header is accepted; trailing newline characters are ignored.
SimpleGraph parse_graph6(std::string_view text);
std::string serialize_graph6(const SimpleGraph& g);
SimpleGraph parse_sparse6(std::string_view text);
// Dispatches on the leading ':' of sparse6.
SimpleGraph parse_graph(std::string_view text);

// Reads every non-empty line of a graph6/sparse6 file. The name of each instance is the
// file stem, suffixed with the line index when the file holds several graphs.
std::vector<GraphInstance> read_graph_file(const std::string& path);

// Line-oriented multipole text format:
//   mpole 1 / k <k> / vertices <n> / semi <c_0> ... / edges / <u> <v> ... / end
Multipole parse_mpole(std::string_view text);
std::string serialize_mpole(const Multipole& m);

Multipole read_mpole_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);

}  // namespace multipole::io
