#pragma once

#include <string>
#include <string_view>

#include "hgdef/hypergraph.hpp"

namespace hgdef {

// Text file format (UTF-8, LF endings):
//   p hg <n_vertices> <n_edges>
//   e <v1> <v2> ... <vk>          one line per edge, 1-based, strictly increasing
// Lines starting with "c " are comments and may appear anywhere.

/// Parse the text form. Errors carry the offending 1-based line number.
Hypergraph parse_hypergraph(std::string_view text);

/// Read and parse a file.
Hypergraph read_hypergraph_file(const std::string& path);

/// Canonical text form: header, then one "e" line per edge in stored order,
/// no comments. parse_hypergraph(emit_hypergraph(h)) == h.
std::string emit_hypergraph(const Hypergraph& h);

void write_hypergraph_file(const Hypergraph& h, const std::string& path);

} // namespace hgdef
