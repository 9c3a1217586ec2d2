#include "hgdef/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace hgdef {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && line[pos] == ' ')
            ++pos;
        std::size_t start = pos;
        while (pos < line.size() && line[pos] != ' ')
            ++pos;
        if (pos > start)
            tokens.push_back(line.substr(start, pos - start));
    }
    return tokens;
}

long parse_int(std::string_view token, int line) {
    long value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
    return value;
}

bool is_comment(std::string_view line) {
    return line == "c" || line.substr(0, 2) == "c ";
}

} // namespace

Hypergraph parse_hypergraph(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            if (pos < text.size())
                lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }

    int line_no = 0;
    std::size_t idx = 0;

    auto next_significant = [&]() -> std::optional<std::string_view> {
        while (idx < lines.size()) {
            std::string_view line = lines[idx];
            ++idx;
            ++line_no;
            if (line.find('\r') != std::string_view::npos)
                throw ParseError(line_no, "carriage return found; LF line endings required");
            if (is_comment(line))
                continue;
            return line;
        }
        ++line_no;
        return std::nullopt;
    };

    auto header = next_significant();
    if (!header)
        throw ParseError(1, "missing header 'p hg <n_vertices> <n_edges>'");
    auto header_tokens = split_tokens(*header);
    if (header_tokens.size() != 4 || header_tokens[0] != "p" || header_tokens[1] != "hg")
        throw ParseError(line_no, "malformed header, expected 'p hg <n_vertices> <n_edges>'");
    long n = parse_int(header_tokens[2], line_no);
    long m = parse_int(header_tokens[3], line_no);
    if (n < 0 || m < 0)
        throw ParseError(line_no, "vertex and edge counts must be nonnegative");
    if (n > VertexSet::max_width)
        throw CapacityError("line " + std::to_string(line_no) +
                            ": at most 128 vertices supported, got " + std::to_string(n));

    std::vector<VertexSet> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long i = 0; i < m; ++i) {
        auto line = next_significant();
        if (!line)
            throw ParseError(line_no, "expected " + std::to_string(m) + " edge lines, found " +
                                          std::to_string(i));
        auto tokens = split_tokens(*line);
        if (tokens.empty() || tokens[0] != "e")
            throw ParseError(line_no, "expected an 'e' line");
        if (tokens.size() < 2)
            throw ParseError(line_no, "empty edge");
        VertexSet edge(static_cast<int>(n));
        long prev = 0;
        for (std::size_t t = 1; t < tokens.size(); ++t) {
            long v = parse_int(tokens[t], line_no);
            if (v < 1 || v > n)
                throw ParseError(line_no, "vertex " + std::to_string(v) +
                                              " out of range 1.." + std::to_string(n));
            if (v <= prev)
                throw ParseError(line_no, "vertices must be strictly increasing");
            prev = v;
            edge.add(static_cast<int>(v - 1));
        }
        edges.push_back(edge);
    }

    // Only comments may follow the declared edges.
    while (idx < lines.size()) {
        std::string_view line = lines[idx];
        ++idx;
        ++line_no;
        if (!is_comment(line))
            throw ParseError(line_no, "unexpected content after " + std::to_string(m) +
                                          " declared edges");
    }

    return Hypergraph(static_cast<int>(n), std::move(edges));
}

Hypergraph read_hypergraph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_hypergraph(buf.str());
}

std::string emit_hypergraph(const Hypergraph& h) {
    std::string out = "p hg " + std::to_string(h.n_vertices()) + " " +
                      std::to_string(h.n_edges()) + "\n";
    for (const auto& e : h.edges()) {
        out += 'e';
        for (int v : e.members()) {
            out += ' ';
            out += std::to_string(v + 1);
        }
        out += '\n';
    }
    return out;
}

void write_hypergraph_file(const Hypergraph& h, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw UsageError("cannot open file for writing: " + path);
    out << emit_hypergraph(h);
}

} // namespace hgdef
