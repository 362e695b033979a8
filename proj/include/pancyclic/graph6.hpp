#pragma once

// graph6 encoding: one header byte n+63 (or '~' plus three 6-bit bytes for
// 63 <= n <= 64), followed by the upper triangle in column-major order
// (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed six bits per byte, most
// significant bit first, zero padded, each byte offset by 63.

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pancyclic/error.hpp"
#include "pancyclic/graph.hpp"

namespace pancyclic::graph6 {

inline constexpr std::string_view kHeader = ">>graph6<<";

inline std::string encode(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + 63));
        out.push_back(static_cast<char>((n & 0x3f) + 63));
    }
    int acc = 0;
    int nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

/// Decodes one graph6 string. Accepts an optional ">>graph6<<" prefix and
/// trailing CR/LF. Nonzero padding bits are rejected so that
/// encode(decode(s)) == s for every accepted s.
inline Graph decode(std::string_view text) {
    std::size_t base = 0;
    if (text.substr(0, kHeader.size()) == kHeader) base = kHeader.size();
    std::string_view s = text.substr(base);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    if (s.empty()) throw ParseError("empty graph6 string", base);

    auto value = [&](std::size_t pos) -> int {
        auto c = static_cast<unsigned char>(s[pos]);
        if (c < 63 || c > 126) {
            throw ParseError("byte " + std::to_string(static_cast<int>(c)) + " outside graph6 range 63..126",
                             base + pos);
        }
        return c - 63;
    };

    int n = 0;
    std::size_t pos = 0;
    if (s[0] == '~') {
        if (s.size() < 4) throw ParseError("truncated long-form header", base + s.size());
        if (s[1] == '~') throw ParseError("order exceeds 64", base + 1);
        n = (value(1) << 12) | (value(2) << 6) | value(3);
        if (n < 63) throw ParseError("long-form header used for order below 63", base);
        pos = 4;
    } else {
        n = value(0);
        pos = 1;
    }
    if (n < 1) throw ParseError("graph order must be at least 1", base);
    if (n > kMaxOrder) throw ParseError("order " + std::to_string(n) + " exceeds 64", base);

    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (s.size() != pos + bytes) {
        std::size_t where = s.size() < pos + bytes ? s.size() : pos + bytes;
        throw ParseError("expected " + std::to_string(bytes) + " adjacency bytes, found " +
                             std::to_string(s.size() - pos),
                         base + where);
    }

    std::vector<VertexSet> rows(static_cast<std::size_t>(n), 0);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int byte = value(pos + k / 6);
            if ((byte >> (5 - static_cast<int>(k % 6))) & 1) {
                rows[static_cast<std::size_t>(i)] |= bit(j);
                rows[static_cast<std::size_t>(j)] |= bit(i);
            }
        }
    }
    if (bits % 6 != 0) {
        std::size_t last = pos + bytes - 1;
        int pad = static_cast<int>(6 - bits % 6);
        if (value(last) & ((1 << pad) - 1)) throw ParseError("nonzero padding bits", base + last);
    }
    return Graph::from_rows(n, rows);
}

/// Edge-list text: the first non-comment line holds n, each following
/// non-empty line holds "u v" (0-based). '#' starts a comment.
inline Graph parse_edge_list(std::string_view text) {
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        std::string_view line = text.substr(line_start, line_end - line_start);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        std::vector<long> fields;
        std::size_t i = 0;
        while (i < line.size()) {
            char c = line[i];
            if (c == ' ' || c == '\t' || c == '\r' || c == ',') {
                ++i;
                continue;
            }
            if (c < '0' || c > '9') throw ParseError(std::string("unexpected character '") + c + "'", line_start + i);
            long v = 0;
            while (i < line.size() && line[i] >= '0' && line[i] <= '9') {
                v = v * 10 + (line[i] - '0');
                if (v > 1'000'000) throw ParseError("number too large", line_start + i);
                ++i;
            }
            fields.push_back(v);
        }
        if (!fields.empty()) {
            if (n < 0) {
                if (fields.size() != 1) throw ParseError("first line must hold only the vertex count", line_start);
                if (fields[0] < 1 || fields[0] > kMaxOrder) throw ParseError("vertex count outside 1..64", line_start);
                n = static_cast<int>(fields[0]);
            } else {
                if (fields.size() != 2) throw ParseError("edge line must hold exactly two vertices", line_start);
                if (fields[0] >= n || fields[1] >= n) throw ParseError("edge endpoint outside 0..n-1", line_start);
                if (fields[0] == fields[1]) throw ParseError("self-loop", line_start);
                edges.emplace_back(static_cast<int>(fields[0]), static_cast<int>(fields[1]));
            }
        }
        if (line_end == text.size()) break;
        line_start = line_end + 1;
    }
    if (n < 0) throw ParseError("no vertex count found", 0);
    return Graph::from_edges(n, edges);
}

/// Parses graph input that is either a graph6 string or an edge list.
/// Edge lists are recognised by a leading digit, which is never a valid
/// graph6 header byte.
inline Graph parse_graph(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size() && (text[i] == ' ' || text[i] == '\n' || text[i] == '\r' || text[i] == '\t')) ++i;
    if (i < text.size() && (text[i] == '#' || (text[i] >= '0' && text[i] <= '9'))) return parse_edge_list(text);
    std::string_view rest = text.substr(i);
    auto nl = rest.find('\n');
    auto line = rest.substr(0, nl);
    while (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    try {
        return decode(line);
    } catch (const ParseError& e) {
        throw ParseError(e.detail(), e.offset() + i);
    }
}

struct Record {
    std::size_t line;  // 1-based
    Graph graph;
};

/// Reads a stream of graph6 lines (blank lines and a leading ">>graph6<<"
/// are skipped). Parse errors are rethrown with the line number prefixed.
template <class Callback>
std::size_t read_stream(std::istream& in, Callback&& on_graph) {
    std::string line;
    std::size_t line_no = 0;
    std::size_t count = 0;
    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            on_graph(Record{line_no, decode(line)});
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.detail(), e.offset());
        }
        ++count;
    }
    if (in.bad()) throw Error("I/O error after " + std::to_string(line_no) + " lines");
    return count;
}

}  // namespace pancyclic::graph6
