#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace sc {

/// Standard graph6: size word N(n), then the upper triangle of the
/// adjacency matrix column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...)
/// packed big-endian into 6-bit groups, each offset by 63.
inline std::string g6_encode(const Graph& g) {
    const std::size_t n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
    unsigned group = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1U : 0U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + group));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
    return out;
}

/// Decodes one graph6 string. An optional ">>graph6<<" header and a
/// trailing newline are tolerated; byte offsets in errors count from the
/// start of `text`.
inline Graph g6_decode(std::string_view text) {
    std::size_t pos = 0;
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header)) pos = header.size();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

    auto fail = [&](std::size_t at, const std::string& why) -> Error {
        return Error(Errc::MalformedG6, why + " at byte " + std::to_string(at));
    };
    auto sextet = [&](std::size_t at) -> unsigned {
        if (at >= text.size()) throw fail(at, "unexpected end of input");
        const auto c = static_cast<unsigned char>(text[at]);
        if (c < 63 || c > 126) throw fail(at, "byte " + std::to_string(c) + " outside 63..126");
        return c - 63U;
    };

    std::size_t n = 0;
    if (pos >= text.size()) throw fail(pos, "empty graph6 string");
    if (static_cast<unsigned char>(text[pos]) == 126) {
        if (pos + 1 < text.size() && static_cast<unsigned char>(text[pos + 1]) == 126) {
            for (std::size_t k = 0; k < 6; ++k) n = (n << 6) | sextet(pos + 2 + k);
            pos += 8;
        } else {
            for (std::size_t k = 0; k < 3; ++k) n = (n << 6) | sextet(pos + 1 + k);
            pos += 4;
        }
    } else {
        n = sextet(pos);
        pos += 1;
    }
    if (n > (std::size_t{1} << 20)) throw fail(0, "graph order " + std::to_string(n) + " too large");

    const std::size_t bits = n * (n > 0 ? n - 1 : 0) / 2;
    const std::size_t body = (bits + 5) / 6;
    if (text.size() - pos != body)
        throw fail(text.size() < pos + body ? text.size() : pos + body,
                   "expected " + std::to_string(body) + " data bytes, found " + std::to_string(text.size() - pos));

    Graph g(n);
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const unsigned value = sextet(pos + k / 6);
            if ((value >> (5 - k % 6)) & 1U) g.add_edge(i, j);
        }
    }
    if (bits % 6 != 0) {
        const unsigned last = sextet(pos + body - 1);
        const unsigned pad_mask = (1U << (6 - bits % 6)) - 1;
        if ((last & pad_mask) != 0) throw fail(pos + body - 1, "nonzero padding bits");
    }
    return g;
}

/// Decodes every non-empty line of a graph6 file.
inline std::vector<Graph> g6_decode_lines(std::string_view text) {
    std::vector<Graph> out;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty()) {
            try {
                out.push_back(g6_decode(line));
            } catch (const Error& e) {
                throw Error(Errc::MalformedG6, e.detail() + " (line starting at byte " +
                                                   std::to_string(start) + ")");
            }
        }
        start = end + 1;
    }
    return out;
}

} // namespace sc
