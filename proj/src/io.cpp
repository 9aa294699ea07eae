#include "kiso/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "kiso/errors.hpp"

namespace kiso {

namespace {

bool parse_int(std::string_view tok, long long& out) {
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc() && ptr == tok.data() + tok.size();
}

} // namespace

Graph parse_edge_list(std::istream& in) {
    std::vector<long long> values;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string tok;
        while (ss >> tok) {
            long long x;
            if (!parse_int(tok, x))
                throw GraphError("line " + std::to_string(lineno) + ": not an integer: '" + tok + "'");
            values.push_back(x);
        }
    }
    if (values.empty()) throw GraphError("empty edge list: missing vertex count");
    if (values[0] < 0 || values[0] > 10'000'000) throw GraphError("vertex count out of range");
    if ((values.size() - 1) % 2 != 0) throw GraphError("edge list has an unpaired endpoint");
    std::vector<Edge> edges;
    for (std::size_t i = 1; i + 1 < values.size(); i += 2) {
        auto u = values[i], v = values[i + 1];
        if (u < 0 || v < 0 || u >= values[0] || v >= values[0])
            throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint outside [0," +
                             std::to_string(values[0]) + ")");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return build_graph(static_cast<int>(values[0]), edges);
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.order() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph decode_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    auto first = text.find_first_not_of(" \t\r\n");
    auto last = text.find_last_not_of(" \t\r\n");
    if (first == std::string_view::npos) throw GraphError("empty graph6 string");
    text = text.substr(first, last - first + 1);
    if (text.starts_with(header)) text.remove_prefix(header.size());

    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= text.size()) throw GraphError("truncated graph6 string");
        int c = static_cast<unsigned char>(text[pos++]);
        if (c < 63 || c > 126) throw GraphError("invalid graph6 character");
        return c - 63;
    };
    long long n = next();
    if (n == 63) {
        if (pos < text.size() && text[pos] == '~') throw GraphError("graph6 orders above 258047 are not supported");
        n = 0;
        for (int i = 0; i < 3; ++i) n = (n << 6) | next();
    }
    std::vector<Edge> edges;
    int bit = 6, cur = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (bit == 6) {
                cur = next();
                bit = 0;
            }
            if (cur & (1 << (5 - bit))) edges.emplace_back(i, j);
            ++bit;
        }
    }
    if (pos != text.size()) throw GraphError("trailing characters after graph6 data");
    return build_graph(static_cast<int>(n), edges);
}

std::string encode_graph6(const Graph& g) {
    std::string out;
    const int n = g.order();
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int bit = 0, cur = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (g.adjacent(i, j)) cur |= 1 << (5 - bit);
            if (++bit == 6) {
                out.push_back(static_cast<char>(cur + 63));
                bit = cur = 0;
            }
        }
    }
    if (bit > 0) out.push_back(static_cast<char>(cur + 63));
    return out;
}

VertexSet parse_vertex_list(std::string_view text) {
    VertexSet out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        auto b = tok.find_first_not_of(" \t");
        if (b != std::string_view::npos) {
            tok = tok.substr(b, tok.find_last_not_of(" \t") - b + 1);
            long long x;
            if (!parse_int(tok, x) || x < 0 || x > 1'000'000'000)
                throw GraphError("bad vertex in set: '" + std::string(tok) + "'");
            out.push_back(static_cast<Vertex>(x));
        } else if (comma != std::string_view::npos) {
            throw GraphError("empty entry in vertex list");
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string format_vertex_list(std::span<const Vertex> set) {
    std::string out;
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(set[i]);
    }
    return out;
}

} // namespace kiso
