#include "planturan/graph6.hpp"

#include <vector>

namespace planturan {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void encode_size(std::string & out, std::uint64_t n)
{
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    }
    else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
}

int sextet(char c)
{
    int v = static_cast<unsigned char>(c) - 63;
    if (v < 0 || v > 63)
        throw Graph6Error(std::string("invalid graph6 character '") + c + "'");
    return v;
}

}

std::string to_graph6(const Graph & g)
{
    std::string out;
    const std::uint64_t n = static_cast<std::uint64_t>(g.vertex_count());
    encode_size(out, n);
    int acc = 0, bits = 0;
    for (int j = 1; j < g.vertex_count(); ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = bits = 0;
            }
        }
    if (bits > 0)
        out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
}

Graph from_graph6(std::string_view text)
{
    if (text.starts_with(kHeader))
        text.remove_prefix(kHeader.size());
    while (! text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty())
        throw Graph6Error("empty graph6 string");

    std::size_t pos = 0;
    std::uint64_t n = 0;
    if (text[0] != 126) {
        n = sextet(text[0]);
        pos = 1;
    }
    else if (text.size() >= 2 && text[1] != 126) {
        if (text.size() < 4)
            throw Graph6Error("truncated graph6 size field");
        for (std::size_t i = 1; i <= 3; ++i)
            n = (n << 6) | sextet(text[i]);
        pos = 4;
    }
    else {
        if (text.size() < 8)
            throw Graph6Error("truncated graph6 size field");
        for (std::size_t i = 2; i <= 7; ++i)
            n = (n << 6) | sextet(text[i]);
        pos = 8;
    }
    if (n > 100000)
        throw Graph6Error("graph6 vertex count " + std::to_string(n) + " is too large");

    const std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t expected = (pairs + 5) / 6;
    if (text.size() - pos != expected)
        throw Graph6Error("graph6 body has " + std::to_string(text.size() - pos) + " characters, expected " +
                          std::to_string(expected));

    std::vector<Edge> edges;
    std::uint64_t k = 0;
    for (int j = 1; j < static_cast<int>(n); ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int c = sextet(text[pos + k / 6]);
            if ((c >> (5 - k % 6)) & 1)
                edges.emplace_back(i, j);
        }
    if (k % 6 != 0) {
        int c = sextet(text[pos + k / 6]);
        if (c & ((1 << (6 - k % 6)) - 1))
            throw Graph6Error("graph6 padding bits are not zero");
    }
    return Graph::build(static_cast<int>(n), edges);
}

}
