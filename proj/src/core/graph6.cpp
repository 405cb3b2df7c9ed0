#include "core/graph6.hpp"

#include <cstdint>

namespace mostar {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr long long kMaxOrder = 68719476735LL;  // 2^36 - 1

void append_sextets(std::string& out, std::uint64_t value, int sextets) {
    for (int s = sextets - 1; s >= 0; --s)
        out.push_back(static_cast<char>(((value >> (6 * s)) & 63) + 63));
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    long long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        append_sextets(out, static_cast<std::uint64_t>(n), 3);
    } else if (n <= kMaxOrder) {
        out.push_back(126);
        out.push_back(126);
        append_sextets(out, static_cast<std::uint64_t>(n), 6);
    } else {
        throw DomainError("graph too large for graph6");
    }

    int bit = 0;
    int acc = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bit == 6) {
                out.push_back(static_cast<char>(acc + 63));
                bit = 0;
                acc = 0;
            }
        }
    }
    if (bit > 0) out.push_back(static_cast<char>((acc << (6 - bit)) + 63));
    return out;
}

Graph graph6_decode(std::string_view line) {
    size_t base = 0;
    if (line.substr(0, kHeader.size()) == kHeader) base = kHeader.size();
    std::string_view body = line.substr(base);

    auto sextet = [&](size_t pos) -> int {
        if (pos >= body.size()) throw ParseError("truncated graph6 line", base + body.size());
        unsigned char c = static_cast<unsigned char>(body[pos]);
        if (c < 63 || c > 126) throw ParseError("byte out of graph6 range", base + pos);
        return c - 63;
    };

    if (body.empty()) throw ParseError("empty graph6 line", base);
    size_t pos = 0;
    long long n = 0;
    if (sextet(0) < 63) {
        n = sextet(0);
        pos = 1;
    } else if (body.size() >= 2 && sextet(1) < 63) {
        n = 0;
        for (size_t k = 1; k <= 3; ++k) n = (n << 6) | sextet(k);
        pos = 4;
    } else {
        sextet(1);  // range-check the second escape byte
        n = 0;
        for (size_t k = 2; k <= 7; ++k) n = (n << 6) | sextet(k);
        pos = 8;
    }
    if (n > 100000) throw ParseError("graph6 order too large to materialize", base);

    long long nbits = n * (n - 1) / 2;
    size_t need = static_cast<size_t>((nbits + 5) / 6);
    if (body.size() - pos < need) throw ParseError("truncated graph6 line", base + body.size());
    if (body.size() - pos > need) throw ParseError("trailing data after graph6 payload", base + pos + need);

    std::vector<Edge> edges;
    long long bit = 0;
    int acc = 0;
    int have = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (have == 0) {
                acc = sextet(pos++);
                have = 6;
            }
            if (acc & (1 << (have - 1))) edges.push_back({i, j});
            --have;
        }
    }
    if (have > 0 && (acc & ((1 << have) - 1)) != 0)
        throw ParseError("nonzero padding bits", base + pos - 1);
    return Graph(static_cast<int>(n), std::move(edges));
}

}  // namespace mostar
