#include "doubled/graph.hpp"

namespace doubled {

Graph Graph::from_edge_bits(int n, std::uint64_t bits) {
    if (n > 11) throw std::invalid_argument("from_edge_bits: n > 11");
    Graph g(n);
    int p = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++p)
            if ((bits >> p) & 1) g.add_edge(u, v);
    return g;
}

std::uint64_t Graph::edge_bits() const {
    if (n_ > 11) throw std::invalid_argument("edge_bits: n > 11");
    std::uint64_t bits = 0;
    int p = 0;
    for (int v = 1; v < n_; ++v)
        for (int u = 0; u < v; ++u, ++p)
            if (adjacent(u, v)) bits |= std::uint64_t{1} << p;
    return bits;
}

Graph Graph::induced(std::uint64_t subset) const {
    subset &= all_mask();
    int map[kMaxVertices];
    int k = 0;
    for (int v = 0; v < n_; ++v)
        if ((subset >> v) & 1) map[v] = k++;
    Graph g(k);
    for (int v = 0; v < n_; ++v) {
        if (!((subset >> v) & 1)) continue;
        std::uint64_t nb = adj_[v] & subset;
        while (nb) {
            int u = __builtin_ctzll(nb);
            nb &= nb - 1;
            if (u > v) g.add_edge(map[v], map[u]);
        }
    }
    return g;
}

Graph Graph::induced(std::span<const int> subset) const {
    std::uint64_t mask = 0;
    for (int v : subset) {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("induced: vertex out of range");
        mask |= std::uint64_t{1} << v;
    }
    return induced(mask);
}

Graph Graph::relabeled(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("relabeled: permutation size mismatch");
    Graph g(n_);
    for (int v = 0; v < n_; ++v)
        for (int u = v + 1; u < n_; ++u)
            if (adjacent(u, v)) g.add_edge(perm[u], perm[v]);
    return g;
}

namespace {

constexpr int kG6Min = 63;  // '?'
constexpr int kG6Max = 126; // '~'

} // namespace

std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Min));
    } else {
        // 4-byte header: '~' then n in three 6-bit groups, high first.
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Min));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Min));
        out.push_back(static_cast<char>((n & 63) + kG6Min));
    }
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kG6Min));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0)
        out.push_back(static_cast<char>((acc << (6 - nbits)) + kG6Min));
    return out;
}

Graph graph6_decode(std::string_view text) {
    std::size_t pos = 0;
    auto need = [&](std::size_t k) {
        if (text.size() < pos + k)
            throw Graph6ParseError("graph6: truncated input", text.size());
    };
    auto val = [&](std::size_t i) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < kG6Min || c > kG6Max)
            throw Graph6ParseError("graph6: byte out of printable range", i);
        return static_cast<int>(c) - kG6Min;
    };

    need(1);
    long n;
    if (text[0] == '~') {
        need(4);
        if (text[1] == '~')
            throw Graph6ParseError("graph6: 8-byte order header not supported", 1);
        n = (long(val(1)) << 12) | (long(val(2)) << 6) | val(3);
        pos = 4;
    } else {
        n = val(0);
        pos = 1;
    }
    if (n > kMaxVertices)
        throw Graph6ParseError("graph6: order " + std::to_string(n) + " exceeds 64", 0);

    Graph g(static_cast<int>(n));
    const long nbits = n * (n - 1) / 2;
    const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (text.size() != pos + nbytes)
        throw Graph6ParseError("graph6: body length mismatch, expected " +
                                   std::to_string(pos + nbytes) + " bytes got " +
                                   std::to_string(text.size()),
                               text.size() < pos + nbytes ? text.size() : pos + nbytes);

    long bit = 0;
    int u = 0, v = 1;
    for (std::size_t i = pos; i < text.size(); ++i) {
        const int x = val(i);
        for (int k = 5; k >= 0; --k, ++bit) {
            const int b = (x >> k) & 1;
            if (bit >= nbits) {
                if (b) throw Graph6ParseError("graph6: nonzero padding bits", i);
                continue;
            }
            if (b) g.add_edge(u, v);
            if (++u == v) {
                u = 0;
                ++v;
            }
        }
    }
    return g;
}

} // namespace doubled
