#ifndef DOUBLED_GRAPH_HPP
#define DOUBLED_GRAPH_HPP

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace doubled {

inline constexpr int kMaxVertices = 64;

/// All-ones mask for the first n vertices (safe for n == 64).
constexpr std::uint64_t vertex_mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// Simple undirected graph on labelled vertices 0..n-1, one bit row per
/// vertex.  Immutable by convention once built; every operation returns a
/// fresh value.  Supports at most 64 vertices so adjacency tests are single
/// word operations.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n) {
        if (n < 0 || n > kMaxVertices)
            throw std::invalid_argument("Graph: order out of range 0..64");
        adj_.fill(0);
    }

    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    /// Unpack from edge bits in column-major upper-triangle order, i.e. the
    /// pair sequence (0,1),(0,2),(1,2),(0,3),... used by graph6.  Only valid
    /// for n <= 11 (55 pair slots).
    static Graph from_edge_bits(int n, std::uint64_t bits);

    /// Pack into the same 55-bit layout.  Requires n <= 11.
    std::uint64_t edge_bits() const;

    int order() const { return n_; }

    int size() const {
        int m = 0;
        for (int v = 0; v < n_; ++v) m += __builtin_popcountll(adj_[v]);
        return m / 2;
    }

    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1; }

    std::uint64_t row(int v) const { return adj_[v]; }

    std::uint64_t all_mask() const { return vertex_mask(n_); }

    int degree(int v) const { return __builtin_popcountll(adj_[v]); }

    void add_edge(int u, int v) {
        check_pair(u, v);
        adj_[u] |= std::uint64_t{1} << v;
        adj_[v] |= std::uint64_t{1} << u;
    }

    void remove_edge(int u, int v) {
        check_pair(u, v);
        adj_[u] &= ~(std::uint64_t{1} << v);
        adj_[v] &= ~(std::uint64_t{1} << u);
    }

    Graph complement() const {
        Graph g(n_);
        const std::uint64_t full = all_mask();
        for (int v = 0; v < n_; ++v)
            g.adj_[v] = full & ~adj_[v] & ~(std::uint64_t{1} << v);
        return g;
    }

    /// Subgraph induced on the set bits of `subset`, vertices relabelled by
    /// ascending original label.
    Graph induced(std::uint64_t subset) const;

    /// Same, with the subset given as a vertex list.  Throws on an
    /// out-of-range vertex.
    Graph induced(std::span<const int> subset) const;

    Graph with_vertex_deleted(int v) const { return induced(all_mask() & ~(std::uint64_t{1} << v)); }

    /// Relabelled copy: vertex v becomes perm[v].  perm must be a
    /// permutation of 0..n-1.
    Graph relabeled(std::span<const int> perm) const;

    bool operator==(const Graph& o) const {
        if (n_ != o.n_) return false;
        for (int v = 0; v < n_; ++v)
            if (adj_[v] != o.adj_[v]) return false;
        return true;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        for (int v = 0; v < n_; ++v)
            for (int u = v + 1; u < n_; ++u)
                if (adjacent(v, u)) e.emplace_back(v, u);
        return e;
    }

private:
    void check_pair(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
            throw std::invalid_argument("Graph: bad vertex pair");
    }

    int n_ = 0;
    std::array<std::uint64_t, kMaxVertices> adj_{};
};

/// Thrown on malformed graph6 input; `offset` is the byte position of the
/// first offending byte.
class Graph6ParseError : public std::runtime_error {
public:
    Graph6ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Standard graph6 line (without trailing newline).
std::string graph6_encode(const Graph& g);

/// Decode one graph6 line.  Accepts the short (n <= 62) and the 4-byte
/// (n <= 64 here) headers; throws Graph6ParseError otherwise.
Graph graph6_decode(std::string_view text);

} // namespace doubled

#endif
