#ifndef DOUBLED_SAMPLING_HPP
#define DOUBLED_SAMPLING_HPP

#include <random>

#include "doubled/graph.hpp"

namespace doubled {

/// Seeded generator for the sampled sweeps.  Draws raw mt19937_64 words
/// only (the standard pins that sequence down to the bit), so identical
/// seeds give identical graphs on every platform; distribution shaping uses
/// plain modulo, whose slight bias is irrelevant here.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next() { return eng_(); }
    bool coin() { return next() & 1; }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

private:
    std::mt19937_64 eng_;
};

inline Graph random_graph(int n, Rng& rng) {
    Graph g(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (rng.coin()) g.add_edge(u, v);
    return g;
}

inline std::vector<int> random_permutation(int n, Rng& rng) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(rng.below(i + 1))]);
    return p;
}

inline Graph random_split_graph(int n, Rng& rng) {
    Graph g(n);
    const int k = rng.below(n + 1); // clique 0..k-1, stable set k..n-1
    for (int v = 1; v < k; ++v)
        for (int u = 0; u < v; ++u) g.add_edge(u, v);
    for (int v = k; v < n; ++v)
        for (int u = 0; u < k; ++u)
            if (rng.coin()) g.add_edge(u, v);
    return g;
}

/// Fully matched side (pairs 2i,2i+1), fully antimatched side, alignment
/// bits drawn per pair-pair: a uniform-ish double-split graph.
inline Graph random_double_split_graph(int pairs_a, int pairs_b, Rng& rng) {
    const int n = 2 * (pairs_a + pairs_b);
    Graph g(n);
    const int boff = 2 * pairs_a;
    for (int i = 0; i < pairs_a; ++i) g.add_edge(2 * i, 2 * i + 1);
    for (int x = boff; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if ((x ^ y) != 1 || (x & 1)) g.add_edge(x, y); // all but the pair mates
    for (int i = 0; i < pairs_a; ++i)
        for (int j = 0; j < pairs_b; ++j) {
            const int u = 2 * i, x = boff + 2 * j;
            if (rng.coin()) {
                g.add_edge(u, x);
                g.add_edge(u + 1, x + 1);
            } else {
                g.add_edge(u, x + 1);
                g.add_edge(u + 1, x);
            }
        }
    return g;
}

/// Random doubled graph on exactly n vertices: an induced subgraph of a
/// random double-split host.
inline Graph random_doubled_graph(int n, Rng& rng) {
    if (n == 0) return Graph(0);
    const int total_pairs = (n + 1) / 2 + rng.below(3);
    const int pa = rng.below(total_pairs + 1);
    Graph h = random_double_split_graph(pa, total_pairs - pa, rng);
    std::vector<int> perm = random_permutation(h.order(), rng);
    perm.resize(static_cast<std::size_t>(n));
    std::sort(perm.begin(), perm.end());
    return h.induced(perm);
}

} // namespace doubled

#endif
