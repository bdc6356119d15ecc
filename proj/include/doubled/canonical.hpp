#ifndef DOUBLED_CANONICAL_HPP
#define DOUBLED_CANONICAL_HPP

#include <compare>
#include <cstdint>
#include <vector>

#include "doubled/graph.hpp"

namespace doubled {

/// Permutation-invariant code: the lexicographically least adjacency bit
/// string (column-major upper-triangle pair order, bytes packed MSB first)
/// over all vertex relabelings.  Equal codes <=> isomorphic graphs.
struct CanonicalForm {
    int n = 0;
    std::vector<std::uint8_t> code;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Refinement + backtracking canonical labeling; no external dependency.
/// Intended for small graphs (mining uses n <= 10); accepts any n <= 64.
CanonicalForm canonicalize(const Graph& g);

/// A labeling achieving the canonical code: entry i is the original vertex
/// placed at canonical position i.
std::vector<int> canonical_labeling(const Graph& g);

/// The canonically relabelled representative of g's isomorphism class.
Graph canonical_copy(const Graph& g);

/// Canonical code packed into one word, n <= 11 only: (n << 56) | edge bits
/// of the canonical representative.  Used as a hash-map key in hot paths.
std::uint64_t canonical_key64(const Graph& g);

/// Same, but for the vertex-marked graph (initial partition {marked | rest}).
/// Two marked keys are equal iff there is an isomorphism of the underlying
/// graphs mapping one marked vertex to the other.
std::uint64_t canonical_key64_marked(const Graph& g, int marked);

bool are_isomorphic(const Graph& g, const Graph& h);

} // namespace doubled

#endif
