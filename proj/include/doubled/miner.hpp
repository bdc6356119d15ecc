#ifndef DOUBLED_MINER_HPP
#define DOUBLED_MINER_HPP

#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <string>

#include "doubled/canonical.hpp"
#include "doubled/graph.hpp"
#include "doubled/structure.hpp"

namespace doubled {

using GraphConsumer = std::function<void(const Graph&)>;

/// Exactly one representative per isomorphism class on n vertices, in a
/// deterministic order.  Canonical augmentation: a child produced by
/// attaching a new last vertex is kept only when that vertex belongs to the
/// orbit a fixed invariant rule selects for deletion, so no global seen-set
/// is needed.  Built-in generator is capped at n <= 9 (the mining range);
/// larger corpora are ingested as graph6 instead.
void enumerate_graphs(int n, const GraphConsumer& fn);

/// All orders 0..max_order, ascending.
void enumerate_up_to(int max_order, const GraphConsumer& fn);

/// Independent cross-check: count isomorphism classes by filtering all
/// 2^(n(n-1)/2) labelled graphs through canonical forms.  n <= 6.
std::uint64_t count_graphs_filter(int n);

/// Class membership test used for mining; must be hereditary.
using ClassPredicate = std::function<bool(const Graph&)>;

/// Oracle-backed predicate for a class selector ("split", "almost-split",
/// "doubled").  Mining deliberately uses the oracles, not the certifying
/// recognizers, so the mined family can later vet the recognizers without
/// circularity.
ClassPredicate class_predicate_for(std::string_view class_name);

/// Minimal forbidden induced subgraphs of a hereditary class.
struct ObstructionSet {
    struct Member {
        CanonicalForm canon;
        Graph graph; // canonical representative
        std::string name;
    };

    std::string class_name;
    int max_order = 0;
    std::vector<Member> members; // sorted by (order, canonical code)

    bool contains_obstruction(const Graph& host) const;
    /// Index of the first member induced in host, if any.
    std::optional<std::size_t> first_obstruction(const Graph& host) const;
    std::optional<std::size_t> find_isomorphic(const Graph& g) const;

    std::map<int, int> order_histogram() const;
    bool complement_closed() const;
    /// Members counted with a graph and its complement identified.
    int up_to_complement_count() const;
};

/// All G with |V(G)| <= max_order, pred(G) false, pred(G - v) true for all v.
ObstructionSet mine_obstructions(const ClassPredicate& pred, std::string class_name, int max_order);

/// Same, over a graph6 stream (one graph per line; orders beyond max_order
/// are skipped).  Throws Graph6ParseError with the line prefixed on bad
/// input.
ObstructionSet mine_obstructions_graph6(const ClassPredicate& pred, std::string class_name,
                                        int max_order, std::istream& in);

struct VerifyReport {
    std::uint64_t checked = 0;
    std::vector<std::string> discrepancies; // graph6 of disagreeing hosts
};

/// predicate(G) <=> no obstruction induced in G, exhaustively for
/// n <= exhaustive_max and on seeded samples at the given orders.
VerifyReport verify_characterization(const ClassPredicate& pred, const ObstructionSet& obs,
                                     int exhaustive_max, std::span<const int> sampled_orders,
                                     int samples_per_order, std::uint64_t seed);

} // namespace doubled

#endif
