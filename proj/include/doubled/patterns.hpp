#ifndef DOUBLED_PATTERNS_HPP
#define DOUBLED_PATTERNS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "doubled/canonical.hpp"
#include "doubled/graph.hpp"

namespace doubled {

/// Naming note: paths and cycles are named by edge count here — P5 is the
/// path with 5 edges (6 vertices), C4/C5/C6 are the cycles with that many
/// edges.  Most graph software names by vertex count instead.
enum class PatternName {
    C4,
    C5,
    C6,
    P5,
    K23,
    W4,
    M21,
    Watch,
    TV,
    Flag,
    Fish,
    Domino,
    Tent1,
    Tent2,
};

inline constexpr int kPatternNameCount = 14;

struct PatternId {
    PatternName name;
    bool complemented = false;

    friend bool operator==(const PatternId&, const PatternId&) = default;
};

/// Injective vertex map witnessing an induced occurrence: pattern vertex i
/// sits at host vertex map[i], preserving both edges and non-edges.
struct Embedding {
    std::vector<int> map;
};

struct PatternHit {
    PatternId id;
    Embedding embedding;
};

/// Named obstruction graphs plus the auxiliary patterns the recognizers
/// use, with canonical forms for fast lookup.
class PatternCatalog {
public:
    static const PatternCatalog& instance();

    const Graph& graph(PatternId id) const;
    const CanonicalForm& canon(PatternId id) const;

    /// First catalog id (declaration order, base before complement) whose
    /// canonical form matches g, if any.
    std::optional<PatternId> identify(const Graph& g) const;

    /// All 28 ids in the fixed order used for deterministic "first hit"
    /// searches.
    static std::vector<PatternId> all_ids();

    /// The 12 base obstructions and their complements: the minimal
    /// forbidden induced subgraphs for almost-split graphs.
    static std::vector<PatternId> circus();

    /// The six circus members (plus complements) that are not doubled; the
    /// known subfamily of the doubled obstruction family.
    static std::vector<PatternId> family_f_seed();

    static std::string name(PatternId id);
    static std::optional<PatternId> parse_name(std::string_view s);

private:
    PatternCatalog();
    std::vector<Graph> graphs_;
    std::vector<CanonicalForm> canons_;
};

/// Backtracking induced-subgraph search.  Pattern vertices are matched in
/// descending-degree order (ties by index) with exact-adjacency candidate
/// pruning; host candidates are tried in ascending label, so the returned
/// embedding is the lexicographically least map sequence under that fixed
/// order.  Deterministic across runs and platforms.
std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern);

/// First catalog pattern (in the given id order) that occurs in the host.
std::optional<PatternHit> find_any_of(const Graph& host, std::span<const PatternId> ids);

} // namespace doubled

#endif
