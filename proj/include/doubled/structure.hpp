#ifndef DOUBLED_STRUCTURE_HPP
#define DOUBLED_STRUCTURE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "doubled/graph.hpp"
#include "doubled/patterns.hpp"

namespace doubled {

class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Decomposition of a semi-matched graph into a disjoint edges plus b
/// isolated vertices (for the antimatched reading, `pairs` are the
/// non-adjacent pairs instead).
struct Matching {
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> singles;
};

/// Present iff every vertex has degree <= 1; the decomposition is unique.
std::optional<Matching> is_semi_matched(const Graph& g);

/// is_semi_matched of the complement; pairs reported as non-adjacent pairs
/// of g.
std::optional<Matching> is_semi_antimatched(const Graph& g);

/// Partition proving membership in the doubled class: A induces exactly the
/// matched pairs, B induces everything except the antimatched pairs, and
/// every pair is aligned against the whole other side.
struct DoubledCertificate {
    std::vector<int> a_side;
    std::vector<int> b_side;
    std::vector<std::pair<int, int>> matched;
    std::vector<std::pair<int, int>> antimatched;
};

struct AlignmentViolation {
    std::string clause;
    int u = -1, v = -1, w = -1;
};

/// nullopt when the certificate is valid; otherwise the first violated
/// clause with the offending vertices.  Throws std::invalid_argument when
/// A/B is not a partition of V(G) or a listed pair is malformed.
std::optional<AlignmentViolation> check_aligned_detail(const Graph& g, const DoubledCertificate& c);

bool check_aligned(const Graph& g, const DoubledCertificate& c);

/// Ground-truth doubled test: scans all 2^n side assignments (vertex v goes
/// to B iff bit v of the counter is set, so the all-A split comes first) and
/// returns the first valid certificate.  Exponential; capped at n <= 24.
std::optional<DoubledCertificate> is_doubled_oracle(const Graph& g);

/// Same scan restricted to certificates with at most one pair in total,
/// which is exactly the almost-split class.
std::optional<DoubledCertificate> is_almost_split_oracle(const Graph& g);

struct SplitPartition {
    std::vector<int> clique;
    std::vector<int> stable;
};

/// Clique/stable-set partition if one exists.  Uses the forbidden-subgraph
/// test (C4, co-C4, C5) as the membership filter, then builds the partition
/// by degree-ordered clique prefixes with a maximal-clique fallback.
std::optional<SplitPartition> split_partition(const Graph& g);

struct DoubleSplitExtension {
    Graph h;
    Embedding embedding;        // g's vertices keep their labels in h
    DoubledCertificate full;    // the double-split partition of h
};

/// Completes a valid certificate to a concrete double-split supergraph by
/// adding a forced partner for every unpaired vertex.  The result is
/// re-verified before returning; failure there means a bug and throws
/// std::logic_error.  Throws std::invalid_argument on an invalid
/// certificate and CapacityError when the completion would exceed 64
/// vertices.
DoubleSplitExtension extend_to_double_split(const Graph& g, const DoubledCertificate& cert);

} // namespace doubled

#endif
