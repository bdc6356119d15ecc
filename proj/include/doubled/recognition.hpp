#ifndef DOUBLED_RECOGNITION_HPP
#define DOUBLED_RECOGNITION_HPP

#include <functional>
#include <optional>

#include "doubled/patterns.hpp"
#include "doubled/structure.hpp"

namespace doubled {

/// Vertex set inducing a minimal non-member subgraph; `kind` names it when
/// it matches a catalog pattern.
struct Witness {
    std::vector<int> vertices;
    std::optional<PatternId> kind;
};

/// Exactly one of the two alternatives is present.
struct RecognitionOutcome {
    std::optional<DoubledCertificate> certificate;
    std::optional<Witness> witness;

    bool is_member() const { return certificate.has_value(); }
};

/// Greedy deletion minimization: repeatedly drop the lowest-labelled vertex
/// whose removal keeps the induced subgraph a non-member, restarting after
/// every successful deletion.  Precondition: induced(g, s) is not a member;
/// violating it throws std::invalid_argument.
Witness minimize_witness(const Graph& g, std::vector<int> s,
                         const std::function<bool(const Graph&)>& is_member);

/// Split recognition: partition certificate (stable side as A, clique side
/// as B, no pairs) or a minimal obstruction among C4, co-C4, C5.
RecognitionOutcome recognize_split(const Graph& g);

/// Certifying almost-split recognition by the constructive case analysis
/// around an induced C4 (working in the complement when only co-C4 is
/// present).  Certificates carry at most one pair in total.
RecognitionOutcome recognize_almost_split(const Graph& g);

/// Certifying doubled recognition: almost-split fast path, then dispatch on
/// the highest-priority doubled anchor (M21, P5, co-C6, co-domino, tent1,
/// tent2 — each sought in g first, then in the complement) into the matching
/// case procedure.  Never runs the exponential oracle on the whole input;
/// oracle calls happen only while validating witness subsets of at most 9
/// vertices.
RecognitionOutcome recognize_doubled(const Graph& g);

// Case procedures, one per anchor.  `anchor` maps the anchor's role
// vertices (see anchor_graph) into g.  Each procedure assumes no
// earlier-priority anchor occurs in g or its complement; the dispatch
// enforces that and it is not re-checked here.  Only the embedding itself
// is validated (std::invalid_argument on a bad one).
RecognitionOutcome certify_from_m21(const Graph& g, const Embedding& anchor);
RecognitionOutcome certify_from_p5(const Graph& g, const Embedding& anchor);
RecognitionOutcome certify_from_co_c6(const Graph& g, const Embedding& anchor);
RecognitionOutcome certify_from_co_domino(const Graph& g, const Embedding& anchor);
RecognitionOutcome certify_from_tent1(const Graph& g, const Embedding& anchor);
RecognitionOutcome certify_from_tent2(const Graph& g, const Embedding& anchor);

/// Anchor index in dispatch priority order (0 = M21 ... 5 = tent2).
enum class Anchor { M21, P5, CoC6, CoDomino, Tent1, Tent2 };

/// Role-labelled anchor graph: vertex i of the returned graph is the i-th
/// named role of the corresponding case procedure (a, b, c, ...).
const Graph& anchor_graph(Anchor a);

/// Membership predicates used for witness validation.
bool is_doubled_pred(const Graph& g);
bool is_almost_split_pred(const Graph& g);
bool is_split_pred(const Graph& g);

} // namespace doubled

#endif
