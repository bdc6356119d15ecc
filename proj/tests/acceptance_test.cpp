// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Criteria 1-8 are executed twice with identical seeds; criterion
// 9 compares the two transcripts byte for byte.
#include <cstdio>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "doubled/miner.hpp"
#include "doubled/recognition.hpp"
#include "doubled/sampling.hpp"

using namespace doubled;

namespace {

constexpr std::uint64_t kSweepSeed = 20240601;
constexpr std::uint64_t kExtendSeed = 977;

struct Criterion {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct RunState {
    ObstructionSet family;
    // criterion 6 tallies collected during 4 and 5
    std::uint64_t certs_checked = 0, cert_violations = 0;
    std::uint64_t witnesses_checked = 0, witness_violations = 0;
    std::set<std::uint64_t> witness_kinds_seen; // canonical keys of minimal witnesses
};

std::string show_hist(const std::map<int, int>& h) {
    std::ostringstream os;
    bool first = true;
    for (auto [k, v] : h) {
        os << (first ? "" : " ") << k << ":" << v;
        first = false;
    }
    return os.str();
}

// criterion 6 bookkeeping for one recognition outcome
void audit_outcome(RunState& st, const Graph& g, const RecognitionOutcome& out) {
    if (out.certificate) {
        ++st.certs_checked;
        if (!check_aligned(g, *out.certificate)) ++st.cert_violations;
        return;
    }
    ++st.witnesses_checked;
    const auto& w = *out.witness;
    const Graph sub = g.induced(w.vertices);
    bool ok = !is_doubled_oracle(sub).has_value();
    for (std::size_t i = 0; ok && i < w.vertices.size(); ++i) {
        std::vector<int> t;
        for (std::size_t j = 0; j < w.vertices.size(); ++j)
            if (j != i) t.push_back(w.vertices[j]);
        ok = is_doubled_oracle(g.induced(t)).has_value();
    }
    if (ok) ok = st.family.find_isomorphic(sub).has_value();
    if (!ok) ++st.witness_violations;
    if (ok) st.witness_kinds_seen.insert(canonical_key64(sub));
}

Criterion criterion1(RunState& st) {
    st.family = mine_obstructions(class_predicate_for("doubled"), "doubled", 9);
    const int distinct = static_cast<int>(st.family.members.size());
    const int utc = st.family.up_to_complement_count();
    std::ostringstream os;
    os << distinct << " distinct members, " << utc
       << " up to complementation; orders " << show_hist(st.family.order_histogram())
       << "; complement-closed=" << (st.family.complement_closed() ? "yes" : "no");
    // the published count of 44 tallies a graph and its complement
    // separately (two members are self-complementary, so the quotient
    // convention gives 23); both tallies are reported above
    bool pass = distinct == 44 && utc == 23 && st.family.complement_closed();
    const auto& cat = PatternCatalog::instance();
    for (PatternId id : PatternCatalog::family_f_seed())
        pass = pass && st.family.find_isomorphic(cat.graph(id)).has_value();
    return {"criterion-1-obstruction-count", pass, os.str()};
}

Criterion criterion2() {
    const auto obs = mine_obstructions(class_predicate_for("almost-split"), "almost-split", 6);
    std::set<std::vector<std::uint8_t>> expect, got;
    const auto& cat = PatternCatalog::instance();
    for (PatternId id : PatternCatalog::circus()) expect.insert(cat.canon(id).code);
    for (const auto& m : obs.members) got.insert(m.canon.code);
    std::ostringstream os;
    os << obs.members.size() << " mined vs " << expect.size() << " in the built-in catalog";
    return {"criterion-2-circus-reproduction", got == expect, os.str()};
}

Criterion criterion3() {
    const auto obs = mine_obstructions(class_predicate_for("split"), "split", 5);
    const auto& cat = PatternCatalog::instance();
    const bool pass = obs.members.size() == 3 &&
                      obs.find_isomorphic(cat.graph({PatternName::C4, false})) &&
                      obs.find_isomorphic(cat.graph({PatternName::C4, true})) &&
                      obs.find_isomorphic(cat.graph({PatternName::C5, false}));
    return {"criterion-3-split-characterization", pass,
            std::to_string(obs.members.size()) + " mined, expected {C4, co-C4, C5}"};
}

Criterion criterion4(RunState& st) {
    std::uint64_t checked = 0, disagreements = 0;
    enumerate_up_to(8, [&](const Graph& g) {
        ++checked;
        const RecognitionOutcome rec = recognize_doubled(g);
        const bool by_rec = rec.is_member();
        const bool by_oracle = is_doubled_oracle(g).has_value();
        const bool by_family = !st.family.contains_obstruction(g);
        if (by_rec != by_oracle || by_oracle != by_family) ++disagreements;
        audit_outcome(st, g, rec);
    });
    std::ostringstream os;
    os << checked << " graphs n<=8, " << disagreements << " disagreements";
    return {"criterion-4-equivalence-sweep", disagreements == 0, os.str()};
}

Criterion criterion5(RunState& st) {
    Rng rng(kSweepSeed);
    std::uint64_t disagreements = 0;
    for (int n : {12, 14, 16})
        for (int i = 0; i < 1000; ++i) {
            const Graph g = random_graph(n, rng);
            const RecognitionOutcome rec = recognize_doubled(g);
            if (rec.is_member() != !st.family.contains_obstruction(g)) ++disagreements;
            audit_outcome(st, g, rec);
        }
    std::ostringstream os;
    os << "3000 seeded graphs at n in {12,14,16}, " << disagreements << " disagreements";
    return {"criterion-5-sampled-extrapolation", disagreements == 0, os.str()};
}

Criterion criterion6(const RunState& st) {
    std::ostringstream os;
    os << st.certs_checked << " certificates (" << st.cert_violations << " bad), "
       << st.witnesses_checked << " witnesses (" << st.witness_violations
       << " bad: each must be oracle-refuted, deletion-minimal and in the mined family)";
    return {"criterion-6-certificate-soundness",
            st.cert_violations == 0 && st.witness_violations == 0, os.str()};
}

Criterion criterion7() {
    std::uint64_t violations = 0, checked = 0;
    enumerate_up_to(7, [&](const Graph& g) {
        ++checked;
        const bool sp = split_partition(g).has_value();
        const bool as = is_almost_split_oracle(g).has_value();
        const bool db = is_doubled_oracle(g).has_value();
        if (sp && !as) ++violations;
        if (as && !db) ++violations;
        if (as != is_almost_split_oracle(g.complement()).has_value()) ++violations;
        if (db != is_doubled_oracle(g.complement()).has_value()) ++violations;
        for (int v = 0; v < g.order(); ++v) {
            const Graph h = g.with_vertex_deleted(v);
            if (sp && !split_partition(h).has_value()) ++violations;
            if (as && !is_almost_split_oracle(h).has_value()) ++violations;
            if (db && !is_doubled_oracle(h).has_value()) ++violations;
        }
    });
    std::ostringstream os;
    os << checked << " graphs n<=7, " << violations
       << " violations of chain/hereditary/complement-closure";
    return {"criterion-7-class-chain-and-closure", violations == 0, os.str()};
}

Criterion criterion8() {
    Rng rng(kExtendSeed);
    std::uint64_t failures = 0;
    for (int i = 0; i < 1000; ++i) {
        const Graph g = random_doubled_graph(1 + rng.below(12), rng);
        const auto cert = is_doubled_oracle(g);
        if (!cert) {
            ++failures;
            continue;
        }
        try {
            const auto ext = extend_to_double_split(g, *cert);
            const bool ok = ext.h.induced(ext.embedding.map) == g && check_aligned(ext.h, ext.full) &&
                            2 * (ext.full.matched.size() + ext.full.antimatched.size()) ==
                                ext.full.a_side.size() + ext.full.b_side.size();
            if (!ok) ++failures;
        } catch (const std::exception&) {
            ++failures;
        }
    }
    return {"criterion-8-definition-equivalence", failures == 0,
            "1000 seeded doubled graphs n<=12, " + std::to_string(failures) + " failures"};
}

std::vector<Criterion> run_all(std::string& transcript) {
    RunState st;
    std::vector<Criterion> res;
    res.push_back(criterion1(st));
    res.push_back(criterion2());
    res.push_back(criterion3());
    res.push_back(criterion4(st));
    res.push_back(criterion5(st));
    res.push_back(criterion6(st));
    res.push_back(criterion7());
    res.push_back(criterion8());

    // informational: mined members the sweep never saw as a recognizer
    // witness (only orders <= 8 can appear there)
    std::ostringstream uncovered;
    int nuncovered = 0;
    for (const auto& m : st.family.members) {
        if (m.graph.order() > 8) continue;
        if (!st.witness_kinds_seen.count(canonical_key64(m.graph))) {
            uncovered << " " << m.name;
            ++nuncovered;
        }
    }
    std::ostringstream t;
    for (const auto& c : res)
        t << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
    t << "info: " << nuncovered << " mined members (n<=8) never emitted as sweep witnesses:"
      << (nuncovered ? uncovered.str() : " none") << "\n";
    transcript = t.str();
    return res;
}

} // namespace

int main() {
    std::string first, second;
    std::vector<Criterion> results = run_all(first);
    run_all(second);

    std::fputs(first.c_str(), stdout);
    const bool deterministic = first == second;
    std::printf("%s criterion-9-determinism: two full runs %s\n", deterministic ? "PASS" : "FAIL",
                deterministic ? "produced byte-identical output" : "diverged");

    int failures = deterministic ? 0 : 1;
    for (const auto& c : results)
        if (!c.pass) ++failures;
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
