#include "doubled/miner.hpp"

#include <algorithm>
#include <istream>
#include <unordered_map>
#include <unordered_set>

#include "doubled/patterns.hpp"
#include "doubled/sampling.hpp"

namespace doubled {

namespace {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Isomorphism-invariant vertex score used to pre-select deletion
// candidates; only its induced order matters, so hash truncation is fine.
void vertex_scores(const Graph& g, std::uint64_t* score) {
    const int n = g.order();
    int deg[16];
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    for (int v = 0; v < n; ++v) {
        std::uint64_t hsum = 0;
        int tri = 0;
        std::uint64_t nb = g.row(v);
        while (nb) {
            const int u = __builtin_ctzll(nb);
            nb &= nb - 1;
            hsum += mix64(static_cast<std::uint64_t>(deg[u]));
            tri += __builtin_popcountll(g.row(u) & g.row(v));
        }
        score[v] = (static_cast<std::uint64_t>(deg[v]) << 56) |
                   (static_cast<std::uint64_t>(tri / 2) << 48) | (hsum & 0xffffffffffffULL);
    }
}

// Canonical-augmentation acceptance: the new last vertex must lie in the
// orbit minimizing (score, vertex-marked canonical key).  Marked keys are
// exact, so orbit identification never depends on how many automorphisms
// the canonical search happened to discover.
bool accept_child(const Graph& child, std::uint64_t& key_out) {
    const int n = child.order();
    const int z = n - 1;
    std::uint64_t score[16] = {};
    vertex_scores(child, score);
    std::uint64_t smin = score[0];
    for (int v = 1; v < n; ++v) smin = std::min(smin, score[v]);
    if (score[z] != smin) return false;
    const std::uint64_t kz = canonical_key64_marked(child, z);
    for (int v = 0; v < z; ++v)
        if (score[v] == smin && canonical_key64_marked(child, v) < kz) return false;
    key_out = kz;
    return true;
}

void enumerate_levels(int max_order, const std::function<void(int, const Graph&)>& fn) {
    if (max_order < 0) return;
    if (max_order > 9)
        throw CapacityError("enumerate_graphs: built-in generator capped at 9 vertices; ingest graph6 for more");
    fn(0, Graph(0));
    std::vector<std::uint64_t> level{0};
    for (int k = 0; k < max_order; ++k) {
        std::vector<std::uint64_t> next;
        const int shift = k * (k - 1) / 2; // pair slots (., k) sit above the parent's
        std::unordered_set<std::uint64_t> seen;
        for (const std::uint64_t parent_bits : level) {
            seen.clear();
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
                const std::uint64_t child_bits = parent_bits | (mask << shift);
                const Graph child = Graph::from_edge_bits(k + 1, child_bits);
                std::uint64_t key;
                if (!accept_child(child, key)) continue;
                if (!seen.insert(key).second) continue; // same parent, equivalent attachment
                if (k + 1 < max_order) next.push_back(child_bits);
                fn(k + 1, child);
            }
        }
        level = std::move(next);
    }
}

} // namespace

void enumerate_graphs(int n, const GraphConsumer& fn) {
    enumerate_levels(n, [&](int order, const Graph& g) {
        if (order == n) fn(g);
    });
}

void enumerate_up_to(int max_order, const GraphConsumer& fn) {
    enumerate_levels(max_order, [&](int, const Graph& g) { fn(g); });
}

std::uint64_t count_graphs_filter(int n) {
    if (n > 6) throw CapacityError("count_graphs_filter: capped at 6 vertices");
    std::unordered_set<std::uint64_t> codes;
    const int npairs = n * (n - 1) / 2;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << npairs); ++bits)
        codes.insert(canonical_key64(Graph::from_edge_bits(n, bits)));
    return codes.size();
}

ClassPredicate class_predicate_for(std::string_view class_name) {
    if (class_name == "split")
        return [](const Graph& g) { return split_partition(g).has_value(); };
    if (class_name == "almost-split")
        return [](const Graph& g) { return is_almost_split_oracle(g).has_value(); };
    if (class_name == "doubled")
        return [](const Graph& g) { return is_doubled_oracle(g).has_value(); };
    throw std::invalid_argument("unknown class: " + std::string(class_name));
}

bool ObstructionSet::contains_obstruction(const Graph& host) const {
    return first_obstruction(host).has_value();
}

std::optional<std::size_t> ObstructionSet::first_obstruction(const Graph& host) const {
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (members[i].graph.order() > host.order()) continue;
        if (find_induced(host, members[i].graph)) return i;
    }
    return std::nullopt;
}

std::optional<std::size_t> ObstructionSet::find_isomorphic(const Graph& g) const {
    const CanonicalForm c = canonicalize(g);
    for (std::size_t i = 0; i < members.size(); ++i)
        if (members[i].canon == c) return i;
    return std::nullopt;
}

std::map<int, int> ObstructionSet::order_histogram() const {
    std::map<int, int> h;
    for (const auto& m : members) ++h[m.graph.order()];
    return h;
}

bool ObstructionSet::complement_closed() const {
    std::unordered_set<std::uint64_t> keys;
    for (const auto& m : members) keys.insert(canonical_key64(m.graph));
    for (const auto& m : members)
        if (!keys.count(canonical_key64(m.graph.complement()))) return false;
    return true;
}

int ObstructionSet::up_to_complement_count() const {
    int self_comp = 0, in_pair = 0;
    std::unordered_set<std::uint64_t> keys;
    for (const auto& m : members) keys.insert(canonical_key64(m.graph));
    for (const auto& m : members) {
        const std::uint64_t ck = canonical_key64(m.graph.complement());
        if (ck == canonical_key64(m.graph))
            ++self_comp;
        else if (keys.count(ck))
            ++in_pair;
    }
    // unmatched members count on their own
    const int alone = static_cast<int>(members.size()) - self_comp - in_pair;
    return self_comp + in_pair / 2 + alone;
}

namespace {

class Mining {
public:
    Mining(const ClassPredicate& pred, std::string class_name, int max_order)
        : pred_(pred), class_name_(std::move(class_name)), max_order_(max_order) {}

    void feed(const Graph& g) {
        if (g.order() > max_order_) return;
        if (member(g)) return;
        // cheap reject done; minimality needs every one-vertex deletion back
        // inside the class
        for (int v = 0; v < g.order(); ++v)
            if (!member(g.with_vertex_deleted(v))) return;
        found_.try_emplace(canonical_key64(g), canonical_copy(g));
    }

    ObstructionSet finish() {
        ObstructionSet out;
        out.class_name = class_name_;
        out.max_order = max_order_;
        const auto& cat = PatternCatalog::instance();
        for (auto& [key, graph] : found_) {
            ObstructionSet::Member m{canonicalize(graph), graph, ""};
            if (auto id = cat.identify(graph)) m.name = PatternCatalog::name(*id);
            out.members.push_back(std::move(m));
        }
        int idx = 0;
        for (auto& m : out.members) {
            ++idx;
            if (m.name.empty()) m.name = "F" + std::to_string(idx);
        }
        return out;
    }

private:
    bool member(const Graph& g) {
        const std::uint64_t key = canonical_key64(g);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        const bool r = pred_(g);
        memo_.emplace(key, r);
        return r;
    }

    const ClassPredicate& pred_;
    std::string class_name_;
    int max_order_;
    std::unordered_map<std::uint64_t, bool> memo_;
    std::map<std::uint64_t, Graph> found_; // key order == (order, code) order
};

} // namespace

ObstructionSet mine_obstructions(const ClassPredicate& pred, std::string class_name, int max_order) {
    Mining m(pred, std::move(class_name), max_order);
    enumerate_up_to(max_order, [&](const Graph& g) { m.feed(g); });
    return m.finish();
}

ObstructionSet mine_obstructions_graph6(const ClassPredicate& pred, std::string class_name,
                                        int max_order, std::istream& in) {
    Mining m(pred, std::move(class_name), max_order);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            m.feed(graph6_decode(line));
        } catch (const Graph6ParseError& e) {
            throw Graph6ParseError("line " + std::to_string(lineno) + ": " + e.what(), e.offset());
        }
    }
    return m.finish();
}

VerifyReport verify_characterization(const ClassPredicate& pred, const ObstructionSet& obs,
                                     int exhaustive_max, std::span<const int> sampled_orders,
                                     int samples_per_order, std::uint64_t seed) {
    VerifyReport rep;
    auto check = [&](const Graph& g) {
        ++rep.checked;
        if (pred(g) != !obs.contains_obstruction(g)) rep.discrepancies.push_back(graph6_encode(g));
    };
    enumerate_up_to(exhaustive_max, check);
    Rng rng(seed);
    for (int n : sampled_orders)
        for (int i = 0; i < samples_per_order; ++i) check(random_graph(n, rng));
    return rep;
}

} // namespace doubled
