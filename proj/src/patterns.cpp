#include "doubled/patterns.hpp"

#include <algorithm>
#include <array>

namespace doubled {

namespace {

int id_index(PatternId id) {
    return static_cast<int>(id.name) * 2 + (id.complemented ? 1 : 0);
}

Graph base_graph(PatternName name) {
    using G = Graph;
    switch (name) {
    case PatternName::C4:
        return G::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    case PatternName::C5:
        return G::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    case PatternName::C6:
        return G::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    case PatternName::P5:
        // path a-b-c-d-e-f, five edges; vertex order is the case-procedure
        // role order
        return G::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
    case PatternName::K23:
        return G::from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    case PatternName::W4:
        // hub 0 over the rim 1-2-3-4
        return G::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {4, 1}});
    case PatternName::M21:
        // 0 = a isolated, edges bc and de: the anchor role order
        return G::from_edges(5, {{1, 2}, {3, 4}});
    case PatternName::Watch:
        return G::from_edges(6, {{0, 1}, {1, 2}, {1, 4}, {2, 3}, {3, 4}, {3, 5}});
    case PatternName::TV:
        return G::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}});
    case PatternName::Flag:
        // 4-cycle 2-3-4-5 with the 2-edge tail 0-1-2
        return G::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 2}});
    case PatternName::Fish:
        // C4 0-1-2-3 and triangle 0-4-5 sharing vertex 0
        return G::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 0}});
    case PatternName::Domino:
        // 2x3 grid: faces 0-1-4-3 and 1-2-5-4
        return G::from_edges(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
    case PatternName::Tent1:
        // path a-b-c-d-e plus apex f adjacent to a,b,c,e
        return G::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {5, 0}, {5, 1}, {5, 2}, {5, 4}});
    case PatternName::Tent2:
        // path a-b-c-d-e plus apex f adjacent to a,b,d,e
        return G::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {5, 0}, {5, 1}, {5, 3}, {5, 4}});
    }
    throw std::logic_error("base_graph: bad name");
}

constexpr const char* kNames[kPatternNameCount] = {
    "C4", "C5", "C6", "P5", "K23", "W4", "M21",
    "watch", "TV", "flag", "fish", "domino", "tent1", "tent2",
};

} // namespace

PatternCatalog::PatternCatalog() {
    graphs_.resize(kPatternNameCount * 2);
    canons_.resize(kPatternNameCount * 2);
    for (int k = 0; k < kPatternNameCount; ++k) {
        const auto name = static_cast<PatternName>(k);
        Graph base = base_graph(name);
        graphs_[static_cast<std::size_t>(id_index({name, false}))] = base;
        graphs_[static_cast<std::size_t>(id_index({name, true}))] = base.complement();
    }
    for (std::size_t i = 0; i < graphs_.size(); ++i) canons_[i] = canonicalize(graphs_[i]);
}

const PatternCatalog& PatternCatalog::instance() {
    static const PatternCatalog cat;
    return cat;
}

const Graph& PatternCatalog::graph(PatternId id) const {
    return graphs_[static_cast<std::size_t>(id_index(id))];
}

const CanonicalForm& PatternCatalog::canon(PatternId id) const {
    return canons_[static_cast<std::size_t>(id_index(id))];
}

std::optional<PatternId> PatternCatalog::identify(const Graph& g) const {
    const CanonicalForm c = canonicalize(g);
    for (PatternId id : all_ids())
        if (canon(id) == c) return id;
    return std::nullopt;
}

std::vector<PatternId> PatternCatalog::all_ids() {
    std::vector<PatternId> ids;
    ids.reserve(kPatternNameCount * 2);
    for (int k = 0; k < kPatternNameCount; ++k) ids.push_back({static_cast<PatternName>(k), false});
    for (int k = 0; k < kPatternNameCount; ++k) ids.push_back({static_cast<PatternName>(k), true});
    return ids;
}

std::vector<PatternId> PatternCatalog::circus() {
    // the six non-doubled members first, then the six doubled ones
    static const PatternName members[12] = {
        PatternName::C5,   PatternName::K23,    PatternName::Watch, PatternName::TV,
        PatternName::Flag, PatternName::Fish,   PatternName::M21,   PatternName::P5,
        PatternName::C6,   PatternName::Domino, PatternName::Tent1, PatternName::Tent2,
    };
    std::vector<PatternId> ids;
    ids.reserve(24);
    for (PatternName m : members) ids.push_back({m, false});
    for (PatternName m : members) ids.push_back({m, true});
    return ids;
}

std::vector<PatternId> PatternCatalog::family_f_seed() {
    static const PatternName members[6] = {
        PatternName::C5,   PatternName::K23, PatternName::Watch,
        PatternName::TV,   PatternName::Flag, PatternName::Fish,
    };
    std::vector<PatternId> ids;
    ids.reserve(12);
    for (PatternName m : members) ids.push_back({m, false});
    for (PatternName m : members) ids.push_back({m, true});
    return ids;
}

std::string PatternCatalog::name(PatternId id) {
    std::string s = kNames[static_cast<int>(id.name)];
    return id.complemented ? "co-" + s : s;
}

std::optional<PatternId> PatternCatalog::parse_name(std::string_view s) {
    bool comp = false;
    if (s.rfind("co-", 0) == 0) {
        comp = true;
        s.remove_prefix(3);
    }
    for (int k = 0; k < kPatternNameCount; ++k)
        if (s == kNames[k]) return PatternId{static_cast<PatternName>(k), comp};
    return std::nullopt;
}

std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern) {
    const int pn = pattern.order();
    const int hn = host.order();
    if (pn > hn) return std::nullopt;
    if (pn == 0) return Embedding{{}};

    // match order: descending pattern degree, ties by index
    std::array<int, 64> order{};
    for (int i = 0; i < pn; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.begin() + pn,
                     [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });

    std::array<int, 64> map{};      // pattern vertex -> host vertex
    std::array<std::uint64_t, 64> cand{};
    cand[0] = host.all_mask();
    std::uint64_t used = 0;
    int depth = 0;
    std::array<std::uint64_t, 64> iter{};
    iter[0] = cand[0];

    while (depth >= 0) {
        std::uint64_t& avail = iter[depth];
        if (avail == 0) {
            --depth;
            if (depth >= 0) used &= ~(std::uint64_t{1} << map[order[depth]]);
            continue;
        }
        const int h = __builtin_ctzll(avail);
        avail &= avail - 1;
        const int pv = order[depth];
        map[pv] = h;
        if (depth + 1 == pn) {
            std::vector<int> out(static_cast<std::size_t>(pn));
            for (int i = 0; i < pn; ++i) out[static_cast<std::size_t>(i)] = map[i];
            return Embedding{std::move(out)};
        }
        used |= std::uint64_t{1} << h;
        const int nv = order[depth + 1];
        std::uint64_t next = ~used & host.all_mask();
        for (int i = 0; i <= depth; ++i) {
            const int q = order[i];
            next &= pattern.adjacent(nv, q) ? host.row(map[q]) : ~host.row(map[q]);
        }
        ++depth;
        iter[depth] = next;
    }
    return std::nullopt;
}

std::optional<PatternHit> find_any_of(const Graph& host, std::span<const PatternId> ids) {
    const auto& cat = PatternCatalog::instance();
    for (PatternId id : ids)
        if (auto emb = find_induced(host, cat.graph(id)))
            return PatternHit{id, std::move(*emb)};
    return std::nullopt;
}

} // namespace doubled
