#include "doubled/structure.hpp"

#include <algorithm>

namespace doubled {

namespace {

std::vector<int> mask_to_list(std::uint64_t m) {
    std::vector<int> out;
    while (m) {
        out.push_back(__builtin_ctzll(m));
        m &= m - 1;
    }
    return out;
}

std::uint64_t list_to_mask(const std::vector<int>& xs, int n, const char* what) {
    std::uint64_t m = 0;
    for (int v : xs) {
        if (v < 0 || v >= n) throw std::invalid_argument(std::string(what) + ": vertex out of range");
        const std::uint64_t bit = std::uint64_t{1} << v;
        if (m & bit) throw std::invalid_argument(std::string(what) + ": repeated vertex");
        m |= bit;
    }
    return m;
}

} // namespace

std::optional<Matching> is_semi_matched(const Graph& g) {
    Matching m;
    for (int v = 0; v < g.order(); ++v) {
        const std::uint64_t nb = g.row(v);
        const int d = __builtin_popcountll(nb);
        if (d > 1) return std::nullopt;
        if (d == 0)
            m.singles.push_back(v);
        else {
            const int u = __builtin_ctzll(nb);
            if (v < u) m.pairs.emplace_back(v, u);
        }
    }
    return m;
}

std::optional<Matching> is_semi_antimatched(const Graph& g) {
    return is_semi_matched(g.complement());
}

std::optional<AlignmentViolation> check_aligned_detail(const Graph& g, const DoubledCertificate& c) {
    const int n = g.order();
    const std::uint64_t am = list_to_mask(c.a_side, n, "certificate A");
    const std::uint64_t bm = list_to_mask(c.b_side, n, "certificate B");
    if (am & bm) throw std::invalid_argument("certificate: A and B overlap");
    if ((am | bm) != g.all_mask()) throw std::invalid_argument("certificate: A and B do not cover V(G)");

    std::uint64_t paired_a = 0;
    for (auto [u, v] : c.matched) {
        const std::uint64_t pu = std::uint64_t{1} << u, pv = std::uint64_t{1} << v;
        if (u == v || !(am & pu) || !(am & pv)) throw std::invalid_argument("certificate: matched pair not inside A");
        if (paired_a & (pu | pv)) throw std::invalid_argument("certificate: matched pairs overlap");
        paired_a |= pu | pv;
        if (!g.adjacent(u, v)) return AlignmentViolation{"matched-pair-not-adjacent", u, v, -1};
    }
    std::uint64_t paired_b = 0;
    for (auto [x, y] : c.antimatched) {
        const std::uint64_t px = std::uint64_t{1} << x, py = std::uint64_t{1} << y;
        if (x == y || !(bm & px) || !(bm & py)) throw std::invalid_argument("certificate: antimatched pair not inside B");
        if (paired_b & (px | py)) throw std::invalid_argument("certificate: antimatched pairs overlap");
        paired_b |= px | py;
        if (g.adjacent(x, y)) return AlignmentViolation{"antimatched-pair-adjacent", x, y, -1};
    }

    // A induces exactly the matched pairs
    for (int u : c.a_side) {
        std::uint64_t extra = g.row(u) & am;
        for (auto [p, q] : c.matched) {
            if (p == u) extra &= ~(std::uint64_t{1} << q);
            if (q == u) extra &= ~(std::uint64_t{1} << p);
        }
        if (extra) return AlignmentViolation{"A-side-extra-edge", u, __builtin_ctzll(extra), -1};
    }
    // B induces everything except the antimatched pairs
    for (int x : c.b_side) {
        std::uint64_t missing = ~g.row(x) & bm & ~(std::uint64_t{1} << x);
        for (auto [p, q] : c.antimatched) {
            if (p == x) missing &= ~(std::uint64_t{1} << q);
            if (q == x) missing &= ~(std::uint64_t{1} << p);
        }
        if (missing) return AlignmentViolation{"B-side-missing-edge", x, __builtin_ctzll(missing), -1};
    }

    // alignment of every pair against the whole other side
    for (auto [u, v] : c.matched) {
        const std::uint64_t seen_once = g.row(u) ^ g.row(v);
        if ((seen_once & bm) != bm)
            return AlignmentViolation{"matched-pair-misaligned", u, v, __builtin_ctzll(~seen_once & bm)};
    }
    for (auto [x, y] : c.antimatched) {
        const std::uint64_t seen_once = g.row(x) ^ g.row(y);
        if ((seen_once & am) != am)
            return AlignmentViolation{"antimatched-pair-misaligned", x, y, __builtin_ctzll(~seen_once & am)};
    }
    return std::nullopt;
}

bool check_aligned(const Graph& g, const DoubledCertificate& c) {
    return !check_aligned_detail(g, c).has_value();
}

namespace {

// Shared oracle scan; max_pairs = 1 gives the almost-split variant.
std::optional<DoubledCertificate> oracle_scan(const Graph& g, int max_pairs) {
    const int n = g.order();
    if (n > 24) throw CapacityError("doubled oracle: order > 24");
    const std::uint64_t full = g.all_mask();

    for (std::uint64_t bmask = 0;; ++bmask) {
        const std::uint64_t amask = full & ~bmask;
        int npairs = 0;
        std::pair<int, int> apairs[32], bpairs[32];
        int na = 0, nb = 0;
        bool ok = true;

        for (std::uint64_t m = amask; m && ok; m &= m - 1) {
            const int v = __builtin_ctzll(m);
            const std::uint64_t nbr = g.row(v) & amask;
            const int d = __builtin_popcountll(nbr);
            if (d > 1)
                ok = false;
            else if (d == 1) {
                const int u = __builtin_ctzll(nbr);
                if (v < u) apairs[na++] = {v, u};
            }
        }
        if (ok) {
            for (std::uint64_t m = bmask; m && ok; m &= m - 1) {
                const int v = __builtin_ctzll(m);
                const std::uint64_t nonnbr = ~g.row(v) & bmask & ~(std::uint64_t{1} << v);
                const int d = __builtin_popcountll(nonnbr);
                if (d > 1)
                    ok = false;
                else if (d == 1) {
                    const int u = __builtin_ctzll(nonnbr);
                    if (v < u) bpairs[nb++] = {v, u};
                }
            }
        }
        if (ok) {
            npairs = na + nb;
            if (npairs > max_pairs) ok = false;
        }
        if (ok) {
            for (int i = 0; i < na && ok; ++i)
                ok = ((g.row(apairs[i].first) ^ g.row(apairs[i].second)) & bmask) == bmask;
            for (int i = 0; i < nb && ok; ++i)
                ok = ((g.row(bpairs[i].first) ^ g.row(bpairs[i].second)) & amask) == amask;
        }
        if (ok) {
            DoubledCertificate c;
            c.a_side = mask_to_list(amask);
            c.b_side = mask_to_list(bmask);
            c.matched.assign(apairs, apairs + na);
            c.antimatched.assign(bpairs, bpairs + nb);
            return c;
        }
        if (bmask == full) break;
    }
    return std::nullopt;
}

} // namespace

std::optional<DoubledCertificate> is_doubled_oracle(const Graph& g) {
    return oracle_scan(g, 64);
}

std::optional<DoubledCertificate> is_almost_split_oracle(const Graph& g) {
    return oracle_scan(g, 1);
}

namespace {

bool is_clique(const Graph& g, std::uint64_t mask) {
    for (std::uint64_t m = mask; m; m &= m - 1) {
        const int v = __builtin_ctzll(m);
        if ((g.row(v) & mask) != (mask & ~(std::uint64_t{1} << v))) return false;
    }
    return true;
}

bool is_stable(const Graph& g, std::uint64_t mask) {
    for (std::uint64_t m = mask; m; m &= m - 1)
        if (g.row(__builtin_ctzll(m)) & mask) return false;
    return true;
}

// Bounded Bron-Kerbosch over maximal cliques; returns false if the budget
// runs out before a split partition shows up.  Only reached for graphs the
// pattern filter already certified split, where the clique count is tiny.
bool bk_split(const Graph& g, std::uint64_t r, std::uint64_t p, std::uint64_t x, long& budget,
              std::uint64_t& out_clique) {
    if (--budget < 0) return false;
    if (!p && !x) {
        if (is_stable(g, g.all_mask() & ~r)) {
            out_clique = r;
            return true;
        }
        return false;
    }
    const std::uint64_t px = p | x;
    const int pivot = __builtin_ctzll(px);
    std::uint64_t cand = p & ~g.row(pivot);
    while (cand) {
        const int v = __builtin_ctzll(cand);
        cand &= cand - 1;
        const std::uint64_t bit = std::uint64_t{1} << v;
        if (bk_split(g, r | bit, p & g.row(v), x & g.row(v), budget, out_clique)) return true;
        p &= ~bit;
        x |= bit;
    }
    return false;
}

} // namespace

std::optional<SplitPartition> split_partition(const Graph& g) {
    static const PatternId obstructions[3] = {
        {PatternName::C4, false}, {PatternName::C4, true}, {PatternName::C5, false}};
    if (find_any_of(g, obstructions)) return std::nullopt;

    const int n = g.order();
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });

    for (int m = n; m >= 0; --m) {
        std::uint64_t k = 0;
        for (int i = 0; i < m; ++i) k |= std::uint64_t{1} << order[static_cast<std::size_t>(i)];
        if (is_clique(g, k) && is_stable(g, g.all_mask() & ~k))
            return SplitPartition{mask_to_list(k), mask_to_list(g.all_mask() & ~k)};
    }
    // degree prefixes missed it; walk the maximal cliques
    long budget = 100000;
    std::uint64_t k = 0;
    if (bk_split(g, 0, g.all_mask(), 0, budget, k))
        return SplitPartition{mask_to_list(k), mask_to_list(g.all_mask() & ~k)};
    return std::nullopt;
}

DoubleSplitExtension extend_to_double_split(const Graph& g, const DoubledCertificate& cert) {
    if (auto bad = check_aligned_detail(g, cert))
        throw std::invalid_argument("extend_to_double_split: invalid certificate: " + bad->clause);

    const int n = g.order();
    std::uint64_t paired = 0;
    for (auto [u, v] : cert.matched) paired |= (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    for (auto [u, v] : cert.antimatched) paired |= (std::uint64_t{1} << u) | (std::uint64_t{1} << v);

    std::vector<int> lone_a, lone_b;
    for (int u : cert.a_side)
        if (!((paired >> u) & 1)) lone_a.push_back(u);
    for (int x : cert.b_side)
        if (!((paired >> x) & 1)) lone_b.push_back(x);
    std::sort(lone_a.begin(), lone_a.end());
    std::sort(lone_b.begin(), lone_b.end());

    const int total = n + static_cast<int>(lone_a.size() + lone_b.size());
    if (total > kMaxVertices) throw CapacityError("extend_to_double_split: completion exceeds 64 vertices");

    Graph h(total);
    for (auto [u, v] : g.edges()) h.add_edge(u, v);

    DoubledCertificate full = cert;
    int next = n;
    std::vector<std::pair<int, int>> new_a; // (u, partner)
    std::vector<std::pair<int, int>> new_b; // (x, partner)
    for (int u : lone_a) new_a.emplace_back(u, next++);
    for (int x : lone_b) new_b.emplace_back(x, next++);

    // partner of a lone A-vertex: matched with u, and it sees exactly the
    // B-vertices u does not see
    for (auto [u, up] : new_a) {
        h.add_edge(u, up);
        for (int x : cert.b_side)
            if (!g.adjacent(u, x)) h.add_edge(up, x);
        full.a_side.push_back(up);
        full.matched.emplace_back(u, up);
    }
    // partner of a lone B-vertex: the non-adjacent mate of x, adjacent to
    // all other B-side vertices, seen by exactly the A-vertices missing x
    for (auto [x, xp] : new_b) {
        for (int y : cert.b_side)
            if (y != x) h.add_edge(xp, y);
        for (auto [y, yp] : new_b)
            if (yp != xp) h.add_edge(xp, yp);
        for (int u : cert.a_side)
            if (!g.adjacent(u, x)) h.add_edge(xp, u);
        for (auto [u, up] : new_a)
            if (g.adjacent(u, x)) h.add_edge(xp, up);
        full.b_side.push_back(xp);
        full.antimatched.emplace_back(x, xp);
    }

    if (auto bad = check_aligned_detail(h, full))
        throw std::logic_error("extend_to_double_split: completion failed verification: " + bad->clause);
    // double-split means no vertex is left unpaired
    if (2 * (full.matched.size() + full.antimatched.size()) !=
        full.a_side.size() + full.b_side.size())
        throw std::logic_error("extend_to_double_split: completion left an unpaired vertex");

    Embedding emb;
    emb.map.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) emb.map[static_cast<std::size_t>(v)] = v;
    return DoubleSplitExtension{std::move(h), std::move(emb), std::move(full)};
}

} // namespace doubled
