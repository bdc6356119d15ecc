#include "doubled/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstring>

namespace doubled {

namespace {

// Ordered partition of the vertex set: lab holds the vertices grouped by
// cell, cells are (start, len) runs over lab in a fixed order.
struct OPart {
    int n = 0;
    int ncells = 0;
    std::array<std::uint8_t, 64> lab{};
    std::array<std::uint8_t, 64> cs{}; // cell starts
    std::array<std::uint8_t, 64> cl{}; // cell lengths
};

// Equitable refinement against the splitter sets queued in `work`.
// Splitters are vertex masks, so cell splits never invalidate the queue.
void refine(const Graph& g, OPart& p, std::vector<std::uint64_t>& work) {
    while (!work.empty()) {
        const std::uint64_t w = work.back();
        work.pop_back();
        for (int ci = 0; ci < p.ncells; ++ci) {
            const int s = p.cs[ci], len = p.cl[ci];
            if (len < 2) continue;
            int cnt[64];
            int mn = 65, mx = -1;
            for (int i = 0; i < len; ++i) {
                cnt[i] = __builtin_popcountll(g.row(p.lab[s + i]) & w);
                mn = std::min(mn, cnt[i]);
                mx = std::max(mx, cnt[i]);
            }
            if (mn == mx) continue;

            std::uint8_t sorted[64];
            std::uint8_t substart[64], sublen[64];
            int nsub = 0, out = 0;
            for (int c = mn; c <= mx; ++c) {
                const int begin = out;
                for (int i = 0; i < len; ++i)
                    if (cnt[i] == c) sorted[out++] = p.lab[s + i];
                if (out > begin) {
                    substart[nsub] = static_cast<std::uint8_t>(s + begin);
                    sublen[nsub] = static_cast<std::uint8_t>(out - begin);
                    ++nsub;
                }
            }
            std::memcpy(&p.lab[s], sorted, static_cast<std::size_t>(len));

            // splice the subcells in place of cell ci
            const int shift = nsub - 1;
            for (int k = p.ncells - 1; k > ci; --k) {
                p.cs[k + shift] = p.cs[k];
                p.cl[k + shift] = p.cl[k];
            }
            for (int k = 0; k < nsub; ++k) {
                p.cs[ci + k] = substart[k];
                p.cl[ci + k] = sublen[k];
                std::uint64_t m = 0;
                for (int i = 0; i < sublen[k]; ++i)
                    m |= std::uint64_t{1} << p.lab[substart[k] + i];
                work.push_back(m);
            }
            p.ncells += shift;
            ci += shift; // subcells are uniform wrt w
        }
    }
}

void pack_bytes(const Graph& g, const std::uint8_t* lab, int n, std::vector<std::uint8_t>& out) {
    const int nbits = n * (n - 1) / 2;
    out.assign(static_cast<std::size_t>((nbits + 7) / 8), 0);
    int pos = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++pos)
            if (g.adjacent(lab[u], lab[v])) out[pos >> 3] |= std::uint8_t(0x80u >> (pos & 7));
}

std::uint64_t pack_word(const Graph& g, const std::uint8_t* lab, int n) {
    std::uint64_t w = 0;
    int pos = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++pos)
            if (g.adjacent(lab[u], lab[v])) w |= std::uint64_t{1} << (63 - pos);
    return w;
}

struct UnionFind {
    std::array<std::uint8_t, 64> parent{};
    void init(int n) {
        for (int i = 0; i < n; ++i) parent[i] = static_cast<std::uint8_t>(i);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[b] = static_cast<std::uint8_t>(a);
    }
};

class CanonSearch {
public:
    CanonSearch(const Graph& g, bool small) : g_(g), n_(g.order()), small_(small) {}

    void run(OPart start) {
        std::vector<std::uint64_t> work;
        for (int ci = 0; ci < start.ncells; ++ci) {
            std::uint64_t m = 0;
            for (int i = 0; i < start.cl[ci]; ++i)
                m |= std::uint64_t{1} << start.lab[start.cs[ci] + i];
            work.push_back(m);
        }
        refine(g_, start, work);
        search(start);
    }

    std::uint64_t best_word() const { return best_word_; }
    const std::vector<std::uint8_t>& best_bytes() const { return best_bytes_; }
    const std::array<std::uint8_t, 64>& best_lab() const { return best_lab_; }

private:
    void leaf(const OPart& p) {
        if (small_) {
            const std::uint64_t w = pack_word(g_, p.lab.data(), n_);
            if (!have_best_ || w < best_word_) {
                best_word_ = w;
                best_lab_ = p.lab;
                have_best_ = true;
            } else if (w == best_word_) {
                record_automorphism(p.lab);
            }
            return;
        }
        pack_bytes(g_, p.lab.data(), n_, scratch_);
        if (!have_best_ || scratch_ < best_bytes_) {
            best_bytes_ = scratch_;
            best_lab_ = p.lab;
            have_best_ = true;
        } else if (scratch_ == best_bytes_) {
            record_automorphism(p.lab);
        }
    }

    void record_automorphism(const std::array<std::uint8_t, 64>& lab) {
        std::array<std::uint8_t, 64> phi{};
        for (int i = 0; i < n_; ++i) phi[best_lab_[i]] = lab[i];
        gens_.push_back(phi);
    }

    void search(const OPart& p) {
        int target = -1;
        for (int ci = 0; ci < p.ncells; ++ci)
            if (p.cl[ci] >= 2) {
                target = ci;
                break;
            }
        if (target < 0) {
            leaf(p);
            return;
        }

        std::uint8_t cand[64];
        const int len = p.cl[target];
        std::memcpy(cand, &p.lab[p.cs[target]], static_cast<std::size_t>(len));
        std::sort(cand, cand + len);

        UnionFind uf;
        std::size_t gens_built = static_cast<std::size_t>(-1);
        std::uint8_t tried[64];
        int ntried = 0;

        for (int k = 0; k < len; ++k) {
            const int v = cand[k];
            if (gens_built != gens_.size()) {
                uf.init(n_);
                for (const auto& phi : gens_) {
                    bool fixes = true;
                    for (int i = 0; i < prefix_len_ && fixes; ++i)
                        fixes = phi[prefix_[i]] == prefix_[i];
                    if (fixes)
                        for (int x = 0; x < n_; ++x) uf.unite(x, phi[x]);
                }
                gens_built = gens_.size();
            }
            bool skip = false;
            for (int t = 0; t < ntried && !skip; ++t)
                skip = uf.find(v) == uf.find(tried[t]);
            if (skip) continue;
            tried[ntried++] = static_cast<std::uint8_t>(v);

            OPart child = p;
            individualize(child, target, v);
            std::vector<std::uint64_t> work{std::uint64_t{1} << v};
            refine(g_, child, work);
            prefix_[prefix_len_++] = static_cast<std::uint8_t>(v);
            search(child);
            --prefix_len_;
        }
    }

    static void individualize(OPart& p, int ci, int v) {
        const int s = p.cs[ci], len = p.cl[ci];
        int at = -1;
        for (int i = 0; i < len; ++i)
            if (p.lab[s + i] == v) {
                at = i;
                break;
            }
        std::swap(p.lab[s], p.lab[s + at]);
        for (int k = p.ncells - 1; k > ci; --k) {
            p.cs[k + 1] = p.cs[k];
            p.cl[k + 1] = p.cl[k];
        }
        p.cs[ci] = static_cast<std::uint8_t>(s);
        p.cl[ci] = 1;
        p.cs[ci + 1] = static_cast<std::uint8_t>(s + 1);
        p.cl[ci + 1] = static_cast<std::uint8_t>(len - 1);
        ++p.ncells;
    }

    const Graph& g_;
    int n_;
    bool small_;
    bool have_best_ = false;
    std::uint64_t best_word_ = 0;
    std::vector<std::uint8_t> best_bytes_;
    std::vector<std::uint8_t> scratch_;
    std::array<std::uint8_t, 64> best_lab_{};
    std::vector<std::array<std::uint8_t, 64>> gens_;
    std::array<std::uint8_t, 64> prefix_{};
    int prefix_len_ = 0;
};

OPart unit_partition(int n) {
    OPart p;
    p.n = n;
    if (n > 0) {
        p.ncells = 1;
        p.cs[0] = 0;
        p.cl[0] = static_cast<std::uint8_t>(n);
        for (int v = 0; v < n; ++v) p.lab[v] = static_cast<std::uint8_t>(v);
    }
    return p;
}

OPart marked_partition(int n, int marked) {
    OPart p;
    p.n = n;
    p.ncells = n > 1 ? 2 : 1;
    p.lab[0] = static_cast<std::uint8_t>(marked);
    int out = 1;
    for (int v = 0; v < n; ++v)
        if (v != marked) p.lab[out++] = static_cast<std::uint8_t>(v);
    p.cs[0] = 0;
    p.cl[0] = 1;
    if (n > 1) {
        p.cs[1] = 1;
        p.cl[1] = static_cast<std::uint8_t>(n - 1);
    }
    return p;
}

std::vector<std::uint8_t> word_to_bytes(std::uint64_t w, int n) {
    const int nbits = n * (n - 1) / 2;
    std::vector<std::uint8_t> out(static_cast<std::size_t>((nbits + 7) / 8), 0);
    for (int pos = 0; pos < nbits; ++pos)
        if ((w >> (63 - pos)) & 1) out[pos >> 3] |= std::uint8_t(0x80u >> (pos & 7));
    return out;
}

} // namespace

CanonicalForm canonicalize(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return CanonicalForm{n, {}};
    const bool small = n <= 11;
    CanonSearch cs(g, small);
    cs.run(unit_partition(n));
    if (small) return CanonicalForm{n, word_to_bytes(cs.best_word(), n)};
    return CanonicalForm{n, cs.best_bytes()};
}

std::vector<int> canonical_labeling(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return n == 1 ? std::vector<int>{0} : std::vector<int>{};
    CanonSearch cs(g, n <= 11);
    cs.run(unit_partition(n));
    std::vector<int> lab(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) lab[static_cast<std::size_t>(i)] = cs.best_lab()[i];
    return lab;
}

Graph canonical_copy(const Graph& g) {
    const auto lab = canonical_labeling(g);
    std::vector<int> perm(lab.size());
    for (std::size_t i = 0; i < lab.size(); ++i) perm[static_cast<std::size_t>(lab[i])] = static_cast<int>(i);
    return g.relabeled(perm);
}

std::uint64_t canonical_key64(const Graph& g) {
    const int n = g.order();
    if (n > 11) throw std::invalid_argument("canonical_key64: n > 11");
    if (n <= 1) return std::uint64_t(n) << 56;
    CanonSearch cs(g, true);
    cs.run(unit_partition(n));
    // shift the MSB-aligned 55-bit code down so it coexists with the order tag
    return (std::uint64_t(n) << 56) | (cs.best_word() >> 9);
}

std::uint64_t canonical_key64_marked(const Graph& g, int marked) {
    const int n = g.order();
    if (n > 11) throw std::invalid_argument("canonical_key64_marked: n > 11");
    if (n <= 1) return std::uint64_t(n) << 56;
    CanonSearch cs(g, true);
    cs.run(marked_partition(n, marked));
    return (std::uint64_t(n) << 56) | (cs.best_word() >> 9);
}

bool are_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order()) return false;
    if (g.size() != h.size()) return false;
    return canonicalize(g) == canonicalize(h);
}

} // namespace doubled
