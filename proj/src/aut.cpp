#include "twofold/aut.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "twofold/errors.hpp"

namespace twofold {

bool is_automorphism(const Graph& g, const Permutation& p) {
    if (p.size() != g.vertex_count())
        throw std::invalid_argument("permutation size does not match vertex count");
    for (const auto& [u, v] : g.edges())
        if (!g.adjacent(p(u), p(v))) return false;
    return true;
}

namespace {

// ---------------------------------------------------------------- partition

// Ordered partition with contiguous cells inside `elems`. Cells are
// identified by their start offset, which is stable for the first fragment
// of any split; all bookkeeping is positional so that the refinement
// transcript is identical for states related by an automorphism.
struct Partition {
    std::vector<int> elems;   // permutation of 0..n-1
    std::vector<int> pos;     // pos[v] = index of v in elems
    std::vector<int> cstart;  // cstart[p] = start offset of the cell holding position p
    std::vector<int> clen;    // clen[s] = cell length, valid when s is a cell start

    int n() const { return static_cast<int>(elems.size()); }
    bool discrete() const {
        for (int s = 0; s < n();) {
            if (clen[static_cast<std::size_t>(s)] != 1) return false;
            ++s;
        }
        return true;
    }
};

Partition initial_partition(int n, const std::optional<VertexColouring>& colouring) {
    Partition p;
    p.elems.resize(static_cast<std::size_t>(n));
    p.pos.resize(static_cast<std::size_t>(n));
    p.cstart.assign(static_cast<std::size_t>(n), 0);
    p.clen.assign(static_cast<std::size_t>(n), 0);
    if (!colouring) {
        for (int v = 0; v < n; ++v) p.elems[static_cast<std::size_t>(v)] = v;
        if (n > 0) p.clen[0] = n;
    } else {
        int k = 0;
        for (int c : *colouring) k = std::max(k, c + 1);
        std::vector<std::vector<int>> classes(static_cast<std::size_t>(k));
        for (int v = 0; v < n; ++v) {
            const int c = (*colouring)[static_cast<std::size_t>(v)];
            if (c < 0) throw std::invalid_argument("negative colour index");
            classes[static_cast<std::size_t>(c)].push_back(v);
        }
        int at = 0;
        for (const auto& cls : classes) {
            if (cls.empty()) throw std::invalid_argument("empty colour class");
            const int s = at;
            for (int v : cls) {
                p.elems[static_cast<std::size_t>(at)] = v;
                p.cstart[static_cast<std::size_t>(at)] = s;
                ++at;
            }
            p.clen[static_cast<std::size_t>(s)] = static_cast<int>(cls.size());
        }
    }
    for (int i = 0; i < n; ++i) p.pos[static_cast<std::size_t>(p.elems[static_cast<std::size_t>(i)])] = i;
    return p;
}

using Trace = std::vector<std::uint64_t>;

constexpr std::uint64_t kTagSplitter = std::uint64_t{0xA} << 60;
constexpr std::uint64_t kTagTarget = std::uint64_t{0xB} << 60;
constexpr std::uint64_t kTagShape = std::uint64_t{0xF} << 60;

// Equitable refinement by counting neighbours in splitter cells. The
// worklist holds cell start offsets; every fragment of a split is queued.
// All decisions (worklist order, fragment order by ascending count) depend
// only on positions and counts, never on vertex labels, which is what makes
// the trace a sound pruning invariant.
void refine(const Graph& g, Partition& p, std::deque<int> queue, Trace& trace) {
    const int n = p.n();
    if (n == 0) return;
    const int words = g.words_per_row();
    std::vector<char> queued(static_cast<std::size_t>(n), 0);
    for (int s : queue) queued[static_cast<std::size_t>(s)] = 1;
    std::vector<std::uint64_t> mask(static_cast<std::size_t>(words));
    std::vector<int> counts(static_cast<std::size_t>(n));

    while (!queue.empty()) {
        const int s = queue.front();
        queue.pop_front();
        queued[static_cast<std::size_t>(s)] = 0;

        // Splitter mask from the (possibly since-shrunk) cell at offset s.
        std::fill(mask.begin(), mask.end(), 0);
        const int slen = p.clen[static_cast<std::size_t>(s)];
        for (int i = s; i < s + slen; ++i) {
            const int v = p.elems[static_cast<std::size_t>(i)];
            mask[static_cast<std::size_t>(v >> 6)] |= std::uint64_t{1} << (v & 63);
        }
        bool splitter_logged = false;

        for (int t = 0; t < n;) {
            const int tlen = p.clen[static_cast<std::size_t>(t)];
            if (tlen == 1) {
                t += tlen;
                continue;
            }
            int lo = -1, hi = -1;
            for (int i = t; i < t + tlen; ++i) {
                const int v = p.elems[static_cast<std::size_t>(i)];
                const std::uint64_t* r = g.row(v);
                int c = 0;
                for (int w = 0; w < words; ++w) c += std::popcount(r[w] & mask[static_cast<std::size_t>(w)]);
                counts[static_cast<std::size_t>(i)] = c;
                lo = (lo < 0) ? c : std::min(lo, c);
                hi = std::max(hi, c);
            }
            if (lo == hi) {
                t += tlen;
                continue;
            }

            // Bucket the cell by count, ascending, stable within a bucket.
            std::vector<std::pair<int, int>> by_count;  // (count, vertex)
            by_count.reserve(static_cast<std::size_t>(tlen));
            for (int i = t; i < t + tlen; ++i)
                by_count.emplace_back(counts[static_cast<std::size_t>(i)], p.elems[static_cast<std::size_t>(i)]);
            std::stable_sort(by_count.begin(), by_count.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; });

            if (!splitter_logged) {
                trace.push_back(kTagSplitter | static_cast<std::uint64_t>(s));
                splitter_logged = true;
            }
            trace.push_back(kTagTarget | static_cast<std::uint64_t>(t));

            int at = t;
            int i = 0;
            while (i < tlen) {
                int j = i;
                while (j < tlen && by_count[static_cast<std::size_t>(j)].first == by_count[static_cast<std::size_t>(i)].first) ++j;
                const int fstart = at;
                for (int q = i; q < j; ++q) {
                    const int v = by_count[static_cast<std::size_t>(q)].second;
                    p.elems[static_cast<std::size_t>(at)] = v;
                    p.pos[static_cast<std::size_t>(v)] = at;
                    p.cstart[static_cast<std::size_t>(at)] = fstart;
                    ++at;
                }
                p.clen[static_cast<std::size_t>(fstart)] = j - i;
                trace.push_back(static_cast<std::uint64_t>(by_count[static_cast<std::size_t>(i)].first));
                trace.push_back(static_cast<std::uint64_t>(j - i));
                if (!queued[static_cast<std::size_t>(fstart)]) {
                    queued[static_cast<std::size_t>(fstart)] = 1;
                    queue.push_back(fstart);
                }
                i = j;
            }
            t += tlen;
        }
    }

    trace.push_back(kTagShape);
    for (int s = 0; s < n; s += p.clen[static_cast<std::size_t>(s)])
        trace.push_back(static_cast<std::uint64_t>(p.clen[static_cast<std::size_t>(s)]));
}

// First smallest non-singleton cell, by position; -1 when discrete.
int target_cell(const Partition& p) {
    int best = -1, best_len = 0;
    for (int s = 0; s < p.n(); s += p.clen[static_cast<std::size_t>(s)]) {
        const int len = p.clen[static_cast<std::size_t>(s)];
        if (len > 1 && (best < 0 || len < best_len)) {
            best = s;
            best_len = len;
        }
    }
    return best;
}

// Split v off at the front of the cell starting at t, then re-refine.
Partition individualize_refine(const Graph& g, const Partition& base, int t, int v, Trace& trace) {
    Partition p = base;
    const int len = p.clen[static_cast<std::size_t>(t)];
    // Move v to position t, keeping the others in relative order.
    const int from = p.pos[static_cast<std::size_t>(v)];
    for (int i = from; i > t; --i) {
        const int u = p.elems[static_cast<std::size_t>(i - 1)];
        p.elems[static_cast<std::size_t>(i)] = u;
        p.pos[static_cast<std::size_t>(u)] = i;
    }
    p.elems[static_cast<std::size_t>(t)] = v;
    p.pos[static_cast<std::size_t>(v)] = t;
    p.clen[static_cast<std::size_t>(t)] = 1;
    p.cstart[static_cast<std::size_t>(t)] = t;
    p.clen[static_cast<std::size_t>(t + 1)] = len - 1;
    for (int i = t + 1; i < t + len; ++i) p.cstart[static_cast<std::size_t>(i)] = t + 1;
    refine(g, p, {t, t + 1}, trace);
    return p;
}

// ------------------------------------------------------------------ search

class AutSearch {
public:
    AutSearch(const Graph& g, const std::optional<VertexColouring>& colouring)
        : g_(g), n_(g.vertex_count()), uf_parent_(static_cast<std::size_t>(n_)) {
        for (int v = 0; v < n_; ++v) uf_parent_[static_cast<std::size_t>(v)] = v;
        Partition root = initial_partition(n_, colouring);
        Trace root_trace;
        std::deque<int> all_cells;
        for (int s = 0; s < n_; s += root.clen[static_cast<std::size_t>(s)]) all_cells.push_back(s);
        refine(g_, root, all_cells, root_trace);
        explore_left(root, 0);
    }

    std::vector<Permutation> take_generators() {
        std::sort(gens_.begin(), gens_.end());
        gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
        return std::move(gens_);
    }

private:
    int find(int v) {
        while (uf_parent_[static_cast<std::size_t>(v)] != v) {
            uf_parent_[static_cast<std::size_t>(v)] = uf_parent_[static_cast<std::size_t>(uf_parent_[static_cast<std::size_t>(v)])];
            v = uf_parent_[static_cast<std::size_t>(v)];
        }
        return v;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) uf_parent_[static_cast<std::size_t>(a)] = b;
    }

    void add_generator(const Permutation& p) {
        gens_.push_back(p);
        for (int v = 0; v < n_; ++v) unite(v, p(v));
    }

    // Spine of the search tree: the leftmost branch defines the reference
    // labelling and the per-level traces that siblings are compared against.
    void explore_left(const Partition& p, int level) {
        if (p.discrete()) {
            left_leaf_ = p.elems;
            return;
        }
        const int t = target_cell(p);
        std::vector<int> cell(p.elems.begin() + t, p.elems.begin() + t + p.clen[static_cast<std::size_t>(t)]);
        std::sort(cell.begin(), cell.end());

        if (static_cast<int>(left_traces_.size()) <= level) left_traces_.resize(static_cast<std::size_t>(level) + 1);
        Trace tr;
        Partition child = individualize_refine(g_, p, t, cell[0], tr);
        left_traces_[static_cast<std::size_t>(level)] = std::move(tr);
        explore_left(child, level + 1);

        std::vector<int> tried{cell[0]};
        for (std::size_t i = 1; i < cell.size(); ++i) {
            const int v = cell[i];
            // Orbit pruning: everything in the orbit of an already handled
            // branch vertex (under the generators found so far, all of which
            // fix the left base prefix at this depth) is already covered.
            bool covered = false;
            for (int u : tried)
                if (find(u) == find(v)) {
                    covered = true;
                    break;
                }
            tried.push_back(v);
            if (covered) continue;
            Trace str;
            Partition sib = individualize_refine(g_, p, t, v, str);
            if (str != left_traces_[static_cast<std::size_t>(level)]) continue;
            explore_other(sib, level + 1);
        }
    }

    // Non-left subtree: hunting for a single automorphism mapping the left
    // prefix onto this branch's prefix; the first hit is enough, because the
    // rest of its coset is reachable through the orbit computation.
    bool explore_other(const Partition& p, int level) {
        if (p.discrete()) {
            std::vector<int> img(static_cast<std::size_t>(n_));
            for (int i = 0; i < n_; ++i)
                img[static_cast<std::size_t>(left_leaf_[static_cast<std::size_t>(i)])] = p.elems[static_cast<std::size_t>(i)];
            Permutation cand = Permutation::from_images(std::move(img));
            if (is_automorphism(g_, cand)) {
                add_generator(cand);
                return true;
            }
            return false;
        }
        const int t = target_cell(p);
        std::vector<int> cell(p.elems.begin() + t, p.elems.begin() + t + p.clen[static_cast<std::size_t>(t)]);
        std::sort(cell.begin(), cell.end());
        for (int v : cell) {
            Trace tr;
            Partition child = individualize_refine(g_, p, t, v, tr);
            if (tr != left_traces_[static_cast<std::size_t>(level)]) continue;
            if (explore_other(child, level + 1)) return true;
        }
        return false;
    }

    const Graph& g_;
    int n_;
    std::vector<int> uf_parent_;
    std::vector<Permutation> gens_;
    std::vector<Trace> left_traces_;
    std::vector<int> left_leaf_;
};

// ---------------------------------------------------------- stabiliser chain

// Deterministic Schreier-Sims. Level i holds generators of the stabiliser
// of base[0..i), the orbit of base[i] under them, and a transversal of
// coset representatives u_x with u_x(base[i]) = x.
class StabChain {
public:
    StabChain(int n, const std::vector<Permutation>& gens) : n_(n) {
        std::vector<Permutation> start;
        for (const auto& g : gens)
            if (!g.is_identity()) start.push_back(g);
        if (start.empty()) return;
        levels_.push_back({});
        levels_[0].gens = std::move(start);
        levels_[0].base_point = smallest_moved(levels_[0].gens);
        recompute_orbit(0);
        verify();
    }

    std::uint64_t order() const {
        std::uint64_t result = 1;
        for (const auto& lvl : levels_) {
            std::uint64_t next;
            if (__builtin_mul_overflow(result, static_cast<std::uint64_t>(lvl.orbit.size()), &next))
                throw ResourceLimitError("group order exceeds 64-bit range");
            result = next;
        }
        return result;
    }

private:
    struct Level {
        int base_point = -1;
        std::vector<Permutation> gens;
        std::vector<int> orbit;
        std::vector<std::optional<Permutation>> trans;  // indexed by vertex
    };

    static int smallest_moved(const std::vector<Permutation>& gens) {
        int best = -1;
        for (const auto& g : gens)
            for (int v = 0; v < g.size(); ++v)
                if (g(v) != v) {
                    if (best < 0 || v < best) best = v;
                    break;
                }
        return best;
    }

    void recompute_orbit(std::size_t i) {
        Level& lvl = levels_[i];
        lvl.orbit.clear();
        lvl.trans.assign(static_cast<std::size_t>(n_), std::nullopt);
        lvl.orbit.push_back(lvl.base_point);
        lvl.trans[static_cast<std::size_t>(lvl.base_point)] = Permutation::identity(n_);
        for (std::size_t head = 0; head < lvl.orbit.size(); ++head) {
            const int x = lvl.orbit[head];
            for (const auto& s : lvl.gens) {
                const int y = s(x);
                if (!lvl.trans[static_cast<std::size_t>(y)]) {
                    lvl.trans[static_cast<std::size_t>(y)] = compose(s, *lvl.trans[static_cast<std::size_t>(x)]);
                    lvl.orbit.push_back(y);
                }
            }
        }
    }

    // Sift h through levels from..end; returns the residue and the level at
    // which it escaped (== levels_.size() when it fixes every base point).
    std::pair<Permutation, std::size_t> strip(Permutation h, std::size_t from) const {
        for (std::size_t l = from; l < levels_.size(); ++l) {
            const int x = h(levels_[l].base_point);
            if (!levels_[l].trans[static_cast<std::size_t>(x)]) return {std::move(h), l};
            h = compose(levels_[l].trans[static_cast<std::size_t>(x)]->inverse(), h);
        }
        return {std::move(h), levels_.size()};
    }

    // Establish the chain condition bottom-up: every Schreier generator of
    // every level must sift to the identity through the levels below it.
    void verify() {
        int i = 0;
        while (i >= 0 && i < static_cast<int>(levels_.size())) {
            bool restart = false;
            Level& lvl = levels_[static_cast<std::size_t>(i)];
            // `restart` is tested first: once set, `lvl` may dangle (adding a
            // level can reallocate levels_), so it must not be dereferenced.
            for (std::size_t oi = 0; !restart && oi < lvl.orbit.size(); ++oi) {
                const int x = lvl.orbit[oi];
                const Permutation& ux = *lvl.trans[static_cast<std::size_t>(x)];
                for (const auto& s : lvl.gens) {
                    const Permutation& usx = *lvl.trans[static_cast<std::size_t>(s(x))];
                    Permutation h = compose(usx.inverse(), compose(s, ux));
                    if (h.is_identity()) continue;
                    auto [residue, j] = strip(std::move(h), static_cast<std::size_t>(i) + 1);
                    if (residue.is_identity()) continue;
                    if (j == levels_.size()) {
                        Level fresh;
                        fresh.base_point = smallest_moved({residue});
                        levels_.push_back(std::move(fresh));
                    }
                    for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
                        levels_[l].gens.push_back(residue);
                        recompute_orbit(l);
                    }
                    i = static_cast<int>(j);
                    restart = true;
                    break;
                }
            }
            if (!restart) --i;
        }
        // Walked off the top: every level satisfied the chain condition.
        // (i descends to -1 only when all checks passed.)
    }

    int n_;
    std::vector<Level> levels_;
};

} // namespace

std::uint64_t permutation_group_order(int n, const std::vector<Permutation>& gens) {
    for (const auto& g : gens)
        if (g.size() != n) throw std::invalid_argument("generator size mismatch");
    return StabChain(n, gens).order();
}

std::optional<std::vector<Permutation>> enumerate_group(int n,
                                                        const std::vector<Permutation>& gens,
                                                        std::uint64_t cap) {
    std::set<std::vector<int>> seen;
    std::deque<const std::vector<int>*> queue;
    auto [it, inserted] = seen.insert(Permutation::identity(n).images());
    queue.push_back(&*it);
    while (!queue.empty()) {
        const std::vector<int> cur = *queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            std::vector<int> next(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v) next[static_cast<std::size_t>(v)] = g(cur[static_cast<std::size_t>(v)]);
            auto [jt, fresh] = seen.insert(std::move(next));
            if (fresh) {
                if (static_cast<std::uint64_t>(seen.size()) > cap) return std::nullopt;
                queue.push_back(&*jt);
            }
        }
    }
    std::vector<Permutation> out;
    out.reserve(seen.size());
    for (const auto& img : seen) out.push_back(Permutation::from_images(img));
    return out;  // std::set iterates in lex order already
}

AutGroup automorphism_group(const Graph& g,
                            const std::optional<VertexColouring>& colouring,
                            std::uint64_t enum_cap) {
    const int n = g.vertex_count();
    if (colouring && static_cast<int>(colouring->size()) != n)
        throw std::invalid_argument("colouring size mismatch");

    AutSearch search(g, colouring);
    AutGroup out;
    out.n = n;
    out.generators = search.take_generators();
    out.order = permutation_group_order(n, out.generators);
    if (out.order <= enum_cap) {
        out.elements = enumerate_group(n, out.generators, enum_cap);
        // The chain count and the explicit closure are independent paths to
        // the same number; a mismatch would mean a search bug, so insist.
        if (!out.elements || out.elements->size() != out.order)
            throw std::logic_error("group enumeration disagrees with stabiliser-chain order");
    }
    return out;
}

AutGroup colour_class_stabiliser(const DoubleCover& dc, std::uint64_t enum_cap) {
    const int n2 = dc.graph.vertex_count();
    VertexColouring colouring(static_cast<std::size_t>(n2));
    for (int v = 0; v < n2; ++v) colouring[static_cast<std::size_t>(v)] = v < dc.base_n ? 0 : 1;
    if (n2 == 0) return automorphism_group(dc.graph, std::nullopt, enum_cap);
    return automorphism_group(dc.graph, colouring, enum_cap);
}

std::uint64_t group_order(const AutGroup& ag) { return ag.order; }

} // namespace twofold
