#pragma once

#include "tracech/digraph.hpp"

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace tracech {

/// Directed simple cycle, stored with its minimum vertex first. A length-1
/// cycle is a self-loop.
struct Cycle {
    std::vector<int> vertices;

    static Cycle canonical(std::vector<int> vs) {
        auto it = std::min_element(vs.begin(), vs.end());
        std::rotate(vs.begin(), it, vs.end());
        return Cycle{std::move(vs)};
    }

    int length() const { return static_cast<int>(vertices.size()); }
    int min_vertex() const { return vertices.front(); }

    bool contains(int v) const {
        return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
    }

    /// Vertex following v along the cycle's orientation.
    int successor_of(int v) const {
        for (std::size_t t = 0; t < vertices.size(); ++t)
            if (vertices[t] == v) return vertices[(t + 1) % vertices.size()];
        throw std::invalid_argument("vertex not on cycle");
    }

    friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

/// Collection of vertex-disjoint directed cycles, sorted by minimum vertex.
/// The empty collection is a valid subdigraph of length 0.
struct LinearSubdigraph {
    std::vector<Cycle> cycles;

    int length() const {
        int total = 0;
        for (const Cycle& c : cycles) total += c.length();
        return total;
    }

    int cycle_count() const { return static_cast<int>(cycles.size()); }

    bool contains_vertex(int v) const {
        for (const Cycle& c : cycles)
            if (c.contains(v)) return true;
        return false;
    }

    const Cycle* cycle_through(int v) const {
        for (const Cycle& c : cycles)
            if (c.contains(v)) return &c;
        return nullptr;
    }

    /// Covered vertices in ascending order.
    std::vector<int> vertices() const {
        std::vector<int> vs;
        for (const Cycle& c : cycles) vs.insert(vs.end(), c.vertices.begin(), c.vertices.end());
        std::sort(vs.begin(), vs.end());
        return vs;
    }

    LinearSubdigraph without(const Cycle& c) const {
        LinearSubdigraph out;
        for (const Cycle& x : cycles)
            if (!(x == c)) out.cycles.push_back(x);
        return out;
    }

    LinearSubdigraph with(Cycle c) const {
        LinearSubdigraph out = *this;
        auto pos = std::lower_bound(out.cycles.begin(), out.cycles.end(), c,
                                    [](const Cycle& a, const Cycle& b) {
                                        return a.min_vertex() < b.min_vertex();
                                    });
        out.cycles.insert(pos, std::move(c));
        return out;
    }

    friend auto operator<=>(const LinearSubdigraph&, const LinearSubdigraph&) = default;
};

/// Closed walk x_0, x_1, ..., x_k with x_k == x_0 and k >= 1. The start
/// vertex is part of the walk's identity: the same cyclic edge sequence
/// started elsewhere is a different walk.
struct ClosedWalk {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()) - 1; }
    int start() const { return vertices.front(); }

    friend auto operator<=>(const ClosedWalk&, const ClosedWalk&) = default;
};

inline RingElement cycle_weight(const WeightedDigraph& g, const Cycle& c) {
    RingElement w(1);
    for (int t = 0; t < c.length(); ++t) {
        const int u = c.vertices[t];
        const int v = c.vertices[(t + 1) % c.length()];
        const RingElement* e = g.edge(u, v);
        if (!e) throw std::invalid_argument("cycle uses a missing edge");
        w *= *e;
    }
    return w;
}

/// Product of all edge weights; ring one for the empty subdigraph.
inline RingElement lsd_weight(const WeightedDigraph& g, const LinearSubdigraph& s) {
    RingElement w(1);
    for (const Cycle& c : s.cycles) w *= cycle_weight(g, c);
    return w;
}

/// (-1)^{c(gamma)}.
inline int lsd_sign(const LinearSubdigraph& s) { return s.cycle_count() % 2 == 0 ? 1 : -1; }

inline RingElement walk_weight(const WeightedDigraph& g, const ClosedWalk& c) {
    RingElement w(1);
    for (std::size_t t = 0; t + 1 < c.vertices.size(); ++t) {
        const RingElement* e = g.edge(c.vertices[t], c.vertices[t + 1]);
        if (!e) throw std::invalid_argument("walk uses a missing edge");
        w *= *e;
    }
    return w;
}

namespace detail {

// Cover construction over the sorted vertex set: the smallest undecided
// vertex is either left out or becomes the minimum vertex of a new cycle,
// so no subdigraph is generated twice.
template <typename Fn>
class LsdEnumerator {
public:
    LsdEnumerator(const WeightedDigraph& g, Fn& fn)
        : g_(g), fn_(fn), n_(g.order()), used_(g.order() + 1, 0) {}

    void run(int r) { recurse(1, r, RingElement(1)); }

private:
    void recurse(int v, int remaining, const RingElement& weight) {
        if (remaining == 0) {
            fn_(LinearSubdigraph{cycles_}, weight);
            return;
        }
        while (v <= n_ && used_[v]) ++v;
        if (v > n_) return;
        int avail = 0;
        for (int u = v; u <= n_; ++u)
            if (!used_[u]) ++avail;
        if (avail < remaining) return;
        used_[v] = 1;
        const std::size_t mark = path_.size();
        path_.push_back(v);
        extend(v, v, remaining, weight, RingElement(1), mark);
        path_.pop_back();
        used_[v] = 0;
        recurse(v + 1, remaining, weight);  // v stays uncovered
    }

    // Grows a simple path from root over path_[mark..]; closing it back to
    // root yields a cycle whose minimum vertex is root.
    void extend(int root, int cur, int remaining, const RingElement& base,
                const RingElement& partial, std::size_t mark) {
        const int cycle_len = static_cast<int>(path_.size() - mark);
        if (const RingElement* close = g_.edge(cur, root)) {
            cycles_.push_back(Cycle{std::vector<int>(path_.begin() + mark, path_.end())});
            recurse(root + 1, remaining - cycle_len, base * partial * *close);
            cycles_.pop_back();
        }
        if (cycle_len == remaining) return;
        for (int u : g_.out_neighbors(cur)) {
            if (u <= root || used_[u]) continue;
            used_[u] = 1;
            path_.push_back(u);
            extend(root, u, remaining, base, partial * *g_.edge(cur, u), mark);
            path_.pop_back();
            used_[u] = 0;
        }
    }

    const WeightedDigraph& g_;
    Fn& fn_;
    int n_;
    std::vector<char> used_;
    std::vector<int> path_;
    std::vector<Cycle> cycles_;
};

}  // namespace detail

/// Visits every linear subdigraph of length r exactly once, in a canonical
/// order, together with its weight. Cost is exponential in r.
template <typename Fn>
void for_each_lsd(const WeightedDigraph& g, int r, Fn&& fn) {
    if (r < 0 || r > g.order())
        throw std::out_of_range("subdigraph length must be in [0, n], got " + std::to_string(r));
    detail::LsdEnumerator<Fn> e(g, fn);
    e.run(r);
}

inline std::vector<LinearSubdigraph> enumerate_lsd(const WeightedDigraph& g, int r) {
    std::vector<LinearSubdigraph> out;
    for_each_lsd(g, r, [&](const LinearSubdigraph& s, const RingElement&) { out.push_back(s); });
    return out;
}

/// Visits every walk of length k from `from` to `to`, in lexicographic
/// order of vertex sequences, together with its weight. Cost grows like
/// (out-degree)^k.
template <typename Fn>
void for_each_walk(const WeightedDigraph& g, int from, int to, int k, Fn&& fn) {
    if (k < 1) throw std::invalid_argument("walk length must be >= 1");
    if (from < 1 || from > g.order() || to < 1 || to > g.order())
        throw std::out_of_range("walk endpoint out of range");
    std::vector<int> path{from};
    auto rec = [&](auto&& self, int cur, int left, const RingElement& w) -> void {
        if (left == 0) {
            fn(path, w);
            return;
        }
        for (int u : g.out_neighbors(cur)) {
            if (left == 1 && u != to) continue;
            path.push_back(u);
            self(self, u, left - 1, w * *g.edge(cur, u));
            path.pop_back();
        }
    };
    rec(rec, from, k, RingElement(1));
}

/// Visits every closed walk of length k, grouped by ascending start vertex.
template <typename Fn>
void for_each_closed_walk(const WeightedDigraph& g, int k, Fn&& fn) {
    if (k < 1) throw std::invalid_argument("walk length must be >= 1");
    for (int s = 1; s <= g.order(); ++s) for_each_walk(g, s, s, k, fn);
}

inline std::vector<ClosedWalk> enumerate_closed_walks(const WeightedDigraph& g, int k) {
    std::vector<ClosedWalk> out;
    for_each_closed_walk(g, k,
                         [&](const std::vector<int>& vs, const RingElement&) { out.push_back(ClosedWalk{vs}); });
    return out;
}

}  // namespace tracech
