#pragma once

#include "tracech/enumerate.hpp"
#include "tracech/invariants.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tracech {

/// Ordered pair of a closed walk and a vertex-disjoint cycle collection.
/// Its signed weight is W = (-1)^{c(gamma)} w(walk) w(gamma); the pair is
/// the carrier of the cancellation argument.
struct WalkCyclePair {
    ClosedWalk walk;
    LinearSubdigraph gamma;

    int total_length() const { return walk.length() + gamma.length(); }

    friend auto operator<=>(const WalkCyclePair&, const WalkCyclePair&) = default;
};

inline RingElement pair_weight(const WeightedDigraph& g, const WalkCyclePair& p) {
    RingElement w = walk_weight(g, p.walk) * lsd_weight(g, p.gamma);
    return lsd_sign(p.gamma) < 0 ? -w : w;
}

/// Outcome of scanning a pair's walk from its start vertex: either the walk
/// first touches a vertex of gamma (scenario 1), or it first completes a
/// directed cycle away from gamma (scenario 2), or neither happens before
/// the walk closes as a simple cycle disjoint from gamma (GOOD).
struct PairClass {
    enum class Kind { Good, BadScenario1, BadScenario2 };

    Kind kind = Kind::Good;
    int t = -1;  ///< scenario 1: first position on gamma; scenario 2: closing index
    int s = -1;  ///< scenario 2: opening index (x_s == x_t)
    int y = -1;  ///< scenario 1: the gamma vertex encountered

    bool is_bad() const { return kind != Kind::Good; }

    friend bool operator==(const PairClass&, const PairClass&) = default;
};

/// All ordered pairs (walk, gamma) with L(walk) >= 1 and total length r,
/// grouped by ascending walk length.
inline std::vector<WalkCyclePair> enumerate_pairs(const WeightedDigraph& g, int r) {
    if (r < 1) throw std::invalid_argument("total length must be >= 1");
    std::vector<WalkCyclePair> out;
    for (int lc = 1; lc <= r; ++lc) {
        const int lg = r - lc;
        if (lg > g.order()) continue;
        const std::vector<ClosedWalk> walks = enumerate_closed_walks(g, lc);
        if (walks.empty()) continue;
        const std::vector<LinearSubdigraph> subs = enumerate_lsd(g, lg);
        for (const ClosedWalk& w : walks)
            for (const LinearSubdigraph& s : subs) out.push_back(WalkCyclePair{w, s});
    }
    return out;
}

/// Scans walk positions t = 0, 1, ...; at each one the gamma-membership
/// test fires before the repetition test. The closing repetition of a
/// simple cycle (s = 0 at the final position) is not a trigger: that pair
/// is GOOD when gamma was never touched.
inline PairClass classify(const WalkCyclePair& p) {
    const auto& xs = p.walk.vertices;
    const int len = p.walk.length();
    std::map<int, int> first_seen;
    for (int t = 0; t <= len; ++t) {
        const int v = xs[static_cast<std::size_t>(t)];
        if (p.gamma.contains_vertex(v))
            return PairClass{PairClass::Kind::BadScenario1, t, -1, v};
        auto it = first_seen.find(v);
        if (it != first_seen.end()) {
            if (t == len) return PairClass{PairClass::Kind::Good};
            return PairClass{PairClass::Kind::BadScenario2, t, it->second, -1};
        }
        first_seen.emplace(v, t);
    }
    return PairClass{PairClass::Kind::Good};  // unreachable: x_len repeats x_0
}

/// The sign-reversing involution on BAD pairs. Scenario 1 splices the
/// gamma-cycle through the encountered vertex into the walk and removes it
/// from gamma; scenario 2 excises the first completed cycle from the walk
/// and adds it to gamma. Total length is preserved and the signed weight
/// flips. Throws std::logic_error when called on a GOOD pair.
inline WalkCyclePair phi(const WalkCyclePair& p) {
    const PairClass cls = classify(p);
    if (!cls.is_bad()) throw std::logic_error("phi is only defined on BAD pairs");
    const auto& xs = p.walk.vertices;
    if (cls.kind == PairClass::Kind::BadScenario1) {
        const Cycle* cy = p.gamma.cycle_through(cls.y);
        std::vector<int> w(xs.begin(), xs.begin() + cls.t + 1);  // ends at y
        std::size_t at = 0;
        while (cy->vertices[at] != cls.y) ++at;
        for (int step = 1; step <= cy->length(); ++step)
            w.push_back(cy->vertices[(at + step) % cy->vertices.size()]);
        w.insert(w.end(), xs.begin() + cls.t + 1, xs.end());
        return WalkCyclePair{ClosedWalk{std::move(w)}, p.gamma.without(*cy)};
    }
    // Scenario 2: xs[s..t) closed a simple cycle at position t; keep x_s once.
    std::vector<int> cyc(xs.begin() + cls.s, xs.begin() + cls.t);
    std::vector<int> w(xs.begin(), xs.begin() + cls.s + 1);
    w.insert(w.end(), xs.begin() + cls.t + 1, xs.end());
    return WalkCyclePair{ClosedWalk{std::move(w)}, p.gamma.with(Cycle::canonical(std::move(cyc)))};
}

/// The r GOOD pairs carried by a subdigraph on r vertices: for each covered
/// vertex, its cycle read as a closed walk from that vertex, paired with
/// the remaining cycles.
inline std::vector<WalkCyclePair> good_pairs_of_lsd(const LinearSubdigraph& s) {
    if (s.length() == 0) throw std::invalid_argument("the empty subdigraph carries no GOOD pairs");
    std::vector<WalkCyclePair> out;
    for (int v : s.vertices()) {
        const Cycle* cy = s.cycle_through(v);
        std::vector<int> w{v};
        int cur = v;
        for (int step = 0; step < cy->length(); ++step) {
            cur = cy->successor_of(cur);
            w.push_back(cur);
        }
        out.push_back(WalkCyclePair{ClosedWalk{std::move(w)}, s.without(*cy)});
    }
    return out;
}

/// Machine check of every cancellation claim at one value of r.
struct InvolutionReport {
    int n = 0;
    int r = 0;
    std::size_t pair_count = 0;
    std::size_t bad_count = 0;
    std::size_t good_count = 0;
    bool involution_ok = true;        ///< image is BAD and enumerated; phi∘phi = id; W flips; no fixed point
    bool scenario_swap_ok = true;     ///< phi exchanges scenario 1 and scenario 2
    bool bad_sum_is_zero = true;
    bool good_decomposition_ok = true;  ///< groups of r per length-r subdigraph, stated group weight
    bool good_empty_above_n = true;     ///< no GOOD pair survives when r > n
    RingElement bad_sum;
    RingElement good_sum;
    std::vector<std::string> failures;

    bool all_ok() const {
        return involution_ok && scenario_swap_ok && bad_sum_is_zero && good_decomposition_ok &&
               good_empty_above_n;
    }
};

namespace detail {

inline std::string describe(const WalkCyclePair& p) {
    std::string out = "walk ";
    for (std::size_t i = 0; i < p.walk.vertices.size(); ++i) {
        if (i) out += "->";
        out += std::to_string(p.walk.vertices[i]);
    }
    out += " gamma ";
    if (p.gamma.cycles.empty()) out += "()";
    for (const Cycle& c : p.gamma.cycles) {
        out += "(";
        for (std::size_t i = 0; i < c.vertices.size(); ++i) {
            if (i) out += " ";
            out += std::to_string(c.vertices[i]);
        }
        out += ")";
    }
    return out;
}

}  // namespace detail

inline InvolutionReport verify_involution(const WeightedDigraph& g, int r) {
    if (r < 1) throw std::invalid_argument("total length must be >= 1");
    InvolutionReport rep;
    rep.n = g.order();
    rep.r = r;

    const std::vector<WalkCyclePair> pairs = enumerate_pairs(g, r);
    rep.pair_count = pairs.size();
    std::set<WalkCyclePair> enumerated(pairs.begin(), pairs.end());

    auto fail = [&](bool& flag, const std::string& msg) {
        flag = false;
        rep.failures.push_back(msg);
    };

    std::set<WalkCyclePair> good_set;
    for (const WalkCyclePair& p : pairs) {
        const PairClass cls = classify(p);
        if (!cls.is_bad()) {
            ++rep.good_count;
            good_set.insert(p);
            rep.good_sum += pair_weight(g, p);
            continue;
        }
        ++rep.bad_count;
        rep.bad_sum += pair_weight(g, p);
        const WalkCyclePair q = phi(p);
        const PairClass qcls = classify(q);
        if (!qcls.is_bad()) fail(rep.involution_ok, "phi image is GOOD: " + detail::describe(p));
        if (!enumerated.count(q))
            fail(rep.involution_ok, "phi image not among enumerated pairs: " + detail::describe(p));
        if (q == p) fail(rep.involution_ok, "phi has a fixed point: " + detail::describe(p));
        if (!(phi(q) == p)) fail(rep.involution_ok, "phi is not self-inverse at: " + detail::describe(p));
        if (!(pair_weight(g, q) == -pair_weight(g, p)))
            fail(rep.involution_ok, "phi does not negate the weight of: " + detail::describe(p));
        if (qcls.is_bad() && qcls.kind == cls.kind)
            fail(rep.scenario_swap_ok, "phi does not swap scenarios at: " + detail::describe(p));
    }

    if (!rep.bad_sum.is_zero()) fail(rep.bad_sum_is_zero, "BAD weights do not cancel");

    if (r > g.order()) {
        if (rep.good_count != 0) fail(rep.good_empty_above_n, "GOOD pairs found although r > n");
    } else {
        std::set<WalkCyclePair> uncovered = good_set;
        for_each_lsd(g, r, [&](const LinearSubdigraph& s, const RingElement& w) {
            const std::vector<WalkCyclePair> group = good_pairs_of_lsd(s);
            if (static_cast<int>(group.size()) != r)
                fail(rep.good_decomposition_ok, "subdigraph does not carry exactly r GOOD pairs");
            RingElement group_sum;
            for (const WalkCyclePair& p : group) {
                if (classify(p).is_bad())
                    fail(rep.good_decomposition_ok, "decomposition pair is BAD: " + detail::describe(p));
                if (uncovered.erase(p) == 0)
                    fail(rep.good_decomposition_ok,
                         "decomposition pair missing or duplicated: " + detail::describe(p));
                group_sum += pair_weight(g, p);
            }
            RingElement signed_w = s.cycle_count() % 2 == 1 ? w : -w;  // (-1)^{c-1} w
            RingElement expected;
            for (int i = 0; i < r; ++i) expected += signed_w;
            if (!(group_sum == expected))
                fail(rep.good_decomposition_ok, "GOOD group weight is not r*(-1)^(c-1)*w");
        });
        if (!uncovered.empty())
            fail(rep.good_decomposition_ok, "GOOD pairs not covered by any subdigraph decomposition");
    }
    return rep;
}

}  // namespace tracech
