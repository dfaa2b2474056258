#pragma once

#include "tracech/ring.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tracech {

/// Square grid of ring elements, row-major, indices 0-based.
using Matrix = std::vector<std::vector<RingElement>>;

inline void require_square(const Matrix& entries) {
    if (entries.empty()) throw std::invalid_argument("matrix must have order >= 1");
    for (const auto& row : entries)
        if (row.size() != entries.size()) throw std::invalid_argument("matrix must be square");
}

inline Matrix identity_matrix(int n) {
    Matrix m(n, std::vector<RingElement>(n));
    for (int i = 0; i < n; ++i) m[i][i] = RingElement(1);
    return m;
}

/// The weighted digraph of a square matrix: vertices 1..n, and an edge
/// (i,j) of weight a_ij for each nonzero entry. Immutable after
/// construction, so it can be shared freely across enumerations.
class WeightedDigraph {
public:
    using EdgeMap = std::map<std::pair<int, int>, RingElement>;

    static WeightedDigraph from_matrix(const Matrix& entries) { return build(entries, false); }

    /// Keeps zero entries as explicit zero-weight edges. Every weighted sum
    /// downstream is unchanged; only the enumerated structures differ.
    static WeightedDigraph from_matrix_keeping_zeros(const Matrix& entries) {
        return build(entries, true);
    }

    int order() const { return n_; }
    const EdgeMap& edges() const { return edges_; }

    const RingElement* edge(int i, int j) const {
        auto it = edges_.find({i, j});
        return it == edges_.end() ? nullptr : &it->second;
    }

    /// Matrix entry view: ring zero for absent edges.
    RingElement entry(int i, int j) const {
        const RingElement* w = edge(i, j);
        return w ? *w : RingElement();
    }

    Matrix to_matrix() const {
        Matrix m(n_, std::vector<RingElement>(n_));
        for (const auto& [key, w] : edges_) m[key.first - 1][key.second - 1] = w;
        return m;
    }

    const std::vector<int>& out_neighbors(int v) const { return out_[v]; }

private:
    static WeightedDigraph build(const Matrix& entries, bool keep_zeros) {
        require_square(entries);
        WeightedDigraph g;
        g.n_ = static_cast<int>(entries.size());
        g.out_.assign(g.n_ + 1, {});
        for (int i = 1; i <= g.n_; ++i) {
            for (int j = 1; j <= g.n_; ++j) {
                const RingElement& w = entries[i - 1][j - 1];
                if (w.is_zero() && !keep_zeros) continue;
                g.edges_.emplace(std::make_pair(i, j), w);
                g.out_[i].push_back(j);  // ascending by construction
            }
        }
        return g;
    }

    int n_ = 0;
    EdgeMap edges_;
    std::vector<std::vector<int>> out_;  // index 0 unused
};

/// Fully symbolic digraph: all n^2 edges present, edge (i,j) weighted by
/// the indeterminate a_{i,j}.
inline WeightedDigraph generic_digraph(int n) {
    if (n < 1) throw std::invalid_argument("order must be >= 1");
    Matrix m(n, std::vector<RingElement>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m[i - 1][j - 1] = RingElement::variable({i, j});
    return WeightedDigraph::from_matrix(m);
}

/// DOT rendering with weights as edge labels; edges sorted by (i,j).
inline std::string to_dot(const WeightedDigraph& g, const std::string& name = "D") {
    FormatOptions opt{g.order() <= 3 ? g.order() : 0};
    std::string out = "digraph " + name + " {\n  rankdir=LR;\n";
    for (int v = 1; v <= g.order(); ++v) out += "  v" + std::to_string(v) + ";\n";
    for (const auto& [key, w] : g.edges()) {
        out += "  v" + std::to_string(key.first) + " -> v" + std::to_string(key.second) +
               " [label=\"" + to_string(w, opt) + "\"];\n";
    }
    out += "}\n";
    return out;
}

}  // namespace tracech
