#pragma once

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace wdx::homalg {

struct Arrow {
    int src = 0;
    int tgt = 0;
};

/**
 * A finite-dimensional quiver algebra with monomial relations. The nonzero
 * path classes form a basis, the radical is the arrow ideal, and projective
 * covers are algorithmic; arbitrary structure-constant algebras are rejected
 * by construction.
 */
class PresentedAlgebra {
public:
    PresentedAlgebra(int vertices, std::vector<Arrow> arrows, std::vector<std::vector<int>> relations)
        : nv_(vertices), arrows_(std::move(arrows)), relations_(std::move(relations)) {
        if (nv_ <= 0) throw std::invalid_argument("quiver needs at least one vertex");
        for (auto& a : arrows_)
            if (a.src < 0 || a.src >= nv_ || a.tgt < 0 || a.tgt >= nv_)
                throw std::invalid_argument("arrow endpoint out of range");
        for (auto& r : relations_) {
            if (r.size() < 2) throw std::invalid_argument("monomial relations must have length >= 2");
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (r[i] < 0 || r[i] >= (int)arrows_.size()) throw std::invalid_argument("relation uses unknown arrow");
                if (i + 1 < r.size() && arrows_[r[i]].tgt != arrows_[r[i + 1]].src)
                    throw std::invalid_argument("relation path is not composable");
            }
        }
        if (!arrow_ideal_nilpotent()) throw std::invalid_argument("the algebra is not finite-dimensional: some power of the arrow ideal never vanishes");
        enumerate_paths();
    }

    int vertices() const { return nv_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::vector<std::vector<int>>& relations() const { return relations_; }

    /** Smallest L with (arrow ideal)^L = 0. */
    int nilpotency() const { return max_path_len_ + 1; }

    std::size_t dim() const {
        std::size_t d = 0;
        for (auto& v : paths_from_) d += v.size();
        return d;
    }

    /** All nonzero paths from v; index 0 is the trivial path at v. */
    const std::vector<std::vector<int>>& paths_from(int v) const { return paths_from_[v]; }

    int path_target(int v, std::size_t idx) const {
        const auto& p = paths_from_[v][idx];
        return p.empty() ? v : arrows_[p.back()].tgt;
    }

    /** Index of path*arrow among paths from v, or -1 if it dies. */
    int extend_path(int v, std::size_t idx, int arrow) const {
        auto it = extension_[v].find({(int)idx, arrow});
        return it == extension_[v].end() ? -1 : it->second;
    }

    bool path_is_nonzero(const std::vector<int>& seq) const {
        for (auto& r : relations_) {
            if (r.size() > seq.size()) continue;
            for (std::size_t start = 0; start + r.size() <= seq.size(); ++start) {
                bool hit = true;
                for (std::size_t i = 0; i < r.size() && hit; ++i) hit = seq[start + i] == r[i];
                if (hit) return false;
            }
        }
        return true;
    }

private:
    int nv_;
    std::vector<Arrow> arrows_;
    std::vector<std::vector<int>> relations_;
    std::vector<std::vector<std::vector<int>>> paths_from_;  // [v][idx] = arrow sequence
    std::vector<std::map<std::pair<int, int>, int>> extension_;
    int max_path_len_ = 0;

    /**
     * Finite dimensionality for a monomial algebra: no directed cycle in the
     * automaton whose states are nonzero paths of length w = max relation
     * length - 1, with transitions that append one arrow and keep a nonzero
     * window.
     */
    bool arrow_ideal_nilpotent() const {
        std::size_t w = 1;
        for (auto& r : relations_) w = std::max(w, r.size() - 1);
        // states: nonzero paths of length exactly w
        std::vector<std::vector<int>> states;
        std::map<std::vector<int>, int> state_id;
        std::vector<std::vector<int>> frontier;
        for (int a = 0; a < (int)arrows_.size(); ++a) frontier.push_back({a});
        for (std::size_t len = 1; len < w; ++len) {
            std::vector<std::vector<int>> next;
            for (auto& p : frontier)
                for (int a = 0; a < (int)arrows_.size(); ++a) {
                    if (arrows_[p.back()].tgt != arrows_[a].src) continue;
                    auto q = p;
                    q.push_back(a);
                    if (path_is_nonzero(q)) next.push_back(std::move(q));
                }
            frontier = std::move(next);
        }
        for (auto& p : frontier) {
            state_id[p] = (int)states.size();
            states.push_back(p);
        }
        // edges
        std::vector<std::vector<int>> adj(states.size());
        for (std::size_t s = 0; s < states.size(); ++s) {
            for (int a = 0; a < (int)arrows_.size(); ++a) {
                const auto& p = states[s];
                if (arrows_[p.back()].tgt != arrows_[a].src) continue;
                auto ext = p;
                ext.push_back(a);
                if (!path_is_nonzero(ext)) continue;
                std::vector<int> suf(ext.begin() + 1, ext.end());
                auto it = state_id.find(suf);
                if (it != state_id.end()) adj[s].push_back(it->second);
            }
        }
        // cycle detection
        std::vector<int> color(states.size(), 0);
        std::vector<std::pair<int, std::size_t>> stack;
        for (std::size_t s0 = 0; s0 < states.size(); ++s0) {
            if (color[s0]) continue;
            stack.push_back({(int)s0, 0});
            color[s0] = 1;
            while (!stack.empty()) {
                auto& [s, i] = stack.back();
                if (i < adj[s].size()) {
                    int t = adj[s][i++];
                    if (color[t] == 1) return false;
                    if (color[t] == 0) {
                        color[t] = 1;
                        stack.push_back({t, 0});
                    }
                } else {
                    color[s] = 2;
                    stack.pop_back();
                }
            }
        }
        return true;
    }

    void enumerate_paths() {
        paths_from_.assign(nv_, {});
        extension_.assign(nv_, {});
        for (int v = 0; v < nv_; ++v) {
            std::map<std::vector<int>, int> index;
            paths_from_[v].push_back({});
            index[{}] = 0;
            std::size_t head = 0;
            while (head < paths_from_[v].size()) {
                auto p = paths_from_[v][head];
                int end = p.empty() ? v : arrows_[p.back()].tgt;
                for (int a = 0; a < (int)arrows_.size(); ++a) {
                    if (arrows_[a].src != end) continue;
                    auto q = p;
                    q.push_back(a);
                    if (!path_is_nonzero(q)) continue;
                    int id = (int)paths_from_[v].size();
                    paths_from_[v].push_back(q);
                    index[q] = id;
                    extension_[v][{(int)head, a}] = id;
                    max_path_len_ = std::max(max_path_len_, (int)q.size());
                }
                ++head;
            }
        }
    }
};

using AlgebraPtr = std::shared_ptr<const PresentedAlgebra>;

/** The Koszul ladder: linear quiver d -> d-1 -> ... -> 1 with all length-2 paths zero. */
inline AlgebraPtr lambda_algebra(int d) {
    if (d < 1) throw std::invalid_argument("lambda algebra needs d >= 1");
    // vertex i (0-based) stands for the label i+1; arrow i: vertex i+1 -> vertex i
    std::vector<Arrow> arrows;
    for (int i = 0; i + 1 < d; ++i) arrows.push_back({i + 1, i});
    std::vector<std::vector<int>> rels;
    for (int i = 0; i + 2 < d; ++i) rels.push_back({i + 1, i});
    return std::make_shared<PresentedAlgebra>(d, std::move(arrows), std::move(rels));
}

/** k[x]/(x^n): one loop with the single relation x^n. */
inline AlgebraPtr truncated_polynomial_algebra(int n = 2) {
    if (n < 2) throw std::invalid_argument("needs n >= 2");
    std::vector<Arrow> arrows{{0, 0}};
    std::vector<std::vector<int>> rels{std::vector<int>((std::size_t)n, 0)};
    return std::make_shared<PresentedAlgebra>(1, std::move(arrows), std::move(rels));
}

/** The semisimple algebra k^n: n vertices, no arrows. */
inline AlgebraPtr semisimple_algebra(int n) {
    return std::make_shared<PresentedAlgebra>(n, std::vector<Arrow>{}, std::vector<std::vector<int>>{});
}

}  // namespace wdx::homalg
