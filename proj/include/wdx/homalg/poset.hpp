#pragma once

#include "wdx/matrix.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace wdx::homalg {

/** Bounded complex of plain vector spaces. */
template <typename F>
struct VectorComplex {
    int min_deg = 0;
    std::vector<std::size_t> dims;
    std::vector<Matrix<F>> d;  // d[i] : deg min+i -> min+i+1

    int max_deg() const { return min_deg + (int)dims.size() - 1; }

    void validate() const {
        if (d.size() + 1 != dims.size() && !(dims.empty() && d.empty()))
            throw std::invalid_argument("need one differential between consecutive terms");
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (d[i].cols() != dims[i] || d[i].rows() != dims[i + 1])
                throw std::invalid_argument("differential shape mismatch");
            if (i + 1 < d.size() && !(d[i + 1] * d[i]).is_zero()) throw std::logic_error("d^2 != 0");
        }
    }

    std::vector<std::size_t> homology_dims() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < dims.size(); ++i) {
            std::size_t cycles = i < d.size() ? d[i].nullity() : dims[i];
            std::size_t boundaries = i == 0 ? 0 : d[i - 1].rank();
            out.push_back(cycles - boundaries);
        }
        return out;
    }

    bool is_acyclic() const {
        for (auto h : homology_dims())
            if (h != 0) return false;
        return true;
    }
};

/** Finite poset on {0,...,n-1} given by its relation, kept transitively closed. */
class Poset {
public:
    Poset(int n, std::vector<std::pair<int, int>> relations) : n_(n), le_((std::size_t)n, std::vector<bool>((std::size_t)n, false)) {
        if (n <= 0) throw std::invalid_argument("poset needs at least one element");
        for (int i = 0; i < n; ++i) le_[(std::size_t)i][(std::size_t)i] = true;
        for (auto& [a, b] : relations) {
            if (a < 0 || a >= n || b < 0 || b >= n) throw std::invalid_argument("relation out of range");
            le_[(std::size_t)a][(std::size_t)b] = true;
        }
        // transitive closure
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (le_[(std::size_t)i][(std::size_t)k] && le_[(std::size_t)k][(std::size_t)j])
                        le_[(std::size_t)i][(std::size_t)j] = true;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && le_[(std::size_t)i][(std::size_t)j] && le_[(std::size_t)j][(std::size_t)i])
                    throw std::invalid_argument("relation has a cycle; not a partial order");
    }

    int size() const { return n_; }
    bool le(int a, int b) const { return le_[(std::size_t)a][(std::size_t)b]; }

    /** The least element, or -1. */
    int least() const {
        for (int z = 0; z < n_; ++z) {
            bool ok = true;
            for (int x = 0; x < n_ && ok; ++x) ok = le(z, x);
            if (ok) return z;
        }
        return -1;
    }

    /** A maximum of the subposet excluding `except`, or -1. */
    int maximum_excluding(int except) const {
        for (int m = 0; m < n_; ++m) {
            if (m == except) continue;
            bool ok = true;
            for (int x = 0; x < n_ && ok; ++x)
                if (x != except) ok = le(x, m);
            if (ok) return m;
        }
        return -1;
    }

private:
    int n_;
    std::vector<std::vector<bool>> le_;
};

/**
 * Covariant coefficient system on a poset: one space per element, one
 * transition map per strict relation, transitive along chains.
 */
template <typename F>
struct PosetSystem {
    Poset poset;
    std::vector<std::size_t> dims;
    std::map<std::pair<int, int>, Matrix<F>> maps;  // (a,b) with a < b strictly

    const Matrix<F>& map_of(int a, int b) const {
        auto it = maps.find({a, b});
        if (it == maps.end()) throw std::invalid_argument("missing transition map");
        return it->second;
    }

    void validate() const {
        int n = poset.size();
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (a == b || !poset.le(a, b)) continue;
                const Matrix<F>& m = map_of(a, b);
                if (m.cols() != dims[(std::size_t)a] || m.rows() != dims[(std::size_t)b])
                    throw std::invalid_argument("transition map shape mismatch");
                for (int c = 0; c < n; ++c)
                    if (c != a && c != b && poset.le(b, c) && !(map_of(b, c) * m == map_of(a, c)))
                        throw std::invalid_argument("transition maps are not transitive");
            }
    }

    static PosetSystem constant(Poset p, std::size_t dim) {
        PosetSystem s{std::move(p), {}, {}};
        s.dims.assign((std::size_t)s.poset.size(), dim);
        for (int a = 0; a < s.poset.size(); ++a)
            for (int b = 0; b < s.poset.size(); ++b)
                if (a != b && s.poset.le(a, b)) s.maps[{a, b}] = Matrix<F>::identity(dim);
        return s;
    }
};

/**
 * Augmented cochain complex of a coefficient system on a poset with least
 * element Z: V_Z in degree -1, then sums over k-chains in the poset minus Z,
 * with signs (-1)^{#(elements below the inserted one)}.
 */
template <typename F>
VectorComplex<F> poset_cochain_complex(const PosetSystem<F>& sys) {
    const Poset& p = sys.poset;
    int z = p.least();
    if (z < 0) throw std::invalid_argument("poset has no least element");
    std::vector<int> verts;
    for (int x = 0; x < p.size(); ++x)
        if (x != z) verts.push_back(x);

    // chains of the subposet, by length
    std::vector<std::vector<std::vector<int>>> chains;  // chains[k] = list of (k+1)-chains
    chains.push_back({});
    for (int x : verts) chains[0].push_back({x});
    while (true) {
        std::vector<std::vector<int>> next;
        for (auto& c : chains.back())
            for (int x : verts) {
                if (x == c.back() || !p.le(c.back(), x)) continue;
                auto c2 = c;
                c2.push_back(x);
                next.push_back(std::move(c2));
            }
        if (next.empty()) break;
        chains.push_back(std::move(next));
    }

    auto value_dim = [&](const std::vector<int>& chain) { return sys.dims[(std::size_t)chain.back()]; };
    auto offset_of = [&](const std::vector<std::vector<int>>& level, const std::vector<int>& chain) {
        std::size_t off = 0;
        for (auto& c : level) {
            if (c == chain) return off;
            off += sys.dims[(std::size_t)c.back()];
        }
        throw std::logic_error("chain not found");
    };

    VectorComplex<F> out;
    out.min_deg = -1;
    out.dims.push_back(sys.dims[(std::size_t)z]);
    for (auto& level : chains) {
        std::size_t d = 0;
        for (auto& c : level) d += value_dim(c);
        out.dims.push_back(d);
    }
    // d^0 : V_Z -> sum of singletons
    {
        Matrix<F> m(out.dims[1], out.dims[0]);
        for (auto& c : chains[0]) {
            const Matrix<F>& r = sys.map_of(z, c[0]);
            m.set_block(offset_of(chains[0], c), 0, r);
        }
        out.d.push_back(std::move(m));
    }
    for (std::size_t k = 0; k + 1 < chains.size(); ++k) {
        Matrix<F> m(out.dims[k + 2], out.dims[k + 1]);
        for (auto& c : chains[k]) {
            // insert x into c at every compatible position
            for (int x : verts) {
                bool member = false;
                for (int y : c) member = member || y == x;
                if (member) continue;
                // position: count elements of c below x; chain must stay totally ordered
                std::size_t below = 0;
                bool comparable = true;
                for (int y : c) {
                    if (p.le(y, x))
                        ++below;
                    else if (!p.le(x, y))
                        comparable = false;
                }
                if (!comparable) continue;
                auto c2 = c;
                c2.insert(c2.begin() + (long)below, x);
                F sign = below % 2 == 0 ? F(1) : F(-1);
                // transition map V_{max c} -> V_{max c2}
                int from = c.back(), to = c2.back();
                Matrix<F> r = from == to ? Matrix<F>::identity(sys.dims[(std::size_t)from]) : sys.map_of(from, to);
                std::size_t roff = offset_of(chains[k + 1], c2), coff = offset_of(chains[k], c);
                for (std::size_t i = 0; i < r.rows(); ++i)
                    for (std::size_t j = 0; j < r.cols(); ++j) m(roff + i, coff + j) += sign * r(i, j);
            }
        }
        out.d.push_back(std::move(m));
    }
    out.validate();
    return out;
}

/**
 * Contravariant coefficient system on the subsets of E = {0,...,n-1}: a space
 * per subset and restriction maps toward smaller subsets.
 */
template <typename F>
struct SimplexSystem {
    int n = 0;
    std::vector<std::size_t> dims;                  // per bitmask
    std::map<std::pair<int, int>, Matrix<F>> maps;  // (mask, dropped e): V(mask) -> V(mask \ e)

    const Matrix<F>& map_of(int mask, int e) const {
        auto it = maps.find({mask, e});
        if (it == maps.end()) throw std::invalid_argument("missing restriction map");
        return it->second;
    }

    void validate() const {
        for (int mask = 0; mask < (1 << n); ++mask)
            for (int e = 0; e < n; ++e) {
                if (!(mask >> e & 1)) continue;
                const Matrix<F>& m = map_of(mask, e);
                if (m.cols() != dims[(std::size_t)mask] || m.rows() != dims[(std::size_t)(mask ^ (1 << e))])
                    throw std::invalid_argument("restriction map shape mismatch");
                for (int f = 0; f < e; ++f) {
                    if (!(mask >> f & 1)) continue;
                    // dropping e then f equals dropping f then e
                    const Matrix<F>& a = map_of(mask ^ (1 << e), f);
                    const Matrix<F>& b = map_of(mask ^ (1 << f), e);
                    if (!(a * map_of(mask, e) == b * map_of(mask, f)))
                        throw std::invalid_argument("restriction maps do not commute");
                }
            }
    }

    static SimplexSystem constant(int n, std::size_t dim) {
        SimplexSystem s;
        s.n = n;
        s.dims.assign((std::size_t)1 << n, dim);
        for (int mask = 0; mask < (1 << n); ++mask)
            for (int e = 0; e < n; ++e)
                if (mask >> e & 1) s.maps[{mask, e}] = Matrix<F>::identity(dim);
        return s;
    }
};

/**
 * Chain complex of a simplex coefficient system, reindexed cohomologically:
 * the chain group C_k (subsets of size k) sits in degree -k.
 */
template <typename F>
VectorComplex<F> simplex_chain_complex(const SimplexSystem<F>& sys) {
    int n = sys.n;
    std::vector<std::vector<int>> by_size((std::size_t)n + 1);
    for (int mask = 0; mask < (1 << n); ++mask) by_size[(std::size_t)__builtin_popcount((unsigned)mask)].push_back(mask);
    auto level_dim = [&](int k) {
        std::size_t d = 0;
        for (int mask : by_size[(std::size_t)k]) d += sys.dims[(std::size_t)mask];
        return d;
    };
    auto offset_of = [&](int k, int mask) {
        std::size_t off = 0;
        for (int m2 : by_size[(std::size_t)k]) {
            if (m2 == mask) return off;
            off += sys.dims[(std::size_t)m2];
        }
        throw std::logic_error("mask not found");
    };
    VectorComplex<F> out;
    out.min_deg = -n;
    for (int k = n; k >= 0; --k) out.dims.push_back(level_dim(k));
    for (int k = n; k >= 1; --k) {
        Matrix<F> m(level_dim(k - 1), level_dim(k));
        for (int mask : by_size[(std::size_t)k]) {
            for (int e = 0; e < n; ++e) {
                if (!(mask >> e & 1)) continue;
                std::size_t below = (std::size_t)__builtin_popcount((unsigned)(mask & ((1 << e) - 1)));
                F sign = below % 2 == 0 ? F(1) : F(-1);
                const Matrix<F>& r = sys.map_of(mask, e);
                std::size_t roff = offset_of(k - 1, mask ^ (1 << e)), coff = offset_of(k, mask);
                for (std::size_t i = 0; i < r.rows(); ++i)
                    for (std::size_t j = 0; j < r.cols(); ++j) m(roff + i, coff + j) += sign * r(i, j);
            }
        }
        out.d.push_back(std::move(m));
    }
    out.validate();
    return out;
}

}  // namespace wdx::homalg
