#pragma once

#include "wdx/subspace.hpp"
#include "wdx/wd/rep.hpp"

#include <map>
#include <stdexcept>

namespace wdx::filt {

using wdx::QMatrix;
using wdx::QSubspace;
using wdx::Rational;
using wdx::wd::WDRep;

/**
 * Finite increasing filtration of Q^n by subspaces, zero far left and full
 * far right. Only the jump positions are stored.
 */
class Filtration {
public:
    explicit Filtration(std::size_t ambient = 0) : ambient_(ambient), zero_(ambient) {}

    std::size_t ambient() const { return ambient_; }

    void set(long long k, QSubspace v) {
        if (v.ambient() != ambient_) throw std::invalid_argument("filtration step has wrong ambient dimension");
        steps_[k] = std::move(v);
    }

    /** F_k, interpolating between stored steps. */
    const QSubspace& at(long long k) const {
        auto it = steps_.upper_bound(k);
        if (it == steps_.begin()) return zero_;
        return std::prev(it)->second;
    }

    long long min_jump() const { return steps_.empty() ? 0 : steps_.begin()->first; }
    long long max_jump() const { return steps_.empty() ? 0 : steps_.rbegin()->first; }

    std::size_t graded_dim(long long k) const { return at(k).dim() - at(k - 1).dim(); }

    /** Validates monotonicity and the stated boundary behavior. */
    void validate() const {
        QSubspace prev(ambient_);
        for (auto& [k, v] : steps_) {
            if (!v.contains(prev)) throw std::logic_error("filtration is not increasing");
            prev = v;
        }
        if (!steps_.empty() && steps_.rbegin()->second != QSubspace::full(ambient_))
            throw std::logic_error("filtration does not become full");
    }

    /** Jump list [(k, dim F_k)] at positions where the dimension changes. */
    std::vector<std::pair<long long, std::size_t>> jumps() const {
        std::vector<std::pair<long long, std::size_t>> out;
        std::size_t last = 0;
        for (auto& [k, v] : steps_) {
            if (v.dim() != last) out.push_back({k, v.dim()});
            last = v.dim();
        }
        return out;
    }

    const std::map<long long, QSubspace>& steps() const { return steps_; }

    bool operator==(const Filtration& o) const {
        if (ambient_ != o.ambient_) return false;
        long long lo = std::min(min_jump(), o.min_jump()) - 1;
        long long hi = std::max(max_jump(), o.max_jump()) + 1;
        for (long long k = lo; k <= hi; ++k)
            if (!(at(k) == o.at(k))) return false;
        return true;
    }

private:
    std::size_t ambient_;
    std::map<long long, QSubspace> steps_;
    QSubspace zero_;
};

/**
 * Monodromy filtration of a nilpotent operator, by the convolution formula
 *   M_k = sum_{j >= max(0,-k)} ker N^{k+j+1} /\ im N^j,
 * then checked against the two characterizing properties
 * N M_k <= M_{k-2} and rank(N^i : Gr^i -> Gr^{-i}) = dim Gr^i = dim Gr^{-i}.
 */
inline Filtration monodromy_filtration(const QMatrix& n, bool check = true) {
    if (n.rows() != n.cols()) throw std::invalid_argument("monodromy filtration needs a square matrix");
    if (!n.is_nilpotent()) throw std::invalid_argument("monodromy filtration needs a nilpotent operator");
    std::size_t dim = n.rows();
    int nil = 0;  // smallest e with N^e = 0
    {
        QMatrix p = QMatrix::identity(dim);
        while (!p.is_zero()) {
            p = p * n;
            ++nil;
        }
    }
    std::vector<QSubspace> kers(nil + 1, QSubspace(dim)), ims(nil + 1, QSubspace(dim));
    for (int e = 0; e <= nil; ++e) {
        kers[e] = QSubspace::kernel(n.pow((unsigned)e));
        ims[e] = QSubspace::image(n.pow((unsigned)e));
    }
    auto ker_at = [&](long long e) {
        if (e <= 0) return QSubspace(dim);
        return kers[std::min<long long>(e, nil)];
    };
    auto im_at = [&](long long e) {
        if (e <= 0) return QSubspace::full(dim);
        if (e >= nil) return QSubspace(dim);
        return ims[e];
    };
    Filtration m(dim);
    for (long long k = -nil; k <= nil; ++k) {
        QSubspace acc(dim);
        for (long long j = std::max<long long>(0, -k); j <= nil; ++j)
            acc = acc + intersect(ker_at(k + j + 1), im_at(j));
        m.set(k, acc);
    }
    m.validate();
    if (check) {
        for (long long k = -nil - 1; k <= nil; ++k)
            if (!m.at(k - 2).contains(m.at(k).apply(n))) throw std::logic_error("monodromy filtration: N M_k not in M_{k-2}");
        for (long long i = 0; i <= nil; ++i) {
            std::size_t gi = m.graded_dim(i), gmi = m.graded_dim(-i);
            QSubspace img = m.at(i).apply(n.pow((unsigned)i));
            std::size_t rank = (img + m.at(-i - 1)).dim() - m.at(-i - 1).dim();
            if (gi != gmi || rank != gi) throw std::logic_error("monodromy filtration: N^i is not Gr^i ~ Gr^{-i}");
        }
    }
    return m;
}

/** True iff f satisfies both characterizing properties for the operator n. */
inline bool is_monodromy_filtration(const QMatrix& n, const Filtration& f) {
    std::size_t dim = n.rows();
    long long lo = f.min_jump() - 2, hi = f.max_jump() + 2;
    if (!(f.at(lo) == QSubspace(dim)) || !(f.at(hi) == QSubspace::full(dim))) return false;
    for (long long k = lo; k <= hi; ++k) {
        if (!f.at(k).contains(f.at(k - 1))) return false;
        if (!f.at(k - 2).contains(f.at(k).apply(n))) return false;
    }
    for (long long i = 0; i <= hi; ++i) {
        std::size_t gi = f.at(i).dim() - f.at(i - 1).dim();
        std::size_t gmi = f.at(-i).dim() - f.at(-i - 1).dim();
        if (gi != gmi) return false;
        QSubspace img = f.at(i).apply(n.pow((unsigned)i));
        std::size_t rank = (img + f.at(-i - 1)).dim() - f.at(-i - 1).dim();
        if (rank != gi) return false;
    }
    return true;
}

/**
 * Weight filtration of a representation whose tags all have coefficient +-1:
 * W_w is the sum of the blocks of tag weight <= w, in the block coordinates.
 */
inline Filtration weight_filtration(const WDRep& rep) {
    std::size_t dim = rep.dim();
    for (auto& [tag, d] : rep.blocks()) (void)tag.weight();  // throws on non-unit scalars
    Filtration w(dim);
    std::vector<long long> weights;
    for (auto& [tag, d] : rep.blocks()) weights.push_back(tag.weight());
    std::sort(weights.begin(), weights.end());
    weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
    for (long long cut : weights) {
        QMatrix vecs(dim, dim);
        std::size_t r = 0, off = 0;
        for (auto& [tag, d] : rep.blocks()) {
            if (tag.weight() <= cut)
                for (int i = 0; i < d; ++i) vecs(r++, off + i) = 1;
            off += (std::size_t)d;
        }
        w.set(cut, QSubspace::span(vecs.submatrix(0, 0, r, dim)));
    }
    if (!weights.empty()) w.set(weights.front() - 1, QSubspace(dim));
    w.validate();
    return w;
}

/** A representation is pure of weight w iff its weight filtration has a single jump at w. */
inline bool is_pure_of_weight(const WDRep& rep, long long w) {
    auto jumps = weight_filtration(rep).jumps();
    return jumps.size() == 1 && jumps[0].first == w && jumps[0].second == rep.dim();
}

struct MWReport {
    bool holds = false;
    bool via_equality = false;
    bool via_iso = false;
};

/**
 * Monodromy-weight check in cohomological degree j, in both equivalent
 * forms: M_i = W_{i+j} for all i, and N^i inducing isomorphisms
 * Gr_W^{j+i} -> Gr_W^{j-i}. The two verdicts are asserted to agree.
 */
inline MWReport mw_check(const WDRep& rep, long long j) {
    Filtration w = weight_filtration(rep);
    QMatrix n = rep.total_n();
    Filtration m = monodromy_filtration(n);

    bool eq = true;
    long long lo = std::min(m.min_jump(), w.min_jump() - j) - 1;
    long long hi = std::max(m.max_jump(), w.max_jump() - j) + 1;
    for (long long i = lo; i <= hi && eq; ++i) eq = m.at(i) == w.at(i + j);

    bool iso = true;
    long long imax = 1;
    if (!w.jumps().empty()) {
        imax = std::max(std::abs(w.max_jump() - j), std::abs(w.min_jump() - j)) + 1;
    }
    for (long long i = 0; i <= imax && iso; ++i) {
        std::size_t gp = w.at(j + i).dim() - w.at(j + i - 1).dim();
        std::size_t gm = w.at(j - i).dim() - w.at(j - i - 1).dim();
        if (gp != gm) {
            iso = false;
            break;
        }
        QSubspace img = w.at(j + i).apply(n.pow((unsigned)i));
        std::size_t rank = (img + w.at(j - i - 1)).dim() - w.at(j - i - 1).dim();
        if (rank != gp) iso = false;
    }

    if (eq != iso) throw std::logic_error("mw_check: the two equivalent forms disagree");
    return MWReport{eq, eq, iso};
}

}  // namespace wdx::filt
