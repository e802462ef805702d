#pragma once

#include "wdx/matrix.hpp"
#include "wdx/qmonomial.hpp"
#include "wdx/wd/subset.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace wdx::wd {

using wdx::Matrix;
using wdx::QMatrix;
using wdx::QMonomial;
using wdx::Rational;

/** One indecomposable: Sp(length) twisted so its N-socle sits at start_tag. */
struct IndecompSummand {
    QMonomial start_tag;
    int length = 1;

    friend bool operator==(const IndecompSummand& a, const IndecompSummand& b) {
        return a.length == b.length && a.start_tag == b.start_tag;
    }
    friend bool operator<(const IndecompSummand& a, const IndecompSummand& b) {
        if (a.start_tag != b.start_tag) return a.start_tag < b.start_tag;
        return a.length < b.length;
    }
};

/**
 * Frobenius-semisimple Weil-Deligne representation over Q with q-monomial
 * eigenvalue tags. Frobenius acts on the lambda-block as lambda times the
 * identity; N carries the lambda-block into the (lambda*q^{-1})-block, which
 * is the relation sigma^{ss}(w) N sigma^{ss}(w)^{-1} = |w| N in this model.
 */
class WDRep {
public:
    WDRep() = default;

    /**
     * blocks: tag -> positive dimension.
     * n: source tag -> matrix into the (tag * t^{-2})-block.
     */
    WDRep(std::map<QMonomial, int> blocks, std::map<QMonomial, QMatrix> n)
        : blocks_(std::move(blocks)), n_(std::move(n)) {
        validate();
    }

    const std::map<QMonomial, int>& blocks() const { return blocks_; }
    const std::map<QMonomial, QMatrix>& n_blocks() const { return n_; }

    std::size_t dim() const {
        std::size_t d = 0;
        for (auto& [tag, n] : blocks_) d += (std::size_t)n;
        return d;
    }

    bool has_tag(const QMonomial& t) const { return blocks_.count(t) > 0; }
    int block_dim(const QMonomial& t) const {
        auto it = blocks_.find(t);
        return it == blocks_.end() ? 0 : it->second;
    }
    /** Offset of a tag's block in the total coordinate order (tags ascending). */
    std::size_t block_offset(const QMonomial& t) const {
        std::size_t off = 0;
        for (auto& [tag, n] : blocks_) {
            if (tag == t) return off;
            off += (std::size_t)n;
        }
        throw std::invalid_argument("tag not present");
    }

    QMatrix n_block(const QMonomial& src) const {
        auto it = n_.find(src);
        if (it != n_.end()) return it->second;
        return QMatrix(block_dim(src * QMonomial::q_power(-1)), block_dim(src));
    }

    /** Total N in the block coordinate order. */
    QMatrix total_n() const {
        QMatrix n(dim(), dim());
        for (auto& [src, mat] : n_) {
            QMonomial dst = src * QMonomial::q_power(-1);
            n.set_block(block_offset(dst), block_offset(src), mat);
        }
        return n;
    }

    /** Semisimple Frobenius power evaluated at numeric t. */
    QMatrix frobenius_matrix(const Rational& t, long long power = 1) const {
        QMatrix f(dim(), dim());
        std::size_t off = 0;
        for (auto& [tag, d] : blocks_) {
            Rational v = tag.pow(power).eval_t(t);
            for (int i = 0; i < d; ++i) f(off + i, off + i) = v;
            off += (std::size_t)d;
        }
        return f;
    }

    /**
     * The defining constraint, checked two ways: structurally (every N block
     * lowers the tag by q) and by reconstructing total matrices at t = 3 and
     * comparing F N F^{-1} with q^{-1} N.
     */
    bool satisfies_monod() const {
        for (auto& [src, mat] : n_) {
            if (!blocks_.count(src)) return false;
            QMonomial dst = src * QMonomial::q_power(-1);
            if (mat.rows() != (std::size_t)block_dim(dst) || mat.cols() != (std::size_t)block_dim(src)) return false;
            if (!mat.is_zero() && !blocks_.count(dst)) return false;
        }
        const Rational t(3), q = t * t;
        QMatrix f = frobenius_matrix(t);
        QMatrix finv = frobenius_matrix(t, -1);
        QMatrix n = total_n();
        return f * n * finv == (Rational(1) / q) * n;
    }

    bool operator==(const WDRep& o) const { return blocks_ == o.blocks_ && normalized_n() == o.normalized_n(); }

private:
    std::map<QMonomial, int> blocks_;
    std::map<QMonomial, QMatrix> n_;  // keyed by source tag

    std::map<QMonomial, QMatrix> normalized_n() const {
        std::map<QMonomial, QMatrix> out;
        for (auto& [src, mat] : n_)
            if (!mat.is_zero()) out.emplace(src, mat);
        return out;
    }

    void validate() {
        for (auto& [tag, d] : blocks_)
            if (d <= 0) throw std::invalid_argument("block dimension must be positive");
        for (auto& [src, mat] : n_) {
            if (!blocks_.count(src)) throw std::invalid_argument("N block from absent tag");
            QMonomial dst = src * QMonomial::q_power(-1);
            std::size_t want_rows = (std::size_t)block_dim(dst);
            if (mat.cols() != (std::size_t)block_dim(src) || mat.rows() != want_rows)
                throw std::invalid_argument("N block shape does not match tag dimensions");
            if (!mat.is_zero() && !blocks_.count(dst)) throw std::invalid_argument("nonzero N block into absent tag");
        }
        // drop zero-shaped blocks for canonicity
        for (auto it = n_.begin(); it != n_.end();) {
            if (it->second.rows() == 0 || it->second.cols() == 0 || it->second.is_zero())
                it = n_.erase(it);
            else
                ++it;
        }
    }
};

// ---------------------------------------------------------------------------
// constructions

/** Sp(n) twisted to start (N-socle) at `twist`: tags twist*q^0,...,twist*q^{n-1}, full N chain. */
inline WDRep sp(int n, const QMonomial& twist = QMonomial::one()) {
    if (n < 1) throw std::invalid_argument("sp(n) needs n >= 1");
    std::map<QMonomial, int> blocks;
    std::map<QMonomial, QMatrix> nb;
    for (int k = 0; k < n; ++k) blocks[twist * QMonomial::q_power(k)] = 1;
    for (int k = 1; k < n; ++k) {
        QMatrix one(1, 1);
        one(0, 0) = 1;
        nb[twist * QMonomial::q_power(k)] = one;
    }
    return WDRep(std::move(blocks), std::move(nb));
}

/**
 * The tau_I family: e_i carries Frobenius eigenvalue q^i, and
 * N e_i = e_{i-1} exactly when i lies in the image of I^c under x -> d-x.
 */
inline WDRep make_tau(const SubsetI& I) {
    int d = I.d;
    std::set<int> ibar_c = SubsetI(d, I.complement()).bar().members;
    std::map<QMonomial, int> blocks;
    std::map<QMonomial, QMatrix> nb;
    for (int i = 0; i < d; ++i) blocks[QMonomial::q_power(i)] = 1;
    for (int i : ibar_c) {
        QMatrix one(1, 1);
        one(0, 0) = 1;
        nb[QMonomial::q_power(i)] = one;
    }
    WDRep rep(std::move(blocks), std::move(nb));
    if (!rep.satisfies_monod()) throw std::logic_error("make_tau produced an invalid representation");
    return rep;
}

// ---------------------------------------------------------------------------
// algebra operations

inline WDRep direct_sum(const WDRep& a, const WDRep& b) {
    std::map<QMonomial, int> blocks = a.blocks();
    for (auto& [tag, d] : b.blocks()) blocks[tag] += d;
    std::map<QMonomial, QMatrix> nb;
    for (auto& [tag, d] : blocks) {
        QMonomial dst = tag * QMonomial::q_power(-1);
        if (!blocks.count(dst)) continue;
        int rows = blocks.at(dst), cols = d;
        QMatrix m(rows, cols);
        QMatrix na = a.n_block(tag), nbm = b.n_block(tag);
        m.set_block(0, 0, na);
        m.set_block(na.rows(), na.cols(), nbm);
        if (!m.is_zero()) nb[tag] = std::move(m);
    }
    return WDRep(std::move(blocks), std::move(nb));
}

inline WDRep twist(const WDRep& a, const QMonomial& tag) {
    std::map<QMonomial, int> blocks;
    std::map<QMonomial, QMatrix> nb;
    for (auto& [t, d] : a.blocks()) blocks[t * tag] = d;
    for (auto& [t, m] : a.n_blocks()) nb[t * tag] = m;
    return WDRep(std::move(blocks), std::move(nb));
}

/** Dual: tags invert; the N block at tag lambda is minus the transpose of the block at q*lambda^{-1}. */
inline WDRep dual(const WDRep& a) {
    std::map<QMonomial, int> blocks;
    for (auto& [t, d] : a.blocks()) blocks[t.inverse()] = d;
    std::map<QMonomial, QMatrix> nb;
    for (auto& [lam, d] : blocks) {
        QMonomial src_in_a = QMonomial::q_power(1) * lam.inverse();
        if (!a.blocks().count(src_in_a)) continue;
        QMatrix m = a.n_block(src_in_a).transpose().negate();
        if (!m.is_zero()) nb[lam] = std::move(m);
    }
    return WDRep(std::move(blocks), std::move(nb));
}

/** Tensor product; N follows the rule N (x) 1 + 1 (x) N. */
inline WDRep tensor(const WDRep& a, const WDRep& b) {
    // coordinate layout inside the product tag: (lambda,mu) pairs in tag order,
    // each pair contributing dim(lambda)*dim(mu) coordinates row-major.
    std::map<QMonomial, std::vector<std::pair<QMonomial, QMonomial>>> pairs;
    for (auto& [la, da] : a.blocks())
        for (auto& [mu, db] : b.blocks()) pairs[la * mu].push_back({la, mu});
    std::map<QMonomial, int> blocks;
    auto pair_offset = [&](const QMonomial& tag, const QMonomial& la, const QMonomial& mu) {
        int off = 0;
        for (auto& [l, m] : pairs.at(tag)) {
            if (l == la && m == mu) return off;
            off += a.blocks().at(l) * b.blocks().at(m);
        }
        throw std::logic_error("pair not found in tensor layout");
    };
    for (auto& [tag, ps] : pairs) {
        int d = 0;
        for (auto& [l, m] : ps) d += a.blocks().at(l) * b.blocks().at(m);
        blocks[tag] = d;
    }
    std::map<QMonomial, QMatrix> nb;
    QMonomial qinv = QMonomial::q_power(-1);
    for (auto& [tag, ps] : pairs) {
        QMonomial dst = tag * qinv;
        if (!blocks.count(dst)) continue;
        QMatrix m(blocks.at(dst), blocks.at(tag));
        for (auto& [la, mu] : ps) {
            int da = a.blocks().at(la), db = b.blocks().at(mu);
            int src_off = pair_offset(tag, la, mu);
            // N_a (x) 1 : lands in the (la*q^{-1}, mu) pair
            if (a.blocks().count(la * qinv)) {
                QMatrix na = a.n_block(la);
                int dst_off = pair_offset(dst, la * qinv, mu);
                for (std::size_t i = 0; i < na.rows(); ++i)
                    for (std::size_t k = 0; k < na.cols(); ++k)
                        if (na(i, k) != 0)
                            for (int j = 0; j < db; ++j)
                                m(dst_off + i * db + j, src_off + k * db + j) += na(i, k);
            }
            // 1 (x) N_b : lands in the (la, mu*q^{-1}) pair
            if (b.blocks().count(mu * qinv)) {
                QMatrix nbm = b.n_block(mu);
                int dst_off = pair_offset(dst, la, mu * qinv);
                for (int i = 0; i < da; ++i)
                    for (std::size_t j = 0; j < nbm.rows(); ++j)
                        for (std::size_t k = 0; k < nbm.cols(); ++k)
                            if (nbm(j, k) != 0) m(dst_off + i * nbm.rows() + j, src_off + i * db + k) += nbm(j, k);
            }
        }
        if (!m.is_zero()) nb[tag] = std::move(m);
    }
    return WDRep(std::move(blocks), std::move(nb));
}

/** Tag-preserving base change: N blocks conjugated by invertible P per tag. */
inline WDRep base_change(const WDRep& a, const std::map<QMonomial, QMatrix>& p) {
    auto pm = [&](const QMonomial& tag) -> QMatrix {
        auto it = p.find(tag);
        if (it != p.end()) return it->second;
        return QMatrix::identity((std::size_t)a.block_dim(tag));
    };
    std::map<QMonomial, QMatrix> nb;
    for (auto& [src, m] : a.n_blocks()) {
        QMonomial dst = src * QMonomial::q_power(-1);
        auto inv = pm(src).inverse();
        if (!inv) throw std::invalid_argument("base change matrix is singular");
        QMatrix conj = pm(dst) * m * *inv;
        if (!conj.is_zero()) nb[src] = std::move(conj);
    }
    return WDRep(a.blocks(), std::move(nb));
}

// ---------------------------------------------------------------------------
// decomposition

/**
 * Canonical decomposition into twisted special representations, computed as
 * the graded Jordan type of N along each tag ladder (tags equal up to q-powers).
 */
inline std::vector<IndecompSummand> decompose(const WDRep& rep) {
    // group tags into ladders: same c, same parity of m
    std::map<std::pair<Rational, long long>, std::vector<QMonomial>> ladders;
    for (auto& [tag, d] : rep.blocks()) {
        long long par = ((tag.m % 2) + 2) % 2;
        ladders[{tag.c, par}].push_back(tag);
    }
    std::vector<IndecompSummand> out;
    for (auto& [key, tags] : ladders) {
        long long m0 = tags.front().m;
        long long m1 = m0;
        for (auto& t : tags) {
            m0 = std::min(m0, t.m);
            m1 = std::max(m1, t.m);
        }
        int levels = (int)((m1 - m0) / 2) + 1;
        auto tag_at = [&](int lvl) { return QMonomial(key.first, m0 + 2 * lvl); };
        auto dim_at = [&](int lvl) { return lvl < 0 || lvl >= levels ? 0 : rep.block_dim(tag_at(lvl)); };
        // rho[k][lvl] = rank of N^k restricted to level lvl (mapping to lvl-k)
        std::vector<std::vector<int>> rho(levels + 2, std::vector<int>(levels + 1, 0));
        for (int lvl = 0; lvl < levels; ++lvl) rho[0][lvl] = dim_at(lvl);
        for (int lvl = 0; lvl < levels; ++lvl) {
            QMatrix comp = QMatrix::identity((std::size_t)dim_at(lvl));
            for (int k = 1; k <= lvl + 1; ++k) {
                int src_lvl = lvl - k + 1;
                if (dim_at(src_lvl) == 0 || dim_at(src_lvl - 1) == 0) {
                    comp = QMatrix(0, dim_at(lvl));
                } else {
                    comp = rep.n_block(tag_at(src_lvl)) * comp;
                }
                rho[k][lvl] = (int)comp.rank();
                if (rho[k][lvl] == 0) break;  // deeper powers stay zero
            }
        }
        auto rho_at = [&](int k, int lvl) {
            if (lvl < 0 || lvl >= levels) return 0;
            if (k < 0) return 0;
            if (k > levels) return 0;
            return rho[k][lvl];
        };
        auto chains_bottom_ge = [&](int k, int lvl) {  // chains of length >= k whose bottom is lvl-k+1
            return rho_at(k - 1, lvl) - rho_at(k, lvl);
        };
        int total = 0;
        for (int b = 0; b < levels; ++b) {
            for (int k = 1; k <= levels - b; ++k) {
                int c = chains_bottom_ge(k, b + k - 1) - chains_bottom_ge(k + 1, b + k);
                for (int i = 0; i < c; ++i) out.push_back({tag_at(b), k});
                total += c * k;
            }
        }
        int ladder_dim = 0;
        for (int lvl = 0; lvl < levels; ++lvl) ladder_dim += dim_at(lvl);
        if (total != ladder_dim) throw std::logic_error("graded Jordan decomposition lost dimensions");
    }
    std::sort(out.begin(), out.end());
    return out;
}

/** Complete isomorphism test in the Frobenius-semisimple q-monomial model. */
inline bool is_isomorphic(const WDRep& a, const WDRep& b) { return decompose(a) == decompose(b); }

/** Reassemble a representation from summands (canonical form of the class). */
inline WDRep assemble(const std::vector<IndecompSummand>& parts) {
    WDRep acc;
    bool first = true;
    for (auto& s : parts) {
        WDRep piece = sp(s.length, s.start_tag);
        acc = first ? piece : direct_sum(acc, piece);
        first = false;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// evaluation at group elements

/** Matrix with q-monomial entries (empty optional = zero). */
struct MonomialMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<std::optional<QMonomial>> entries;

    std::optional<QMonomial>& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const std::optional<QMonomial>& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

/**
 * sigma(w) for w encoded by (nu(w) = n, t_mu(i_phi(w)) = a):
 * sigma^{ss}(phi^n) exp(N a), with eigenvalues kept formal.
 */
inline MonomialMatrix evaluate_at(const WDRep& rep, long long n, const Rational& a) {
    QMatrix e = exp_nilpotent(rep.total_n(), a);
    MonomialMatrix out;
    out.rows = out.cols = rep.dim();
    out.entries.assign(out.rows * out.cols, std::nullopt);
    std::size_t roff = 0;
    for (auto& [tag, d] : rep.blocks()) {
        QMonomial lam_n = tag.pow(n);
        for (int i = 0; i < d; ++i)
            for (std::size_t j = 0; j < out.cols; ++j)
                if (e(roff + i, j) != 0) out.at(roff + i, j) = QMonomial(lam_n.c * e(roff + i, j), lam_n.m);
        roff += (std::size_t)d;
    }
    return out;
}

inline QMatrix to_numeric(const MonomialMatrix& m, const Rational& q) {
    Rational t;
    bool has_t = rational_sqrt(q, t);
    QMatrix out(m.rows, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) {
            if (!m.at(i, j)) continue;
            const QMonomial& e = *m.at(i, j);
            if (e.m % 2 == 0)
                out(i, j) = e.c * pow_rational(q, e.m / 2);
            else if (has_t)
                out(i, j) = e.c * pow_rational(t, e.m);
            else
                throw std::invalid_argument("numeric evaluation needs a rational square root of q for odd tag powers");
        }
    return out;
}

inline QMatrix evaluate_at_numeric(const WDRep& rep, long long n, const Rational& a, const Rational& q) {
    return to_numeric(evaluate_at(rep, n, a), q);
}

// ---------------------------------------------------------------------------
// change of Frobenius lift

/**
 * Replace the Frobenius lift phi by i*phi with t_mu(i) = a, at numeric q:
 * conjugation by exp(N a)^{1/(1-q)}, then re-grading by Frobenius eigenvalue.
 * The class of the representation does not change.
 */
inline WDRep change_frobenius(const WDRep& rep, const Rational& a, const Rational& q_num) {
    if (q_num == 1) throw std::invalid_argument("change_frobenius needs q != 1");
    if (q_num == 0) throw std::invalid_argument("change_frobenius needs q != 0");
    Rational t;
    if (!rational_sqrt(q_num, t)) {
        for (auto& [tag, d] : rep.blocks())
            if (((tag.m % 2) + 2) % 2 != 0)
                throw std::invalid_argument("change_frobenius needs a rational square root of q for odd tags");
        t = 0;
    }
    auto tag_value = [&](const QMonomial& tag) {
        return tag.m % 2 == 0 ? tag.c * pow_rational(q_num, tag.m / 2) : tag.c * pow_rational(t, tag.m);
    };
    // distinct numeric eigenvalues are required to re-read the grading
    {
        std::vector<Rational> vals;
        for (auto& [tag, d] : rep.blocks()) vals.push_back(tag_value(tag));
        std::sort(vals.begin(), vals.end());
        if (std::adjacent_find(vals.begin(), vals.end()) != vals.end())
            throw std::invalid_argument("tags collide numerically at this q; choose another q");
    }
    std::size_t dim = rep.dim();
    QMatrix n = rep.total_n();
    QMatrix f = rep.frobenius_matrix(t == 0 ? Rational(1) : t);  // placeholder; fixed below for even tags
    if (t == 0) {
        // all tags even: build Frobenius directly from q powers
        f = QMatrix(dim, dim);
        std::size_t off = 0;
        for (auto& [tag, d] : rep.blocks()) {
            Rational v = tag_value(tag);
            for (int i = 0; i < d; ++i) f(off + i, off + i) = v;
            off += (std::size_t)d;
        }
    }
    QMatrix u = exp_nilpotent(n, a / (Rational(1) - q_num));
    QMatrix uinv = exp_nilpotent(n, -a / (Rational(1) - q_num));
    QMatrix f2 = u * f * uinv;

    // re-diagonalize: eigenspace of f2 for each tag value, in tag order
    QMatrix pinv(dim, dim);
    std::size_t col = 0;
    for (auto& [tag, d] : rep.blocks()) {
        QMatrix shifted = f2;
        Rational v = tag_value(tag);
        for (std::size_t i = 0; i < dim; ++i) shifted(i, i) -= v;
        auto kb = shifted.kernel_basis();
        if ((int)kb.size() != d) throw std::logic_error("eigenspace dimension changed under conjugation");
        for (auto& vec : kb) {
            for (std::size_t i = 0; i < dim; ++i) pinv(i, col) = vec[i];
            ++col;
        }
    }
    auto p = pinv.inverse();
    if (!p) throw std::logic_error("eigenbasis is singular");
    QMatrix n2 = (*p) * n * pinv;
    // cut the conjugated N back into tag blocks
    std::map<QMonomial, QMatrix> nb;
    for (auto& [src, ds] : rep.blocks()) {
        QMonomial dst = src * QMonomial::q_power(-1);
        if (!rep.blocks().count(dst)) continue;
        QMatrix blockm = n2.submatrix(rep.block_offset(dst), rep.block_offset(src), (std::size_t)rep.block_dim(dst),
                                      (std::size_t)ds);
        if (!blockm.is_zero()) nb[src] = std::move(blockm);
    }
    WDRep out(rep.blocks(), std::move(nb));
    // anything outside the tag-lowering blocks must have vanished
    if (out.total_n() != n2) throw std::logic_error("conjugated N is not tag-lowering");
    return out;
}

// ---------------------------------------------------------------------------
// the Ext-ladder realization

/**
 * The explicit ladder module: e_i with Frobenius eigenvalue q^{-i} and
 * N e_i = e_{i+1} exactly when i+1 lies outside I. After reversing the basis
 * this is tau_I shifted down by q^{d-1}, i.e. tau_I tensored with the
 * character |.|^{d-1}; the isomorphism with twist(make_tau(I), q^{-(d-1)})
 * is asserted before returning.
 */
inline WDRep ext_ladder_to_wd(const SubsetI& I) {
    int d = I.d;
    std::set<int> ic = I.complement();
    std::map<QMonomial, int> blocks;
    std::map<QMonomial, QMatrix> nb;
    for (int i = 0; i < d; ++i) blocks[QMonomial::q_power(-i)] = 1;
    for (int i = 0; i + 1 <= d - 1; ++i) {
        if (!ic.count(i + 1)) continue;
        QMatrix one(1, 1);
        one(0, 0) = 1;
        nb[QMonomial::q_power(-i)] = one;  // e_i -> e_{i+1} lowers the tag by q
    }
    WDRep ladder(std::move(blocks), std::move(nb));
    WDRep expected = twist(make_tau(I), QMonomial::q_power(-(d - 1)));
    if (!is_isomorphic(ladder, expected))
        throw std::logic_error("ext ladder does not realize tau_I at the stated twist");
    return ladder;
}

}  // namespace wdx::wd
