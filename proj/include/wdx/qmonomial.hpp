#pragma once

#include "wdx/rational.hpp"

#include <compare>
#include <stdexcept>
#include <string>

namespace wdx {

/**
 * Formal scalar c*t^m with c a nonzero rational and t a formal square root
 * of q. Frobenius eigenvalues are tagged by these; q itself is (1,2) and
 * |phi| = q^{-1} is (1,-2).
 */
struct QMonomial {
    Rational c{1};
    long long m = 0;

    QMonomial() = default;
    QMonomial(Rational coeff, long long deg) : c(std::move(coeff)), m(deg) {
        if (c == 0) throw std::invalid_argument("QMonomial coefficient must be nonzero");
    }

    static QMonomial one() { return QMonomial(); }
    static QMonomial q_power(long long k) { return QMonomial(Rational(1), 2 * k); }

    friend QMonomial operator*(const QMonomial& a, const QMonomial& b) {
        return QMonomial(a.c * b.c, a.m + b.m);
    }
    QMonomial inverse() const { return QMonomial(Rational(1) / c, -m); }
    QMonomial pow(long long k) const {
        if (k == 0) return one();
        return QMonomial(pow_rational(c, k), m * k);
    }

    /** Weight of the eigenvalue when |c| = 1; throws otherwise. */
    long long weight() const {
        if (c != 1 && c != -1) throw std::domain_error("non-unit eigenvalue scalar: weight undefined");
        return m;
    }

    /** Numeric value at a given rational t. */
    Rational eval_t(const Rational& t) const { return c * pow_rational(t, m); }

    friend bool operator==(const QMonomial& a, const QMonomial& b) { return a.m == b.m && a.c == b.c; }
    friend bool operator!=(const QMonomial& a, const QMonomial& b) { return !(a == b); }
    // Tag order: by degree first, deterministic across runs.
    friend bool operator<(const QMonomial& a, const QMonomial& b) {
        if (a.m != b.m) return a.m < b.m;
        return a.c < b.c;
    }

    std::string str() const {
        std::string s = to_string(c);
        if (m != 0) s += "*t^" + std::to_string(m);
        return s;
    }
};

inline QMonomial qmono_mul(const QMonomial& a, const QMonomial& b) { return a * b; }
inline QMonomial qmono_pow(const QMonomial& a, long long k) { return a.pow(k); }

}  // namespace wdx
