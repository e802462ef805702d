#pragma once

#include "wdx/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wdx {

/**
 * Coefficient field selector: the rationals, or a prime field F_p.
 * Whether p is "banal" for the intended application is the caller's
 * responsibility; we only record the characteristic.
 */
struct FieldSpec {
    std::uint64_t p = 0;  // 0 = rationals

    static FieldSpec rationals() { return FieldSpec{0}; }
    static FieldSpec prime_field(std::uint64_t p) {
        if (!is_prime_u64(p)) throw std::invalid_argument("characteristic must be prime, got " + std::to_string(p));
        return FieldSpec{p};
    }
    bool is_rationals() const { return p == 0; }
    bool operator==(const FieldSpec&) const = default;
};

/**
 * Prime field element with runtime modulus. A default-constructed or
 * int-constructed value has modulus 0 and acts as a plain small integer
 * until it meets a bound value; this lets generic code write F(0), F(1).
 */
class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(long long v) : v_(v), p_(0) {}
    Fp(long long v, std::uint64_t p) : v_(v), p_(p) { reduce(); }

    std::uint64_t modulus() const { return p_; }
    long long raw() const { return v_; }

    /** Canonical representative in [0,p); requires a bound modulus unless the value is a small integer. */
    long long canonical() const { return p_ ? v_ : v_; }

    friend Fp operator+(const Fp& a, const Fp& b) { return Fp(a.v_ + b.v_, join(a, b)); }
    friend Fp operator-(const Fp& a, const Fp& b) { return Fp(a.v_ - b.v_, join(a, b)); }
    friend Fp operator-(const Fp& a) { return Fp(-a.v_, a.p_); }
    friend Fp operator*(const Fp& a, const Fp& b) {
        std::uint64_t p = join(a, b);
        if (!p) return Fp(a.v_ * b.v_);
        return Fp((long long)((unsigned __int128)norm(a.v_, p) * norm(b.v_, p) % p), p);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    Fp inverse() const {
        if (!p_) {
            if (v_ == 1) return Fp(1);
            if (v_ == -1) return Fp(-1);
            throw std::domain_error("inverse of unbound prime-field element");
        }
        long long a = (long long)norm(v_, p_);
        if (a == 0) throw std::domain_error("division by zero in F_p");
        // extended Euclid
        long long t = 0, newt = 1, r = (long long)p_, newr = a;
        while (newr != 0) {
            long long q = r / newr;
            t -= q * newt;
            std::swap(t, newt);
            r -= q * newr;
            std::swap(r, newr);
        }
        return Fp(t, p_);
    }

    friend bool operator==(const Fp& a, const Fp& b) {
        std::uint64_t p = a.p_ ? a.p_ : b.p_;
        if (!p) return a.v_ == b.v_;
        return norm(a.v_, p) == norm(b.v_, p);
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
    bool is_zero() const { return p_ ? norm(v_, p_) == 0 : v_ == 0; }

    std::string str() const { return std::to_string(p_ ? (long long)norm(v_, p_) : v_); }

private:
    long long v_;
    std::uint64_t p_;

    void reduce() {
        if (p_) v_ = (long long)norm(v_, p_);
    }
    static std::uint64_t norm(long long v, std::uint64_t p) {
        long long m = v % (long long)p;
        if (m < 0) m += (long long)p;
        return (std::uint64_t)m;
    }
    static std::uint64_t join(const Fp& a, const Fp& b) {
        if (a.p_ && b.p_ && a.p_ != b.p_) throw std::domain_error("mixed prime-field moduli");
        return a.p_ ? a.p_ : b.p_;
    }
};

// Uniform helpers so templates can treat Rational and Fp alike.
inline bool field_is_zero(const Rational& x) { return x == 0; }
inline bool field_is_zero(const Fp& x) { return x.is_zero(); }
inline std::string field_str(const Rational& x) { return to_string(x); }
inline std::string field_str(const Fp& x) { return x.str(); }

}  // namespace wdx
