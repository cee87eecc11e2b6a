#ifndef CF_GFP_HPP
#define CF_GFP_HPP

#include <cstdint>
#include <string>

#include "cf/errors.hpp"
#include "cf/rational.hpp"

namespace cf {

/// Element of Z/p for an odd prime p < 2^31 (products fit in int64).
/// Each element carries its modulus; a default-constructed element is a
/// modulus-free zero that combines with anything (handy for accumulators).
class GFp {
public:
    GFp() = default;
    GFp(std::int64_t value, std::int64_t p) : p_(p) {
        v_ = value % p;
        if (v_ < 0) v_ += p;
    }

    std::int64_t value() const { return v_; }
    std::int64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    friend GFp operator+(const GFp& a, const GFp& b) {
        if (a.p_ == 0) return b;
        if (b.p_ == 0) return a;
        check(a, b);
        std::int64_t s = a.v_ + b.v_;
        if (s >= a.p_) s -= a.p_;
        return raw(s, a.p_);
    }
    friend GFp operator-(const GFp& a, const GFp& b) { return a + (-b); }
    friend GFp operator-(const GFp& a) {
        return a.v_ == 0 ? a : raw(a.p_ - a.v_, a.p_);
    }
    friend GFp operator*(const GFp& a, const GFp& b) {
        if (a.p_ == 0 || b.p_ == 0) return GFp();
        check(a, b);
        return raw((a.v_ * b.v_) % a.p_, a.p_);
    }
    GFp inv() const {
        if (p_ == 0 || v_ == 0) throw DomainError("GFp: inverse of zero");
        // extended Euclid
        std::int64_t t = 0, nt = 1, r = p_, nr = v_;
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += p_;
        return raw(t, p_);
    }
    friend GFp operator/(const GFp& a, const GFp& b) { return a * b.inv(); }

    friend bool operator==(const GFp& a, const GFp& b) {
        if (a.v_ == 0 && b.v_ == 0) return true;
        return a.p_ == b.p_ && a.v_ == b.v_;
    }
    friend bool operator!=(const GFp& a, const GFp& b) { return !(a == b); }

    std::string str() const { return std::to_string(v_); }

private:
    static GFp raw(std::int64_t v, std::int64_t p) {
        GFp g; g.v_ = v; g.p_ = p; return g;
    }
    static void check(const GFp& a, const GFp& b) {
        if (a.p_ != b.p_) throw DomainError("GFp: mixed moduli");
    }

    std::int64_t v_ = 0;
    std::int64_t p_ = 0;
};

/// a/b mod p; throws if p divides b.
inline GFp gfp_from_rational(const Rational& q, std::int64_t p) {
    Integer pz(static_cast<long>(p));
    Integer num = q.get_num() % pz;
    Integer den = q.get_den() % pz;
    if (den == 0) throw DomainError("reduce mod p: denominator divisible by " + std::to_string(p));
    GFp n(num.get_si(), p), d(den.get_si(), p);
    return n / d;
}

} // namespace cf

#endif
