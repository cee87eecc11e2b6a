#ifndef CF_RING_HPP
#define CF_RING_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cf/errors.hpp"
#include "cf/gfp.hpp"
#include "cf/qi6.hpp"
#include "cf/rational.hpp"

namespace cf {

enum class DomainKind { Rationals, PrimeField, ExtIR6 };

struct CoeffDomain {
    DomainKind kind = DomainKind::Rationals;
    std::int64_t prime = 0; // PrimeField only

    static CoeffDomain rationals() { return {DomainKind::Rationals, 0}; }
    static CoeffDomain prime_field(std::int64_t p) {
        if (p <= 2 || p >= (std::int64_t(1) << 31) || !is_prime(p))
            throw DomainError("PrimeField modulus must be an odd prime < 2^31, got " + std::to_string(p));
        return {DomainKind::PrimeField, p};
    }
    static CoeffDomain ext_ir6() { return {DomainKind::ExtIR6, 0}; }

    friend bool operator==(const CoeffDomain& a, const CoeffDomain& b) {
        return a.kind == b.kind && a.prime == b.prime;
    }
};

/// A polynomial ring: an ordered list of named variables over a domain.
/// The declared variable sequence is the default order sequence.
class Ring {
public:
    Ring(std::vector<std::string> vars, CoeffDomain domain)
        : vars_(std::move(vars)), domain_(domain) {
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            const std::string& v = vars_[i];
            if (v.empty()) throw DomainError("empty variable name");
            if (v == "i" || v == "r6") throw DomainError("'" + v + "' is a reserved token, not a variable");
            if (!index_.emplace(v, static_cast<int>(i)).second)
                throw DomainError("duplicate variable '" + v + "'");
        }
    }

    int arity() const { return static_cast<int>(vars_.size()); }
    const std::string& var(int i) const { return vars_[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& vars() const { return vars_; }
    const CoeffDomain& domain() const { return domain_; }

    std::optional<int> index_of(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    friend bool operator==(const Ring& a, const Ring& b) {
        return a.domain_ == b.domain_ && a.vars_ == b.vars_;
    }
    friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

private:
    std::vector<std::string> vars_;
    CoeffDomain domain_;
    std::map<std::string, int> index_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars, CoeffDomain domain) {
    return std::make_shared<const Ring>(std::move(vars), domain);
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

/// A name not used by `ring`, derived from `base` ("w", "w0", "w1", ...).
inline std::string fresh_var_name(const Ring& ring, const std::string& base) {
    if (!ring.index_of(base) && base != "i" && base != "r6") return base;
    for (int k = 0;; ++k) {
        std::string cand = base + std::to_string(k);
        if (!ring.index_of(cand)) return cand;
    }
}

// ---------------------------------------------------------------------------
// coefficient traits: construction is domain-driven, arithmetic lives on the
// element types themselves.

template <class C> struct coeff_traits;

template <> struct coeff_traits<Rational> {
    static constexpr DomainKind kind = DomainKind::Rationals;
    static Rational zero(const CoeffDomain&) { return Rational(0); }
    static Rational one(const CoeffDomain&) { return Rational(1); }
    static Rational from_rational(const CoeffDomain&, const Rational& q) { return q; }
    static bool is_zero(const Rational& c) { return c == 0; }
    static Rational inv(const Rational& c) {
        if (c == 0) throw DomainError("division by zero");
        return Rational(1) / c;
    }
    static std::string str(const Rational& c) { return to_string(c); }
};

template <> struct coeff_traits<GFp> {
    static constexpr DomainKind kind = DomainKind::PrimeField;
    static GFp zero(const CoeffDomain& d) { return GFp(0, d.prime); }
    static GFp one(const CoeffDomain& d) { return GFp(1, d.prime); }
    static GFp from_rational(const CoeffDomain& d, const Rational& q) {
        return gfp_from_rational(q, d.prime);
    }
    static bool is_zero(const GFp& c) { return c.is_zero(); }
    static GFp inv(const GFp& c) { return c.inv(); }
    static std::string str(const GFp& c) { return c.str(); }
};

template <> struct coeff_traits<QI6> {
    static constexpr DomainKind kind = DomainKind::ExtIR6;
    static QI6 zero(const CoeffDomain&) { return QI6(); }
    static QI6 one(const CoeffDomain&) { return QI6(Rational(1)); }
    static QI6 from_rational(const CoeffDomain&, const Rational& q) { return QI6(q); }
    static bool is_zero(const QI6& c) { return c.is_zero(); }
    static QI6 inv(const QI6& c) { return c.inv(); }
    static std::string str(const QI6& c) { return c.str(); }
};

template <class C>
void check_domain(const Ring& ring) {
    if (ring.domain().kind != coeff_traits<C>::kind)
        throw DomainError("coefficient type does not match ring domain");
}

} // namespace cf

#endif
