#ifndef CF_CONVERT_HPP
#define CF_CONVERT_HPP

#include <vector>

#include "cf/polynomial.hpp"

namespace cf {

/// Re-express p in `target` (same domain), matching variables by name.
/// Fails if a variable actually used by p is missing from the target.
template <class C>
Polynomial<C> transport(const Polynomial<C>& p, const RingPtr& target) {
    const Ring& src = *p.ring();
    if (same_ring(p.ring(), target)) return p;
    if (!(src.domain() == target->domain())) throw DomainError("transport across domains");
    std::vector<int> where(static_cast<std::size_t>(src.arity()), -1);
    for (int v = 0; v < src.arity(); ++v) {
        auto idx = target->index_of(src.var(v));
        if (idx) where[static_cast<std::size_t>(v)] = *idx;
    }
    Polynomial<C> out(target);
    for (const auto& [m, c] : p.terms()) {
        Monomial tm(target->arity());
        for (int v = 0; v < src.arity(); ++v) {
            if (m[v] == 0) continue;
            if (where[static_cast<std::size_t>(v)] < 0)
                throw DomainError("transport: variable '" + src.var(v) + "' missing from target ring");
            tm.exp(where[static_cast<std::size_t>(v)]) = m[v];
        }
        out.add_term(std::move(tm), c);
    }
    return out;
}

/// Coefficient-wise image a/b -> a*b^{-1} mod p; error if p | b.
inline Polynomial<GFp> reduce_mod_p(const Polynomial<Rational>& p, std::int64_t prime) {
    RingPtr target = make_ring(p.ring()->vars(), CoeffDomain::prime_field(prime));
    Polynomial<GFp> out(target);
    for (const auto& [m, c] : p.terms()) out.add_term(m, gfp_from_rational(c, prime));
    return out;
}

/// Embed a rational-coefficient polynomial into the Q(i,r6) extension.
inline Polynomial<QI6> to_ext_ir6(const Polynomial<Rational>& p) {
    RingPtr target = make_ring(p.ring()->vars(), CoeffDomain::ext_ir6());
    Polynomial<QI6> out(target);
    for (const auto& [m, c] : p.terms()) out.add_term(m, QI6(c));
    return out;
}

/// Embed into a given ExtIR6 ring (variables matched by name).
inline Polynomial<QI6> to_ext_ir6(const Polynomial<Rational>& p, const RingPtr& target) {
    return transport(to_ext_ir6(p), target);
}

} // namespace cf

#endif
