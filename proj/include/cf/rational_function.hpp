#ifndef CF_RATIONAL_FUNCTION_HPP
#define CF_RATIONAL_FUNCTION_HPP

#include <map>
#include <string>

#include "cf/polynomial.hpp"

namespace cf {

/// Quotient of polynomials, not reduced to lowest terms (multivariate gcd
/// is out of scope); zero-testing uses the numerator only.
template <class C>
struct RationalFunction {
    Polynomial<C> num;
    Polynomial<C> den;

    explicit RationalFunction(Polynomial<C> n)
        : num(std::move(n)),
          den(Polynomial<C>::from_rational(num.ring(), Rational(1))) {}
    RationalFunction(Polynomial<C> n, Polynomial<C> d)
        : num(std::move(n)), den(std::move(d)) {
        if (!same_ring(num.ring(), den.ring())) throw DomainError("ring mismatch");
        if (den.is_zero()) throw DomainError("rational function with zero denominator");
    }

    bool is_zero() const { return num.is_zero(); }
    const RingPtr& ring() const { return num.ring(); }
};

/// Substitution map: source variable name -> rational function over the
/// target ring. Unmapped source variables pass through by name (they must
/// exist in the target ring if they occur in the polynomial).
template <class C>
using Substitution = std::map<std::string, RationalFunction<C>>;

/// Exact substitution via a single common denominator: with E_v the maximal
/// exponent of v in p, den = prod den_v^{E_v} and each term contributes
/// c * prod num_v^{e_v} * prod den_v^{E_v - e_v}.
template <class C>
RationalFunction<C> substitute(const Polynomial<C>& p, const Substitution<C>& subs,
                               const RingPtr& target) {
    const Ring& src = *p.ring();
    check_domain<C>(*target);
    const int n = src.arity();

    std::vector<int> maxexp(static_cast<std::size_t>(n), 0);
    for (const auto& [m, c] : p.terms())
        for (int v = 0; v < n; ++v) maxexp[static_cast<std::size_t>(v)] = std::max(maxexp[static_cast<std::size_t>(v)], m[v]);

    const Polynomial<C> one = Polynomial<C>::from_rational(target, Rational(1));

    // per-variable power tables: nums[v][k] = num_v^k, dens[v][k] = den_v^k
    std::vector<std::vector<Polynomial<C>>> nums, dens;
    std::vector<bool> trivial_den(static_cast<std::size_t>(n), true);
    nums.reserve(static_cast<std::size_t>(n));
    dens.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        Polynomial<C> nv = one, dv = one;
        auto it = subs.find(src.var(v));
        if (it != subs.end()) {
            if (!same_ring(it->second.ring(), target)) throw DomainError("substitution value in wrong ring");
            nv = it->second.num;
            dv = it->second.den;
            trivial_den[static_cast<std::size_t>(v)] = dv.is_constant() && dv == one;
        } else if (maxexp[static_cast<std::size_t>(v)] > 0) {
            auto idx = target->index_of(src.var(v));
            if (!idx) throw DomainError("variable '" + src.var(v) + "' missing from target ring");
            nv = Polynomial<C>::variable(target, *idx);
        }
        std::vector<Polynomial<C>> np{one}, dp{one};
        for (int k = 1; k <= maxexp[static_cast<std::size_t>(v)]; ++k) {
            np.push_back(np.back() * nv);
            if (!trivial_den[static_cast<std::size_t>(v)]) dp.push_back(dp.back() * dv);
        }
        nums.push_back(std::move(np));
        dens.push_back(std::move(dp));
    }

    Polynomial<C> den_total = one;
    for (int v = 0; v < n; ++v) {
        if (trivial_den[static_cast<std::size_t>(v)] || maxexp[static_cast<std::size_t>(v)] == 0) continue;
        den_total = den_total * dens[static_cast<std::size_t>(v)][static_cast<std::size_t>(maxexp[static_cast<std::size_t>(v)])];
    }

    Polynomial<C> num_total(target);
    for (const auto& [m, c] : p.terms()) {
        Polynomial<C> t = Polynomial<C>::constant(target, c);
        for (int v = 0; v < n; ++v) {
            int e = m[v];
            const int E = maxexp[static_cast<std::size_t>(v)];
            if (e > 0) t = t * nums[static_cast<std::size_t>(v)][static_cast<std::size_t>(e)];
            if (!trivial_den[static_cast<std::size_t>(v)] && E > e)
                t = t * dens[static_cast<std::size_t>(v)][static_cast<std::size_t>(E - e)];
        }
        num_total = num_total + t;
    }
    return RationalFunction<C>(std::move(num_total), std::move(den_total));
}

} // namespace cf

#endif
