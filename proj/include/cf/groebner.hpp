#ifndef CF_GROEBNER_HPP
#define CF_GROEBNER_HPP

#include <algorithm>
#include <chrono>
#include <limits>
#include <optional>
#include <set>
#include <vector>

#include "cf/convert.hpp"
#include "cf/polynomial.hpp"

namespace cf {

/// Resource limits for Buchberger-driven operations. Exceeding one raises
/// BudgetExceeded, a distinct outcome from any mathematical answer.
struct GBudget {
    long max_pairs = 2000000;     // S-pairs processed
    long max_basis = 20000;       // intermediate basis size
    double max_seconds = 3600.0;  // wall clock

    static GBudget unlimited() {
        return GBudget{std::numeric_limits<long>::max(),
                       std::numeric_limits<long>::max(),
                       std::numeric_limits<double>::infinity()};
    }
    static GBudget limited(long pairs, double seconds) {
        GBudget b;
        b.max_pairs = pairs;
        b.max_seconds = seconds;
        return b;
    }
};

/// A finite generating set tagged with its ring and order; zero generators
/// are dropped on construction.
template <class C>
struct IdealBasis {
    RingPtr ring;
    std::vector<Polynomial<C>> gens;
    MonomialOrder order;

    IdealBasis(RingPtr r, std::vector<Polynomial<C>> gs, MonomialOrder ord)
        : ring(std::move(r)), gens(), order(std::move(ord)) {
        for (auto& g : gs) {
            if (g.is_zero()) continue;
            if (!same_ring(g.ring(), ring)) throw DomainError("ideal generator from a different ring");
            gens.push_back(std::move(g));
        }
    }
};

template <class C>
IdealBasis<C> make_ideal(RingPtr ring, std::vector<Polynomial<C>> gens) {
    MonomialOrder ord = MonomialOrder::degrevlex(*ring);
    return IdealBasis<C>(std::move(ring), std::move(gens), std::move(ord));
}

template <class C>
struct GroebnerBasis {
    std::vector<Polynomial<C>> basis; // reduced: monic, mutually irreducible
    MonomialOrder order;

    bool is_unit_ideal() const {
        return basis.size() == 1 && basis.front().is_constant() && !basis.front().is_zero();
    }
};

namespace gb_detail {

template <class C>
using OTerm = std::pair<Monomial, C>;
template <class C>
using OPoly = std::vector<OTerm<C>>; // strictly decreasing in the active order

template <class C>
OPoly<C> to_opoly(const Polynomial<C>& p, const MonomialOrder& order) {
    OPoly<C> v;
    v.reserve(p.size());
    for (const auto& [m, c] : p.terms()) v.emplace_back(m, c);
    std::sort(v.begin(), v.end(),
              [&](const OTerm<C>& a, const OTerm<C>& b) { return order.greater(a.first, b.first); });
    return v;
}

template <class C>
Polynomial<C> to_polynomial(const OPoly<C>& v, const RingPtr& ring) {
    Polynomial<C> p(ring);
    for (const auto& [m, c] : v) p.add_term(m, c);
    return p;
}

template <class C>
void make_monic(OPoly<C>& p) {
    if (p.empty()) return;
    C inv = coeff_traits<C>::inv(p.front().second);
    for (auto& [m, c] : p) c = c * inv;
}

/// r := a - coeff * (mono * b), all sorted by `order`; one merge pass.
template <class C>
OPoly<C> axpy(const OPoly<C>& a, const C& coeff, const Monomial& mono, const OPoly<C>& b,
              const MonomialOrder& order) {
    OPoly<C> r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        Monomial mb = b[j].first * mono;
        int cmp = order.compare(a[i].first, mb);
        if (cmp > 0) {
            r.push_back(a[i++]);
        } else if (cmp < 0) {
            C c = -(coeff * b[j].second);
            if (!coeff_traits<C>::is_zero(c)) r.emplace_back(std::move(mb), std::move(c));
            ++j;
        } else {
            C c = a[i].second - coeff * b[j].second;
            if (!coeff_traits<C>::is_zero(c)) r.emplace_back(a[i].first, std::move(c));
            ++i; ++j;
        }
    }
    while (i < a.size()) r.push_back(a[i++]);
    while (j < b.size()) {
        C c = -(coeff * b[j].second);
        if (!coeff_traits<C>::is_zero(c)) r.emplace_back(b[j].first * mono, std::move(c));
        ++j;
    }
    return r;
}

/// Full division by the sequence G (divisors monic): the remainder has no
/// term divisible by any leading monomial of G. Deterministic in G's order.
template <class C>
OPoly<C> reduce_full(OPoly<C> h, const std::vector<OPoly<C>>& G, const MonomialOrder& order) {
    OPoly<C> rem;
    std::size_t done = 0; // terms of h before `done` are already irreducible
    while (done < h.size()) {
        const Monomial& mt = h[done].first;
        const OPoly<C>* red = nullptr;
        for (const auto& g : G)
            if (!g.empty() && g.front().first.divides(mt)) { red = &g; break; }
        if (red == nullptr) {
            rem.push_back(std::move(h[done]));
            ++done;
            continue;
        }
        Monomial q = red->front().first.divide_into(mt);
        C f = h[done].second * coeff_traits<C>::inv(red->front().second);
        OPoly<C> tail(h.begin() + static_cast<std::ptrdiff_t>(done), h.end());
        h = axpy(tail, f, q, *red, order);
        done = 0;
    }
    return rem;
}

} // namespace gb_detail

template <class C>
GroebnerBasis<C> groebner_basis(const IdealBasis<C>& I, const GBudget& budget = GBudget());

/// Remainder of p on division by the sequence G (not necessarily a GB).
template <class C>
Polynomial<C> normal_form(const Polynomial<C>& p, const std::vector<Polynomial<C>>& G,
                          const MonomialOrder& order) {
    using namespace gb_detail;
    std::vector<OPoly<C>> og;
    og.reserve(G.size());
    for (const auto& g : G) {
        if (!same_ring(g.ring(), p.ring())) throw DomainError("normal_form: ring mismatch");
        if (!g.is_zero()) og.push_back(to_opoly(g, order));
    }
    OPoly<C> r = reduce_full(to_opoly(p, order), og, order);
    return to_polynomial(r, p.ring());
}

} // namespace cf

#include "cf/groebner_impl.hpp"

#endif
