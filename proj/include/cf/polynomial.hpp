#ifndef CF_POLYNOMIAL_HPP
#define CF_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cf/monomial.hpp"
#include "cf/ring.hpp"

namespace cf {

/// Sparse exact multivariate polynomial over a field coefficient type C
/// (Rational, GFp or QI6). Terms map monomial -> nonzero coefficient;
/// the zero polynomial has an empty term map. Immutable by convention:
/// all operations return fresh values.
template <class C>
class Polynomial {
public:
    using Terms = std::map<Monomial, C>;

    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {
        check_domain<C>(*ring_);
    }

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, C c) {
        Polynomial p(std::move(ring));
        p.add_term(Monomial(p.ring_->arity()), std::move(c));
        return p;
    }
    static Polynomial from_rational(RingPtr ring, const Rational& q) {
        C c = coeff_traits<C>::from_rational(ring->domain(), q);
        return constant(std::move(ring), std::move(c));
    }
    static Polynomial variable(RingPtr ring, int index, int power = 1) {
        Polynomial p(ring);
        Monomial m(ring->arity());
        m.exp(index) = power;
        p.add_term(std::move(m), coeff_traits<C>::one(ring->domain()));
        return p;
    }
    static Polynomial term(RingPtr ring, Monomial m, C c) {
        Polynomial p(std::move(ring));
        p.add_term(std::move(m), std::move(c));
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
    }
    /// -1 for the zero polynomial.
    int total_degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.deg());
        return d;
    }
    int degree_in(int var) const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
        return d;
    }
    const C* coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? nullptr : &it->second;
    }
    C constant_coeff() const {
        auto it = terms_.find(Monomial(ring_->arity()));
        return it == terms_.end() ? coeff_traits<C>::zero(ring_->domain()) : it->second;
    }

    /// Accumulate c onto monomial m, erasing the entry if it cancels.
    void add_term(Monomial m, C c) {
        if (coeff_traits<C>::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(std::move(m), c);
        if (!inserted) {
            it->second = it->second + c;
            if (coeff_traits<C>::is_zero(it->second)) terms_.erase(it);
        }
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        check_same(a, b);
        Polynomial r(a);
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        check_same(a, b);
        Polynomial r(a);
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    friend Polynomial operator-(const Polynomial& a) {
        Polynomial r(a.ring_);
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        check_same(a, b);
        return mul_auto(a, b);
    }
    Polynomial operator*(const C& s) const {
        Polynomial r(ring_);
        if (coeff_traits<C>::is_zero(s)) return r;
        for (const auto& [m, c] : terms_) r.add_term(m, c * s);
        return r;
    }
    Polynomial scaled(const Rational& q) const {
        return *this * coeff_traits<C>::from_rational(ring_->domain(), q);
    }
    Polynomial mul_monomial(const Monomial& m, const C& s) const {
        Polynomial r(ring_);
        if (coeff_traits<C>::is_zero(s)) return r;
        for (const auto& [mm, c] : terms_) r.terms_.emplace(mm * m, c * s);
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial diff(int var) const {
        if (var < 0 || var >= ring_->arity()) throw DomainError("diff: unknown variable index");
        Polynomial r(ring_);
        for (const auto& [m, c] : terms_) {
            int e = m[var];
            if (e == 0) continue;
            Monomial dm(m);
            dm.exp(var) = e - 1;
            r.add_term(std::move(dm), c * coeff_traits<C>::from_rational(ring_->domain(), Rational(e)));
        }
        return r;
    }

    /// Exact evaluation; point has one entry per ring variable.
    C eval(const std::vector<C>& point) const {
        if (static_cast<int>(point.size()) != ring_->arity())
            throw DomainError("eval: point arity mismatch");
        C acc = coeff_traits<C>::zero(ring_->domain());
        for (const auto& [m, c] : terms_) {
            C t = c;
            for (int v = 0; v < ring_->arity(); ++v)
                for (int k = 0; k < m[v]; ++k) t = t * point[static_cast<std::size_t>(v)];
            acc = acc + t;
        }
        return acc;
    }

    /// Terms in strictly decreasing `order`; pointers into this polynomial.
    std::vector<const std::pair<const Monomial, C>*> sorted_terms(const MonomialOrder& order) const {
        std::vector<const std::pair<const Monomial, C>*> v;
        v.reserve(terms_.size());
        for (const auto& t : terms_) v.push_back(&t);
        std::sort(v.begin(), v.end(), [&](auto* x, auto* y) {
            return order.greater(x->first, y->first);
        });
        return v;
    }
    const Monomial& leading_monomial(const MonomialOrder& order) const {
        if (terms_.empty()) throw DomainError("leading term of zero polynomial");
        const Monomial* best = &terms_.begin()->first;
        for (const auto& [m, c] : terms_)
            if (order.greater(m, *best)) best = &m;
        return *best;
    }

    std::string canonical_string(const MonomialOrder& order) const;

    static Polynomial mul_serial(const Polynomial& a, const Polynomial& b) {
        Polynomial r(a.ring_);
        if (a.is_zero() || b.is_zero()) return r;
        const Polynomial& outer = a.size() >= b.size() ? a : b;
        const Polynomial& inner = a.size() >= b.size() ? b : a;
        for (const auto& [m1, c1] : outer.terms_)
            for (const auto& [m2, c2] : inner.terms_)
                r.add_term(m1 * m2, c1 * c2);
        return r;
    }

    /// OpenMP kernel: partitions the larger operand across threads, merges
    /// thread-local maps afterwards. Exact arithmetic makes the result
    /// independent of the partitioning; tested against mul_serial.
    static Polynomial mul_parallel(const Polynomial& a, const Polynomial& b) {
#ifndef _OPENMP
        return mul_serial(a, b);
#else
        Polynomial r(a.ring_);
        if (a.is_zero() || b.is_zero()) return r;
        const Polynomial& outer = a.size() >= b.size() ? a : b;
        const Polynomial& inner = a.size() >= b.size() ? b : a;
        std::vector<const std::pair<const Monomial, C>*> ot;
        ot.reserve(outer.size());
        for (const auto& t : outer.terms_) ot.push_back(&t);
        int nthreads = std::min<int>(omp_get_max_threads(), static_cast<int>(ot.size()));
        std::vector<Terms> partial(static_cast<std::size_t>(std::max(nthreads, 1)));
#pragma omp parallel num_threads(nthreads)
        {
            Terms& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
            for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(ot.size()); ++i) {
                const auto& [m1, c1] = *ot[static_cast<std::size_t>(i)];
                for (const auto& [m2, c2] : inner.terms_) {
                    C prod = c1 * c2;
                    if (coeff_traits<C>::is_zero(prod)) continue;
                    auto [it, inserted] = local.try_emplace(m1 * m2, prod);
                    if (!inserted) {
                        it->second = it->second + prod;
                        if (coeff_traits<C>::is_zero(it->second)) local.erase(it);
                    }
                }
            }
        }
        for (auto& part : partial)
            for (auto& [m, c] : part) r.add_term(m, std::move(c));
        return r;
#endif
    }

private:
    static Polynomial mul_auto(const Polynomial& a, const Polynomial& b) {
        // parallel pays off only when the term-product count is large
        if (a.size() * b.size() >= 16384) return mul_parallel(a, b);
        return mul_serial(a, b);
    }
    static void check_same(const Polynomial& a, const Polynomial& b) {
        if (!same_ring(a.ring_, b.ring_)) throw DomainError("ring mismatch");
    }

    RingPtr ring_;
    Terms terms_;
};

namespace detail {

inline std::string monomial_string(const Monomial& m, const Ring& ring) {
    std::string out;
    for (int v = 0; v < ring.arity(); ++v) {
        int e = m[v];
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += ring.var(v);
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

// sign-split printing: rationals split into sign + magnitude, prime-field
// residues stay as-is, QI6 values parenthesize unless they are rational.
template <class C>
inline void coeff_print_parts(const C& c, bool& neg, std::string& mag, bool& is_one) {
    if constexpr (std::is_same_v<C, Rational>) {
        neg = sign(c) < 0;
        Rational m = neg ? Rational(-c) : c;
        is_one = (m == 1);
        mag = to_string(m);
    } else if constexpr (std::is_same_v<C, GFp>) {
        neg = false;
        is_one = (c.value() == 1);
        mag = c.str();
    } else {
        static_assert(std::is_same_v<C, QI6>);
        if (c.is_rational()) {
            coeff_print_parts<Rational>(c.re(), neg, mag, is_one);
        } else {
            neg = false;
            is_one = false;
            mag = "(" + c.str() + ")";
        }
    }
}

} // namespace detail

template <class C>
std::string Polynomial<C>::canonical_string(const MonomialOrder& order) const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto* t : sorted_terms(order)) {
        bool neg = false, one = false;
        std::string mag;
        detail::coeff_print_parts(t->second, neg, mag, one);
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (t->first.is_unit()) {
            out += mag;
        } else if (one) {
            out += detail::monomial_string(t->first, *ring_);
        } else {
            out += mag + "*" + detail::monomial_string(t->first, *ring_);
        }
    }
    return out;
}

} // namespace cf

#endif
