#ifndef CF_GROEBNER_IMPL_HPP
#define CF_GROEBNER_IMPL_HPP

// Buchberger with the normal selection strategy (minimal lcm degree first,
// deterministic tie-breaks) and Gebauer-Moller pair pruning. Outputs the
// reduced basis, which is unique for a fixed ideal and order.

namespace cf {

namespace gb_detail {

struct PairKey {
    int deg;
    Monomial lcm;
    int i, j;
};

class Clock {
public:
    explicit Clock(double max_seconds) : max_(max_seconds), start_(std::chrono::steady_clock::now()) {}
    void check() const {
        if (max_ == std::numeric_limits<double>::infinity()) return;
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        if (s > max_)
            throw BudgetExceeded(BudgetExceeded::Kind::WallClock,
                                 "wall-clock budget exceeded (" + std::to_string(max_) + " s)");
    }

private:
    double max_;
    std::chrono::steady_clock::time_point start_;
};

template <class C>
class Buchberger {
public:
    Buchberger(const MonomialOrder& order, const GBudget& budget)
        : order_(order), budget_(budget), clock_(budget.max_seconds),
          pairs_([this](const PairKey& a, const PairKey& b) { return pair_less(a, b); }) {}

    void add_input(OPoly<C> p) {
        if (p.empty()) return;
        make_monic(p);
        update(std::move(p));
    }

    std::vector<OPoly<C>> run() {
        long processed = 0;
        while (!pairs_.empty()) {
            if (processed >= budget_.max_pairs)
                throw BudgetExceeded(BudgetExceeded::Kind::Pairs,
                                     "pair budget exceeded (" + std::to_string(budget_.max_pairs) + ")");
            if ((processed & 31) == 0) clock_.check();
            PairKey pk = *pairs_.begin();
            pairs_.erase(pairs_.begin());
            ++processed;

            OPoly<C> s = spoly(G_[static_cast<std::size_t>(pk.i)], G_[static_cast<std::size_t>(pk.j)]);
            OPoly<C> r = reduce_full(std::move(s), G_, order_);
            if (r.empty()) continue;
            make_monic(r);
            if (static_cast<long>(G_.size()) >= budget_.max_basis)
                throw BudgetExceeded(BudgetExceeded::Kind::BasisSize,
                                     "basis-size budget exceeded (" + std::to_string(budget_.max_basis) + ")");
            update(std::move(r));
        }
        return reduced_basis();
    }

private:
    OPoly<C> spoly(const OPoly<C>& f, const OPoly<C>& g) const {
        Monomial l = Monomial::lcm(f.front().first, g.front().first);
        Monomial uf = f.front().first.divide_into(l);
        Monomial ug = g.front().first.divide_into(l);
        // both monic: spoly = uf*f - ug*g; g's unit leading coeff is the
        // multiplier (it carries the right modulus over a prime field)
        OPoly<C> a;
        a.reserve(f.size());
        for (const auto& [m, c] : f) a.emplace_back(m * uf, c);
        return axpy(a, g.front().second, ug, g, order_);
    }

    bool pair_less(const PairKey& a, const PairKey& b) const {
        if (a.deg != b.deg) return a.deg < b.deg;
        int c = order_.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    }

    /// Gebauer-Moller UPDATE: prune the candidate pairs of the new element
    /// (M, F, B criteria) and the old pairs made redundant by it.
    void update(OPoly<C> h) {
        const int t = static_cast<int>(G_.size());
        const Monomial& lh = h.front().first;

        struct Cand { int i; Monomial lcm; bool coprime; };
        std::vector<Cand> cands;
        cands.reserve(static_cast<std::size_t>(t));
        for (int i = 0; i < t; ++i)
            cands.push_back({i, Monomial::lcm(G_[static_cast<std::size_t>(i)].front().first, lh),
                             Monomial::coprime(G_[static_cast<std::size_t>(i)].front().first, lh)});

        std::vector<char> keep(cands.size(), 1);
        // M: drop (i,t) if some lcm(j,t) properly divides lcm(i,t)
        for (std::size_t i = 0; i < cands.size(); ++i) {
            if (!keep[i]) continue;
            for (std::size_t j = 0; j < cands.size(); ++j) {
                if (i == j) continue;
                if (cands[j].lcm.divides(cands[i].lcm) && cands[j].lcm != cands[i].lcm) {
                    keep[i] = 0;
                    break;
                }
            }
        }
        // F: among equal lcms keep the first
        for (std::size_t i = 0; i < cands.size(); ++i) {
            if (!keep[i]) continue;
            for (std::size_t j = i + 1; j < cands.size(); ++j) {
                if (keep[j] && cands[j].lcm == cands[i].lcm) keep[j] = 0;
            }
        }
        // B: coprime leading monomials reduce to zero anyway
        for (std::size_t i = 0; i < cands.size(); ++i)
            if (keep[i] && cands[i].coprime) keep[i] = 0;

        // prune old pairs strictly divisible by the new leading monomial
        for (auto it = pairs_.begin(); it != pairs_.end();) {
            const PairKey& pk = *it;
            if (lh.divides(pk.lcm)
                && Monomial::lcm(G_[static_cast<std::size_t>(pk.i)].front().first, lh) != pk.lcm
                && Monomial::lcm(G_[static_cast<std::size_t>(pk.j)].front().first, lh) != pk.lcm) {
                it = pairs_.erase(it);
            } else {
                ++it;
            }
        }

        for (std::size_t i = 0; i < cands.size(); ++i)
            if (keep[i]) pairs_.insert(PairKey{cands[i].lcm.deg(), cands[i].lcm, cands[i].i, t});
        G_.push_back(std::move(h));
    }

    /// minimalize + interreduce + monic: the reduced basis.
    std::vector<OPoly<C>> reduced_basis() {
        std::vector<OPoly<C>> out;
        // minimal: drop any element whose LM is divisible by another's
        for (std::size_t i = 0; i < G_.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < G_.size(); ++j) {
                if (i == j) continue;
                const Monomial& mi = G_[i].front().first;
                const Monomial& mj = G_[j].front().first;
                if (mj.divides(mi) && (mj != mi || j < i)) { redundant = true; break; }
            }
            if (!redundant) out.push_back(G_[i]);
        }
        // interreduce to fixpoint
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < out.size(); ++i) {
                clock_.check();
                std::vector<OPoly<C>> others;
                others.reserve(out.size() - 1);
                for (std::size_t j = 0; j < out.size(); ++j)
                    if (j != i) others.push_back(out[j]);
                OPoly<C> r = reduce_full(out[i], others, order_);
                if (r != out[i]) {
                    changed = true;
                    if (r.empty()) {
                        out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
                        --i;
                    } else {
                        make_monic(r);
                        out[i] = std::move(r);
                    }
                }
            }
        }
        std::sort(out.begin(), out.end(), [&](const OPoly<C>& a, const OPoly<C>& b) {
            return order_.less(a.front().first, b.front().first);
        });
        return out;
    }

    const MonomialOrder& order_;
    GBudget budget_;
    Clock clock_;
    std::vector<OPoly<C>> G_;
    std::set<PairKey, std::function<bool(const PairKey&, const PairKey&)>> pairs_;
};

} // namespace gb_detail

template <class C>
GroebnerBasis<C> groebner_basis(const IdealBasis<C>& I, const GBudget& budget) {
    using namespace gb_detail;
    Buchberger<C> engine(I.order, budget);
    for (const auto& g : I.gens) engine.add_input(to_opoly(g, I.order));
    std::vector<OPoly<C>> basis = engine.run();
    GroebnerBasis<C> out{{}, I.order};
    out.basis.reserve(basis.size());
    for (const auto& b : basis) out.basis.push_back(to_polynomial(b, I.ring));
    return out;
}

template <class C>
bool ideal_membership(const Polynomial<C>& p, const IdealBasis<C>& I,
                      const GBudget& budget = GBudget()) {
    if (!same_ring(p.ring(), I.ring)) throw DomainError("ideal_membership: ring mismatch");
    GroebnerBasis<C> gb = groebner_basis(I, budget);
    return normal_form(p, gb.basis, I.order).is_zero();
}

/// Rabinowitsch: p vanishes on V(I) iff GB(<I, 1 - w p>) = {1}, with w a
/// fresh variable adjoined as the last degrevlex variable.
template <class C>
bool radical_membership(const Polynomial<C>& p, const IdealBasis<C>& I,
                        const GBudget& budget = GBudget()) {
    if (!same_ring(p.ring(), I.ring)) throw DomainError("radical_membership: ring mismatch");
    std::vector<std::string> vars = I.ring->vars();
    std::string w = fresh_var_name(*I.ring, "w");
    vars.push_back(w);
    RingPtr ext = make_ring(vars, I.ring->domain());
    std::vector<Polynomial<C>> gens;
    gens.reserve(I.gens.size() + 1);
    for (const auto& g : I.gens) gens.push_back(transport(g, ext));
    Polynomial<C> one = Polynomial<C>::from_rational(ext, Rational(1));
    gens.push_back(one - Polynomial<C>::variable(ext, ext->arity() - 1) * transport(p, ext));
    IdealBasis<C> J(ext, std::move(gens), MonomialOrder::degrevlex(*ext));
    return groebner_basis(J, budget).is_unit_ideal();
}

/// Generators of I ∩ k[vars \ drop], via a block elimination order.
/// The result lives in the restricted ring.
template <class C>
IdealBasis<C> elimination_ideal(const IdealBasis<C>& I, const std::vector<std::string>& drop,
                                const GBudget& budget = GBudget()) {
    std::vector<char> dropped(static_cast<std::size_t>(I.ring->arity()), 0);
    for (const auto& name : drop) {
        auto idx = I.ring->index_of(name);
        if (!idx) throw DomainError("elimination_ideal: unknown variable '" + name + "'");
        dropped[static_cast<std::size_t>(*idx)] = 1;
    }
    MonomialOrder elim = MonomialOrder::block_elimination(*I.ring, drop);
    IdealBasis<C> J(I.ring, I.gens, elim);
    GroebnerBasis<C> gb = groebner_basis(J, budget);

    std::vector<std::string> keep_vars;
    for (int v = 0; v < I.ring->arity(); ++v)
        if (!dropped[static_cast<std::size_t>(v)]) keep_vars.push_back(I.ring->var(v));
    RingPtr sub = make_ring(keep_vars, I.ring->domain());

    std::vector<Polynomial<C>> kept;
    for (const auto& g : gb.basis) {
        bool uses_dropped = false;
        for (const auto& [m, c] : g.terms())
            for (int v = 0; v < I.ring->arity() && !uses_dropped; ++v)
                if (dropped[static_cast<std::size_t>(v)] && m[v] > 0) uses_dropped = true;
        if (!uses_dropped) kept.push_back(transport(g, sub));
    }
    return IdealBasis<C>(sub, std::move(kept), MonomialOrder::degrevlex(*sub));
}

/// A ∩ B via the auxiliary-variable construction t·A + (1-t)·B, t eliminated.
template <class C>
IdealBasis<C> ideal_intersect(const IdealBasis<C>& A, const IdealBasis<C>& B,
                              const GBudget& budget = GBudget()) {
    if (!same_ring(A.ring, B.ring)) throw DomainError("ideal_intersect: ring mismatch");
    std::string t = fresh_var_name(*A.ring, "t");
    std::vector<std::string> vars{t};
    for (const auto& v : A.ring->vars()) vars.push_back(v);
    RingPtr ext = make_ring(vars, A.ring->domain());
    Polynomial<C> tv = Polynomial<C>::variable(ext, 0);
    Polynomial<C> one_minus_t = Polynomial<C>::from_rational(ext, Rational(1)) - tv;
    std::vector<Polynomial<C>> gens;
    for (const auto& a : A.gens) gens.push_back(tv * transport(a, ext));
    for (const auto& b : B.gens) gens.push_back(one_minus_t * transport(b, ext));
    IdealBasis<C> J(ext, std::move(gens), MonomialOrder::degrevlex(*ext));
    IdealBasis<C> elim = elimination_ideal(J, {t}, budget);
    // back into the original ring (same variables, same order as A's)
    std::vector<Polynomial<C>> back;
    back.reserve(elim.gens.size());
    for (const auto& g : elim.gens) back.push_back(transport(g, A.ring));
    return IdealBasis<C>(A.ring, std::move(back), A.order);
}

template <class C>
IdealBasis<C> ideal_intersect_all(const std::vector<IdealBasis<C>>& ideals,
                                  const GBudget& budget = GBudget()) {
    if (ideals.empty()) throw DomainError("ideal_intersect_all: empty list");
    IdealBasis<C> acc = ideals.front();
    for (std::size_t k = 1; k < ideals.size(); ++k) acc = ideal_intersect(acc, ideals[k], budget);
    return acc;
}

template <class C>
bool ideal_equal(const IdealBasis<C>& A, const IdealBasis<C>& B, const GBudget& budget = GBudget()) {
    if (!same_ring(A.ring, B.ring)) throw DomainError("ideal_equal: ring mismatch");
    GroebnerBasis<C> ga = groebner_basis(A, budget);
    for (const auto& b : B.gens)
        if (!normal_form(b, ga.basis, A.order).is_zero()) return false;
    GroebnerBasis<C> gbb = groebner_basis(B, budget);
    for (const auto& a : A.gens)
        if (!normal_form(a, gbb.basis, B.order).is_zero()) return false;
    return true;
}

/// Krull dimension, combinatorially: the largest #S over variable subsets S
/// such that no leading monomial of the reduced GB is supported inside S.
/// dim <0> = n, dim <1> = -1.
template <class C>
int ideal_dimension(const IdealBasis<C>& I, const GBudget& budget = GBudget()) {
    const int n = I.ring->arity();
    if (n > 24) throw DomainError("ideal_dimension: too many variables for subset enumeration");
    GroebnerBasis<C> gb = groebner_basis(I, budget);
    std::vector<std::uint32_t> supports;
    supports.reserve(gb.basis.size());
    for (const auto& g : gb.basis) {
        const Monomial& lm = g.leading_monomial(I.order);
        std::uint32_t s = 0;
        for (int v = 0; v < n; ++v)
            if (lm[v] > 0) s |= (1u << v);
        supports.push_back(s);
    }
    int best = -1;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (std::uint32_t s : supports)
            if ((s & ~mask) == 0) { ok = false; break; }
        if (ok) best = std::max(best, static_cast<int>(__builtin_popcount(mask)));
    }
    return best;
}

} // namespace cf

#endif
