#ifndef CF_FOCUS_HPP
#define CF_FOCUS_HPP

#include <tuple>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cf/convert.hpp"
#include "cf/linalg.hpp"
#include "cf/polynomial.hpp"

namespace cf {

/// A system dx/dt = P, dy/dt = Q with linear part (-y, x): P and Q live in
/// a ring of two phase variables plus parameters, have no constant term,
/// and every non-linear term has phase-degree >= 2.
template <class C>
struct PlanarSystem {
    RingPtr ring;
    int x = 0, y = 1; // phase variable indices
    Polynomial<C> P, Q;
};

namespace focus_detail {

inline int phase_deg(const Monomial& m, int x, int y) { return m[x] + m[y]; }

template <class C>
void check_linear_part(const Polynomial<C>& p, int x, int y, bool is_p) {
    const CoeffDomain& dom = p.ring()->domain();
    bool found = false;
    for (const auto& [m, c] : p.terms()) {
        int a = m[x], b = m[y];
        int pd = a + b;
        if (pd >= 2) continue;
        if (pd == 0) throw DomainError("planar system: constant or parameter-only term");
        // the unique phase-linear term must be exactly -y (for P) or x (for Q)
        Monomial bare(m.arity());
        bare.exp(x) = a;
        bare.exp(y) = b;
        bool right_mon = is_p ? (a == 0 && b == 1) : (a == 1 && b == 0);
        Rational want = is_p ? Rational(-1) : Rational(1);
        if (!right_mon || m != bare || !(c == coeff_traits<C>::from_rational(dom, want)))
            throw DomainError("planar system: linear part is not (-y, x)");
        found = true;
    }
    if (!found) throw DomainError("planar system: missing linear part");
}

} // namespace focus_detail

template <class C>
PlanarSystem<C> make_planar_system(RingPtr ring, Polynomial<C> P, Polynomial<C> Q,
                                   const std::string& xname = "x", const std::string& yname = "y") {
    auto xi = ring->index_of(xname), yi = ring->index_of(yname);
    if (!xi || !yi) throw DomainError("planar system: ring lacks phase variables");
    if (!same_ring(P.ring(), ring) || !same_ring(Q.ring(), ring))
        throw DomainError("planar system: ring mismatch");
    focus_detail::check_linear_part(P, *xi, *yi, true);
    focus_detail::check_linear_part(Q, *xi, *yi, false);
    return PlanarSystem<C>{std::move(ring), *xi, *yi, std::move(P), std::move(Q)};
}

/// The rotation operator L(phi) = -y phi_x + x phi_y on degree-d forms, in
/// the basis x^{d-j} y^j (column j holds the image of the j-th basis form).
/// Kernel: span{(x^2+y^2)^{d/2}} when d is even, trivial when d is odd.
struct LyapunovMatrix {
    int d = 0;
    std::vector<std::vector<long>> M; // (d+1) x (d+1)
    std::vector<Rational> kernel;     // empty for odd d

    Mat<Rational> as_mat() const {
        Mat<Rational> out(d + 1, d + 1);
        for (int r = 0; r <= d; ++r)
            for (int c = 0; c <= d; ++c) out.at(r, c) = Rational(M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
        return out;
    }
};

inline LyapunovMatrix lyapunov_matrix(int d) {
    if (d < 2) throw DomainError("lyapunov_matrix: degree must be >= 2");
    LyapunovMatrix L;
    L.d = d;
    L.M.assign(static_cast<std::size_t>(d + 1), std::vector<long>(static_cast<std::size_t>(d + 1), 0));
    // L(x^a y^b) = -a x^{a-1} y^{b+1} + b x^{a+1} y^{b-1}, with (a,b) = (d-j, j)
    for (int j = 0; j <= d; ++j) {
        int a = d - j, b = j;
        if (a > 0) L.M[static_cast<std::size_t>(j + 1)][static_cast<std::size_t>(j)] -= a;
        if (b > 0) L.M[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(j)] += b;
    }
    Rref rref(L.as_mat());
    auto ker = rref.kernel();
    if (d % 2 == 0) {
        if (ker.size() != 1) throw DomainError("lyapunov_matrix: unexpected kernel dimension");
        L.kernel = ker.front();
        // scale so the x^d coefficient is 1, matching (x^2+y^2)^{d/2}
        if (L.kernel[0] == 0) throw DomainError("lyapunov_matrix: degenerate kernel");
        Rational s = Rational(1) / L.kernel[0];
        for (auto& v : L.kernel) v *= s;
    } else if (!ker.empty()) {
        throw DomainError("lyapunov_matrix: odd degree should be invertible");
    }
    return L;
}

/// Truncated first-integral candidate: coefficient polynomials phi[d][j]
/// of x^{d-j} y^j for 2 <= d <= 2k+2; the degree-2 layer is x^2 + y^2 and
/// each even layer carries no component along (x^2+y^2)^{d/2}.
template <class C>
struct PhiExpansion {
    int x = 0, y = 1;
    std::vector<std::vector<Polynomial<C>>> layers; // index d, entries j=0..d
};

template <class C>
struct FocusQuantityResult {
    std::vector<Polynomial<C>> quantities; // g_1..g_k, parameter polynomials
    PhiExpansion<C> phi;
};

namespace focus_detail {

template <class C>
struct SysTerm {
    int a, b;          // phase exponents
    Polynomial<C> cp;  // parameter-part coefficient polynomial
};

template <class C>
std::vector<SysTerm<C>> nonlinear_terms(const Polynomial<C>& p, int x, int y) {
    // group terms by phase monomial; keep phase-degree >= 2
    std::map<std::pair<int, int>, Polynomial<C>> grouped;
    for (const auto& [m, c] : p.terms()) {
        int a = m[x], b = m[y];
        if (a + b < 2) continue;
        Monomial pm(m);
        pm.exp(x) = 0;
        pm.exp(y) = 0;
        auto key = std::make_pair(a, b);
        auto it = grouped.find(key);
        if (it == grouped.end())
            it = grouped.emplace(key, Polynomial<C>::zero(p.ring())).first;
        it->second.add_term(std::move(pm), c);
    }
    std::vector<SysTerm<C>> out;
    out.reserve(grouped.size());
    for (auto& [k, cp] : grouped) out.push_back({k.first, k.second, std::move(cp)});
    return out;
}

/// One task: layer (e, j) differentiated against a system term, target slot.
struct Contribution {
    int e, j;     // phi layer and entry
    int term;     // index into the system term list
    bool is_p;    // P-tilde (d/dx) or Q-tilde (d/dy)
    int target;   // destination entry of R_d
    long factor;  // derivative multiplier (a or j), applied negatively
};

} // namespace focus_detail

/// Focus quantities g_1..g_k of Eq-style radial form: at each degree d the
/// rotation operator is solved against the already-fixed lower layers; even
/// degrees surrender one obstruction g_{d/2-1} picked off by the left
/// null-functional (normalized against (x^2+y^2)^{d/2}).
template <class C>
FocusQuantityResult<C> focus_quantities(const PlanarSystem<C>& sys, int k, bool parallel = true) {
    using namespace focus_detail;
    if (k < 1) throw DomainError("focus_quantities: k must be >= 1");
    check_linear_part(sys.P, sys.x, sys.y, true);
    check_linear_part(sys.Q, sys.x, sys.y, false);

    const RingPtr& ring = sys.ring;
    const Polynomial<C> zero = Polynomial<C>::zero(ring);
    const Polynomial<C> one = Polynomial<C>::from_rational(ring, Rational(1));
    auto pt = nonlinear_terms(sys.P, sys.x, sys.y);
    auto qt = nonlinear_terms(sys.Q, sys.x, sys.y);

    const int dmax = 2 * k + 2;
    PhiExpansion<C> phi;
    phi.x = sys.x;
    phi.y = sys.y;
    phi.layers.assign(static_cast<std::size_t>(dmax + 1), {});
    phi.layers[2] = {one, zero, one};

    std::vector<Polynomial<C>> gs;
    gs.reserve(static_cast<std::size_t>(k));

    for (int d = 3; d <= dmax; ++d) {
        // collect contribution tasks from layers e with (e-1) + termdeg == d
        std::vector<Contribution> tasks;
        for (int e = 2; e < d; ++e) {
            if (phi.layers[static_cast<std::size_t>(e)].empty()) continue;
            for (std::size_t ti = 0; ti < pt.size(); ++ti) {
                if (e - 1 + pt[ti].a + pt[ti].b != d) continue;
                for (int j = 0; j <= e; ++j) {
                    int a = e - j;
                    if (a == 0) continue; // d/dx kills it
                    if (phi.layers[static_cast<std::size_t>(e)][static_cast<std::size_t>(j)].is_zero()) continue;
                    tasks.push_back({e, j, static_cast<int>(ti), true, j + pt[ti].b, a});
                }
            }
            for (std::size_t ti = 0; ti < qt.size(); ++ti) {
                if (e - 1 + qt[ti].a + qt[ti].b != d) continue;
                for (int j = 1; j <= e; ++j) {
                    if (phi.layers[static_cast<std::size_t>(e)][static_cast<std::size_t>(j)].is_zero()) continue;
                    tasks.push_back({e, j, static_cast<int>(ti), false, j - 1 + qt[ti].b, j});
                }
            }
        }

        std::vector<Polynomial<C>> R(static_cast<std::size_t>(d + 1), zero);
        auto apply = [&](std::vector<Polynomial<C>>& acc, const Contribution& t) {
            const auto& st = t.is_p ? pt[static_cast<std::size_t>(t.term)] : qt[static_cast<std::size_t>(t.term)];
            const Polynomial<C>& src = phi.layers[static_cast<std::size_t>(t.e)][static_cast<std::size_t>(t.j)];
            acc[static_cast<std::size_t>(t.target)] =
                acc[static_cast<std::size_t>(t.target)] + (src * st.cp).scaled(Rational(-t.factor));
        };

#ifdef _OPENMP
        if (parallel && tasks.size() > 8) {
            int nthreads = std::min<int>(omp_get_max_threads(), static_cast<int>(tasks.size()));
            std::vector<std::vector<Polynomial<C>>> partial(
                static_cast<std::size_t>(nthreads), std::vector<Polynomial<C>>(static_cast<std::size_t>(d + 1), zero));
#pragma omp parallel num_threads(nthreads)
            {
                auto& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic)
                for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(tasks.size()); ++i)
                    apply(local, tasks[static_cast<std::size_t>(i)]);
            }
            for (const auto& part : partial)
                for (int j = 0; j <= d; ++j)
                    R[static_cast<std::size_t>(j)] = R[static_cast<std::size_t>(j)] + part[static_cast<std::size_t>(j)];
        } else
#endif
        {
            (void)parallel;
            for (const auto& t : tasks) apply(R, t);
        }

        LyapunovMatrix L = lyapunov_matrix(d);
        Rref solver(L.as_mat());
        if (d % 2 == 1) {
            phi.layers[static_cast<std::size_t>(d)] = solver.solve(R, zero);
        } else {
            auto lk = solver.left_kernel();
            if (lk.size() != 1) throw DomainError("focus_quantities: unexpected left kernel");
            std::vector<Rational>& ell = lk.front();
            Rational norm(0);
            for (int j = 0; j <= d; ++j) norm += ell[static_cast<std::size_t>(j)] * L.kernel[static_cast<std::size_t>(j)];
            if (norm == 0) throw DomainError("focus_quantities: left kernel not normalizable");
            for (auto& v : ell) v /= norm;

            // L(phi_d) = R_d + g q_d, so g is minus the null-functional of R_d
            Polynomial<C> g = zero;
            for (int j = 0; j <= d; ++j) {
                if (ell[static_cast<std::size_t>(j)] == 0) continue;
                g = g - R[static_cast<std::size_t>(j)].scaled(ell[static_cast<std::size_t>(j)]);
            }
            std::vector<Polynomial<C>> Rc = R;
            for (int j = 0; j <= d; ++j) {
                if (L.kernel[static_cast<std::size_t>(j)] == 0) continue;
                Rc[static_cast<std::size_t>(j)] = Rc[static_cast<std::size_t>(j)] + g.scaled(L.kernel[static_cast<std::size_t>(j)]);
            }
            std::vector<Polynomial<C>> part = solver.solve(Rc, zero);
            // Euclidean projection: remove the kernel component
            Rational qq(0);
            for (int j = 0; j <= d; ++j) qq += L.kernel[static_cast<std::size_t>(j)] * L.kernel[static_cast<std::size_t>(j)];
            Polynomial<C> kappa = zero;
            for (int j = 0; j <= d; ++j) {
                if (L.kernel[static_cast<std::size_t>(j)] == 0) continue;
                kappa = kappa + part[static_cast<std::size_t>(j)].scaled(L.kernel[static_cast<std::size_t>(j)] / qq);
            }
            for (int j = 0; j <= d; ++j) {
                if (L.kernel[static_cast<std::size_t>(j)] == 0) continue;
                part[static_cast<std::size_t>(j)] = part[static_cast<std::size_t>(j)] - kappa.scaled(L.kernel[static_cast<std::size_t>(j)]);
            }
            phi.layers[static_cast<std::size_t>(d)] = std::move(part);
            gs.push_back(std::move(g));
        }
    }
    return FocusQuantityResult<C>{std::move(gs), std::move(phi)};
}

/// Full symbolic residual Phi_x P + Phi_y Q - sum g_{m-1} (x^2+y^2)^m,
/// truncated to phase-degree <= 2k+2. Zero certifies the recursion; built
/// from plain polynomial products, independent of the per-degree assembly.
template <class C>
Polynomial<C> focus_residual(const PlanarSystem<C>& sys, const FocusQuantityResult<C>& res) {
    const RingPtr& ring = sys.ring;
    Polynomial<C> Phi = Polynomial<C>::zero(ring);
    for (std::size_t d = 2; d < res.phi.layers.size(); ++d) {
        const auto& layer = res.phi.layers[d];
        for (std::size_t j = 0; j < layer.size(); ++j) {
            Monomial m(ring->arity());
            m.exp(sys.x) = static_cast<int>(d - j);
            m.exp(sys.y) = static_cast<int>(j);
            Phi = Phi + layer[j] * Polynomial<C>::term(ring, m, coeff_traits<C>::one(ring->domain()));
        }
    }
    Polynomial<C> r2 = Polynomial<C>::variable(ring, sys.x, 2) + Polynomial<C>::variable(ring, sys.y, 2);
    Polynomial<C> full = Phi.diff(sys.x) * sys.P + Phi.diff(sys.y) * sys.Q;
    Polynomial<C> rpow = r2 * r2;
    for (const auto& g : res.quantities) {
        full = full - g * rpow;
        rpow = rpow * r2;
    }
    const int cutoff = 2 * static_cast<int>(res.quantities.size()) + 2;
    Polynomial<C> low = Polynomial<C>::zero(ring);
    for (const auto& [m, c] : full.terms())
        if (m[sys.x] + m[sys.y] <= cutoff) low.add_term(m, c);
    return low;
}

/// The complexified equation dz/dtau = z + sum c_{ab} z^a zb^b obtained by
/// z = x + i y and rescaling time by i; coefficients are parameter
/// polynomials over the i,r6 extension.
struct ComplexEquation {
    RingPtr ring; // z, zb, parameters (ExtIR6)
    std::vector<std::tuple<int, int, Polynomial<QI6>>> coeffs; // (a, b, c_ab), nonzero only
};

inline ComplexEquation complexify(const PlanarSystem<Rational>& sys) {
    const Ring& src = *sys.ring;
    for (const auto& poly : {sys.P, sys.Q})
        for (const auto& [m, c] : poly.terms())
            if (m[sys.x] + m[sys.y] > 3) throw DomainError("complexify: only degree <= 3 systems supported");

    std::vector<std::string> vars{"z", "zb"};
    for (int v = 0; v < src.arity(); ++v) {
        if (v == sys.x || v == sys.y) continue;
        vars.push_back(src.var(v));
    }
    RingPtr ext = make_ring(vars, CoeffDomain::ext_ir6());
    using PZ = Polynomial<QI6>;
    PZ z = PZ::variable(ext, 0), zb = PZ::variable(ext, 1);
    QI6 half(Rational(1, 2));
    PZ xr = (z + zb) * half;                    // x = (z + zb)/2
    PZ yr = (zb - z) * (QI6::i() * half);       // y = i (zb - z)/2

    auto embed = [&](const Polynomial<Rational>& p) {
        PZ acc = PZ::zero(ext);
        for (const auto& [m, c] : p.terms()) {
            PZ t = PZ::constant(ext, QI6(c));
            for (int k = 0; k < m[sys.x]; ++k) t = t * xr;
            for (int k = 0; k < m[sys.y]; ++k) t = t * yr;
            Monomial pm(ext->arity());
            for (int v = 0; v < src.arity(); ++v) {
                if (v == sys.x || v == sys.y || m[v] == 0) continue;
                pm.exp(*ext->index_of(src.var(v))) = m[v];
            }
            acc = acc + t.mul_monomial(pm, coeff_traits<QI6>::one(ext->domain()));
        }
        return acc;
    };

    // dz/dt = P + i Q = i z + nonlinear; rescale time by i: multiply by -i
    PZ zdot = (embed(sys.P) + embed(sys.Q) * QI6::i()) * (-QI6::i());

    ComplexEquation out{ext, {}};
    std::map<std::pair<int, int>, PZ> grouped;
    for (const auto& [m, c] : zdot.terms()) {
        auto key = std::make_pair(m[0], m[1]);
        Monomial pm(m);
        pm.exp(0) = 0;
        pm.exp(1) = 0;
        auto it = grouped.find(key);
        if (it == grouped.end()) it = grouped.emplace(key, PZ::zero(ext)).first;
        it->second.add_term(std::move(pm), c);
    }
    // sanity: linear part must be exactly z
    for (const auto& [key, cp] : grouped) {
        if (key.first + key.second >= 2) continue;
        bool is_z = key.first == 1 && key.second == 0;
        if (!is_z || !(cp == PZ::from_rational(ext, Rational(1))))
            throw DomainError("complexify: linear part is not z");
    }
    for (auto& [key, cp] : grouped)
        out.coeffs.emplace_back(key.first, key.second, std::move(cp));
    return out;
}

} // namespace cf

#endif
