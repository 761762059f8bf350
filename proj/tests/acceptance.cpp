// Acceptance gate: one pass/fail line per criterion, exit code = number of
// failing criteria. All checks are exact symbolic equalities.
#include <functional>
#include <iostream>
#include <optional>
#include <vector>

#include "integrabilis/commands.hpp"
#include "support.hpp"

using namespace testsupport;

namespace {

const unsigned N = 12;
RatFn X() { return RatFn::variable(N, Var::x); }
RatFn Y() { return RatFn::variable(N, Var::y); }
RatFn C(long v) { return RatFn::constant(N, Rat(v)); }
MPoly Xp() { return MPoly::variable(N, Var::x); }
MPoly Yp() { return MPoly::variable(N, Var::y); }

struct Collected {
    std::vector<std::pair<KOneForm, ExtDescriptor>> constructed;
};
Collected collected;

// random spec with k, h, g_i of small degree; retries until valid
QuadraticSpec random_quadratic_spec(Rng& rng) {
    while (true) {
        QuadraticSpec spec;
        spec.k = RatFn(rng.nonzero_poly(N, 2, 2));
        if (spec.k.is_constant()) continue;
        spec.h = rng.intval(0, 2) == 0 ? C(0) : rng.ratfn(N, 1);
        long m = rng.intval(1, 3);
        bool degenerate = false;
        for (long i = 0; i < m; ++i) {
            Cyclo c = rng.nonzero_cyclo(N);
            RatFn g = RatFn(rng.poly(N, 3, 2));
            if ((g * g - spec.k).is_zero()) degenerate = true;
            spec.terms.emplace_back(c, g);
        }
        if (degenerate) continue;
        return spec;
    }
}

bool criterion1() {
    Rng rng(1001);
    int done = 0, tries = 0;
    while (done < 50 && tries < 500) {
        ++tries;
        QuadraticSpec spec = random_quadratic_spec(rng);
        std::optional<QuadraticResult> opt;
        try {
            opt = build_quadratic(spec);
        } catch (const Error& e) {
            if (e.code() == Errc::GammaZero) continue;
            return false;
        }
        const QuadraticResult& res = *opt;
        if (logsum_gamma(res.psi) != lift(res.omega, res.desc) * ExtElem::ell(res.desc))
            return false;
        VerificationReport rep = verify_elem_integral(res.omega, res.psi);
        // constants may collide by chance; every structural flag must hold
        if (!(rep.gamma_nonzero && rep.wedge_zero && rep.trace_zero &&
              rep.integrating_factor_ok))
            return false;
        for (bool b : rep.norm_one)
            if (!b) return false;
        collected.constructed.emplace_back(res.omega, res.desc);
        ++done;
    }
    return done >= 50;
}

bool criterion2() {
    Rng rng(1002);
    int done = 0, tries = 0;
    while (done < 25 && tries < 300) {
        ++tries;
        QuadraticSpec spec = random_quadratic_spec(rng);
        std::optional<QuadraticResult> qr;
        try {
            qr = build_quadratic(spec);
        } catch (const Error&) {
            continue;
        }
        ExtDescriptor d = qr->desc;
        CyclicSpec cs{d, ExtElem(d, {C(0), spec.h}), {}};
        for (const auto& [c, g] : spec.terms)
            cs.terms.emplace_back(c, ExtElem(d, {g, -C(1)})); // w_u = g - l
        std::optional<CyclicResult> cr;
        try {
            cr = build_cyclic(cs);
        } catch (const Error&) {
            return false;
        }
        if (cr->omega != qr->omega) return false;
        collected.constructed.emplace_back(cr->omega, d);
        ++done;
    }
    return done >= 25;
}

bool criterion3() {
    QuadraticSpec spec{X(), C(0), {{Cyclo(N, Rat(1)), Y()}}};
    QuadraticResult res = build_quadratic(spec);
    RatFn denom = Y() * Y() - X();
    if (res.H1 != C(2) / denom || res.H2 != Y() / (X() * denom)) return false;
    if (!proportional(PlaneField{res.H1, res.H2}, PlaneField{C(2) * X(), Y()}).yes)
        return false;
    // psi = log((y+l)/(y-l)): its single u equals (y+l)/(y-l) as elements of L
    ExtDescriptor d = res.desc;
    ExtElem num(d, {Y(), C(1)}), den(d, {Y(), -C(1)});
    if (res.psi.terms.size() != 1 || res.psi.terms[0].second != num / den) return false;
    // d psi = l * omega with the displayed omega
    KOneForm omega{Y() / (X() * denom), -C(2) / denom};
    if (res.omega != omega) return false;
    if (logsum_gamma(res.psi) != lift(omega, d) * ExtElem::ell(d)) return false;
    // Darboux reducibility of the proportional polynomial field
    RfiResult rfi = rational_fi_search(PlaneField{Y(), -C(2) * X()}, 2);
    if (rfi.kind != RfiResult::Kind::Found) return false;
    if (rfi.A != Yp() * Yp() || rfi.B != Xp()) return false;
    auto ca = is_darboux(PlaneField{Y(), -C(2) * X()}, rfi.A);
    auto cb = is_darboux(PlaneField{Y(), -C(2) * X()}, rfi.B);
    return ca.yes && cb.yes && ca.cofactor == cb.cofactor;
}

bool criterion4() {
    Rng rng(1004);
    int cases = 0;
    for (unsigned n : {2u, 3u, 4u, 6u}) {
        ExtDescriptor d = ExtDescriptor::make(n, X());
        for (int it = 0; it < 7; ++it) {
            LOneForm xi{rng.ext(d, 1), rng.ext(d, 1)};
            LOneForm p = pr_project(xi);
            if (pr_project(p) != p) return false;
            ++cases;
            RatFn f = rng.ratfn(N, 1);
            LOneForm eta{rng.ext(d, 1), rng.ext(d, 1)};
            if (pr_project(xi * ExtElem::from_base(d, f) + eta) !=
                p * ExtElem::from_base(d, f) + pr_project(eta))
                return false;
            ++cases;
            KOneForm beta{rng.ratfn(N, 1), rng.ratfn(N, 1)};
            LOneForm lbeta = lift(beta, d) * ExtElem::ell(d);
            if (pr_project(lbeta) != lbeta) return false;
            ++cases;
            // Pr kills every l^i line with i != 1 (i = 0 .. n-1)
            ExtElem li = ExtElem::one(d);
            for (unsigned i = 0; i < n; ++i) {
                if (i != 1 && !pr_project(lift(beta, d) * li).is_zero()) return false;
                li = li * ExtElem::ell(d);
                ++cases;
            }
        }
    }
    return cases >= 100;
}

bool criterion5() {
    Rng rng(1005);
    std::vector<RatFn> ks{X(), X() + Y(), X() * Y() + C(1)};
    for (unsigned n : {2u, 3u, 4u}) {
        for (const RatFn& k : ks) {
            ExtDescriptor d = ExtDescriptor::make(n, k);
            int iters = n <= 3 ? 4 : 2;
            for (int it = 0; it < iters; ++it) {
                ExtElem a = n <= 3 ? rng.ext(d, 1) : rng.ext_poly(d, 1);
                ExtElem b = n <= 3 ? rng.ext(d, 1) : rng.ext_poly(d, 1);
                if (trace(trace_zero_from(a)) != C(0)) return false;
                if (trace(a + b) != trace(a) + trace(b)) return false;
                if (norm(a * b) != norm(a) * norm(b)) return false;
                if (!a.is_zero()) {
                    try {
                        if (a * ext_inv(a) != ExtElem::one(d)) return false;
                        ExtElem u = norm_one_from(a);
                        if (n <= 3) {
                            if (norm(u) != C(1)) return false;
                        } else {
                            // norm(u) = 1 is equivalent to u * a = tau(a) with
                            // norm(tau(a)) = norm(a); the factored form avoids
                            // expanding the full norm of u at higher degrees
                            if (u * a != tau_apply(a, 1)) return false;
                            if (norm(tau_apply(a, 1)) != norm(a)) return false;
                        }
                    } catch (const Error& e) {
                        if (e.code() != Errc::ZeroDivisor) return false;
                    }
                }
            }
            ExtElem l = ExtElem::ell(d);
            for (Var v : {Var::x, Var::y}) {
                RatFn rhs = k.derivative(v) / (C(static_cast<long>(n)) * k);
                if (ext_d_partial(l, v) * ext_inv(l) != ExtElem::from_base(d, rhs))
                    return false;
            }
        }
    }
    return true;
}

bool criterion6() {
    if (collected.constructed.size() < 75) return false;
    for (const auto& [omega, desc] : collected.constructed)
        if (!check_integrating_factor(omega, desc)) return false;
    return true;
}

bool criterion7() {
    Cyclo one(N, Rat(1));
    if (!degree_obstruction({one}, 2).obstructed) return false;
    for (unsigned n : {3u, 4u, 6u})
        if (degree_obstruction({one}, n).obstructed) return false;
    return true;
}

bool criterion8() {
    Rng rng(1008);
    const long depth = 8;
    // dz/z identity on >= 50 random units, both step kinds
    for (auto kind : {TowerStep::Kind::Exponential, TowerStep::Kind::Logarithmic}) {
        TowerStep step{kind, X() * Y() + C(1)};
        for (int it = 0; it < 25; ++it) {
            PSeries z = PSeries::term(N, 1, 0, C(1)).with_bound(-depth - 2);
            long nterms = rng.intval(1, 3);
            // polynomial coefficients: the identity is coefficient-agnostic and
            // the logarithmic step already drives rational functions through
            // dR/R, while fractional series coefficients compound reduction
            // cost geometrically with the power of the series
            for (long t = 0; t < nterms; ++t)
                z.add_term(-rng.intval(1, 2), RatFn(rng.poly(N, 1, 2)));
            PSeries lam = ps_log_unit(z, depth + 2);
            for (Var v : {Var::x, Var::y}) {
                PSeries lhs = ps_derive(lam, step, v);
                PSeries rhs = ps_mul(ps_derive(z, step, v), ps_inv_unit(z, depth + 2));
                if (!ps_equal_to_bound(lhs, rhs, Rat(-depth))) return false;
            }
        }
    }
    // Leibniz for ps_derive
    for (auto kind : {TowerStep::Kind::Exponential, TowerStep::Kind::Logarithmic}) {
        TowerStep step{kind, X() + C(1)};
        for (int it = 0; it < 10; ++it) {
            PSeries a = PSeries::term(N, 1, rng.intval(0, 2), rng.nonzero_ratfn(N, 1))
                            .with_bound(-depth);
            PSeries b = PSeries::term(N, 1, rng.intval(0, 2), rng.nonzero_ratfn(N, 1))
                            .with_bound(-depth);
            a.add_term(-1, rng.ratfn(N, 1));
            b.add_term(-2, rng.ratfn(N, 1));
            for (Var v : {Var::x, Var::y}) {
                PSeries lhs = ps_derive(ps_mul(a, b), step, v);
                PSeries rhs = ps_add(ps_mul(ps_derive(a, step, v), b),
                                     ps_mul(a, ps_derive(b, step, v)));
                if (!ps_equal_to_bound(lhs, rhs, Rat(-depth + 3))) return false;
            }
        }
    }
    // the three branch examples
    Cyclo cone(N, Rat(1));
    {
        TowerStep step{TowerStep::Kind::Exponential, X()};
        auto cands = descent_candidates(step, {}, PSeries::term(N, 1, 1, X() + Y()));
        auto [bx, by] = dlog_components(X() + Y());
        if (cands.size() != 1 || cands[0] != KOneForm{bx + C(1), by}) return false;
    }
    {
        TowerStep step{TowerStep::Kind::Logarithmic, X()};
        auto cands = descent_candidates(step, {}, PSeries::term(N, 1, 2, X() * Y()));
        if (cands.size() != 1 || cands[0] != KOneForm{Y(), X()}) return false;
    }
    {
        TowerStep step{TowerStep::Kind::Exponential, Y()};
        auto cands =
            descent_candidates(step, {{cone, PSeries::term(N, 1, 3, X())}}, PSeries(N, 1));
        if (cands.size() != 1 || cands[0] != KOneForm{C(1) / X(), C(3)}) return false;
    }
    // synthesized from a construction: k = x, h = 1 gives omega = dx/(2x);
    // the exponential step R = x with v = x t yields candidate (1/x + 1) dx,
    // which wedges to zero against omega.
    {
        QuadraticResult res = build_quadratic(QuadraticSpec{X(), C(1), {}});
        TowerStep step{TowerStep::Kind::Exponential, X()};
        auto cands = descent_candidates(step, {}, PSeries::term(N, 1, 1, X()));
        bool hit = false;
        for (const auto& cand : cands)
            if (!cand.is_zero() && k_wedge(cand, res.omega).is_zero()) hit = true;
        if (!hit) return false;
    }
    return true;
}

bool criterion9() {
    Rng rng(1009);
    // gcd divide-and-check on >= 200 random products
    for (int it = 0; it < 200; ++it) {
        MPoly a = rng.nonzero_poly(N, 2, 2);
        MPoly b = rng.nonzero_poly(N, 2, 2);
        MPoly c = rng.nonzero_poly(N, 2, 2);
        MPoly g = gcd(a * c, b * c);
        if (exact_div(a * c, g) * g != a * c) return false;
        if (exact_div(b * c, g) * g != b * c) return false;
        // c is a common divisor, so it divides the gcd
        try {
            exact_div(g, c * c.leading_coeff().inverse());
        } catch (const Error&) {
            return false;
        }
    }
    // squarefree reconstruction
    for (int it = 0; it < 50; ++it) {
        MPoly a = rng.nonzero_poly(N, 2, 2) * rng.nonzero_poly(N, 1, 2).pow(2);
        auto dec = squarefree_decompose(a);
        MPoly rebuilt = MPoly::constant(N, dec.unit);
        for (const auto& [f, m] : dec.factors) rebuilt = rebuilt * f.pow(m);
        if (rebuilt != a) return false;
    }
    // poly_first_integrals against the independent brute-force kernel
    std::vector<PlaneField> fields{
        PlaneField{C(0), -C(1)},          // d/dx
        PlaneField{Y(), -C(2) * X()},     // the (2x, y) field
        PlaneField{X(), Y()},             // radial
        PlaneField{X(), X() + Y()},
        PlaneField{RatFn(Xp() * Yp()), RatFn(Xp() * Xp() - Yp() * Yp())},
    };
    for (int it = 0; it < 25; ++it) {
        PlaneField f{RatFn(rng.poly(N, 2, 2)), RatFn(rng.poly(N, 2, 2))};
        if (f.P.is_zero() && f.Q.is_zero()) continue;
        fields.push_back(f);
    }
    for (const auto& f : fields) {
        for (int d = 1; d <= 3; ++d) {
            auto basis = poly_first_integrals(f, d);
            size_t brute = brute_fi_kernel_dim(f, d); // includes the constants
            if (basis.size() + 1 != brute) return false;
            for (const auto& p : basis) {
                if (p.is_constant()) return false;
                if (!apply_field_k(f, RatFn(p)).is_zero()) return false;
            }
        }
    }
    return true;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<bool()> run;
    };
    std::vector<Criterion> cs{
        {"1 construction identity on 50 random quadratic specs", criterion1},
        {"2 cyclic/quadratic pipeline equivalence on 25 matched specs", criterion2},
        {"3 worked example: field, psi, omega, Darboux reduction", criterion3},
        {"4 Pr projection suite, n in {2,3,4,6}, 100+ cases", criterion4},
        {"5 extension algebra suite, n in {2,3,4}", criterion5},
        {"6 integrating factor for every constructed omega", criterion6},
        {"7 degree obstruction at m = 1, c = 1", criterion7},
        {"8 Puiseux suite: log/derive identities and descent branches", criterion8},
        {"9 polynomial/GCD oracles and brute-force kernel agreement", criterion9},
    };
    int failures = 0;
    for (auto& c : cs) {
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            std::cout << "FAIL criterion " << c.name << " (exception: " << e.what()
                      << ")\n";
            ++failures;
            continue;
        }
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.name << "\n";
        if (!ok) ++failures;
    }
    return failures;
}
