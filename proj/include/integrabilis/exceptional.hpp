#ifndef INTEGRABILIS_EXCEPTIONAL_HPP
#define INTEGRABILIS_EXCEPTIONAL_HPP

#include "integrabilis/forms.hpp"

namespace integrabilis {

// Inputs of the explicit quadratic (n = 2) construction: l^2 = k, trace-zero
// part v = h*l, and log terms with norm-one u_i determined by the g_i.
struct QuadraticSpec {
    RatFn k;
    RatFn h;
    std::vector<std::pair<Cyclo, RatFn>> terms; // (c_i, g_i)
};

struct QuadraticResult {
    ExtDescriptor desc;
    RatFn H1, H2;   // candidate field H1 d/dx + H2 d/dy
    KOneForm omega; // H2 dx - H1 dy
    LogSum psi;     // v = h*l, u_i = quadratic_norm_one(g_i)
};

// Explicit construction of the quadratic exceptional candidate; GammaZero
// when the resulting field vanishes identically.
QuadraticResult build_quadratic(const QuadraticSpec& spec);

// Inputs of the general cyclic construction: arbitrary seeds, normalized via
// trace_zero_from / norm_one_from, projected onto the l-line.
struct CyclicSpec {
    ExtDescriptor desc;
    ExtElem w_v;
    std::vector<std::pair<Cyclo, ExtElem>> terms; // (c_i, w_u_i)
};

struct CyclicResult {
    KOneForm omega;
    LogSum psi;
};

CyclicResult build_cyclic(const CyclicSpec& spec);

// Exact symbolic verdicts for the elementary-first-integral relation and the
// exceptionality side conditions.
struct VerificationReport {
    bool gamma_nonzero = false;
    bool wedge_zero = false;
    bool trace_zero = false;
    std::vector<bool> norm_one;
    bool integrating_factor_ok = false;
    bool constants_independent = false;

    bool all_ok() const;
};

VerificationReport verify_elem_integral(const KOneForm& omega, const LogSum& psi);

// Exact verdict that d(l * omega) = 0, i.e. l is an integrating factor.
bool check_integrating_factor(const KOneForm& omega, const ExtDescriptor& d);

// Basis of non-constant polynomial first integrals of degree <= d, by exact
// kernel computation of f -> -Q f_x + P f_y on the monomial space.
std::vector<MPoly> poly_first_integrals(const PlaneField& X, int d);

struct DarbouxVerdict {
    bool yes = false;
    MPoly cofactor; // X(f) = cofactor * f when yes
};

// Darboux polynomial test against the denominator-cleared field.
DarbouxVerdict is_darboux(const PlaneField& X, const MPoly& f);

struct RfiResult {
    enum class Kind { Found, NoneUpTo, Unknown };
    Kind kind = Kind::Unknown;
    MPoly A, B; // A/B is a verified non-constant first integral when Found
};

// Bounded-degree rational-first-integral search: complete linear stage for
// polynomial first integrals, then Darboux candidates combined by cofactor.
RfiResult rational_fi_search(const PlaneField& X, int d);

struct Proportionality {
    bool yes = false;
    RatFn ratio;
};

// Tests P1 Q2 - P2 Q1 = 0; ratio X1 = ratio * X2 where defined.
Proportionality proportional(const PlaneField& X1, const PlaneField& X2);

} // namespace integrabilis

#endif
