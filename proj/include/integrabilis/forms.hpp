#ifndef INTEGRABILIS_FORMS_HPP
#define INTEGRABILIS_FORMS_HPP

#include "integrabilis/cyclicext.hpp"

namespace integrabilis {

// A dx + B dy over K.
struct KOneForm {
    RatFn A, B;

    bool is_zero() const { return A.is_zero() && B.is_zero(); }
    KOneForm operator+(const KOneForm& o) const { return {A + o.A, B + o.B}; }
    KOneForm operator-(const KOneForm& o) const { return {A - o.A, B - o.B}; }
    KOneForm operator*(const RatFn& s) const { return {A * s, B * s}; }
    bool operator==(const KOneForm& o) const { return A == o.A && B == o.B; }
};

// A dx + B dy over L.
struct LOneForm {
    ExtElem A, B;

    const ExtDescriptor& desc() const { return A.desc(); }
    bool is_zero() const { return A.is_zero() && B.is_zero(); }
    LOneForm operator+(const LOneForm& o) const { return {A + o.A, B + o.B}; }
    LOneForm operator-(const LOneForm& o) const { return {A - o.A, B - o.B}; }
    LOneForm operator*(const ExtElem& s) const { return {A * s, B * s}; }
    bool operator==(const LOneForm& o) const { return A == o.A && B == o.B; }
};

// The formal log-sum psi = sum c_i log u_i + v over L.
struct LogSum {
    ExtDescriptor desc;
    ExtElem v;
    std::vector<std::pair<Cyclo, ExtElem>> terms;
};

// (P, Q) data of omega = P dx + Q dy; the associated vector field is
// X = -Q d/dx + P d/dy.
struct PlaneField {
    RatFn P, Q;
};

LOneForm lift(const KOneForm& w, const ExtDescriptor& d);

// d f = f_x dx + f_y dy.
LOneForm differential(const ExtElem& f);
KOneForm k_differential(const RatFn& f);

// dx^dy coefficient A1 B2 - A2 B1.
ExtElem wedge(const LOneForm& w1, const LOneForm& w2);
RatFn k_wedge(const KOneForm& w1, const KOneForm& w2);

// dx^dy coefficient of d(A dx + B dy), i.e. B_x - A_y.
ExtElem exterior_derivative(const LOneForm& w);

// du/u as a one-form over L; u invertible.
LOneForm dlog(const ExtElem& u);

// gamma = dv + sum c_i dlog(u_i).
LOneForm logsum_gamma(const LogSum& psi);

// Tau-orbit average (1/n) sum_j zeta^(-j) tau^j, the K-linear projection of
// L-forms onto the l-line.
LOneForm pr_project(const LOneForm& xi);

// omega with xi = l * omega; NotInEllLine unless both components live on the
// coordinate-1 line.
KOneForm ell_extract(const LOneForm& xi);

// -Q f_x + P f_y over L.
ExtElem apply_field(const PlaneField& X, const ExtElem& f);
RatFn apply_field_k(const PlaneField& X, const RatFn& f);

} // namespace integrabilis

#endif
