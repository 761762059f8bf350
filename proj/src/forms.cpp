#include "integrabilis/forms.hpp"

namespace integrabilis {

LOneForm lift(const KOneForm& w, const ExtDescriptor& d) {
    return {ExtElem::from_base(d, w.A), ExtElem::from_base(d, w.B)};
}

LOneForm differential(const ExtElem& f) {
    return {ext_d_partial(f, Var::x), ext_d_partial(f, Var::y)};
}

KOneForm k_differential(const RatFn& f) {
    return {f.derivative(Var::x), f.derivative(Var::y)};
}

ExtElem wedge(const LOneForm& w1, const LOneForm& w2) {
    if (w1.desc() != w2.desc())
        fail(Errc::DescriptorMismatch, "wedge of forms over different extensions");
    return w1.A * w2.B - w2.A * w1.B;
}

RatFn k_wedge(const KOneForm& w1, const KOneForm& w2) {
    return w1.A * w2.B - w2.A * w1.B;
}

ExtElem exterior_derivative(const LOneForm& w) {
    return ext_d_partial(w.B, Var::x) - ext_d_partial(w.A, Var::y);
}

LOneForm dlog(const ExtElem& u) {
    ExtElem inv = ext_inv(u);
    LOneForm d = differential(u);
    return {d.A * inv, d.B * inv};
}

LOneForm logsum_gamma(const LogSum& psi) {
    LOneForm gamma = differential(psi.v);
    for (const auto& [c, u] : psi.terms) {
        ExtElem cc = ExtElem::from_base(psi.desc, RatFn::constant(u.order(), c));
        gamma = gamma + dlog(u) * cc;
    }
    return gamma;
}

LOneForm pr_project(const LOneForm& xi) {
    const ExtDescriptor& d = xi.desc();
    unsigned n = d.n;
    LOneForm acc{ExtElem::zero(d), ExtElem::zero(d)};
    for (unsigned j = 0; j < n; ++j) {
        Cyclo zinv = d.zeta.pow(-static_cast<long>(j));
        ExtElem s = ExtElem::from_base(d, RatFn::constant(xi.A.order(), zinv));
        acc = acc + LOneForm{tau_apply(xi.A, j), tau_apply(xi.B, j)} * s;
    }
    RatFn inv_n = RatFn::constant(xi.A.order(), make_rat(1, static_cast<long>(n)));
    ExtElem scale = ExtElem::from_base(d, inv_n);
    return acc * scale;
}

KOneForm ell_extract(const LOneForm& xi) {
    unsigned n = xi.desc().n;
    for (unsigned i = 0; i < n; ++i) {
        if (i == 1) continue;
        if (!xi.A.coords()[i].is_zero() || !xi.B.coords()[i].is_zero())
            fail(Errc::NotInEllLine, "form has a component off the l-line");
    }
    return {xi.A.coords()[1], xi.B.coords()[1]};
}

ExtElem apply_field(const PlaneField& X, const ExtElem& f) {
    ExtElem fx = ext_d_partial(f, Var::x);
    ExtElem fy = ext_d_partial(f, Var::y);
    return fy * X.P - fx * X.Q;
}

RatFn apply_field_k(const PlaneField& X, const RatFn& f) {
    return f.derivative(Var::y) * X.P - f.derivative(Var::x) * X.Q;
}

} // namespace integrabilis
