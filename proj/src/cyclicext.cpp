#include "integrabilis/cyclicext.hpp"

#include <numeric>

namespace integrabilis {

ExtDescriptor ExtDescriptor::make(unsigned n, RatFn k) {
    if (n < 2) fail(Errc::InternalInvariant, "extension degree must be >= 2");
    if (k.is_zero()) fail(Errc::DivisionByZero, "k must be nonzero");
    unsigned order = k.order();
    Cyclo zeta = Cyclo::primitive_root(order, n);
    return ExtDescriptor{n, std::move(k), std::move(zeta)};
}

unsigned ExtDescriptor::reducibility_divisor() const {
    std::vector<unsigned> mults;
    auto collect = [&](const MPoly& p) {
        if (p.is_constant()) return;
        for (const auto& [f, m] : squarefree_decompose(p).factors)
            mults.push_back(m);
    };
    collect(k.num());
    collect(k.den());
    if (mults.empty()) return 1;
    unsigned d = n;
    for (unsigned m : mults) d = std::gcd(d, m);
    return d;
}

ExtElem::ExtElem(ExtDescriptor desc, std::vector<RatFn> coords)
    : desc_(std::move(desc)), coords_(std::move(coords)) {
    if (coords_.size() != desc_.n)
        fail(Errc::InternalInvariant, "coordinate count does not match degree");
}

ExtElem ExtElem::zero(const ExtDescriptor& d) {
    return ExtElem(d, std::vector<RatFn>(d.n, RatFn(d.k.order())));
}

ExtElem ExtElem::one(const ExtDescriptor& d) {
    return from_base(d, RatFn::constant(d.k.order(), Rat(1)));
}

ExtElem ExtElem::from_base(const ExtDescriptor& d, const RatFn& c) {
    ExtElem e = zero(d);
    e.coords_[0] = c;
    return e;
}

ExtElem ExtElem::ell(const ExtDescriptor& d) {
    ExtElem e = zero(d);
    e.coords_[1] = RatFn::constant(d.k.order(), Rat(1));
    return e;
}

bool ExtElem::is_zero() const {
    for (const auto& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

bool ExtElem::in_base_field() const {
    for (size_t i = 1; i < coords_.size(); ++i)
        if (!coords_[i].is_zero()) return false;
    return true;
}

RatFn ExtElem::base_value() const {
    if (!in_base_field())
        fail(Errc::InternalInvariant, "element has nonzero higher coordinates");
    return coords_[0];
}

void ExtElem::check_desc(const ExtElem& o) const {
    if (desc_ != o.desc_)
        fail(Errc::DescriptorMismatch, "elements of different extensions");
}

ExtElem ExtElem::operator-() const {
    ExtElem r(*this);
    for (auto& c : r.coords_) c = -c;
    return r;
}

ExtElem ExtElem::operator+(const ExtElem& o) const {
    check_desc(o);
    ExtElem r(*this);
    for (size_t i = 0; i < coords_.size(); ++i) r.coords_[i] = r.coords_[i] + o.coords_[i];
    return r;
}

ExtElem ExtElem::operator-(const ExtElem& o) const {
    check_desc(o);
    ExtElem r(*this);
    for (size_t i = 0; i < coords_.size(); ++i) r.coords_[i] = r.coords_[i] - o.coords_[i];
    return r;
}

ExtElem ExtElem::operator*(const ExtElem& o) const {
    check_desc(o);
    unsigned n = desc_.n;
    std::vector<RatFn> prod(2 * n - 1, RatFn(order()));
    for (unsigned i = 0; i < n; ++i) {
        if (coords_[i].is_zero()) continue;
        for (unsigned j = 0; j < n; ++j) {
            if (o.coords_[j].is_zero()) continue;
            prod[i + j] = prod[i + j] + coords_[i] * o.coords_[j];
        }
    }
    ExtElem r = zero(desc_);
    for (unsigned i = 0; i < n; ++i) r.coords_[i] = prod[i];
    for (unsigned i = n; i < 2 * n - 1; ++i)
        r.coords_[i - n] = r.coords_[i - n] + prod[i] * desc_.k;
    return r;
}

ExtElem ExtElem::operator*(const RatFn& s) const {
    ExtElem r(*this);
    for (auto& c : r.coords_) c = c * s;
    return r;
}

ExtElem ExtElem::operator/(const ExtElem& o) const {
    return *this * ext_inv(o);
}

bool ExtElem::operator==(const ExtElem& o) const {
    return desc_ == o.desc_ && coords_ == o.coords_;
}

ExtElem ext_inv(const ExtElem& a) {
    if (a.is_zero()) fail(Errc::DivisionByZero, "inverse of zero extension element");
    const ExtDescriptor& d = a.desc();
    // Product of the nontrivial conjugates; multiplying by a itself yields
    // the norm, which lies in K and vanishes exactly on zero divisors.
    ExtElem conj = ExtElem::one(d);
    for (unsigned j = 1; j < d.n; ++j) conj = conj * tau_apply(a, j);
    ExtElem prod = a * conj;
    if (!prod.in_base_field())
        fail(Errc::InternalInvariant, "conjugate product has nonzero higher coordinates");
    RatFn nr = prod.base_value();
    if (nr.is_zero())
        fail(Errc::ZeroDivisor,
             "X^" + std::to_string(d.n) + " - k is reducible: element is a zero divisor");
    return conj * nr.inverse();
}

ExtElem tau_apply(const ExtElem& a, long j) {
    const ExtDescriptor& d = a.desc();
    long n = static_cast<long>(d.n);
    long jm = ((j % n) + n) % n;
    std::vector<RatFn> coords = a.coords();
    for (unsigned i = 0; i < d.n; ++i) {
        Cyclo f = d.zeta.pow(static_cast<long>(i) * jm);
        coords[i] = coords[i] * RatFn::constant(a.order(), f);
    }
    return ExtElem(d, std::move(coords));
}

RatFn trace(const ExtElem& a) {
    ExtElem s = ExtElem::zero(a.desc());
    for (unsigned j = 0; j < a.desc().n; ++j) s = s + tau_apply(a, j);
    RatFn direct =
        a.coords()[0] * RatFn::constant(a.order(), Rat(static_cast<long>(a.desc().n)));
    if (!s.in_base_field() || s.base_value() != direct)
        fail(Errc::InternalInvariant, "trace did not land on n * coords[0]");
    return direct;
}

RatFn norm(const ExtElem& a) {
    ExtElem p = ExtElem::one(a.desc());
    for (unsigned j = 0; j < a.desc().n; ++j) p = p * tau_apply(a, j);
    if (!p.in_base_field())
        fail(Errc::InternalInvariant, "norm has nonzero higher coordinates");
    return p.base_value();
}

ExtElem ext_d_partial(const ExtElem& a, Var v) {
    const ExtDescriptor& d = a.desc();
    RatFn dk_over_k = d.k.derivative(v) / d.k;
    std::vector<RatFn> coords(d.n, RatFn(a.order()));
    for (unsigned i = 0; i < d.n; ++i) {
        const RatFn& c = a.coords()[i];
        RatFn shift = dk_over_k *
                      RatFn::constant(a.order(), make_rat(static_cast<long>(i),
                                                          static_cast<long>(d.n)));
        coords[i] = c.derivative(v) + shift * c;
    }
    return ExtElem(d, std::move(coords));
}

ExtElem trace_zero_from(const ExtElem& w) {
    RatFn t = trace(w);
    RatFn nth = RatFn::constant(w.order(),
                                make_rat(1, static_cast<long>(w.desc().n)));
    return w - ExtElem::from_base(w.desc(), t * nth);
}

ExtElem norm_one_from(const ExtElem& w) {
    return tau_apply(w, 1) * ext_inv(w);
}

ExtElem quadratic_norm_one(const RatFn& g, const ExtDescriptor& d) {
    if (d.n != 2)
        fail(Errc::DescriptorMismatch, "quadratic_norm_one requires n = 2");
    RatFn g2 = g * g;
    RatFn denom = g2 - d.k;
    if (denom.is_zero()) fail(Errc::DegenerateG, "g^2 = k is degenerate");
    RatFn two = RatFn::constant(g.order(), Rat(2));
    std::vector<RatFn> coords{(g2 + d.k) / denom, two * g / denom};
    return ExtElem(d, std::move(coords));
}

} // namespace integrabilis
