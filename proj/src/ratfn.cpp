#include "integrabilis/ratfn.hpp"

namespace integrabilis {

RatFn::RatFn(unsigned order)
    : num_(order), den_(MPoly::constant(order, Rat(1))) {}

RatFn::RatFn(MPoly num) : num_(std::move(num)), den_(num_.order()) {
    den_ = MPoly::constant(num_.order(), Rat(1));
}

RatFn::RatFn(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail(Errc::DivisionByZero, "rational function with zero denominator");
    reduce();
}

RatFn RatFn::constant(unsigned order, const Rat& r) {
    return RatFn(MPoly::constant(order, r));
}

RatFn RatFn::constant(unsigned order, const Cyclo& c) {
    return RatFn(MPoly::constant(order, c));
}

RatFn RatFn::variable(unsigned order, Var v) {
    return RatFn(MPoly::variable(order, v));
}

void RatFn::reduce() {
    if (num_.is_zero()) {
        den_ = MPoly::constant(order(), Rat(1));
        return;
    }
    if (!den_.is_constant()) {
        MPoly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    }
    normalize_monic();
}

void RatFn::normalize_monic() {
    if (den_.leading_coeff().is_one()) return;
    Cyclo lc = den_.leading_coeff().inverse();
    num_ = num_ * lc;
    den_ = den_ * lc;
}

RatFn RatFn::coprime(MPoly num, MPoly den) {
    RatFn r(num.order());
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    if (r.num_.is_zero())
        r.den_ = MPoly::constant(r.order(), Rat(1));
    else
        r.normalize_monic();
    return r;
}

Cyclo RatFn::constant_value() const {
    if (!is_constant()) fail(Errc::InternalInvariant, "rational function is not constant");
    return num_.constant_value();
}

void RatFn::check_order(const RatFn& o) const {
    if (order() != o.order())
        fail(Errc::OrderMismatch, "rational functions over different cyclotomic orders");
}

RatFn RatFn::operator-() const {
    RatFn r(*this);
    r.num_ = -r.num_;
    return r;
}

// With both operands reduced, any common factor of the combined numerator
// and denominator must divide d = gcd(den, o.den), so only d needs to be
// cancelled afterwards.
RatFn RatFn::add_sub(const RatFn& o, bool subtract) const {
    check_order(o);
    bool trivial = den_.is_constant() || o.den_.is_constant();
    MPoly d = trivial ? MPoly::constant(order(), Rat(1)) : gcd(den_, o.den_);
    MPoly la = d.is_constant() ? den_ : exact_div(den_, d);
    MPoly lb = d.is_constant() ? o.den_ : exact_div(o.den_, d);
    MPoly n = subtract ? num_ * lb - o.num_ * la : num_ * lb + o.num_ * la;
    if (n.is_zero()) return RatFn(order());
    if (!d.is_constant()) {
        MPoly g = gcd(n, d);
        if (!g.is_constant()) {
            n = exact_div(n, g);
            d = exact_div(d, g);
        }
    }
    return coprime(std::move(n), la * lb * d);
}

RatFn RatFn::operator+(const RatFn& o) const { return add_sub(o, false); }

RatFn RatFn::operator-(const RatFn& o) const { return add_sub(o, true); }

RatFn RatFn::operator*(const RatFn& o) const {
    check_order(o);
    if (is_zero() || o.is_zero()) return RatFn(order());
    // cross-cancel; the resulting fraction is then already reduced
    MPoly g1 = (num_.is_constant() || o.den_.is_constant())
                   ? MPoly::constant(order(), Rat(1)) : gcd(num_, o.den_);
    MPoly g2 = (o.num_.is_constant() || den_.is_constant())
                   ? MPoly::constant(order(), Rat(1)) : gcd(o.num_, den_);
    return coprime(exact_div(num_, g1) * exact_div(o.num_, g2),
                   exact_div(den_, g2) * exact_div(o.den_, g1));
}

RatFn RatFn::inverse() const {
    if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero rational function");
    return coprime(den_, num_);
}

RatFn RatFn::operator/(const RatFn& o) const {
    check_order(o);
    return *this * o.inverse();
}

RatFn RatFn::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    if (e == 0) return RatFn::constant(order(), Rat(1));
    return coprime(num_.pow(static_cast<unsigned>(e)),
                   den_.pow(static_cast<unsigned>(e)));
}

RatFn RatFn::derivative(Var v) const {
    return RatFn(num_.derivative(v) * den_ - num_ * den_.derivative(v),
                 den_ * den_);
}

bool RatFn::operator==(const RatFn& o) const {
    return num_ == o.num_ && den_ == o.den_;
}

std::pair<RatFn, RatFn> dlog_components(const RatFn& u) {
    if (u.is_zero())
        fail(Errc::DivisionByZero, "logarithmic derivative of zero");
    RatFn inv = u.inverse();
    return {u.derivative(Var::x) * inv, u.derivative(Var::y) * inv};
}

} // namespace integrabilis
