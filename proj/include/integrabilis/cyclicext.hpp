#ifndef INTEGRABILIS_CYCLICEXT_HPP
#define INTEGRABILIS_CYCLICEXT_HPP

#include "integrabilis/ratfn.hpp"

namespace integrabilis {

// The cyclic extension L = K(l), l^n = k, with Galois action tau(l) = zeta*l.
// Irreducibility of X^n - k is not verified up front; reducibility surfaces
// lazily as ZeroDivisor during inversion.
struct ExtDescriptor {
    unsigned n;
    RatFn k;
    Cyclo zeta; // fixed primitive n-th root of unity in Q(zeta_N)

    // zeta = zeta_N^(N/n); requires n | N, n >= 2 and k != 0.
    static ExtDescriptor make(unsigned n, RatFn k);

    // Heuristic minimality check from the exponent structure of k: returns
    // d > 1 when all squarefree multiplicities of num(k), den(k) share a
    // common divisor d with n (then [K(l):K] <= n/d), 1 otherwise.
    // Incomplete without irreducible factorization; a warning, not an error.
    unsigned reducibility_divisor() const;

    bool operator==(const ExtDescriptor& o) const {
        return n == o.n && k == o.k && zeta == o.zeta;
    }
    bool operator!=(const ExtDescriptor& o) const { return !(*this == o); }
};

// Element of L stored as n coordinates over K in the basis 1, l, ..., l^(n-1).
class ExtElem {
public:
    ExtElem(ExtDescriptor desc, std::vector<RatFn> coords);

    static ExtElem zero(const ExtDescriptor& d);
    static ExtElem one(const ExtDescriptor& d);
    static ExtElem from_base(const ExtDescriptor& d, const RatFn& c);
    static ExtElem ell(const ExtDescriptor& d); // coords (0, 1, 0, ...)

    const ExtDescriptor& desc() const { return desc_; }
    const std::vector<RatFn>& coords() const { return coords_; }
    unsigned order() const { return desc_.k.order(); }

    bool is_zero() const;
    bool in_base_field() const; // all higher coordinates zero
    RatFn base_value() const;

    ExtElem operator-() const;
    ExtElem operator+(const ExtElem& o) const;
    ExtElem operator-(const ExtElem& o) const;
    ExtElem operator*(const ExtElem& o) const; // l^n reduced to k
    ExtElem operator*(const RatFn& s) const;
    ExtElem operator/(const ExtElem& o) const;

    bool operator==(const ExtElem& o) const;
    bool operator!=(const ExtElem& o) const { return !(*this == o); }

private:
    void check_desc(const ExtElem& o) const;

    ExtDescriptor desc_;
    std::vector<RatFn> coords_;
};

// Inverse via extended Euclid against X^n - k in K[X]. ZeroDivisor signals a
// nontrivial gcd, i.e. X^n - k reducible for this (k, n).
ExtElem ext_inv(const ExtElem& a);

// j-th power of the generator tau: coordinate i picks up zeta^(i*j).
ExtElem tau_apply(const ExtElem& a, long j);

// Sum of all Galois conjugates; lands in K (equals n * coords[0]).
RatFn trace(const ExtElem& a);

// Product of all Galois conjugates; lands in K.
RatFn norm(const ExtElem& a);

// Derivation extending d/dvar with d(l) = (1/n)(dk/k) l.
ExtElem ext_d_partial(const ExtElem& a, Var v);

// v := w - trace(w)/n, of trace zero.
ExtElem trace_zero_from(const ExtElem& w);

// Hilbert 90 constructor: u := tau(w)/w, of norm one.
ExtElem norm_one_from(const ExtElem& w);

// n = 2 explicit norm-one element a + b*l with a = (g^2+k)/(g^2-k),
// b = 2g/(g^2-k); satisfies a^2 - k b^2 = 1. DegenerateG when g^2 = k.
ExtElem quadratic_norm_one(const RatFn& g, const ExtDescriptor& d);

std::string to_string(const ExtElem& a);

} // namespace integrabilis

#endif
