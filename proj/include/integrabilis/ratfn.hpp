#ifndef INTEGRABILIS_RATFN_HPP
#define INTEGRABILIS_RATFN_HPP

#include "integrabilis/mpoly.hpp"

namespace integrabilis {

// Reduced rational function num/den over Q(zeta_N): gcd(num, den) = 1,
// den monic in canonical term order, 0 represented as 0/1. The canonical
// form makes equality a representation check.
class RatFn {
public:
    explicit RatFn(unsigned order = 1);
    RatFn(MPoly num, MPoly den); // reduces; DivisionByZero when den = 0
    /*implicit*/ RatFn(MPoly num);

    static RatFn constant(unsigned order, const Rat& r);
    static RatFn constant(unsigned order, const Cyclo& c);
    static RatFn variable(unsigned order, Var v);

    unsigned order() const { return num_.order(); }
    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    // Constant in the differential sense: an element of Q(zeta_N).
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Cyclo constant_value() const;
    bool is_polynomial() const { return den_.is_constant(); }

    RatFn operator-() const;
    RatFn operator+(const RatFn& o) const;
    RatFn operator-(const RatFn& o) const;
    RatFn operator*(const RatFn& o) const;
    RatFn operator/(const RatFn& o) const; // DivisionByZero
    RatFn inverse() const;                 // DivisionByZero
    RatFn pow(long e) const;

    RatFn derivative(Var v) const; // quotient rule, reduced

    bool operator==(const RatFn& o) const;
    bool operator!=(const RatFn& o) const { return !(*this == o); }

private:
    void check_order(const RatFn& o) const;
    void reduce();
    void normalize_monic();
    // Construction bypassing reduction, for fractions already known coprime.
    static RatFn coprime(MPoly num, MPoly den);
    RatFn add_sub(const RatFn& o, bool subtract) const;

    MPoly num_, den_;
};

// (u_x/u, u_y/u) for u != 0.
std::pair<RatFn, RatFn> dlog_components(const RatFn& u);

std::string to_string(const RatFn& f);

} // namespace integrabilis

#endif
