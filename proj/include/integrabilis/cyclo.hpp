#ifndef INTEGRABILIS_CYCLO_HPP
#define INTEGRABILIS_CYCLO_HPP

#include <vector>

#include "integrabilis/errors.hpp"
#include "integrabilis/rat.hpp"

namespace integrabilis {

unsigned euler_phi(unsigned n);

// Exact element of Q(zeta_N), coordinates over Q in the basis
// 1, zeta, ..., zeta^(phi(N)-1) modulo the N-th cyclotomic polynomial.
// Values are immutable and always fully reduced.
class Cyclo {
public:
    explicit Cyclo(unsigned order = 1);
    Cyclo(unsigned order, const Rat& value);

    static Cyclo zeta(unsigned order);
    // zeta_N^(N/n), a primitive n-th root of unity; requires n | N.
    static Cyclo primitive_root(unsigned order, unsigned n);
    // Coefficients of Phi_N, ascending, monic, integer entries.
    static const std::vector<Rat>& cyclotomic_polynomial(unsigned order);

    unsigned order() const { return order_; }
    const std::vector<Rat>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    Rat rational_value() const; // requires is_rational()

    Cyclo operator-() const;
    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator*(const Cyclo& o) const;
    Cyclo operator/(const Cyclo& o) const; // DivisionByZero
    Cyclo inverse() const;                 // DivisionByZero
    Cyclo pow(long e) const;               // negative e inverts

    bool operator==(const Cyclo& o) const;
    bool operator!=(const Cyclo& o) const { return !(*this == o); }

    // Total order for deterministic container ordering (not algebraic).
    bool operator<(const Cyclo& o) const;

private:
    void check_order(const Cyclo& o) const;
    static Cyclo from_poly(unsigned order, std::vector<Rat> poly);

    unsigned order_;
    std::vector<Rat> coords_;
};

struct DependenceResult {
    bool dependent = false;
    // Nontrivial integer relation sum r_i c_i = 0, gcd 1, leading entry
    // positive; empty when independent.
    std::vector<Rat> relation;
};

// Exact Q-linear dependence test via kernel of the phi(N) x m coordinate
// matrix (fraction-free elimination).
DependenceResult q_linear_dependence(const std::vector<Cyclo>& cs);

struct ObstructionResult {
    bool obstructed = false;
    std::vector<Rat> relation;
};

// Tests whether c_1..c_m, zeta c_1..zeta c_m are Q-linearly dependent for a
// primitive n-th root zeta. Unobstructed rules out an exceptional field with
// [L:K] = n for these constants.
ObstructionResult degree_obstruction(const std::vector<Cyclo>& cs, unsigned n);

std::string to_string(const Cyclo& c);

} // namespace integrabilis

#endif
