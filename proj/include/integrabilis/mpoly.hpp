#ifndef INTEGRABILIS_MPOLY_HPP
#define INTEGRABILIS_MPOLY_HPP

#include <map>
#include <utility>
#include <vector>

#include "integrabilis/cyclo.hpp"

namespace integrabilis {

enum class Var { x, y };

struct Exp {
    unsigned x = 0;
    unsigned y = 0;
    unsigned total() const { return x + y; }
    bool operator==(const Exp& o) const { return x == o.x && y == o.y; }
};

// Graded order, then lexicographic with x > y; "less" means larger in the
// term order so that map iteration starts at the leading term.
struct TermOrderDesc {
    bool operator()(const Exp& a, const Exp& b) const {
        if (a.total() != b.total()) return a.total() > b.total();
        return a.x > b.x;
    }
};

// Exact polynomial in x, y over Q(zeta_N). No zero coefficients are stored.
class MPoly {
public:
    using TermMap = std::map<Exp, Cyclo, TermOrderDesc>;

    explicit MPoly(unsigned order = 1) : order_(order) {}

    static MPoly constant(unsigned order, const Cyclo& c);
    static MPoly constant(unsigned order, const Rat& r);
    static MPoly monomial(unsigned order, const Cyclo& c, unsigned ex, unsigned ey);
    static MPoly variable(unsigned order, Var v);

    unsigned order() const { return order_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Cyclo constant_value() const; // 0 for the zero polynomial

    int deg(Var v) const;      // -1 for zero
    int total_degree() const;  // -1 for zero
    Cyclo leading_coeff() const;
    Exp leading_exp() const;
    Cyclo coeff(unsigned ex, unsigned ey) const;

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const Cyclo& c) const;
    MPoly derivative(Var v) const;
    MPoly pow(unsigned e) const;

    bool operator==(const MPoly& o) const;
    bool operator!=(const MPoly& o) const { return !(*this == o); }
    // Deterministic total order for sorting candidate lists.
    bool operator<(const MPoly& o) const;

    void add_term(Exp e, const Cyclo& c); // accumulates, drops zeros

private:
    void check_order(const MPoly& o) const;

    unsigned order_;
    TermMap terms_;
};

// Exact quotient; throws NotDivisible when the remainder is nonzero,
// DivisionByZero when b = 0.
MPoly exact_div(const MPoly& a, const MPoly& b);

// Subresultant-PRS gcd, recursive by variable with content/primitive-part
// splitting; normalized so the leading coefficient in canonical term order
// is 1. Requires a, b not both zero.
MPoly gcd(const MPoly& a, const MPoly& b);

// Rescale a num/den pair by one common rational so both polynomials carry
// integer coefficients with no shared integer content. The represented
// fraction num/den is unchanged; integer coefficients keep later products
// free of rational canonicalization cost.
void clear_rat_content(MPoly& num, MPoly& den);

struct SquarefreeDecomposition {
    Cyclo unit; // a = unit * prod factor_i ^ multiplicity_i
    std::vector<std::pair<MPoly, unsigned>> factors; // monic, pairwise coprime
};

SquarefreeDecomposition squarefree_decompose(const MPoly& a); // a != 0

std::string to_string(const MPoly& p);

} // namespace integrabilis

#endif
