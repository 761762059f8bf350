#ifndef INTEGRABILIS_PUISEUX_HPP
#define INTEGRABILIS_PUISEUX_HPP

#include <map>
#include <optional>

#include "integrabilis/forms.hpp"

namespace integrabilis {

// One extension stage of an elementary tower: adjoining an exponential
// (dt/t = dR) or a logarithm (dt = dR/R), with R in K.
struct TowerStep {
    enum class Kind { Exponential, Logarithmic };
    Kind kind;
    RatFn R;
};

// Truncated Puiseux series in descending powers of t^(1/ram) with RatFn
// coefficients. Exponent p/ram is stored as the integer index p. Coefficients
// at indices >= bound are exact; below the bound nothing is claimed. A series
// without a bound is exact (all omitted coefficients are zero).
class PSeries {
public:
    using TermMap = std::map<long, RatFn, std::greater<long>>;

    PSeries(unsigned order, unsigned ram);

    static PSeries zero(unsigned order, unsigned ram = 1);
    static PSeries term(unsigned order, unsigned ram, long idx, RatFn coeff);
    static PSeries constant(unsigned order, RatFn coeff);

    unsigned order() const { return order_; }
    unsigned ram() const { return ram_; }
    const TermMap& terms() const { return terms_; }
    bool truncated() const { return bound_.has_value(); }
    long bound() const; // requires truncated()
    std::optional<long> bound_opt() const { return bound_; }

    bool is_zero() const { return terms_.empty(); }
    Rat exponent(long idx) const { return make_rat(idx, ram_); }

    PSeries with_bound(long bound) const; // truncates to the given bound
    PSeries lift_ram(unsigned new_ram) const; // ram_ | new_ram

    void set_term(long idx, RatFn coeff);
    void add_term(long idx, const RatFn& coeff);
    RatFn coeff(long idx) const; // zero when absent

    PSeries operator-() const;
    bool operator==(const PSeries& o) const;

private:
    unsigned order_;
    unsigned ram_;
    std::optional<long> bound_;
    TermMap terms_;
    void clamp();

    friend PSeries ps_add(const PSeries&, const PSeries&);
    friend PSeries ps_sub(const PSeries&, const PSeries&);
    friend PSeries ps_mul(const PSeries&, const PSeries&);
};

PSeries ps_add(const PSeries& a, const PSeries& b);
PSeries ps_sub(const PSeries& a, const PSeries& b);
PSeries ps_mul(const PSeries& a, const PSeries& b);

// Inverse of a nonzero series to the requested depth below its leading
// index (tightened further by the input's own bound).
PSeries ps_inv_unit(const PSeries& a, long depth);

// For z = 1 + (strictly lower order), the series lambda with only negative
// exponents satisfying d(lambda) = dz/z to truncation order.
PSeries ps_log_unit(const PSeries& z, long depth);

// Derivation with coefficients differentiated in K and
// delta(t) = t * delta(R) (Exponential) or delta(t) = delta(R)/R (Logarithmic).
PSeries ps_derive(const PSeries& a, const TowerStep& step, Var v);

struct LeadingData {
    RatFn alpha;
    Rat r;
};

LeadingData leading_data(const PSeries& a); // ZeroSeries when a = 0

struct DescentTerm {
    Cyclo c;
    PSeries u;
};

// The ordered candidate one-forms over K prescribed by the single descent
// step's case analysis. The caller wedges each against its Omega and keeps
// the first nonzero candidate that vanishes.
std::vector<KOneForm> descent_candidates(const TowerStep& step,
                                         const std::vector<DescentTerm>& us,
                                         const PSeries& v);

struct NormalizedDescentInput {
    std::vector<DescentTerm> us; // u_i / (alpha_i t^(r_i))
    PSeries v;                   // v - beta_0 (- t beta_1 in the log case)
};

// The hatted continuation: re-normalized inputs for a further invocation of
// descent_candidates after a degree-zero candidate vanished.
NormalizedDescentInput descent_normalize(const TowerStep& step,
                                         const std::vector<DescentTerm>& us,
                                         const PSeries& v);

} // namespace integrabilis

#endif
