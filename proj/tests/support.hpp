#ifndef INTEGRABILIS_TESTS_SUPPORT_HPP
#define INTEGRABILIS_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "integrabilis/exceptional.hpp"
#include "integrabilis/puiseux.hpp"

namespace testsupport {

using namespace integrabilis;

// Deterministic random generators for exact values; every suite seeds its own
// engine so runs are reproducible.
class Rng {
public:
    explicit Rng(unsigned seed) : eng_(seed) {}

    long intval(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(eng_);
    }

    Rat rat() {
        long den = intval(1, 4);
        return make_rat(intval(-4, 4), den);
    }

    Rat nonzero_rat() {
        while (true) {
            Rat r = rat();
            if (r != 0) return r;
        }
    }

    Cyclo cyclo(unsigned order) {
        Cyclo z = Cyclo::zeta(order);
        Cyclo out(order, rat());
        // sparse combination of low zeta powers
        for (int i = 1; i <= 2; ++i)
            if (intval(0, 1)) out = out + z.pow(i) * Cyclo(order, rat());
        return out;
    }

    Cyclo nonzero_cyclo(unsigned order) {
        while (true) {
            Cyclo c = cyclo(order);
            if (!c.is_zero()) return c;
        }
    }

    MPoly poly(unsigned order, unsigned maxdeg, unsigned nterms) {
        MPoly p(order);
        for (unsigned t = 0; t < nterms; ++t) {
            unsigned ex = static_cast<unsigned>(intval(0, maxdeg));
            unsigned ey = static_cast<unsigned>(intval(0, maxdeg - ex));
            p.add_term(Exp{ex, ey}, cyclo(order));
        }
        return p;
    }

    MPoly nonzero_poly(unsigned order, unsigned maxdeg, unsigned nterms) {
        while (true) {
            MPoly p = poly(order, maxdeg, nterms);
            if (!p.is_zero()) return p;
        }
    }

    RatFn ratfn(unsigned order, unsigned maxdeg = 2) {
        return RatFn(poly(order, maxdeg, 2), nonzero_poly(order, 1, 2));
    }

    RatFn nonzero_ratfn(unsigned order, unsigned maxdeg = 2) {
        while (true) {
            RatFn f = ratfn(order, maxdeg);
            if (!f.is_zero()) return f;
        }
    }

    ExtElem ext(const ExtDescriptor& d, unsigned maxdeg = 2) {
        std::vector<RatFn> coords;
        for (unsigned i = 0; i < d.n; ++i) coords.push_back(ratfn(d.k.order(), maxdeg));
        return ExtElem(d, std::move(coords));
    }

    // element with polynomial coordinates, for the heavier extension degrees
    ExtElem ext_poly(const ExtDescriptor& d, unsigned maxdeg = 2) {
        std::vector<RatFn> coords;
        for (unsigned i = 0; i < d.n; ++i)
            coords.push_back(RatFn(poly(d.k.order(), maxdeg, 2)));
        return ExtElem(d, std::move(coords));
    }

    ExtElem nonzero_ext(const ExtDescriptor& d, unsigned maxdeg = 2) {
        while (true) {
            ExtElem a = ext(d, maxdeg);
            if (!a.is_zero()) return a;
        }
    }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

// Independent rank oracle: plain rational Gaussian elimination, no pivoting
// tricks, no shared code with the library's fraction-free kernel.
inline size_t naive_rank(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size(), rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Rat f = m[r][c] / m[rank][c];
            for (size_t cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
        }
        ++rank;
    }
    return rank;
}

// Flattens Q(zeta_N)-entries into phi(N) rational rows per row.
inline std::vector<std::vector<Rat>> flatten_cyclo_matrix(
    const std::vector<std::vector<Cyclo>>& m, unsigned order) {
    size_t phi = euler_phi(order);
    std::vector<std::vector<Rat>> out;
    for (const auto& row : m) {
        for (size_t j = 0; j < phi; ++j) {
            std::vector<Rat> r;
            for (const auto& e : row) r.push_back(e.coords()[j]);
            out.push_back(std::move(r));
        }
    }
    return out;
}

inline std::vector<MPoly> monomial_basis(unsigned order, int d) {
    std::vector<MPoly> out;
    for (int total = 0; total <= d; ++total)
        for (int ex = total; ex >= 0; --ex)
            out.push_back(MPoly::monomial(order, Cyclo(order, Rat(1)),
                                          static_cast<unsigned>(ex),
                                          static_cast<unsigned>(total - ex)));
    return out;
}

// Brute-force kernel dimension of f -> -Q f_x + P f_y on monomials of total
// degree <= d, including the constants; fully independent of the library's
// kernel computation.
inline size_t brute_fi_kernel_dim(const PlaneField& X, int d) {
    unsigned order = X.P.order();
    // clear denominators the blunt way: scale both components by both dens
    MPoly Pp = X.P.num() * X.Q.den();
    MPoly Qp = X.Q.num() * X.P.den();
    std::vector<MPoly> mons = monomial_basis(order, d);
    // image monomial space
    std::vector<MPoly> images;
    for (const auto& f : mons)
        images.push_back(Pp * f.derivative(Var::y) - Qp * f.derivative(Var::x));
    // collect all exponent pairs appearing in any image
    std::vector<Exp> exps;
    for (const auto& im : images)
        for (const auto& [e, c] : im.terms()) {
            bool seen = false;
            for (const auto& ee : exps) seen = seen || (ee == e);
            if (!seen) exps.push_back(e);
        }
    // The kernel lives over Q(zeta_N); to stay with plain rational
    // elimination, expand both sides over the power basis of zeta: each
    // monomial column becomes phi(N) columns (zeta^p * monomial), each image
    // coordinate becomes phi(N) rational rows. The flattened kernel is
    // zeta-stable, so its Q-dimension is phi(N) times the one over Q(zeta_N).
    size_t phi = euler_phi(order);
    Cyclo zeta = Cyclo::zeta(order);
    std::vector<std::vector<Cyclo>> m; // rows = image coords, cols = (mon, p)
    for (const auto& e : exps) {
        std::vector<Cyclo> row;
        for (const auto& im : images) {
            Cyclo c = im.coeff(e.x, e.y);
            for (size_t p = 0; p < phi; ++p) {
                row.push_back(c);
                c = c * zeta;
            }
        }
        m.push_back(std::move(row));
    }
    size_t rank = naive_rank(flatten_cyclo_matrix(m, order));
    return mons.size() - rank / phi;
}

// Equality of two series on all indices >= bound (after ram alignment).
inline bool ps_equal_to_bound(const PSeries& a, const PSeries& b, const Rat& bound) {
    unsigned r = std::lcm(a.ram(), b.ram());
    PSeries aa = a.lift_ram(r), bb = b.lift_ram(r);
    Rat scaled = bound * Rat(r);
    long idx_bound = static_cast<long>(scaled.get_num().get_si());
    if (scaled.get_den() != 1) ++idx_bound;
    if (aa.truncated() && aa.bound() > idx_bound) return false;
    if (bb.truncated() && bb.bound() > idx_bound) return false;
    for (const auto& [idx, c] : aa.terms())
        if (idx >= idx_bound && bb.coeff(idx) != c) return false;
    for (const auto& [idx, c] : bb.terms())
        if (idx >= idx_bound && aa.coeff(idx) != c) return false;
    return true;
}

} // namespace testsupport

#endif
