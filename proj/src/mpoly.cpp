#include "integrabilis/mpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>

namespace integrabilis {

MPoly MPoly::constant(unsigned order, const Cyclo& c) {
    MPoly p(order);
    p.add_term({0, 0}, c);
    return p;
}

MPoly MPoly::constant(unsigned order, const Rat& r) {
    return constant(order, Cyclo(order, r));
}

MPoly MPoly::monomial(unsigned order, const Cyclo& c, unsigned ex, unsigned ey) {
    MPoly p(order);
    p.add_term({ex, ey}, c);
    return p;
}

MPoly MPoly::variable(unsigned order, Var v) {
    return monomial(order, Cyclo(order, Rat(1)), v == Var::x ? 1 : 0,
                    v == Var::y ? 1 : 0);
}

bool MPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Exp{0, 0});
}

Cyclo MPoly::constant_value() const {
    if (!is_constant()) fail(Errc::InternalInvariant, "polynomial is not constant");
    return terms_.empty() ? Cyclo(order_) : terms_.begin()->second;
}

int MPoly::deg(Var v) const {
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, static_cast<int>(v == Var::x ? e.x : e.y));
    return d;
}

int MPoly::total_degree() const {
    return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.total());
}

Cyclo MPoly::leading_coeff() const {
    if (terms_.empty()) fail(Errc::InternalInvariant, "leading term of zero");
    return terms_.begin()->second;
}

Exp MPoly::leading_exp() const {
    if (terms_.empty()) fail(Errc::InternalInvariant, "leading term of zero");
    return terms_.begin()->first;
}

Cyclo MPoly::coeff(unsigned ex, unsigned ey) const {
    auto it = terms_.find({ex, ey});
    return it == terms_.end() ? Cyclo(order_) : it->second;
}

void MPoly::add_term(Exp e, const Cyclo& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MPoly::check_order(const MPoly& o) const {
    if (order_ != o.order_)
        fail(Errc::OrderMismatch, "polynomials over different cyclotomic orders");
}

MPoly MPoly::operator-() const {
    MPoly r(order_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    check_order(o);
    MPoly r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    check_order(o);
    MPoly r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    check_order(o);
    MPoly r(order_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_)
            r.add_term({ea.x + eb.x, ea.y + eb.y}, ca * cb);
    return r;
}

MPoly MPoly::operator*(const Cyclo& c) const {
    MPoly r(order_);
    if (c.is_zero()) return r;
    for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
    return r;
}

MPoly MPoly::derivative(Var v) const {
    MPoly r(order_);
    for (const auto& [e, c] : terms_) {
        unsigned d = (v == Var::x) ? e.x : e.y;
        if (d == 0) continue;
        Exp ne = e;
        if (v == Var::x)
            --ne.x;
        else
            --ne.y;
        r.add_term(ne, c * Cyclo(order_, Rat(static_cast<long>(d))));
    }
    return r;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly acc = constant(order_, Rat(1));
    MPoly base(*this);
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool MPoly::operator==(const MPoly& o) const {
    return order_ == o.order_ && terms_ == o.terms_;
}

bool MPoly::operator<(const MPoly& o) const {
    if (order_ != o.order_) return order_ < o.order_;
    auto it = terms_.begin(), jt = o.terms_.begin();
    TermOrderDesc cmp;
    for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
        if (!(it->first == jt->first)) return cmp(jt->first, it->first);
        if (it->second != jt->second) return it->second < jt->second;
    }
    return it == terms_.end() && jt != o.terms_.end();
}

MPoly exact_div(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
    MPoly q(a.order());
    MPoly r = a;
    Exp lb = b.leading_exp();
    Cyclo lcb = b.leading_coeff();
    while (!r.is_zero()) {
        Exp lr = r.leading_exp();
        if (lr.x < lb.x || lr.y < lb.y)
            fail(Errc::NotDivisible, "nonzero remainder in exact division");
        Exp e{lr.x - lb.x, lr.y - lb.y};
        Cyclo c = r.leading_coeff() / lcb;
        MPoly t = MPoly::monomial(a.order(), c, e.x, e.y);
        q = q + t;
        r = r - t * b;
    }
    return q;
}

namespace {

// --- univariate helpers over the coefficient field Q(zeta_N) ---

// Polynomial in a single variable as dense coefficient vector, ascending.
using UPoly = std::vector<Cyclo>;

void utrim(UPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly to_uni(const MPoly& p, Var v) {
    UPoly u(static_cast<size_t>(std::max(0, p.deg(v) + 1)), Cyclo(p.order()));
    for (const auto& [e, c] : p.terms())
        u[v == Var::x ? e.x : e.y] = c;
    utrim(u);
    return u;
}

MPoly from_uni(unsigned order, const UPoly& u, Var v) {
    MPoly p(order);
    for (size_t i = 0; i < u.size(); ++i)
        p.add_term({v == Var::x ? static_cast<unsigned>(i) : 0,
                    v == Var::y ? static_cast<unsigned>(i) : 0},
                   u[i]);
    return p;
}

UPoly urem(UPoly a, const UPoly& b) {
    int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db) {
        int da = static_cast<int>(a.size()) - 1;
        Cyclo c = a.back() / b.back();
        for (int i = 0; i <= db; ++i)
            a[da - db + i] = a[da - db + i] - c * b[i];
        a.pop_back();
        utrim(a);
    }
    return a;
}

void umonic(UPoly& p) {
    if (p.empty() || p.back().is_one()) return;
    Cyclo inv = p.back().inverse();
    for (auto& c : p) c = c * inv;
}

UPoly ugcd(UPoly a, UPoly b) {
    utrim(a);
    utrim(b);
    // keep every remainder monic: without this the coefficient heights of the
    // plain Euclidean sequence grow exponentially
    umonic(a);
    umonic(b);
    while (!b.empty()) {
        UPoly r = urem(std::move(a), b);
        umonic(r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

MPoly make_monic(const MPoly& p) {
    if (p.is_zero()) return p;
    return p * p.leading_coeff().inverse();
}

// --- view as univariate in x with coefficients in Q(zeta_N)[y] ---

std::vector<MPoly> x_coeffs(const MPoly& p) {
    std::vector<MPoly> c(static_cast<size_t>(std::max(0, p.deg(Var::x) + 1)),
                         MPoly(p.order()));
    for (const auto& [e, coeff] : p.terms())
        c[e.x].add_term({0, e.y}, coeff);
    return c;
}

void xtrim(std::vector<MPoly>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

MPoly from_x_coeffs(unsigned order, const std::vector<MPoly>& c) {
    MPoly p(order);
    for (size_t i = 0; i < c.size(); ++i)
        for (const auto& [e, coeff] : c[i].terms())
            p.add_term({static_cast<unsigned>(i), e.y}, coeff);
    return p;
}

bool fp_coprime_uni(const UPoly& a, const UPoly& b, unsigned order);

// Exact univariate gcd behind the cheap coprimality filter.
UPoly ugcd_f(UPoly a, UPoly b, unsigned order) {
    utrim(a);
    utrim(b);
    if (!a.empty() && !b.empty() && fp_coprime_uni(a, b, order))
        return {Cyclo(order, Rat(1))};
    return ugcd(std::move(a), std::move(b));
}

// Content of p with respect to x: gcd in Q(zeta_N)[y] of the x-coefficients.
MPoly content_x(const MPoly& p) {
    UPoly g;
    for (const auto& c : x_coeffs(p)) {
        if (c.is_zero()) continue;
        g = ugcd_f(std::move(g), to_uni(c, Var::y), p.order());
        if (g.size() == 1) break;
    }
    return from_uni(p.order(), g, Var::y);
}

// Common rational scale of a coefficient vector: gcd of all coordinate
// numerators over the lcm of all coordinate denominators. Dividing it out
// after each pseudo-remainder keeps coefficient heights near the genuine
// subresultant growth instead of compounding across steps.
Rat rat_content(const std::vector<MPoly>& v) {
    Int num(0), den(1);
    for (const auto& p : v)
        for (const auto& [e, c] : p.terms())
            for (const auto& r : c.coords()) {
                if (r == 0) continue;
                mpz_gcd(num.get_mpz_t(), num.get_mpz_t(),
                        mpq_numref(r.get_mpq_t()));
                mpz_lcm(den.get_mpz_t(), den.get_mpz_t(),
                        mpq_denref(r.get_mpq_t()));
            }
    if (num == 0) return Rat(1);
    return make_rat(num, den);
}

void strip_rat_content(std::vector<MPoly>& v, unsigned order) {
    Rat c = rat_content(v);
    if (c == 1) return;
    MPoly s = MPoly::constant(order, Rat(1) / c);
    for (auto& p : v) p = p * s;
}

std::vector<MPoly> scale_vec(const std::vector<MPoly>& v, const MPoly& s) {
    std::vector<MPoly> r;
    r.reserve(v.size());
    for (const auto& c : v) r.push_back(c * s);
    return r;
}

std::vector<MPoly> exact_div_vec(const std::vector<MPoly>& v, const MPoly& s) {
    std::vector<MPoly> r;
    r.reserve(v.size());
    for (const auto& c : v)
        r.push_back(c.is_zero() ? c : exact_div(c, s));
    return r;
}

// Pseudo-remainder of A by B in x over Q(zeta_N)[y].
std::vector<MPoly> prem_x(std::vector<MPoly> A, const std::vector<MPoly>& B) {
    int db = static_cast<int>(B.size()) - 1;
    const MPoly& lcb = B.back();
    int e = static_cast<int>(A.size()) - 1 - db + 1;
    while (static_cast<int>(A.size()) - 1 >= db && !A.empty()) {
        int da = static_cast<int>(A.size()) - 1;
        MPoly lca = A.back();
        A = scale_vec(A, lcb);
        for (int i = 0; i <= db; ++i)
            A[da - db + i] = A[da - db + i] - lca * B[i];
        xtrim(A);
        --e;
    }
    if (e > 0) {
        MPoly f = lcb.pow(static_cast<unsigned>(e));
        A = scale_vec(A, f);
    }
    return A;
}

// Evaluation of p at y = r, viewed as a univariate polynomial in x.
UPoly eval_y(const MPoly& p, const Rat& r) {
    std::vector<Rat> pw(static_cast<size_t>(std::max(0, p.deg(Var::y))) + 1);
    pw[0] = 1;
    for (size_t i = 1; i < pw.size(); ++i) pw[i] = pw[i - 1] * r;
    UPoly u(static_cast<size_t>(std::max(0, p.deg(Var::x) + 1)),
            Cyclo(p.order()));
    for (const auto& [e, c] : p.terms())
        u[e.x] = u[e.x] + c * Cyclo(p.order(), pw[e.y]);
    utrim(u);
    return u;
}

// --- word-size prime-field filter ---
//
// Coefficients map into F_p for a prime p = 1 (mod N) by sending zeta_N to
// an Nth root of unity mod p. When every denominator is invertible mod p
// and the leading coefficients survive, the image of a resultant equals the
// resultant of the images, so a constant gcd of the images certifies
// coprimality exactly. The converse direction is never trusted.

using u64 = std::uint64_t;

u64 fp_mul(u64 a, u64 b, u64 p) {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p);
}

u64 fp_pow(u64 a, u64 e, u64 p) {
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = fp_mul(r, a, p);
        a = fp_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

bool fp_is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                  23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                  23ull, 29ull, 31ull, 37ull}) {
        u64 x = fp_pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s && witness; ++i) {
            x = fp_mul(x, x, n);
            if (x == n - 1) witness = false;
        }
        if (witness) return false;
    }
    return true;
}

struct FpCtx {
    u64 p = 0;
    std::vector<u64> zeta_pow; // images of zeta^i for the coordinate basis
};

const FpCtx& fp_context(unsigned order) {
    static std::map<unsigned, FpCtx> cache;
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
    FpCtx ctx;
    // smallest prime above 2^62 congruent to 1 mod order
    u64 p = (u64(1) << 62) + 1;
    while (p % order != 1 || !fp_is_prime(p)) ++p;
    ctx.p = p;
    // prime divisors of the order, for primitivity checks
    std::vector<unsigned> qs;
    unsigned m = order;
    for (unsigned q = 2; q * q <= m; ++q)
        if (m % q == 0) {
            qs.push_back(q);
            while (m % q == 0) m /= q;
        }
    if (m > 1) qs.push_back(m);
    u64 w = 0;
    for (u64 g = 2;; ++g) {
        w = fp_pow(g, (p - 1) / order, p);
        bool primitive = true;
        for (unsigned q : qs)
            if (fp_pow(w, order / q, p) == 1) { primitive = false; break; }
        if (primitive) break;
    }
    size_t dim = Cyclo(order).coords().size();
    ctx.zeta_pow.resize(dim);
    for (size_t i = 0; i < dim; ++i) ctx.zeta_pow[i] = fp_pow(w, i, p);
    return cache.emplace(order, std::move(ctx)).first->second;
}

std::optional<u64> fp_of_cyclo(const Cyclo& c, const FpCtx& F) {
    u64 acc = 0;
    const auto& zp = F.zeta_pow;
    for (size_t i = 0; i < c.coords().size(); ++i) {
        const Rat& r = c.coords()[i];
        if (r == 0) continue;
        u64 den = mpz_fdiv_ui(mpq_denref(r.get_mpq_t()), F.p);
        if (den == 0) return std::nullopt;
        u64 num = mpz_fdiv_ui(mpq_numref(r.get_mpq_t()), F.p);
        u64 v = fp_mul(num, fp_pow(den, F.p - 2, F.p), F.p);
        acc = (acc + fp_mul(v, zp[i], F.p)) % F.p;
    }
    return acc;
}

// Image of p(x, t) in F_p[x]; nullopt when the reduction is undefined.
std::optional<std::vector<u64>> fp_eval_xy(const MPoly& m, const FpCtx& F,
                                           u64 t) {
    std::vector<u64> out(static_cast<size_t>(std::max(0, m.deg(Var::x) + 1)),
                         0);
    std::vector<u64> tp(static_cast<size_t>(std::max(0, m.deg(Var::y))) + 1);
    tp[0] = 1;
    for (size_t i = 1; i < tp.size(); ++i) tp[i] = fp_mul(tp[i - 1], t, F.p);
    for (const auto& [e, c] : m.terms()) {
        auto v = fp_of_cyclo(c, F);
        if (!v) return std::nullopt;
        out[e.x] = (out[e.x] + fp_mul(*v, tp[e.y], F.p)) % F.p;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

size_t fp_gcd_size(std::vector<u64> a, std::vector<u64> b, u64 p) {
    while (!b.empty()) {
        u64 inv = fp_pow(b.back(), p - 2, p);
        int db = static_cast<int>(b.size()) - 1;
        while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
            int da = static_cast<int>(a.size()) - 1;
            u64 c = fp_mul(a.back(), inv, p);
            for (int i = 0; i <= db; ++i) {
                u64 s = fp_mul(c, b[i], p);
                u64& t = a[da - db + i];
                t = (t + p - s) % p;
            }
            while (!a.empty() && a.back() == 0) a.pop_back();
        }
        std::swap(a, b);
    }
    return a.size();
}

// True certifies gcd(a, b) constant in x over Q(zeta_N)(y); false is
// inconclusive.
bool fp_coprime_x(const MPoly& a, const MPoly& b) {
    const FpCtx& F = fp_context(a.order());
    size_t da = static_cast<size_t>(a.deg(Var::x)) + 1;
    size_t db = static_cast<size_t>(b.deg(Var::x)) + 1;
    for (u64 t : {1ull, 7ull, 23ull, 121ull}) {
        auto va = fp_eval_xy(a, F, t);
        if (!va) return false; // a denominator hit the prime: stay exact
        auto vb = fp_eval_xy(b, F, t);
        if (!vb) return false;
        // leading coefficients must survive or degrees are not preserved
        if (va->size() != da || vb->size() != db) continue;
        if (fp_gcd_size(std::move(*va), std::move(*vb), F.p) == 1)
            return true;
    }
    return false;
}

// Same certificate for univariate polynomials in a single variable.
bool fp_coprime_uni(const UPoly& a, const UPoly& b, unsigned order) {
    if (a.empty() || b.empty()) return false;
    const FpCtx& F = fp_context(order);
    std::vector<u64> va(a.size()), vb(b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        auto v = fp_of_cyclo(a[i], F);
        if (!v) return false;
        va[i] = *v;
    }
    for (size_t i = 0; i < b.size(); ++i) {
        auto v = fp_of_cyclo(b[i], F);
        if (!v) return false;
        vb[i] = *v;
    }
    if (va.back() == 0 || vb.back() == 0) return false;
    return fp_gcd_size(std::move(va), std::move(vb), F.p) == 1;
}

// Horner evaluation of a univariate polynomial (in y) at a rational point.
Cyclo ueval(const UPoly& p, unsigned order, const Rat& r) {
    Cyclo acc(order);
    Cyclo rr(order, r);
    for (size_t i = p.size(); i-- > 0;) acc = acc * rr + p[i];
    return acc;
}

// Trial division; true (and the quotient) exactly when b divides a.
bool try_exact_div(const MPoly& a, const MPoly& b, MPoly& q) {
    q = MPoly(a.order());
    MPoly r = a;
    Exp lb = b.leading_exp();
    Cyclo lcb = b.leading_coeff();
    while (!r.is_zero()) {
        Exp lr = r.leading_exp();
        if (lr.x < lb.x || lr.y < lb.y) return false;
        Exp e{lr.x - lb.x, lr.y - lb.y};
        Cyclo c = r.leading_coeff() / lcb;
        MPoly t = MPoly::monomial(a.order(), c, e.x, e.y);
        q = q + t;
        r = r - t * b;
    }
    return true;
}

// Evaluation-interpolation gcd in x of inputs primitive with respect to x.
// Specialize y at points keeping both leading x-coefficients alive, take
// monic univariate gcds, rescale each image so its leading coefficient is
// gamma(r) for gamma = gcd of the leading x-coefficients, and rebuild the
// bivariate polynomial by Newton interpolation in y. A degree-zero image
// certifies coprimality outright; any reconstructed candidate is verified
// by trial division, so unlucky evaluation points can never produce a
// wrong answer. Returns nullopt when no conclusion was reached.
std::optional<MPoly> modular_gcd_x(const MPoly& pa, const MPoly& pb) {
    unsigned order = pa.order();
    if (fp_coprime_x(pa, pb)) return MPoly::constant(order, Rat(1));
    size_t da = static_cast<size_t>(pa.deg(Var::x)) + 1;
    size_t db = static_cast<size_t>(pb.deg(Var::x)) + 1;
    UPoly gamma = ugcd_f(to_uni(x_coeffs(pa).back(), Var::y),
                         to_uni(x_coeffs(pb).back(), Var::y), order);
    int limit = pa.deg(Var::y) + pb.deg(Var::y) + 3;
    std::vector<Rat> pts;       // Newton interpolation nodes
    std::vector<UPoly> coeffs;  // Newton coefficients (polynomials in x)
    size_t dmin = 0;
    bool have_image = false;
    for (int t = 0; t <= 6 * limit; ++t) {
        Rat r(t % 2 == 0 ? t / 2 : -(t / 2 + 1));
        UPoly ua = eval_y(pa, r), ub = eval_y(pb, r);
        if (ua.size() != da || ub.size() != db) continue;
        Cyclo gr = ueval(gamma, order, r);
        if (gr.is_zero()) continue;
        UPoly g = ugcd(std::move(ua), std::move(ub));
        if (g.size() == 1) return MPoly::constant(order, Rat(1));
        size_t dg = g.size() - 1;
        // a full-degree image means one input likely divides the other
        if (!have_image) {
            MPoly q(order);
            if (dg == da - 1 && try_exact_div(pb, pa, q)) return pa;
            if (dg == db - 1 && try_exact_div(pa, pb, q)) return pb;
        }
        if (have_image && dg > dmin) continue; // unlucky point, skip
        if (!have_image || dg < dmin) {        // restart with better degree
            dmin = dg;
            have_image = true;
            pts.clear();
            coeffs.clear();
        }
        for (auto& c : g) c = c * gr;
        // Newton step: value of the current interpolant at r ...
        UPoly val;
        Cyclo fac(order, Rat(1));
        for (size_t k = 0; k < pts.size(); ++k) {
            if (k > 0) fac = fac * Cyclo(order, r - pts[k - 1]);
            for (size_t i = 0; i < coeffs[k].size(); ++i) {
                if (val.size() <= i) val.resize(i + 1, Cyclo(order));
                val[i] = val[i] + coeffs[k][i] * fac;
            }
        }
        // ... and the divided-difference coefficient it implies.
        Cyclo denom(order, Rat(1));
        for (const Rat& p0 : pts) denom = denom * Cyclo(order, r - p0);
        UPoly diff(std::max(g.size(), val.size()), Cyclo(order));
        for (size_t i = 0; i < diff.size(); ++i) {
            Cyclo d(order);
            if (i < g.size()) d = d + g[i];
            if (i < val.size()) d = d - val[i];
            diff[i] = d / denom;
        }
        utrim(diff);
        bool stable = diff.empty() && !pts.empty();
        pts.push_back(r);
        coeffs.push_back(std::move(diff));
        if (!stable) continue;
        // Interpolant unchanged by a fresh point: reconstruct and verify.
        MPoly H(order);
        for (size_t k = pts.size(); k-- > 0;) {
            MPoly step = MPoly::variable(order, Var::y) -
                         MPoly::constant(order, pts[k]);
            H = H * step + from_uni(order, coeffs[k], Var::x);
        }
        if (H.is_zero()) return std::nullopt;
        MPoly cand = exact_div(H, content_x(H));
        MPoly q(order);
        if (try_exact_div(pa, cand, q) && try_exact_div(pb, cand, q))
            return cand;
        if (pts.size() > static_cast<size_t>(limit)) break;
    }
    return std::nullopt;
}

// Subresultant PRS gcd in x of primitive (w.r.t. x) inputs; returns the
// primitive part of the last nonzero remainder, or 1 when coprime.
MPoly prs_gcd_x(const MPoly& pa, const MPoly& pb) {
    unsigned order = pa.order();
    if (auto g = modular_gcd_x(pa, pb)) return *g;
    std::vector<MPoly> A = x_coeffs(pa), B = x_coeffs(pb);
    if (A.size() < B.size()) std::swap(A, B);
    MPoly one = MPoly::constant(order, Rat(1));
    // With integral primitive inputs every subresultant step stays integral,
    // which keeps the rational arithmetic below cheap.
    strip_rat_content(A, order);
    strip_rat_content(B, order);
    MPoly g = one, h = one;
    while (true) {
        int delta = static_cast<int>(A.size()) - static_cast<int>(B.size());
        std::vector<MPoly> R = prem_x(A, B);
        if (R.empty()) break;
        if (R.size() == 1) return one; // coprime up to content
        strip_rat_content(R, order);
        A = std::move(B);
        MPoly divisor = g * h.pow(static_cast<unsigned>(delta));
        B = exact_div_vec(R, divisor);
        strip_rat_content(B, order);
        g = A.back();
        if (delta == 1)
            h = g;
        else if (delta > 1)
            h = exact_div(g.pow(static_cast<unsigned>(delta)),
                          h.pow(static_cast<unsigned>(delta - 1)));
    }
    MPoly res = from_x_coeffs(order, B);
    MPoly cont = content_x(res);
    return exact_div(res, cont);
}

// Yun's squarefree decomposition with respect to the derivative in v;
// f must be nonconstant and primitive w.r.t. v (positive degree in v).
void yun(const MPoly& f, Var v,
         std::vector<std::pair<MPoly, unsigned>>& out) {
    MPoly fp = f.derivative(v);
    MPoly g = gcd(f, fp);
    if (g.is_constant()) {
        out.emplace_back(make_monic(f), 1);
        return;
    }
    MPoly w = exact_div(f, g);
    MPoly c = exact_div(fp, g);
    unsigned i = 1;
    while (!w.is_constant()) {
        MPoly z = c - w.derivative(v);
        if (z.is_zero()) {
            out.emplace_back(make_monic(w), i);
            break;
        }
        MPoly fi = gcd(w, z);
        if (!fi.is_constant()) out.emplace_back(make_monic(fi), i);
        w = exact_div(w, fi);
        c = exact_div(z, fi);
        ++i;
    }
}

} // namespace

void clear_rat_content(MPoly& num, MPoly& den) {
    std::vector<MPoly> v{std::move(num), std::move(den)};
    strip_rat_content(v, v[0].order());
    num = std::move(v[0]);
    den = std::move(v[1]);
}

MPoly gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero() && b.is_zero())
        fail(Errc::InternalInvariant, "gcd(0, 0) undefined");
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);
    unsigned order = a.order();
    if (a.is_constant() || b.is_constant())
        return MPoly::constant(order, Rat(1));

    if (a == b) return make_monic(a);

    int ax = a.deg(Var::x), bx = b.deg(Var::x);
    if (ax == 0 && bx == 0) {
        // both univariate in y
        return from_uni(order,
                        ugcd_f(to_uni(a, Var::y), to_uni(b, Var::y), order),
                        Var::y);
    }
    if (ax == 0) return gcd(a, content_x(b));
    if (bx == 0) return gcd(content_x(a), b);

    MPoly ca = content_x(a), cb = content_x(b);
    MPoly pa = exact_div(a, ca), pb = exact_div(b, cb);
    MPoly cont_gcd =
        (ca.is_constant() || cb.is_constant())
            ? MPoly::constant(order, Rat(1))
            : from_uni(order,
                       ugcd_f(to_uni(ca, Var::y), to_uni(cb, Var::y), order),
                       Var::y);
    return make_monic(prs_gcd_x(pa, pb) * cont_gcd);
}

SquarefreeDecomposition squarefree_decompose(const MPoly& a) {
    if (a.is_zero()) fail(Errc::InternalInvariant, "squarefree decomposition of 0");
    SquarefreeDecomposition res;
    res.unit = Cyclo(a.order(), Rat(1));
    if (a.is_constant()) {
        res.unit = a.constant_value();
        return res;
    }
    MPoly work = a;
    if (work.deg(Var::x) > 0) {
        MPoly cont = content_x(work);
        MPoly pp = exact_div(work, cont);
        yun(pp, Var::x, res.factors);
        work = cont; // univariate in y (or constant)
    }
    if (!work.is_constant()) yun(work, Var::y, res.factors);

    // Recover the constant unit by exact division.
    MPoly prod = MPoly::constant(a.order(), Rat(1));
    for (const auto& [f, m] : res.factors) prod = prod * f.pow(m);
    res.unit = exact_div(a, prod).constant_value();
    return res;
}

} // namespace integrabilis
