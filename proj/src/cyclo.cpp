#include "integrabilis/cyclo.hpp"

#include <functional>
#include <map>
#include <mutex>

#include "integrabilis/linalg.hpp"

namespace integrabilis {

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// Dense univariate polynomials over Q, ascending coefficients.
using QPoly = std::vector<Rat>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

QPoly sub(QPoly a, const QPoly& b) {
    if (b.size() > a.size()) a.resize(b.size(), Rat(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

QPoly scale(QPoly a, const Rat& s) {
    for (auto& c : a) c *= s;
    trim(a);
    return a;
}

// Division with remainder over Q; b nonzero.
std::pair<QPoly, QPoly> divrem(QPoly a, const QPoly& b) {
    QPoly q;
    int db = degree(b);
    if (degree(a) >= db) q.resize(a.size() - db, Rat(0));
    while (degree(a) >= db) {
        int da = degree(a);
        Rat c = a.back() / b.back();
        q[da - db] = c;
        for (int i = 0; i <= db; ++i) a[da - db + i] -= c * b[i];
        trim(a);
    }
    return {q, a};
}

// Extended gcd: returns (g, u) with u*a = g mod m, g the gcd of a and m.
std::pair<QPoly, QPoly> half_ext_gcd(QPoly a, QPoly m) {
    QPoly u0{Rat(1)}, u1{};
    QPoly r0 = std::move(a), r1 = std::move(m);
    while (!r1.empty()) {
        auto [q, r] = divrem(r0, r1);
        QPoly u2 = sub(u0, mul(q, u1));
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    return {r0, u0};
}

const QPoly& cyclotomic(unsigned n) {
    static std::map<unsigned, QPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // x^n - 1 divided by all Phi_d, d | n, d < n.
    std::function<const QPoly&(unsigned)> get = [&](unsigned m) -> const QPoly& {
        auto found = cache.find(m);
        if (found != cache.end()) return found->second;
        QPoly num(m + 1, Rat(0));
        num[0] = -1;
        num[m] = 1;
        for (unsigned d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            auto [q, r] = divrem(num, get(d));
            num = std::move(q);
        }
        return cache.emplace(m, std::move(num)).first->second;
    };
    return get(n);
}

} // namespace

const std::vector<Rat>& Cyclo::cyclotomic_polynomial(unsigned order) {
    return cyclotomic(order);
}

Cyclo::Cyclo(unsigned order) : order_(order), coords_(euler_phi(order), Rat(0)) {
    if (order == 0) fail(Errc::InternalInvariant, "cyclotomic order must be positive");
}

Cyclo::Cyclo(unsigned order, const Rat& value) : Cyclo(order) {
    coords_[0] = value;
}

Cyclo Cyclo::from_poly(unsigned order, std::vector<Rat> poly) {
    const QPoly& phi = cyclotomic(order);
    trim(poly);
    if (degree(poly) >= degree(phi)) poly = divrem(std::move(poly), phi).second;
    Cyclo c(order);
    for (size_t i = 0; i < poly.size(); ++i) c.coords_[i] = poly[i];
    return c;
}

Cyclo Cyclo::zeta(unsigned order) {
    QPoly z{Rat(0), Rat(1)};
    return from_poly(order, std::move(z));
}

Cyclo Cyclo::primitive_root(unsigned order, unsigned n) {
    if (n == 0 || order % n != 0)
        fail(Errc::OrderIncompatible,
             "no primitive " + std::to_string(n) + "-th root of unity in Q(zeta_" +
                 std::to_string(order) + ")");
    return zeta(order).pow(order / n);
}

bool Cyclo::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

bool Cyclo::is_one() const {
    if (coords_[0] != 1) return false;
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

Rat Cyclo::rational_value() const {
    if (!is_rational()) fail(Errc::InternalInvariant, "not a rational value");
    return coords_[0];
}

void Cyclo::check_order(const Cyclo& o) const {
    if (order_ != o.order_)
        fail(Errc::OrderMismatch, "cyclotomic orders differ: " +
                                      std::to_string(order_) + " vs " +
                                      std::to_string(o.order_));
}

Cyclo Cyclo::operator-() const {
    Cyclo r(*this);
    for (auto& c : r.coords_) c = -c;
    return r;
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
    check_order(o);
    Cyclo r(*this);
    for (size_t i = 0; i < coords_.size(); ++i) r.coords_[i] += o.coords_[i];
    return r;
}

Cyclo Cyclo::operator-(const Cyclo& o) const {
    check_order(o);
    Cyclo r(*this);
    for (size_t i = 0; i < coords_.size(); ++i) r.coords_[i] -= o.coords_[i];
    return r;
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
    check_order(o);
    QPoly a(coords_.begin(), coords_.end());
    QPoly b(o.coords_.begin(), o.coords_.end());
    trim(a);
    trim(b);
    return from_poly(order_, mul(a, b));
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero in Q(zeta_N)");
    QPoly a(coords_.begin(), coords_.end());
    trim(a);
    auto [g, u] = half_ext_gcd(a, cyclotomic(order_));
    // Phi_N is irreducible over Q, so g is a nonzero constant.
    if (degree(g) != 0)
        fail(Errc::InternalInvariant, "cyclotomic modulus not coprime to element");
    return from_poly(order_, scale(u, Rat(1) / g[0]));
}

Cyclo Cyclo::operator/(const Cyclo& o) const {
    check_order(o);
    return *this * o.inverse();
}

Cyclo Cyclo::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclo base(*this);
    Cyclo acc(order_, Rat(1));
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool Cyclo::operator==(const Cyclo& o) const {
    return order_ == o.order_ && coords_ == o.coords_;
}

bool Cyclo::operator<(const Cyclo& o) const {
    if (order_ != o.order_) return order_ < o.order_;
    for (size_t i = 0; i < coords_.size(); ++i) {
        int c = cmp(coords_[i], o.coords_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

DependenceResult q_linear_dependence(const std::vector<Cyclo>& cs) {
    if (cs.empty()) fail(Errc::InternalInvariant, "empty constant list");
    unsigned order = cs[0].order();
    for (const auto& c : cs)
        if (c.order() != order)
            fail(Errc::OrderMismatch, "constants with mixed cyclotomic orders");

    size_t phi = euler_phi(order);
    size_t m = cs.size();
    RatMatrix mat(phi, std::vector<Rat>(m, Rat(0)));
    for (size_t j = 0; j < m; ++j)
        for (size_t i = 0; i < phi; ++i) mat[i][j] = cs[j].coords()[i];

    auto basis = integer_nullspace(clear_denominators(mat), static_cast<int>(m));
    DependenceResult res;
    if (basis.empty()) return res;
    res.dependent = true;
    res.relation.reserve(m);
    for (const auto& e : basis.front()) res.relation.emplace_back(e);
    return res;
}

ObstructionResult degree_obstruction(const std::vector<Cyclo>& cs, unsigned n) {
    if (cs.empty()) fail(Errc::InternalInvariant, "empty constant list");
    if (n < 2) fail(Errc::InternalInvariant, "extension degree must be >= 2");
    unsigned order = cs[0].order();
    Cyclo zeta = Cyclo::primitive_root(order, n);
    std::vector<Cyclo> doubled = cs;
    for (const auto& c : cs) doubled.push_back(zeta * c);
    auto dep = q_linear_dependence(doubled);
    ObstructionResult res;
    res.obstructed = dep.dependent;
    res.relation = std::move(dep.relation);
    return res;
}

} // namespace integrabilis
