#include "integrabilis/puiseux.hpp"

#include <numeric>

namespace integrabilis {

PSeries::PSeries(unsigned order, unsigned ram) : order_(order), ram_(ram) {
    if (ram == 0) fail(Errc::InternalInvariant, "ramification index must be positive");
}

PSeries PSeries::zero(unsigned order, unsigned ram) { return PSeries(order, ram); }

PSeries PSeries::term(unsigned order, unsigned ram, long idx, RatFn coeff) {
    PSeries s(order, ram);
    s.set_term(idx, std::move(coeff));
    return s;
}

PSeries PSeries::constant(unsigned order, RatFn coeff) {
    return term(order, 1, 0, std::move(coeff));
}

long PSeries::bound() const {
    if (!bound_) fail(Errc::InternalInvariant, "series is exact");
    return *bound_;
}

void PSeries::clamp() {
    if (!bound_) return;
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first < *bound_)
            it = terms_.erase(it);
        else
            ++it;
    }
}

PSeries PSeries::with_bound(long bound) const {
    PSeries s(*this);
    s.bound_ = bound_ ? std::max(*bound_, bound) : bound;
    s.clamp();
    return s;
}

PSeries PSeries::lift_ram(unsigned new_ram) const {
    if (new_ram % ram_ != 0)
        fail(Errc::InternalInvariant, "ramification lift must be a multiple");
    long f = static_cast<long>(new_ram / ram_);
    PSeries s(order_, new_ram);
    if (bound_) s.bound_ = *bound_ * f;
    for (const auto& [idx, c] : terms_) s.terms_.emplace(idx * f, c);
    return s;
}

void PSeries::set_term(long idx, RatFn coeff) {
    if (bound_ && idx < *bound_) return;
    if (coeff.is_zero())
        terms_.erase(idx);
    else
        terms_[idx] = std::move(coeff);
}

void PSeries::add_term(long idx, const RatFn& coeff) {
    if (coeff.is_zero()) return;
    if (bound_ && idx < *bound_) return;
    auto it = terms_.find(idx);
    if (it == terms_.end()) {
        terms_.emplace(idx, coeff);
    } else {
        it->second = it->second + coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

RatFn PSeries::coeff(long idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? RatFn(order_) : it->second;
}

PSeries PSeries::operator-() const {
    PSeries s(*this);
    for (auto& [idx, c] : s.terms_) c = -c;
    return s;
}

bool PSeries::operator==(const PSeries& o) const {
    unsigned r = std::lcm(ram_, o.ram_);
    PSeries a = lift_ram(r), b = o.lift_ram(r);
    return a.bound_ == b.bound_ && a.terms_ == b.terms_;
}

namespace {

std::pair<PSeries, PSeries> align(const PSeries& a, const PSeries& b) {
    unsigned r = std::lcm(a.ram(), b.ram());
    return {a.lift_ram(r), b.lift_ram(r)};
}

// Highest index carrying information: top term, or just below the bound for
// a truncated series with no stored terms.
long top_index(const PSeries& s) {
    if (!s.terms().empty()) return s.terms().begin()->first;
    if (s.truncated()) return s.bound() - 1;
    fail(Errc::InternalInvariant, "top index of exact zero");
}

PSeries shift_scale(const PSeries& s, long didx, const RatFn& factor) {
    PSeries r(s.order(), s.ram());
    if (s.truncated()) r = r.with_bound(s.bound() + didx);
    for (const auto& [idx, c] : s.terms()) r.set_term(idx + didx, c * factor);
    return r;
}

} // namespace

PSeries ps_add(const PSeries& a0, const PSeries& b0) {
    auto [a, b] = align(a0, b0);
    PSeries r = a;
    if (b.truncated())
        r.bound_ = r.bound_ ? std::max(*r.bound_, b.bound()) : b.bound();
    r.clamp();
    for (const auto& [idx, c] : b.terms()) r.add_term(idx, c);
    return r;
}

PSeries ps_sub(const PSeries& a, const PSeries& b) { return ps_add(a, -b); }

PSeries ps_mul(const PSeries& a0, const PSeries& b0) {
    auto [a, b] = align(a0, b0);
    // exact zero factor gives exact zero
    if ((a.is_zero() && !a.truncated()) || (b.is_zero() && !b.truncated()))
        return PSeries::zero(a.order(), a.ram());
    PSeries r(a.order(), a.ram());
    std::optional<long> bound;
    if (a.truncated()) bound = a.bound() + top_index(b);
    if (b.truncated()) {
        long bb = b.bound() + top_index(a);
        bound = bound ? std::max(*bound, bb) : bb;
    }
    if (bound) r.bound_ = bound;
    for (const auto& [ia, ca] : a.terms())
        for (const auto& [ib, cb] : b.terms()) r.add_term(ia + ib, ca * cb);
    return r;
}

PSeries ps_inv_unit(const PSeries& a, long depth) {
    if (a.is_zero()) fail(Errc::ZeroLeading, "inverse of a series with no leading term");
    if (depth < 0) fail(Errc::InternalInvariant, "negative truncation depth");
    long la = a.terms().begin()->first;
    RatFn alpha = a.terms().begin()->second;
    // a = alpha t^(la/ram) (1 + w), w strictly lower order
    RatFn alpha_inv = alpha.inverse();
    PSeries unit_part = shift_scale(a, -la, alpha_inv); // 1 + w
    long result_bound = -la - depth;
    if (a.truncated()) result_bound = std::max(result_bound, a.bound() - 2 * la);
    long inner_bound = result_bound + la; // for 1/(1 + w), leading index 0

    PSeries w = ps_sub(unit_part, PSeries::constant(a.order(), RatFn::constant(a.order(), Rat(1))))
                    .lift_ram(a.ram())
                    .with_bound(inner_bound);
    PSeries acc = PSeries::term(a.order(), a.ram(), 0,
                                RatFn::constant(a.order(), Rat(1)));
    PSeries pw = acc;
    while (true) {
        pw = ps_mul(pw, -w).with_bound(inner_bound);
        if (pw.is_zero()) break;
        acc = ps_add(acc, pw);
    }
    return shift_scale(acc, -la, alpha_inv).with_bound(result_bound);
}

PSeries ps_log_unit(const PSeries& z, long depth) {
    if (depth < 0) fail(Errc::InternalInvariant, "negative truncation depth");
    unsigned order = z.order();
    RatFn one = RatFn::constant(order, Rat(1));
    if (z.is_zero() || z.terms().begin()->first != 0 ||
        z.terms().begin()->second != one)
        fail(Errc::NotAUnitOfRequiredForm, "series is not 1 + lower-order terms");
    long result_bound = -depth;
    if (z.truncated()) result_bound = std::max(result_bound, z.bound());

    PSeries w = ps_sub(z, PSeries::constant(order, one))
                    .lift_ram(z.ram())
                    .with_bound(result_bound);
    PSeries acc = PSeries::zero(order, z.ram()).with_bound(result_bound);
    PSeries pw = PSeries::term(order, z.ram(), 0, one);
    long j = 1;
    while (true) {
        pw = ps_mul(pw, w).with_bound(result_bound);
        if (pw.is_zero()) break;
        Rat sign = (j % 2 == 1) ? Rat(1) : Rat(-1);
        RatFn coeff = RatFn::constant(order, sign / Rat(j));
        acc = ps_add(acc, shift_scale(pw, 0, coeff));
        ++j;
    }
    return acc;
}

PSeries ps_derive(const PSeries& a, const TowerStep& step, Var v) {
    unsigned order = a.order();
    if (step.kind == TowerStep::Kind::Logarithmic && step.R.is_zero())
        fail(Errc::DivisionByZero, "logarithmic step requires R != 0");
    RatFn dR = step.R.derivative(v);
    PSeries r(order, a.ram());
    if (a.truncated()) r = r.with_bound(a.bound());
    long ram = static_cast<long>(a.ram());
    for (const auto& [idx, c] : a.terms()) {
        r.add_term(idx, c.derivative(v));
        if (idx == 0) continue;
        RatFn e = RatFn::constant(order, make_rat(idx, ram));
        if (step.kind == TowerStep::Kind::Exponential) {
            // j c t^(j-1) * t dR = j c dR t^j
            r.add_term(idx, e * c * dR);
        } else {
            // j c t^(j-1) * dR/R
            r.add_term(idx - ram, e * c * (dR / step.R));
        }
    }
    return r;
}

LeadingData leading_data(const PSeries& a) {
    if (a.is_zero()) {
        if (a.truncated())
            fail(Errc::InsufficientTruncation,
                 "no terms above the truncation bound");
        fail(Errc::ZeroSeries, "leading data of the zero series");
    }
    return LeadingData{a.terms().begin()->second, a.exponent(a.terms().begin()->first)};
}

namespace {

KOneForm scaled_dR(const RatFn& R, const Rat& s, unsigned order, bool over_R) {
    KOneForm dR = k_differential(R);
    if (over_R) dR = dR * R.inverse();
    return dR * RatFn::constant(order, s);
}

// Certainty of the coefficient at the given index.
bool knows_index(const PSeries& s, long idx) {
    return !s.truncated() || idx >= s.bound();
}

} // namespace

std::vector<KOneForm> descent_candidates(const TowerStep& step,
                                         const std::vector<DescentTerm>& us,
                                         const PSeries& v) {
    unsigned order = v.order();
    bool log_case = step.kind == TowerStep::Kind::Logarithmic;
    if (log_case && step.R.is_zero())
        fail(Errc::DivisionByZero, "logarithmic step requires R != 0");

    std::vector<std::pair<Cyclo, LeadingData>> leads;
    for (const auto& [c, u] : us) leads.emplace_back(c, leading_data(u));

    std::vector<KOneForm> out;
    long ram = static_cast<long>(v.ram());
    bool have_v = !v.is_zero();
    long s_idx = 0;
    Rat s(0);
    if (have_v) {
        s_idx = v.terms().begin()->first;
        s = v.exponent(s_idx);
    }

    if (have_v && s > 0) {
        const RatFn& beta_s = v.terms().begin()->second;
        if (!log_case) {
            // case (i): (d beta_s / beta_s + s dR) ^ Omega = 0
            auto [dx, dy] = dlog_components(beta_s);
            out.push_back(KOneForm{dx, dy} + scaled_dR(step.R, s, order, false));
        } else {
            // case (ii): d beta_s ^ Omega = 0
            out.push_back(k_differential(beta_s));
            if (s != 0 && s != 1 && beta_s.is_constant()) {
                // then (d beta_{s-1} + s beta_s dR/R) ^ Omega = 0
                long prev = s_idx - ram;
                if (!knows_index(v, prev))
                    fail(Errc::InsufficientTruncation,
                         "beta_{s-1} below the truncation bound");
                KOneForm cand = k_differential(v.coeff(prev)) +
                                scaled_dR(step.R, s, order, true) * beta_s;
                out.push_back(cand);
            }
        }
    }

    // degree-zero candidate
    if (!knows_index(v, 0) || (log_case && !knows_index(v, ram)))
        fail(Errc::InsufficientTruncation,
             "beta_0 (or beta_1) below the truncation bound");
    KOneForm zero_cand{RatFn(order), RatFn(order)};
    for (const auto& [c, lead] : leads) {
        auto [dx, dy] = dlog_components(lead.alpha);
        KOneForm dl = KOneForm{dx, dy} * RatFn::constant(order, c);
        zero_cand = zero_cand + dl;
        if (!log_case && lead.r != 0)
            zero_cand = zero_cand + scaled_dR(step.R, lead.r, order, false) *
                                        RatFn::constant(order, c);
    }
    zero_cand = zero_cand + k_differential(v.coeff(0));
    if (log_case) {
        RatFn beta1 = v.coeff(ram);
        if (!beta1.is_zero())
            zero_cand = zero_cand + scaled_dR(step.R, Rat(1), order, true) * beta1;
    }
    out.push_back(zero_cand);
    // An identically zero candidate carries no information for the caller's
    // wedge test; drop it so each branch example emits exactly its forms.
    std::erase_if(out, [](const KOneForm& w) { return w.is_zero(); });
    return out;
}

NormalizedDescentInput descent_normalize(const TowerStep& step,
                                         const std::vector<DescentTerm>& us,
                                         const PSeries& v) {
    bool log_case = step.kind == TowerStep::Kind::Logarithmic;
    NormalizedDescentInput out{{}, v};
    for (const auto& [c, u] : us) {
        leading_data(u); // validates that u has a leading term
        long lu = u.terms().begin()->first;
        RatFn alpha_inv = u.terms().begin()->second.inverse();
        out.us.push_back(DescentTerm{c, shift_scale(u, -lu, alpha_inv)});
    }
    long ram = static_cast<long>(v.ram());
    if (!knows_index(v, 0) || (log_case && !knows_index(v, ram)))
        fail(Errc::InsufficientTruncation, "beta_0 / beta_1 below the truncation bound");
    out.v.set_term(0, RatFn(v.order()));
    if (log_case) out.v.set_term(ram, RatFn(v.order()));
    return out;
}

} // namespace integrabilis
