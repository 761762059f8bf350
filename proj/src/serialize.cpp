#include "integrabilis/serialize.hpp"

#include <sstream>

#include "integrabilis/parse.hpp"

namespace integrabilis {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::OrderMismatch: return "OrderMismatch";
        case Errc::OrderIncompatible: return "OrderIncompatible";
        case Errc::NotDivisible: return "NotDivisible";
        case Errc::DescriptorMismatch: return "DescriptorMismatch";
        case Errc::ZeroDivisor: return "ZeroDivisor";
        case Errc::InternalInvariant: return "InternalInvariant";
        case Errc::DegenerateG: return "DegenerateG";
        case Errc::GammaZero: return "GammaZero";
        case Errc::NotInEllLine: return "NotInEllLine";
        case Errc::InsufficientTruncation: return "InsufficientTruncation";
        case Errc::ZeroSeries: return "ZeroSeries";
        case Errc::ZeroLeading: return "ZeroLeading";
        case Errc::NotAUnitOfRequiredForm: return "NotAUnitOfRequiredForm";
        case Errc::Syntax: return "SyntaxError";
        case Errc::Context: return "ContextError";
    }
    return "UnknownError";
}

namespace {

// Joins addends, folding a leading '-' of a term into the separator.
std::string join_terms(const std::vector<std::string>& terms) {
    if (terms.empty()) return "0";
    std::string out = terms.front();
    for (size_t i = 1; i < terms.size(); ++i) {
        const std::string& t = terms[i];
        if (!t.empty() && t.front() == '-')
            out += " - " + t.substr(1);
        else
            out += " + " + t;
    }
    return out;
}

bool needs_parens(const std::string& s) {
    return s.find(' ') != std::string::npos || s.find('/') != std::string::npos;
}

std::string paren(const std::string& s) { return "(" + s + ")"; }

std::string monomial_str(const Exp& e) {
    std::vector<std::string> parts;
    if (e.x == 1) parts.push_back("x");
    else if (e.x > 1) parts.push_back("x^" + std::to_string(e.x));
    if (e.y == 1) parts.push_back("y");
    else if (e.y > 1) parts.push_back("y^" + std::to_string(e.y));
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i)
        out += (i ? "*" : "") + parts[i];
    return out;
}

bool is_rat_value(const Cyclo& c, long v) {
    return c.is_rational() && c.rational_value() == Rat(v);
}

} // namespace

std::string to_string(const Cyclo& c) {
    std::vector<std::string> terms;
    const auto& coords = c.coords();
    for (size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0) continue;
        std::string zs = i == 0 ? "" : (i == 1 ? "z" : "z^" + std::to_string(i));
        if (i == 0)
            terms.push_back(to_string(coords[i]));
        else if (coords[i] == Rat(1))
            terms.push_back(zs);
        else if (coords[i] == Rat(-1))
            terms.push_back("-" + zs);
        else
            terms.push_back(to_string(coords[i]) + "*" + zs);
    }
    return join_terms(terms);
}

std::string to_string(const MPoly& p) {
    std::vector<std::string> terms;
    for (const auto& [e, c] : p.terms()) {
        std::string mono = monomial_str(e);
        std::string cs = to_string(c);
        if (mono.empty()) {
            terms.push_back(cs.find(' ') != std::string::npos ? paren(cs) : cs);
        } else if (is_rat_value(c, 1)) {
            terms.push_back(mono);
        } else if (is_rat_value(c, -1)) {
            terms.push_back("-" + mono);
        } else {
            terms.push_back((needs_parens(cs) ? paren(cs) : cs) + "*" + mono);
        }
    }
    return join_terms(terms);
}

std::string to_string(const RatFn& f) {
    if (f.is_polynomial() && is_rat_value(f.den().constant_value(), 1))
        return to_string(f.num());
    return paren(to_string(f.num())) + "/" + paren(to_string(f.den()));
}

std::string to_string(const ExtElem& a) {
    std::vector<std::string> terms;
    const auto& coords = a.coords();
    for (size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].is_zero()) continue;
        std::string ls = i == 0 ? "" : (i == 1 ? "l" : "l^" + std::to_string(i));
        if (i == 0)
            terms.push_back(to_string(coords[i]));
        else if (coords[i].is_constant() && is_rat_value(coords[i].constant_value(), 1))
            terms.push_back(ls);
        else
            terms.push_back(paren(to_string(coords[i])) + "*" + ls);
    }
    return join_terms(terms);
}

Json json_of(const ExtDescriptor& d) {
    return Json{{"n", d.n}, {"k", to_string(d.k)}, {"N", d.k.order()}};
}

Json json_of(const KOneForm& w) {
    return Json{{"A", to_string(w.A)}, {"B", to_string(w.B)}};
}

Json json_of(const LOneForm& w) {
    return Json{{"desc", json_of(w.desc())},
                {"A", to_string(w.A)},
                {"B", to_string(w.B)}};
}

Json json_of(const LogSum& psi) {
    Json terms = Json::array();
    for (const auto& [c, u] : psi.terms)
        terms.push_back(Json{{"c", to_string(c)}, {"u", to_string(u)}});
    return Json{{"desc", json_of(psi.desc)},
                {"v", to_string(psi.v)},
                {"terms", terms}};
}

Json json_of(const VerificationReport& r) {
    Json norms = Json::array();
    for (bool b : r.norm_one) norms.push_back(b);
    return Json{{"gamma_nonzero", r.gamma_nonzero},
                {"wedge_zero", r.wedge_zero},
                {"trace_zero", r.trace_zero},
                {"norm_one", norms},
                {"integrating_factor_ok", r.integrating_factor_ok},
                {"constants_independent", r.constants_independent},
                {"all_ok", r.all_ok()}};
}

Json json_of(const PSeries& s) {
    Json terms = Json::array();
    for (const auto& [idx, c] : s.terms())
        terms.push_back(Json{{"exp", to_string(s.exponent(idx))},
                             {"coeff", to_string(c)}});
    Json j{{"ram", s.ram()}, {"terms", terms}};
    if (s.truncated())
        j["bound"] = to_string(s.exponent(s.bound()));
    else
        j["bound"] = nullptr;
    return j;
}

std::string to_string(const PSeries& s) { return json_of(s).dump(); }

namespace {

long index_of_exponent(const Rat& e, unsigned ram) {
    Rat scaled = e * Rat(ram);
    if (scaled.get_den() != 1)
        fail(Errc::Syntax, "exponent " + to_string(e) +
                               " is not a multiple of 1/" + std::to_string(ram));
    if (!scaled.get_num().fits_slong_p())
        fail(Errc::Syntax, "exponent out of range");
    return scaled.get_num().get_si();
}

Rat parse_rat(const std::string& s) {
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        fail(Errc::Syntax, "malformed rational '" + s + "'");
    }
}

} // namespace

PSeries pseries_from_json(unsigned order, const Json& j) {
    if (!j.is_object() || !j.contains("ram") || !j.contains("terms"))
        fail(Errc::Syntax, "series document must have ram and terms");
    if (!j["ram"].is_number_unsigned() || j["ram"].get<unsigned>() == 0)
        fail(Errc::Syntax, "ram must be a positive integer");
    unsigned ram = j["ram"].get<unsigned>();
    PSeries s(order, ram);
    if (j.contains("bound") && !j["bound"].is_null()) {
        if (!j["bound"].is_string())
            fail(Errc::Syntax, "bound must be a rational string or null");
        s = s.with_bound(index_of_exponent(parse_rat(j["bound"].get<std::string>()), ram));
    }
    if (!j["terms"].is_array())
        fail(Errc::Syntax, "terms must be an array");
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("exp") || !t.contains("coeff") ||
            !t["exp"].is_string() || !t["coeff"].is_string())
            fail(Errc::Syntax, "each term needs string exp and coeff");
        long idx = index_of_exponent(parse_rat(t["exp"].get<std::string>()), ram);
        s.add_term(idx, parse_ratfn(t["coeff"].get<std::string>(), order));
    }
    return s;
}

} // namespace integrabilis
