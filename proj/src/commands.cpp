#include "integrabilis/commands.hpp"

#include "integrabilis/parse.hpp"

namespace integrabilis {

namespace {

// Usage problems (malformed request shape) are distinct from domain errors.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string get_string(const Json& req, const char* key) {
    if (!req.contains(key) || !req[key].is_string())
        throw UsageError(std::string("missing string field '") + key + "'");
    return req[key].get<std::string>();
}

unsigned get_unsigned(const Json& req, const char* key) {
    if (!req.contains(key) || !req[key].is_number_unsigned())
        throw UsageError(std::string("missing non-negative integer field '") + key + "'");
    return req[key].get<unsigned>();
}

unsigned get_order(const Json& req) {
    return req.contains("N") ? get_unsigned(req, "N") : 12u;
}

const Json& get_terms(const Json& req) {
    if (!req.contains("terms") || !req["terms"].is_array())
        throw UsageError("missing array field 'terms'");
    return req["terms"];
}

Json cmd_construct_quadratic(const Json& req) {
    unsigned N = get_order(req);
    QuadraticSpec spec;
    spec.k = parse_ratfn(get_string(req, "k"), N);
    spec.h = parse_ratfn(get_string(req, "h"), N);
    for (const auto& t : get_terms(req))
        spec.terms.emplace_back(parse_cyclo(get_string(t, "c"), N),
                                parse_ratfn(get_string(t, "g"), N));
    QuadraticResult res = build_quadratic(spec);
    return Json{{"desc", json_of(res.desc)},
                {"H", Json{{"H1", to_string(res.H1)}, {"H2", to_string(res.H2)}}},
                {"omega", json_of(res.omega)},
                {"psi", json_of(res.psi)},
                {"verification", json_of(verify_elem_integral(res.omega, res.psi))}};
}

Json cmd_construct_cyclic(const Json& req) {
    unsigned N = get_order(req);
    ExtDescriptor desc =
        ExtDescriptor::make(get_unsigned(req, "n"), parse_ratfn(get_string(req, "k"), N));
    CyclicSpec spec{desc, parse_ext(get_string(req, "wv"), desc), {}};
    for (const auto& t : get_terms(req))
        spec.terms.emplace_back(parse_cyclo(get_string(t, "c"), N),
                                parse_ext(get_string(t, "wu"), desc));
    CyclicResult res = build_cyclic(spec);
    return Json{{"desc", json_of(desc)},
                {"omega", json_of(res.omega)},
                {"psi", json_of(res.psi)},
                {"verification", json_of(verify_elem_integral(res.omega, res.psi))}};
}

KOneForm parse_omega(const Json& req, unsigned N) {
    if (!req.contains("omega") || !req["omega"].is_object())
        throw UsageError("missing object field 'omega'");
    const Json& w = req["omega"];
    return KOneForm{parse_ratfn(get_string(w, "A"), N), parse_ratfn(get_string(w, "B"), N)};
}

Json cmd_verify(const Json& req) {
    unsigned N = get_order(req);
    ExtDescriptor desc =
        ExtDescriptor::make(get_unsigned(req, "n"), parse_ratfn(get_string(req, "k"), N));
    KOneForm omega = parse_omega(req, N);
    LogSum psi{desc, parse_ext(get_string(req, "v"), desc), {}};
    for (const auto& t : get_terms(req))
        psi.terms.emplace_back(parse_cyclo(get_string(t, "c"), N),
                               parse_ext(get_string(t, "u"), desc));
    return Json{{"desc", json_of(desc)},
                {"omega", json_of(omega)},
                {"psi", json_of(psi)},
                {"verification", json_of(verify_elem_integral(omega, psi))}};
}

Json cmd_check_factor(const Json& req) {
    unsigned N = get_order(req);
    ExtDescriptor desc =
        ExtDescriptor::make(get_unsigned(req, "n"), parse_ratfn(get_string(req, "k"), N));
    KOneForm omega = parse_omega(req, N);
    return Json{{"desc", json_of(desc)},
                {"omega", json_of(omega)},
                {"integrating_factor_ok", check_integrating_factor(omega, desc)}};
}

Json cmd_search_rfi(const Json& req) {
    unsigned N = get_order(req);
    PlaneField X{parse_ratfn(get_string(req, "P"), N), parse_ratfn(get_string(req, "Q"), N)};
    int d = static_cast<int>(get_unsigned(req, "d"));
    RfiResult res = rational_fi_search(X, d);
    Json out{{"P", to_string(X.P)}, {"Q", to_string(X.Q)}, {"d", d}};
    switch (res.kind) {
        case RfiResult::Kind::Found: {
            RatFn fi = RatFn(res.A) / RatFn(res.B);
            out["kind"] = "Found";
            out["A"] = to_string(res.A);
            out["B"] = to_string(res.B);
            // a constant component (e.g. B = 1) has cofactor 0
            auto cofactor = [&](const MPoly& f) {
                return f.is_constant() ? to_string(MPoly(f.order()))
                                       : to_string(is_darboux(X, f).cofactor);
            };
            out["cofactor_A"] = cofactor(res.A);
            out["cofactor_B"] = cofactor(res.B);
            out["residual"] = to_string(apply_field_k(X, fi));
            break;
        }
        case RfiResult::Kind::NoneUpTo:
            out["kind"] = "NoneUpTo";
            break;
        case RfiResult::Kind::Unknown:
            out["kind"] = "Unknown";
            break;
    }
    return out;
}

Json cmd_obstruction(const Json& req) {
    unsigned N = get_order(req);
    unsigned n = get_unsigned(req, "n");
    if (!req.contains("constants") || !req["constants"].is_array())
        throw UsageError("missing array field 'constants'");
    std::vector<Cyclo> cs;
    for (const auto& c : req["constants"]) {
        if (!c.is_string()) throw UsageError("constants must be strings");
        cs.push_back(parse_cyclo(c.get<std::string>(), N));
    }
    ObstructionResult res = degree_obstruction(cs, n);
    Json rel = Json::array();
    for (const auto& r : res.relation) rel.push_back(to_string(r));
    return Json{{"n", n},
                {"verdict", res.obstructed ? "Obstructed" : "Unobstructed"},
                {"relation", rel}};
}

Json cmd_puiseux_descent(const Json& req) {
    unsigned N = get_order(req);
    std::string kind = get_string(req, "case");
    TowerStep step;
    if (kind == "exponential")
        step.kind = TowerStep::Kind::Exponential;
    else if (kind == "logarithmic")
        step.kind = TowerStep::Kind::Logarithmic;
    else
        throw UsageError("case must be 'exponential' or 'logarithmic'");
    step.R = parse_ratfn(get_string(req, "R"), N);

    std::vector<DescentTerm> us;
    for (const auto& t : get_terms(req)) {
        if (!t.is_object() || !t.contains("u"))
            throw UsageError("each term needs fields 'c' and 'u'");
        us.push_back(DescentTerm{parse_cyclo(get_string(t, "c"), N),
                                 pseries_from_json(N, t["u"])});
    }
    if (!req.contains("v")) throw UsageError("missing field 'v'");
    PSeries v = pseries_from_json(N, req["v"]);

    std::vector<KOneForm> cands = descent_candidates(step, us, v);
    Json arr = Json::array();
    for (const auto& c : cands) arr.push_back(json_of(c));
    Json terms_echo = Json::array();
    for (const auto& [c, u] : us)
        terms_echo.push_back(Json{{"c", to_string(c)}, {"u", json_of(u)}});
    return Json{{"case", kind},
                {"R", to_string(step.R)},
                {"terms", terms_echo},
                {"v", json_of(v)},
                {"candidates", arr}};
}

} // namespace

CommandOutcome run_command(const Json& request) {
    Json doc;
    try {
        if (!request.is_object() || !request.contains("command") ||
            !request["command"].is_string())
            throw UsageError("request must be an object with a 'command' string");
        std::string cmd = request["command"].get<std::string>();
        doc["command"] = cmd;
        doc["input"] = request;
        Json result;
        if (cmd == "construct-quadratic") result = cmd_construct_quadratic(request);
        else if (cmd == "construct-cyclic") result = cmd_construct_cyclic(request);
        else if (cmd == "verify") result = cmd_verify(request);
        else if (cmd == "check-factor") result = cmd_check_factor(request);
        else if (cmd == "search-rfi") result = cmd_search_rfi(request);
        else if (cmd == "obstruction") result = cmd_obstruction(request);
        else if (cmd == "puiseux-descent") result = cmd_puiseux_descent(request);
        else throw UsageError("unknown command '" + cmd + "'");
        doc["result"] = result;
        return CommandOutcome{0, doc};
    } catch (const Error& e) {
        doc["error"] = Json{{"code", e.code_name()}, {"message", e.what()}};
        return CommandOutcome{1, doc};
    } catch (const UsageError& e) {
        doc["error"] = Json{{"code", "UsageError"}, {"message", e.what()}};
        return CommandOutcome{2, doc};
    }
}

namespace {

void render_node(const Json& node, const std::string& path, std::string& out) {
    if (node.is_object()) {
        for (const auto& [key, value] : node.items())
            render_node(value, path.empty() ? key : path + "." + key, out);
    } else if (node.is_array()) {
        size_t i = 0;
        for (const auto& value : node)
            render_node(value, path + "[" + std::to_string(i++) + "]", out);
    } else {
        out += path + " = ";
        out += node.is_string() ? node.get<std::string>() : node.dump();
        out += "\n";
    }
}

} // namespace

std::string render_text(const Json& doc) {
    std::string out;
    render_node(doc, "", out);
    return out;
}

} // namespace integrabilis
