#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "integrabilis/commands.hpp"

namespace {

using integrabilis::Json;

// "tag:payload" pairs used by repeatable --term / --u flags.
std::pair<std::string, std::string> split_pair(const std::string& s, const char* flag) {
    auto pos = s.find(':');
    if (pos == std::string::npos)
        throw CLI::ValidationError(std::string(flag) + " expects 'c:value'");
    return {s.substr(0, pos), s.substr(pos + 1)};
}

int emit(const Json& request, const std::string& output) {
    integrabilis::CommandOutcome outcome = integrabilis::run_command(request);
    if (output == "text")
        std::cout << integrabilis::render_text(outcome.document);
    else
        std::cout << outcome.document.dump(2) << "\n";
    return outcome.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"integrabilis — exact construction and verification of "
                 "elementary-integrable planar rational vector fields"};
    app.require_subcommand(1);

    std::string output = "json";
    app.add_option("--output", output, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    unsigned N = 12;
    unsigned n = 2;
    unsigned d = 2;
    std::string k, h = "0", wv = "0", v, A, B, P, Q, R, step_case;
    std::vector<std::string> terms, constants, useries;

    auto* cq = app.add_subcommand("construct-quadratic",
                                  "Build the explicit n = 2 exceptional candidate");
    cq->set_help_flag("--help", "Print this help message and exit");
    cq->add_option("--N", N, "Cyclotomic order of the constant field")->capture_default_str();
    cq->add_option("--k", k, "k with l^2 = k")->required();
    cq->add_option("--h", h, "Trace-zero part v = h*l")->capture_default_str();
    cq->add_option("--term", terms, "Log term 'c:g' (repeatable)");

    auto* cc = app.add_subcommand("construct-cyclic",
                                  "Build from seeds over a cyclic extension of degree n");
    cc->add_option("--N", N, "Cyclotomic order of the constant field")->capture_default_str();
    cc->add_option("--n", n, "Extension degree")->required();
    cc->add_option("--k", k, "k with l^n = k")->required();
    cc->add_option("--wv", wv, "Seed for the trace-zero part")->capture_default_str();
    cc->add_option("--term", terms, "Log term seed 'c:wu' (repeatable)");

    auto* vf = app.add_subcommand("verify", "Verify omega against a log-sum psi");
    vf->add_option("--N", N, "Cyclotomic order of the constant field")->capture_default_str();
    vf->add_option("--n", n, "Extension degree")->required();
    vf->add_option("--k", k, "k with l^n = k")->required();
    vf->add_option("--A", A, "dx component of omega")->required();
    vf->add_option("--B", B, "dy component of omega")->required();
    vf->add_option("--v", v, "Non-log part of psi")->capture_default_str();
    vf->add_option("--term", terms, "Log term 'c:u' (repeatable)");

    auto* cf = app.add_subcommand("check-factor",
                                  "Check that l is an integrating factor of omega");
    cf->add_option("--N", N, "Cyclotomic order of the constant field")->capture_default_str();
    cf->add_option("--n", n, "Extension degree")->required();
    cf->add_option("--k", k, "k with l^n = k")->required();
    cf->add_option("--A", A, "dx component of omega")->required();
    cf->add_option("--B", B, "dy component of omega")->required();

    auto* sr = app.add_subcommand("search-rfi",
                                  "Bounded-degree rational first integral search");
    sr->add_option("--N", N, "Cyclotomic order of the constant field")->capture_default_str();
    sr->add_option("--P", P, "dx component of omega = P dx + Q dy")->required();
    sr->add_option("--Q", Q, "dy component of omega")->required();
    sr->add_option("--d", d, "Degree bound")->required();

    auto* ob = app.add_subcommand("obstruction",
                                  "Degree obstruction test for the log constants");
    ob->add_option("--N", N, "Cyclotomic order of the constant field")->capture_default_str();
    ob->add_option("--n", n, "Candidate extension degree")->required();
    ob->add_option("--constants", constants, "Constant c_i (repeatable)")->required();

    auto* pd = app.add_subcommand("puiseux-descent",
                                  "Candidate one-forms of a single descent step");
    pd->add_option("--N", N, "Cyclotomic order of the constant field")->capture_default_str();
    pd->add_option("--case", step_case, "Tower step kind: exponential | logarithmic")
        ->required();
    pd->add_option("--R", R, "Step datum R")->required();
    pd->add_option("--u", useries, "Log term 'c:<series JSON>' (repeatable)");
    pd->add_option("--v", v, "Non-log part as series JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Json req;
        if (cq->parsed()) {
            req = Json{{"command", "construct-quadratic"}, {"N", N}, {"k", k}, {"h", h}};
            Json ts = Json::array();
            for (const auto& t : terms) {
                auto [c, g] = split_pair(t, "--term");
                ts.push_back(Json{{"c", c}, {"g", g}});
            }
            req["terms"] = ts;
        } else if (cc->parsed()) {
            req = Json{{"command", "construct-cyclic"}, {"N", N}, {"n", n}, {"k", k}, {"wv", wv}};
            Json ts = Json::array();
            for (const auto& t : terms) {
                auto [c, wu] = split_pair(t, "--term");
                ts.push_back(Json{{"c", c}, {"wu", wu}});
            }
            req["terms"] = ts;
        } else if (vf->parsed()) {
            if (v.empty()) v = "0";
            req = Json{{"command", "verify"}, {"N", N}, {"n", n}, {"k", k},
                       {"omega", Json{{"A", A}, {"B", B}}}, {"v", v}};
            Json ts = Json::array();
            for (const auto& t : terms) {
                auto [c, u] = split_pair(t, "--term");
                ts.push_back(Json{{"c", c}, {"u", u}});
            }
            req["terms"] = ts;
        } else if (cf->parsed()) {
            req = Json{{"command", "check-factor"}, {"N", N}, {"n", n}, {"k", k},
                       {"omega", Json{{"A", A}, {"B", B}}}};
        } else if (sr->parsed()) {
            req = Json{{"command", "search-rfi"}, {"N", N}, {"P", P}, {"Q", Q}, {"d", d}};
        } else if (ob->parsed()) {
            req = Json{{"command", "obstruction"}, {"N", N}, {"n", n}};
            Json cs = Json::array();
            for (const auto& c : constants) cs.push_back(c);
            req["constants"] = cs;
        } else if (pd->parsed()) {
            req = Json{{"command", "puiseux-descent"}, {"N", N}, {"case", step_case},
                       {"R", R}};
            Json ts = Json::array();
            for (const auto& t : useries) {
                auto [c, uj] = split_pair(t, "--u");
                ts.push_back(Json{{"c", c}, {"u", Json::parse(uj)}});
            }
            req["terms"] = ts;
            req["v"] = Json::parse(v);
        }
        return emit(req, output);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Json::parse_error& e) {
        std::cerr << "malformed series JSON: " << e.what() << "\n";
        return 2;
    }
}
