#include "f1zeta/cli.hpp"

#include "f1zeta/grothendieck.hpp"
#include "f1zeta/ihara.hpp"
#include "f1zeta/pointcount.hpp"
#include "f1zeta/zeta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace f1zeta {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<long> parse_longs(const std::string& csv) {
    std::vector<long> out;
    std::stringstream ss(csv);
    for (std::string item; std::getline(ss, item, ',');) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw UsageError("not an integer: '" + item + "'");
        out.push_back(v);
    }
    return out;
}

std::vector<std::uint32_t> parse_primes(const std::string& csv) {
    std::vector<std::uint32_t> out;
    for (long p : parse_longs(csv)) {
        if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) throw UsageError(std::to_string(p) + " is not prime");
        out.push_back(static_cast<std::uint32_t>(p));
    }
    if (out.empty()) throw UsageError("empty prime list");
    return out;
}

json poly_json(const Polynomial& p) { return to_coefficient_strings(p); }

json trace_json(const SurgeryTrace& tr) {
    json rows = json::array();
    rows.push_back({{"graph", serialize(tr.finalTree)}, {"resolvedEdge", nullptr}, {"delta", nullptr},
                    {"running", poly_json(tr.finalTreeClass)}});
    for (const auto& s : tr.steps)
        rows.push_back({{"graph", serialize(s.graphBefore)},
                        {"resolvedEdge", {s.resolvedEdge.first, s.resolvedEdge.second}},
                        {"delta", poly_json(s.delta)},
                        {"running", poly_json(s.running)}});
    return rows;
}

void trace_text(const SurgeryTrace& tr, std::ostream& out) {
    std::size_t wd = 5;
    for (const auto& s : tr.steps) wd = std::max(wd, s.delta.to_string().size());
    auto row = [&](const std::string& step, const std::string& edge, const std::string& delta, const std::string& cls) {
        out << std::left << std::setw(6) << step << std::setw(12) << edge << std::setw(static_cast<int>(wd) + 2) << delta
            << cls << "\n";
    };
    row("step", "edge", "delta", "class");
    row("0", "-", "-", tr.finalTreeClass.to_string());
    for (std::size_t i = 0; i < tr.steps.size(); ++i) {
        const auto& s = tr.steps[i];
        row(std::to_string(i + 1), s.resolvedEdge.first + "-" + s.resolvedEdge.second, s.delta.to_string(),
            s.running.to_string());
    }
}

}  // namespace

LooseGraph load_input(const std::string& source, std::istream& in, bool strict) {
    if (source == "-") {
        std::stringstream ss;
        ss << in.rdbuf();
        return parse(ss.str(), strict);
    }
    if (!source.empty() && source[0] == '@') {
        const std::string spec = source.substr(1);
        const auto colon = spec.find(':');
        const std::string family = spec.substr(0, colon);
        std::vector<long> params;
        if (colon != std::string::npos) params = parse_longs(spec.substr(colon + 1));
        try {
            return generate(family, params);
        } catch (const GraphError& e) {
            throw UsageError(e.what());
        }
    }
    std::ifstream f(source);
    if (!f) throw UsageError("cannot open '" + source + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse(ss.str(), strict);
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Class polynomials, F1-zeta and Ihara zeta functions of loose graphs", "f1zeta"};
    app.require_subcommand(1);

    bool asJson = false;
    bool strict = false;
    std::string input = "-";
    std::string primes = "2,3,5";
    std::uint32_t q = 0;
    std::uint64_t budget = kDefaultBudget;
    std::string family;
    std::vector<long> genArgs;

    auto withInput = [&](CLI::App* sub) {
        sub->add_option("input", input, "Path, '-' for stdin, or @family:args")->capture_default_str();
        sub->add_flag("--json", asJson, "JSON output");
        sub->add_flag("--strict", strict, "Reject undeclared vertices");
        return sub;
    };
    auto* cClass = withInput(app.add_subcommand("class", "Class polynomial in L"));
    auto* cZeta = withInput(app.add_subcommand("zeta", "Inverse F1-zeta function"));
    auto* cIhara = withInput(app.add_subcommand("ihara", "Inverse Ihara zeta function in u"));
    auto* cCount = withInput(app.add_subcommand("count", "Brute-force point count over F_q"));
    cCount->add_option("--q", q, "Prime field size")->required();
    cCount->add_option("--budget", budget, "Enumeration work budget");
    auto* cVerify = withInput(app.add_subcommand("verify", "Compare the class polynomial with point counts"));
    cVerify->add_option("--primes", primes, "Comma-separated primes")->capture_default_str();
    cVerify->add_option("--budget", budget, "Enumeration work budget");
    auto* cTrace = withInput(app.add_subcommand("trace", "Surgery table from a spanning tree"));
    auto* cGen = app.add_subcommand("gen", "Emit a generated graph in .lg format");
    cGen->add_option("family", family, "complete|star|path|cycle|affine|projective|johnson|hexahedron")->required();
    cGen->add_option("args", genArgs, "Family parameters");
    cGen->add_flag("--json", asJson, "JSON output");
    auto* cCompare = withInput(app.add_subcommand("compare", "Class polynomial, F1-zeta and Ihara zeta side by side"));

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (cGen->parsed()) {
            const std::string text = serialize(generate(family, genArgs));
            if (asJson)
                out << json{{"graph", text}}.dump() << "\n";
            else
                out << text;
            return kExitOk;
        }

        const LooseGraph g = load_input(input, in, strict);

        if (cClass->parsed()) {
            const Polynomial p = class_polynomial(g);
            if (asJson)
                out << json{{"polynomial", poly_json(p)}}.dump() << "\n";
            else
                out << p.to_string("L") << "\n";
        } else if (cZeta->parsed()) {
            const FactoredZeta z = f1_zeta(class_polynomial(g));
            out << (asJson ? z.to_json() : format_zeta(z)) << "\n";
        } else if (cIhara->parsed()) {
            const Polynomial p = ihara_inverse(g);
            if (asJson)
                out << json{{"polynomial", poly_json(p)}}.dump() << "\n";
            else
                out << p.to_string("u") << "\n";
        } else if (cCount->parsed()) {
            if (!is_prime(q)) throw UsageError(std::to_string(q) + " is not prime");
            const Integer n = count_points(g, q, budget);
            if (asJson)
                out << json{{"prime", q}, {"count", n.get_str()}}.dump() << "\n";
            else
                out << n.get_str() << "\n";
        } else if (cVerify->parsed()) {
            const VerifyReport r = verify(g, parse_primes(primes), budget);
            if (asJson) {
                out << r.to_json() << "\n";
            } else {
                out << "class " << r.classPolynomial.to_string() << "\n";
                for (const auto& c : r.checks)
                    out << "q=" << c.prime << " expected " << c.expected.get_str() << " counted " << c.counted.get_str()
                        << (c.ok ? " ok" : " MISMATCH") << "\n";
                out << "P(1) " << r.eulerGot.get_str() << " vertices " << r.eulerExpected.get_str()
                    << (r.eulerOk ? " ok" : " MISMATCH") << "\n";
                out << (r.ok ? "PASS" : "FAIL") << "\n";
            }
            return r.ok ? kExitOk : kExitVerifyFailed;
        } else if (cTrace->parsed()) {
            const SurgeryTrace tr = surgery_trace(g);
            if (asJson)
                out << trace_json(tr).dump() << "\n";
            else
                trace_text(tr, out);
        } else if (cCompare->parsed()) {
            const Polynomial p = class_polynomial(g);
            const FactoredZeta z = f1_zeta(p);
            std::optional<Polynomial> ih;
            std::string why;
            try {
                ih = ihara_inverse(g);
            } catch (const IharaDomainError& e) {
                why = e.what();
            }
            if (asJson) {
                out << json{{"class", poly_json(p)},
                            {"zeta", json::parse(z.to_json())},
                            {"ihara", ih ? poly_json(*ih) : json(nullptr)}}
                           .dump()
                    << "\n";
            } else {
                out << "P(L)          = " << p.to_string("L") << "\n";
                out << "zeta_F1^-1(t) = " << format_zeta(z) << "\n";
                out << "zeta_G^-1(u)  = " << (ih ? ih->to_string("u") : "undefined (" + why + ")") << "\n";
            }
        }
        return kExitOk;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IharaDomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const GraphError& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}

}  // namespace f1zeta
