#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "arrlab/errors.hpp"
#include "arrlab/json_io.hpp"

namespace {

using namespace arrlab;

std::string readInput(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ValidationError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

struct Budget {
    int maxA = 8;
    int maxB = 5;
};

// ARRLAB_BUDGET="A=<maxN>,B=<maxN>" overrides the face-enumeration caps.
Budget currentBudget() {
    Budget b;
    const char* env = std::getenv("ARRLAB_BUDGET");
    if (!env || !*env) return b;
    const std::string s(env);
    size_t pos = 0;
    bool sawAny = false;
    while (pos < s.size()) {
        size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        const std::string part = s.substr(pos, comma - pos);
        const size_t eq = part.find('=');
        bool ok = eq == 1 && (part[0] == 'A' || part[0] == 'B') && eq + 1 < part.size();
        int value = 0;
        if (ok) {
            for (size_t i = eq + 1; i < part.size(); ++i) {
                if (part[i] < '0' || part[i] > '9') {
                    ok = false;
                    break;
                }
                value = value * 10 + (part[i] - '0');
            }
        }
        if (!ok)
            throw ValidationError("ARRLAB_BUDGET: expected \"A=<maxN>,B=<maxN>\", got \"" + s + "\"");
        (part[0] == 'A' ? b.maxA : b.maxB) = value;
        sawAny = true;
        pos = comma + 1;
    }
    if (!sawAny)
        throw ValidationError("ARRLAB_BUDGET: expected \"A=<maxN>,B=<maxN>\", got \"" + s + "\"");
    return b;
}

void checkFaceBudget(const Ambient& amb, bool force) {
    if (force) return;
    const Budget b = currentBudget();
    const bool typeA = amb.family == Family::TypeA;
    const int cap = typeA ? b.maxA : b.maxB;
    if (amb.n > cap)
        throw EnumerationBudget(std::string("face enumeration for type ") + (typeA ? "A" : "B") +
                                " n=" + std::to_string(amb.n) + " exceeds the budget (n <= " +
                                std::to_string(cap) + "); pass --force or set ARRLAB_BUDGET");
}

Json polynomialOutput(const IntPolynomial& p) {
    return Json{{"human", p.toHuman()}, {"coeffs", polynomialToJson(p)}};
}

void printReportHuman(const VerificationReport& r) {
    std::cout << "identity: " << identityName(r.identity) << "\n"
              << "input: " << r.input << "\n"
              << "lhs: " << r.lhs << "\n"
              << "rhs: " << r.rhs << "\n"
              << "pass: " << (r.pass ? "true" : "false") << "\n";
}

int emitReports(const std::vector<VerificationReport>& reports, bool json) {
    bool all = true;
    bool first = true;
    for (const auto& r : reports) {
        if (json) {
            std::cout << reportToJson(r).dump() << "\n";
        } else {
            if (!first) std::cout << "\n";
            printReportHuman(r);
        }
        first = false;
        all = all && r.pass;
    }
    return all ? 0 : 1;
}

std::vector<VerificationReport> dispatchVerify(const std::string& name,
                                               const std::string& inputPath, size_t member,
                                               const std::string& familyStr, int eulerN,
                                               bool force) {
    if (name == "eulerian" || name == "eulerian-a" || name == "eulerian-b") {
        Family family;
        if (name == "eulerian-a" || familyStr == "A")
            family = Family::TypeA;
        else if (name == "eulerian-b" || familyStr == "B")
            family = Family::TypeB;
        else
            throw ValidationError("verify " + name + ": pass --family A or --family B");
        if (eulerN < 0) throw ValidationError("verify " + name + ": pass --n <rank>");
        return {verifyLemmaEulerian(family, eulerN)};
    }

    const ParsedInput in = parseInputDocument(readInput(inputPath));
    const Arrangement& a = in.arrangement;
    if (name != "deletion-restriction") checkFaceBudget(a.ambient(), force);

    if (name == "deletion-restriction") return {verifyDeletionRestriction(a)};
    if (name == "recursion") return {verifyLemmaRecursion(a, member)};
    if (name == "single" || name == "single-a" || name == "single-b") {
        if (a.size() != 1)
            throw ValidationError("verify " + name + ": the arrangement must have exactly one subspace");
        if (a.ambient().family == Family::TypeA) {
            if (name == "single-b") throw AmbientMismatch("verify single-b: type B input required");
            return {verifyLemmaSingleA(a.subspacesA()[0])};
        }
        if (name == "single-a") throw AmbientMismatch("verify single-a: type A input required");
        return {verifyLemmaSingleB(a.subspacesB()[0])};
    }
    if (name == "theorem-sn") return {verifyTheoremSn(a)};
    if (name == "theorem-bn") return {verifyTheoremBn(a)};
    if (name == "steingrimsson") {
        if (!in.graph)
            throw ValidationError("verify steingrimsson: the input must be a graph document");
        return {verifySteingrimsson(*in.graph)};
    }
    if (name == "corollary-sn") return verifyCorollarySn(a);
    if (name == "corollary-bn") return verifyCorollaryBn(a);
    if (name == "corollary-sn-ring" || name == "corollary-sn-ideal") {
        auto both = verifyCorollarySn(a);
        return {name == "corollary-sn-ring" ? both[0] : both[1]};
    }
    if (name == "corollary-bn-ring" || name == "corollary-bn-ideal") {
        auto both = verifyCorollaryBn(a);
        return {name == "corollary-bn-ring" ? both[0] : both[1]};
    }
    if (name == "euler-wedge") return {verifyEulerWedge(a)};
    throw ValidationError(
        "unknown identity \"" + name +
        "\"; expected one of: deletion-restriction, recursion, eulerian[-a|-b], single[-a|-b], "
        "theorem-sn, theorem-bn, steingrimsson, corollary-sn[-ring|-ideal], "
        "corollary-bn[-ring|-ideal], euler-wedge");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"arrlab: exact invariants and shellings of link complexes of subspace "
                 "arrangements in types A and B"};
    app.require_subcommand(1);

    std::string inputPath = "-";
    bool json = false;
    bool force = false;
    int threads = 1;
    size_t member = 0;
    std::string familyStr;
    int eulerN = -1;
    long long terms = 8;
    std::string identityArg;
    std::string fixturePath;

    auto addCommon = [&](CLI::App* sub, bool withInput) {
        if (withInput)
            sub->add_option("--input", inputPath, "input document path, or - for stdin")
                ->capture_default_str();
        sub->add_flag("--json", json, "emit JSON instead of plain text");
        sub->add_flag("--force", force, "bypass the face-enumeration budget");
        sub->add_option("--threads", threads, "worker threads for catalog runs")
            ->check(CLI::PositiveNumber);
        return sub;
    };

    auto* chiCmd = addCommon(app.add_subcommand("chi", "characteristic polynomial"), true);
    auto* tailCmd = addCommon(app.add_subcommand("tail", "tail polynomial x^d - chi"), true);
    auto* fvecCmd = addCommon(app.add_subcommand("fvector", "f-vector of the link complex"), true);
    auto* hpolyCmd = addCommon(
        app.add_subcommand("hpoly", "h-polynomial and reverse h-polynomial of the link complex"),
        true);
    auto* hilbCmd = addCommon(
        app.add_subcommand("hilbert", "Hilbert series and values of the face ring"), true);
    hilbCmd->add_option("--terms", terms, "number of Hilbert function values to print")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    auto* shellCmd = addCommon(
        app.add_subcommand("shell", "shelling order of the link complex, with verification"), true);
    auto* verifyCmd = addCommon(app.add_subcommand("verify", "check one identity on the input"), true);
    verifyCmd->add_option("identity", identityArg, "identity name")->required();
    verifyCmd->add_option("--member", member, "member index for the recursion identity");
    verifyCmd->add_option("--family", familyStr, "A or B, for the eulerian identity");
    verifyCmd->add_option("--n", eulerN, "rank, for the eulerian identity");
    auto* reportCmd =
        addCommon(app.add_subcommand("report", "run the full built-in verification catalog"), false);
    reportCmd->add_option("--fixture", fixturePath,
                          "negative-control document overriding one identity's f-vector");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(chiCmd) || app.got_subcommand(tailCmd)) {
            const ParsedInput in = parseInputDocument(readInput(inputPath));
            const IntPolynomial p = app.got_subcommand(chiCmd) ? charPoly(in.arrangement)
                                                               : tailPoly(in.arrangement);
            if (json)
                std::cout << polynomialOutput(p).dump() << "\n";
            else
                std::cout << p.toHuman() << "\n";
            return 0;
        }

        if (app.got_subcommand(fvecCmd) || app.got_subcommand(hpolyCmd) ||
            app.got_subcommand(hilbCmd)) {
            const ParsedInput in = parseInputDocument(readInput(inputPath));
            checkFaceBudget(in.arrangement.ambient(), force);
            const FVector f = linkFVector(in.arrangement);
            if (app.got_subcommand(fvecCmd)) {
                if (json)
                    std::cout << Json{{"fvector", fvectorToJson(f)}}.dump() << "\n";
                else
                    std::cout << fvectorToJson(f).dump() << "\n";
            } else if (app.got_subcommand(hpolyCmd)) {
                const IntPolynomial h = hPolynomial(f);
                const IntPolynomial hh = reverseH(f);
                if (json)
                    std::cout << Json{{"h", polynomialOutput(h)}, {"h_reverse", polynomialOutput(hh)}}
                                     .dump()
                              << "\n";
                else
                    std::cout << "h: " << h.toHuman() << "\n"
                              << "h-reverse: " << hh.toHuman() << "\n";
            } else {
                const RationalSeries series = hilbertSeries(f);
                Json values = Json::array();
                for (long long m = 0; m < terms; ++m) values.push_back(intToJson(hilbertFunction(f, m)));
                if (json) {
                    std::cout << Json{{"series", seriesToJson(series)}, {"values", values}}.dump()
                              << "\n";
                } else {
                    std::cout << "series: ";
                    if (series.isZero())
                        std::cout << "0\n";
                    else
                        std::cout << "(" << series.numerator().toHuman() << ") / (1-x)^"
                                  << series.denomPower() << "\n";
                    std::cout << "values: " << values.dump() << "\n";
                }
            }
            return 0;
        }

        if (app.got_subcommand(shellCmd)) {
            const ParsedInput in = parseInputDocument(readInput(inputPath));
            checkFaceBudget(in.arrangement.ambient(), force);
            const ShellingOrder order = shellLink(in.arrangement);
            const LinkComplex link = linkAbstract(in.arrangement);
            const ShellingCheck check = checkShellingOrder(link.complex, order);
            if (json) {
                Json out = shellingCheckToJson(check);
                out["facets"] = shellingOrderToJson(order);
                std::cout << out.dump() << "\n";
            } else {
                std::cout << "facets: " << order.facets.size() << "\n";
                for (const auto& f : order.facets) std::cout << Json(f).dump() << "\n";
                std::cout << "is_shelling: " << (check.isShelling ? "true" : "false") << "\n";
                if (check.firstViolation)
                    std::cout << "first_violation: " << *check.firstViolation << "\n";
            }
            return check.isShelling ? 0 : 1;
        }

        if (app.got_subcommand(verifyCmd)) {
            const auto reports = dispatchVerify(identityArg, inputPath, member, familyStr, eulerN, force);
            return emitReports(reports, json);
        }

        if (app.got_subcommand(reportCmd)) {
            Catalog cat = standardCatalog();
            if (!fixturePath.empty()) {
                const Fixture fx = fixtureFromJson(parseJsonText(readInput(fixturePath)));
                cat.items.push_back(
                    {std::string("fixture:") + identityName(fx.identity), [fx] {
                         std::vector<VerificationReport> out;
                         if (fx.identity == Identity::Steingrimsson)
                             out.push_back(verifySteingrimsson(*fx.input.graph, &fx.fvector));
                         else if (fx.identity == Identity::TheoremSn)
                             out.push_back(verifyTheoremSn(fx.input.arrangement, &fx.fvector));
                         else
                             out.push_back(verifyTheoremBn(fx.input.arrangement, &fx.fvector));
                         return out;
                     }});
            }
            const auto reports = runAll(cat, threads);
            if (json) {
                for (const auto& r : reports) std::cout << reportToJson(r).dump() << "\n";
            }
            size_t passed = 0;
            for (const auto& r : reports)
                if (r.pass) ++passed;
            if (!json) {
                for (const auto& r : reports)
                    if (!r.pass) {
                        printReportHuman(r);
                        std::cout << "\n";
                    }
                std::cout << "passed " << passed << " of " << reports.size() << " checks\n";
            }
            return passed == reports.size() ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
