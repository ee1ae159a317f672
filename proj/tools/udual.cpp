// Command-line front end: parses representation expressions, drives the
// engine, prints canonical text or stable JSON.
//
// Exit codes: 0 success / property holds, 1 checked property fails,
// 2 usage or input error, 3 internal invariant breach.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "udual/expr.hpp"
#include "udual/global.hpp"
#include "udual/jsonout.hpp"

using namespace udual;
using nlohmann::json;

namespace {

struct Options {
    bool jsonOut = false;
    bool nuUnits = false;  // parse/print pi parameters in nu units
};

std::string readMaybeStdin(const std::string& arg) {
    if (arg != "-") return arg;
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
}

Algebra algebraFromName(const std::string& s) {
    if (s == "R" || s == "r") return Algebra::Real;
    if (s == "C" || s == "c") return Algebra::Complex;
    if (s == "H" || s == "h") return Algebra::Quaternion;
    throw CLI::ValidationError("--algebra", "expected one of R, C, H");
}

void emit(const Options& opt, const json& machine, const std::string& text) {
    if (opt.jsonOut)
        std::cout << machine.dump(2) << "\n";
    else
        std::cout << text << "\n";
}

std::string unitsHeader(const Options& opt) {
    return std::string("alpha-units: ") + (opt.nuUnits ? "nu" : "nu_delta");
}

int runExpand(const Options& opt, const std::string& exprArg) {
    RingElem r = parseRingExpr(readMaybeStdin(exprArg), opt.nuUnits);
    emit(opt, json{{"expansion", toJson(r)}}, render(r));
    return 0;
}

int runExpandSpeh(const Options& opt, const std::string& algName, const std::string& xs,
                  const std::string& ys, int n, bool formal) {
    Algebra alg = algebraFromName(algName);
    ExactComplex x = parseComplex(xs), y = parseComplex(ys);
    if (formal) {
        FormalPoly p = spehExpandFormal(alg, x, y, n);
        emit(opt, json{{"mode", "formal"}, {"expansion", toJson(p)}}, render(p));
    } else {
        RingElem r = spehExpandEvaluated(alg, x, y, n);
        emit(opt, json{{"mode", "evaluated"}, {"expansion", toJson(r)}}, render(r));
    }
    return 0;
}

int runCheckIdentity(const Options& opt, const std::string& id, const std::string& betaS,
                     const std::string& rS, const std::string& xS, const std::string& yS, int n,
                     bool formal) {
    ExactComplex x, y;
    if (!betaS.empty()) {
        ExactComplex beta = parseComplex(betaS);
        Rational r = rS.empty() ? Rational(0) : parseRational(rS);
        x = beta + ExactComplex(r / 2);
        y = beta - ExactComplex(r / 2);
    } else {
        x = xS.empty() ? ExactComplex() : parseComplex(xS);
        y = yS.empty() ? x - ExactComplex(Rational(1)) : parseComplex(yS);
    }
    IdentityReport rep = lewisCarrollCheck(id, x, y, n, formal ? EvalMode::Formal : EvalMode::Evaluated);
    std::string verdict = rep.holds ? "holds" : "FAILS";
    emit(opt, json{{"id", id}, {"report", toJson(rep)}},
         "identity " + id + " " + verdict + "\n" + rep.note);
    return rep.holds ? 0 : 1;
}

int runFactor(const Options& opt, const std::string& exprArg) {
    LanglandsDatum a = parseDatumProduct(readMaybeStdin(exprArg));
    auto rep = factorize(a);
    if (!rep) {
        emit(opt, json{{"unitary", false}}, "not unitary");
        return 1;
    }
    emit(opt, json{{"unitary", true}, {"alphaUnits", opt.nuUnits ? "nu" : "nu_delta"},
                   {"factors", toJson(*rep, opt.nuUnits)}},
         unitsHeader(opt) + "\n" + printUnitary(*rep, opt.nuUnits));
    return 0;
}

int runLj(const Options& opt, const std::string& exprArg) {
    RingElem r = parseRingExpr(readMaybeStdin(exprArg), opt.nuUnits);
    RingElem img = ljRing(r);
    emit(opt, json{{"image", toJson(img)}}, render(img));
    return 0;
}

int runLjUnitary(const Options& opt, const std::string& exprArg) {
    UnitaryRep rep = parseUnitaryProduct(readMaybeStdin(exprArg), /*strict=*/false, opt.nuUnits);
    auto img = ljAbsUnitary(rep);
    if (!img) {
        emit(opt, json{{"transfers", false}}, "transfer vanishes");
        return 1;
    }
    emit(opt, json{{"transfers", true}, {"sign", img->sign},
                   {"alphaUnits", opt.nuUnits ? "nu" : "nu_delta"},
                   {"factors", toJson(img->rep, opt.nuUnits)}},
         unitsHeader(opt) + "\nsign " + (img->sign < 0 ? std::string("-1") : std::string("+1")) +
             "\n" + printUnitary(img->rep, opt.nuUnits));
    return 0;
}

int runBruhat(const Options& opt, const std::string& charArg, const std::string& op) {
    CartanChar c = parseCartanCharText(charArg);
    if (op == "reducible") {
        ReducibilityReport rep = reducibilityWitness(c);
        std::string verdict = rep.verdict == ReducibilityReport::Verdict::Irreducible ? "irreducible"
                              : rep.verdict == ReducibilityReport::Verdict::Reducible ? "reducible"
                                                                                      : "unknown";
        std::string text = verdict;
        if (rep.witness)
            text += " witness e" + std::to_string(rep.witness->first) + "-e" +
                    std::to_string(rep.witness->second);
        emit(opt, toJson(rep), text);
        return 0;
    }
    if (op == "ideal") {
        OrderIdeal ideal = orderIdeal(c);
        json nodes = json::array();
        std::string text;
        for (const CartanChar& node : ideal.nodes) {
            nodes.push_back(toJson(node));
            text += render(node) + "\n";
        }
        json edges = json::array();
        for (auto [lo, hi] : ideal.edges) edges.push_back(json::array({lo, hi}));
        text += "edges:";
        for (auto [lo, hi] : ideal.edges)
            text += " " + std::to_string(lo) + "<" + std::to_string(hi);
        emit(opt, json{{"nodes", nodes}, {"edges", edges}}, text);
        return 0;
    }
    if (op == "length") {
        int len = chainLength(c);
        emit(opt, json{{"length", len}}, std::to_string(len));
        return 0;
    }
    throw CLI::ValidationError("op", "expected reducible, ideal or length");
}

int runKdelta(const Options& opt, const std::string& param, int deg, int len, int d) {
    int k;
    if (!param.empty())
        k = kDelta(parseDparam(param), d);
    else
        k = kDelta(CompatDatum{deg, len}, d);
    emit(opt, json{{"kDelta", k}}, std::to_string(k));
    return 0;
}

int runKgamma(const Options& opt, const std::string& repArg, const std::vector<int>& ks, int d) {
    int k;
    if (!repArg.empty())
        k = kGamma(parseUnitaryProduct(repArg, /*strict=*/true, opt.nuUnits), d);
    else
        k = kGammaFromFactors(ks, d);
    emit(opt, json{{"kGamma", k}}, std::to_string(k));
    return 0;
}

const CuspidalLabel& findCuspidal(const GlobalSetup& setup, const std::string& id) {
    auto it = setup.cuspidals.find(id);
    if (it == setup.cuspidals.end()) throw std::invalid_argument("unknown cuspidal label '" + id + "'");
    return it->second;
}

int runGlobal(const Options& opt, const std::string& configPath, const std::string& op,
              const std::string& cusp, int k, const std::vector<std::string>& ignore) {
    std::ifstream in(configPath);
    if (!in) throw std::invalid_argument("cannot open config file '" + configPath + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    GlobalSetup setup = loadGlobalSetup(ss.str());
    if (op == "kRho") {
        int kr = kRho(findCuspidal(setup, cusp), setup.algebra);
        emit(opt, json{{"kRho", kr}}, std::to_string(kr));
        return 0;
    }
    if (op == "compatible") {
        bool ok = isDCompatible(MWDatum{findCuspidal(setup, cusp), k}, setup.algebra);
        emit(opt, json{{"compatible", ok}}, ok ? "compatible" : "not compatible");
        return ok ? 0 : 1;
    }
    if (op == "transfer") {
        GlobalRep g = transferGInverse(MWDatum{findCuspidal(setup, cusp), k}, setup.algebra);
        json comps;
        std::string text;
        for (const auto& [place, comp] : g.components) {
            comps[place] = comp;
            text += place + ": " + comp + "\n";
        }
        text += "key: " + strongMultiplicityKey(g, ignore);
        emit(opt, json{{"components", comps}, {"key", strongMultiplicityKey(g, ignore)}}, text);
        return 0;
    }
    if (op == "mwPrime") {
        MWPrime p = mwPrime(findCuspidal(setup, cusp), setup.algebra, k);
        emit(opt,
             json{{"rhoPrime", p.rhoPrimeId},
                  {"k", p.k},
                  {"twistStep", p.twistStep},
                  {"image", json{{"cusp", p.image.cusp.id}, {"k", p.image.k}}}},
             p.rhoPrimeId + " at k=" + std::to_string(p.k) + ", twist step nu^" +
                 std::to_string(p.twistStep) + ", image MW(" + p.image.cusp.id + "," +
                 std::to_string(p.image.k) + ")");
        return 0;
    }
    throw CLI::ValidationError("op", "expected kRho, compatible, transfer or mwPrime");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for the representation combinatorics of GL(n) over R, C and H"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.jsonOut, "machine-readable output");
    app.add_flag("--nu-units", opt.nuUnits,
                 "read and print complementary-series parameters in nu units (default nu_delta)");

    std::string expr, algName = "C", xS, yS, betaS, rS, id, charArg, bruhatOp, param, repArg;
    std::string configPath, globalOp, cusp;
    int n = 1, deg = 1, len = 1, d = 1, k = 1;
    bool formal = false;
    std::vector<int> ks;
    std::vector<std::string> ignore;

    auto* cmdExpand = app.add_subcommand("expand", "lambda-basis expansion of a ring expression");
    cmdExpand->add_option("expr", expr, "ring expression ('-' reads stdin)")->required();

    auto* cmdSpeh = app.add_subcommand("expand-speh", "determinant expansion of a ladder quotient");
    cmdSpeh->add_option("--algebra", algName, "R, C or H")->required();
    cmdSpeh->add_option("--x", xS)->required();
    cmdSpeh->add_option("--y", yS)->required();
    cmdSpeh->add_option("--n", n)->required();
    cmdSpeh->add_flag("--formal", formal, "free coherent symbols instead of classes");

    auto* cmdId = app.add_subcommand("check-identity", "ends-of-complementary-series identities");
    cmdId->add_option("--id", id, "14.3, 14.5, 14.6, 14.7, 14.9 or 14.10")->required();
    cmdId->add_option("--beta", betaS, "central parameter (with --r)");
    cmdId->add_option("--r", rS, "integral difference (with --beta)");
    cmdId->add_option("--x", xS);
    cmdId->add_option("--y", yS);
    cmdId->add_option("--n", n)->required();
    cmdId->add_flag("--formal", formal);

    auto* cmdFactor = app.add_subcommand("factor", "unitary factorization of a Langlands datum");
    cmdFactor->add_option("expr", expr, "product of parameters ('-' reads stdin)")->required();

    auto* cmdLj = app.add_subcommand("lj", "Grothendieck-group transfer of a ring expression");
    cmdLj->add_option("expr", expr)->required();

    auto* cmdLjU = app.add_subcommand("lj-unitary", "unitary transfer with its sign");
    cmdLjU->add_option("expr", expr)->required();

    auto* cmdBruhat = app.add_subcommand("bruhat", "order machinery for quaternionic characters");
    cmdBruhat->add_option("--char", charArg, "e.g. \"((3,1),(2,0))\"")->required();
    cmdBruhat->add_option("op", bruhatOp, "reducible, ideal or length")->required();

    auto* cmdCompat = app.add_subcommand("compat", "divisibility generators for the transfer");
    auto* cmdKdelta = cmdCompat->add_subcommand("kdelta", "single-class generator");
    cmdKdelta->add_option("--param", param, "archimedean parameter expression");
    cmdKdelta->add_option("--deg", deg, "abstract degree");
    cmdKdelta->add_option("--len", len, "abstract support length");
    cmdKdelta->add_option("--d", d)->required();
    auto* cmdKgamma = cmdCompat->add_subcommand("kgamma", "generic-representation generator");
    cmdKgamma->add_option("--rep", repArg, "generic unitary expression");
    cmdKgamma->add_option("--ks", ks, "abstract per-factor generators");
    cmdKgamma->add_option("--d", d)->required();
    cmdCompat->require_subcommand(1);

    auto* cmdGlobal = app.add_subcommand("global", "global bookkeeping over a configured algebra");
    cmdGlobal->add_option("--config", configPath, "JSON setup file")->required();
    cmdGlobal->add_option("op", globalOp, "kRho, compatible, transfer or mwPrime")->required();
    cmdGlobal->add_option("--cusp", cusp, "cuspidal label id");
    cmdGlobal->add_option("--k", k, "ladder length");
    cmdGlobal->add_option("--ignore", ignore, "places excluded from the key");

    // let the output flags appear after a subcommand too
    for (CLI::App* sub : app.get_subcommands(nullptr)) {
        sub->fallthrough();
        for (CLI::App* nested : sub->get_subcommands(nullptr)) nested->fallthrough();
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmdExpand->parsed()) return runExpand(opt, expr);
        if (cmdSpeh->parsed()) return runExpandSpeh(opt, algName, xS, yS, n, formal);
        if (cmdId->parsed()) return runCheckIdentity(opt, id, betaS, rS, xS, yS, n, formal);
        if (cmdFactor->parsed()) return runFactor(opt, expr);
        if (cmdLj->parsed()) return runLj(opt, expr);
        if (cmdLjU->parsed()) return runLjUnitary(opt, expr);
        if (cmdBruhat->parsed()) return runBruhat(opt, charArg, bruhatOp);
        if (cmdCompat->parsed()) {
            if (cmdKdelta->parsed()) return runKdelta(opt, param, deg, len, d);
            return runKgamma(opt, repArg, ks, d);
        }
        if (cmdGlobal->parsed()) return runGlobal(opt, configPath, globalOp, cusp, k, ignore);
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        if (opt.jsonOut)
            std::cout << json{{"error", e.what()}, {"kind", "input"}}.dump(2) << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        if (opt.jsonOut)
            std::cout << json{{"error", e.what()}, {"kind", "input"}}.dump(2) << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        // what remains of this branch is a genuine broken invariant
        if (opt.jsonOut)
            std::cout << json{{"error", e.what()}, {"kind", "invariant-breach"}}.dump(2) << "\n";
        else
            std::cerr << "invariant breach: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        if (opt.jsonOut)
            std::cout << json{{"error", e.what()}, {"kind", "input"}}.dump(2) << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
