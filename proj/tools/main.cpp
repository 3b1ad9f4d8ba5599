// loccdisc: build, check and exactly simulate entanglement-assisted LOCC
// discrimination protocols for locally indistinguishable product-state
// families. All output is exact-rational JSON or plain text; exit code 0 means
// every requested check passed, 2 a verification failure, 1 a usage/IO error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "loccdisc/builders.hpp"
#include "loccdisc/engine.hpp"
#include "loccdisc/families.hpp"
#include "loccdisc/json_io.hpp"
#include "loccdisc/tiles.hpp"
#include "loccdisc/verify.hpp"

using namespace loccdisc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const std::string& outPath, const std::string& text) {
    if (outPath.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(outPath, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + outPath + "'");
    out << text;
}

Family familyFromCli(const std::string& name) {
    if (name == "bipartite") return Family::BipartiteEq1;
    if (name == "example1") return Family::ExampleEq3;
    if (name == "tripartite456") return Family::TripartiteEq6;
    if (name == "tripartite") return Family::TripartiteG;
    if (name == "even") return Family::EvenS;
    if (name == "odd") return Family::OddSprime;
    throw std::runtime_error("unknown family '" + name +
                             "' (expected bipartite|example1|tripartite|tripartite456|even|odd)");
}

StateSet setForCli(const std::string& familyName, std::vector<int> dims) {
    const Family family = familyFromCli(familyName);
    if (familyName == "example1" && dims.empty()) dims = {4, 5};
    if (familyName == "tripartite456") dims.clear();
    return buildFamily(family, dims);
}

ProtocolTree protocolForCli(const std::string& theorem, const std::vector<int>& dims) {
    auto need = [&](std::size_t n) {
        if (dims.size() != n)
            throw std::runtime_error("--theorem " + theorem + " needs " + std::to_string(n) +
                                     " dims");
    };
    if (theorem == "1") {
        need(2);
        return theorem1Protocol(dims[0], dims[1]);
    }
    if (theorem == "example1") return theorem1Protocol(4, 5);
    if (theorem == "2") return composeEven(dims);
    if (theorem == "3") {
        need(3);
        return theorem3Protocol(dims[0], dims[1], dims[2]);
    }
    if (theorem == "4") return composeOdd(dims);
    if (theorem == "example456") return tripartite456Protocol();
    throw std::runtime_error("unknown theorem '" + theorem +
                             "' (expected 1|2|3|4|example1|example456)");
}

std::string checkSummaryText(const SetCheckReport& r) {
    std::ostringstream os;
    os << "family " << familyName(r.family) << "\n";
    os << "  gram_ok     " << (r.gramOk ? "yes" : "NO") << "\n";
    os << "  product_ok  " << (r.productOk ? "yes" : "NO") << "\n";
    os << "  count_ok    " << (r.count.match() ? "yes" : "NO") << " (claimed "
       << r.count.claimed << ", actual " << r.count.actual << ")\n";
    for (const auto& w : r.witness)
        os << "  witness " << w.party << ": solution dim " << w.solutionDimension
           << (w.trivialOnly ? " (trivial only)" : " (nontrivial first move exists)") << "\n";
    return os.str();
}

std::string reportSummaryText(const DiscriminationReport& report) {
    std::ostringstream os;
    os << (report.postSelected ? "post-selected" : "unconditional") << " verdict: "
       << (report.perfect ? "perfect" : "NOT perfect") << "\n";
    for (const auto& s : report.perState) {
        os << "  " << s.label << ": identified " << ratToString(s.identified);
        if (s.cross != 0) os << ", cross " << ratToString(s.cross);
        if (s.otherFail != 0) os << ", fail " << ratToString(s.otherFail);
        os << ", discarded " << ratToString(s.resourceDiscard) << "\n";
    }
    for (const auto& leaf : report.sharedLeaves) os << "  shared leaf: " << leaf << "\n";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact LOCC discrimination toolkit"};
    app.require_subcommand(1);

    std::string family, theorem, inPath, setPath, outPath, statePath, party, format = "json";
    std::vector<int> dims;
    bool postSelected = false;
    int sweepMin = 4, sweepMax = 7;

    auto addFormat = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("--out", outPath, "output path (default stdout)");
    };

    auto* buildSet = app.add_subcommand("build-set", "construct a state family");
    buildSet->add_option("--family", family)->required();
    buildSet->add_option("--dims", dims)->delimiter(',');
    addFormat(buildSet);

    auto* checkSetCmd = app.add_subcommand("check-set", "orthogonality/product/count/witness checks");
    checkSetCmd->add_option("--in", inPath)->required();
    addFormat(checkSetCmd);

    auto* buildProto = app.add_subcommand("build-protocol", "construct a discrimination protocol");
    buildProto->add_option("--theorem", theorem)->required();
    buildProto->add_option("--dims", dims)->delimiter(',');
    addFormat(buildProto);

    auto* runProto = app.add_subcommand("run-protocol", "simulate states through a protocol");
    runProto->add_option("--in", inPath)->required();
    runProto->add_option("--set", setPath);
    runProto->add_option("--state", statePath, "simulate a single labeled state");
    addFormat(runProto);

    auto* verifyProto = app.add_subcommand("verify-protocol", "exact discrimination verdict");
    verifyProto->add_option("--in", inPath)->required();
    verifyProto->add_option("--set", setPath);
    verifyProto->add_flag("--post-selected", postSelected);
    addFormat(verifyProto);

    auto* witnessCmd = app.add_subcommand("witness", "first-move indistinguishability witness");
    witnessCmd->add_option("--in", inPath)->required();
    witnessCmd->add_option("--party", party);
    addFormat(witnessCmd);

    auto* tilesCmd = app.add_subcommand("render-tiles", "text tile diagram of a bipartite family");
    tilesCmd->add_option("--dims", dims)->delimiter(',')->required();
    tilesCmd->add_option("--out", outPath);

    auto* sweepCmd = app.add_subcommand("sweep", "verify a protocol family over a dimension grid");
    sweepCmd->add_option("--theorem", theorem)->check(CLI::IsMember({"1", "3"}));
    sweepCmd->add_option("--min", sweepMin);
    sweepCmd->add_option("--max", sweepMax);
    addFormat(sweepCmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (buildSet->parsed()) {
            const StateSet set = setForCli(family, dims);
            emit(outPath, stateSetToJson(set));
            return kExitOk;
        }

        if (checkSetCmd->parsed()) {
            const StateSet set = stateSetFromJson(readFile(inPath));
            const SetCheckReport r = checkSet(set);
            emit(outPath, format == "text" ? checkSummaryText(r) : setCheckToJson(r));
            return r.ok() ? kExitOk : kExitVerification;
        }

        if (buildProto->parsed()) {
            const ProtocolTree tree = protocolForCli(theorem, dims);
            emit(outPath, protocolToJson(tree));
            return kExitOk;
        }

        if (runProto->parsed()) {
            const ProtocolTree tree = protocolFromJson(readFile(inPath));
            const StateSet set = setPath.empty() ? buildFamily(tree.family, tree.params)
                                                 : stateSetFromJson(readFile(setPath));
            const Ket resource = tree.resource.ket(tree.layout);
            std::vector<std::pair<std::string, std::vector<LeafHit>>> runs;
            for (const auto& st : set.states) {
                if (!statePath.empty() && st.label != statePath) continue;
                runs.emplace_back(st.label, simulate(tree, tensor(st.ket, resource)));
            }
            if (runs.empty()) throw std::runtime_error("no state matches '" + statePath + "'");
            emit(outPath, simulationToJson(runs));
            return kExitOk;
        }

        if (verifyProto->parsed()) {
            const ProtocolTree tree = protocolFromJson(readFile(inPath));
            const StateSet set = setPath.empty() ? buildFamily(tree.family, tree.params)
                                                 : stateSetFromJson(readFile(setPath));
            const DiscriminationReport report = verifyPerfect(tree, set, postSelected);
            emit(outPath, format == "text" ? reportSummaryText(report)
                                           : discriminationReportToJson(report));
            return report.perfect ? kExitOk : kExitVerification;
        }

        if (witnessCmd->parsed()) {
            const StateSet set = stateSetFromJson(readFile(inPath));
            std::vector<WitnessResult> results;
            for (const auto& p : set.layout.parties(true)) {
                if (!party.empty() && p != party) continue;
                results.push_back(indistinguishabilityWitness(set, p));
            }
            if (results.empty()) throw std::runtime_error("no party named '" + party + "'");
            bool allTrivial = true;
            for (const auto& w : results) allTrivial = allTrivial && w.trivialOnly;
            emit(outPath, results.size() == 1 ? witnessToJson(results[0])
                                              : witnessesToJson(results));
            return allTrivial ? kExitOk : kExitVerification;
        }

        if (tilesCmd->parsed()) {
            if (dims.size() == 2)
                emit(outPath, renderBipartiteTiles(dims[0], dims[1]));
            else if (dims.size() >= 4 && dims.size() % 2 == 0)
                emit(outPath, renderEvenTiles(dims));
            else
                throw std::runtime_error("render-tiles needs 2 dims or an even block list");
            return kExitOk;
        }

        if (sweepCmd->parsed()) {
            if (theorem.empty()) theorem = "1";
            std::ostringstream text;
            std::ostringstream json;
            json << "{\n  \"schema\": 1,\n  \"rows\": [\n";
            bool allPerfect = true;
            bool first = true;
            text << "dims        states  perfect  identified\n";
            auto row = [&](const std::vector<int>& d) {
                const ProtocolTree tree =
                    theorem == "1" ? theorem1Protocol(d[0], d[1])
                                   : theorem3Protocol(d[0], d[1], d[2]);
                const StateSet set = buildFamily(tree.family, tree.params);
                const auto report = verifyPerfect(tree, set, true);
                allPerfect = allPerfect && report.perfect;
                std::string dstr;
                for (std::size_t i = 0; i < d.size(); ++i)
                    dstr += (i ? "," : "") + std::to_string(d[i]);
                const std::string ident = ratToString(report.perState.front().identified);
                text << dstr << std::string(dstr.size() < 12 ? 12 - dstr.size() : 1, ' ')
                     << set.actualCount() << "\t" << (report.perfect ? "yes" : "NO") << "\t"
                     << ident << "\n";
                if (!first) json << ",\n";
                first = false;
                json << "    {\"dims\": [" << dstr << "], \"states\": " << set.actualCount()
                     << ", \"perfect\": " << (report.perfect ? "true" : "false")
                     << ", \"identified\": \"" << ident << "\"}";
            };
            if (theorem == "1") {
                for (int m = sweepMin; m <= sweepMax; ++m)
                    for (int n = m; n <= sweepMax; ++n) row({m, n});
            } else {
                for (int n1 = sweepMin; n1 <= sweepMax; ++n1)
                    for (int n2 = n1; n2 <= sweepMax; ++n2)
                        for (int n3 = n2; n3 <= sweepMax; ++n3) row({n1, n2, n3});
            }
            json << "\n  ]\n}\n";
            emit(outPath, format == "text" ? text.str() : json.str());
            return allPerfect ? kExitOk : kExitVerification;
        }
    } catch (const FamilyConsistencyError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerification;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
