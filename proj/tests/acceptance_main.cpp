// Acceptance suite: one line per criterion, exact arithmetic throughout.
// Usage: acceptance [path-to-loccdisc-cli]

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "loccdisc/builders.hpp"
#include "loccdisc/engine.hpp"
#include "loccdisc/families.hpp"
#include "loccdisc/json_io.hpp"
#include "loccdisc/schmidt.hpp"
#include "loccdisc/verify.hpp"
#include "support/dense_oracle.hpp"

using namespace loccdisc;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

void note(const std::string& msg) { g_notes.push_back(msg); }

void criterion(int number, const std::string& title, bool pass) {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << title
              << "\n";
    for (const auto& msg : g_notes) std::cout << "         " << msg << "\n";
    g_notes.clear();
    if (!pass) ++g_failures;
}

#define EXPECT(cond, msg)                  \
    do {                                   \
        if (!(cond)) {                     \
            ok = false;                    \
            note(std::string("x ") + msg); \
        }                                  \
    } while (0)

bool sameRay(const Ket& x, const Ket& y) {
    if (x.support() != y.support()) return false;
    Rat c = 0;
    for (const auto& [t, a] : x.amplitudes()) {
        const Rat b = y.amplitude(t);
        if (b == 0) return false;
        if (c == 0)
            c = b / a;
        else if (b / a != c)
            return false;
    }
    return c != 0;
}

Ket literal(const SystemLayout& layout, const std::vector<std::pair<std::vector<int>, int>>& rows) {
    Ket k(layout);
    for (const auto& [labels, coeff] : rows) {
        IndexTuple t(labels.size());
        for (std::size_t i = 0; i < labels.size(); ++i) t[i] = labels[i] - 1;
        k.setAmplitude(t, rat(coeff));
    }
    return k;
}

std::vector<std::pair<std::string, std::vector<std::string>>> partyCuts(const SystemLayout& layout) {
    std::vector<std::pair<std::string, std::vector<std::string>>> cuts;
    for (const auto& party : layout.parties(true)) cuts.push_back({party, layout.registersOf(party)});
    return cuts;
}

bool allCutsRankOne(const StateSet& set) {
    for (const auto& st : set.states)
        for (const auto& [party, mine] : partyCuts(set.layout)) {
            std::vector<std::string> rest;
            for (const auto& r : set.layout.registers())
                if (r.party != party) rest.push_back(r.id);
            if (schmidtRankAcross(st.ket, mine, rest).rank != 1) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------

bool criterion1() {
    bool ok = true;
    // (4,5) ray-for-ray against the reference nine states
    const auto set45 = buildBipartiteEq1(4, 5);
    EXPECT(set45.actualCount() == 9, "(4,5) count");
    const auto& L = set45.layout;
    std::vector<std::pair<std::string, Ket>> reference;
    {
        Ket stopper(L);
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 5; ++b) stopper.setAmplitude({a, b}, rat(1));
        reference.emplace_back("phi1", stopper);
    }
    reference.emplace_back("phi2", literal(L, {{{2, 1}, 1}, {{2, 2}, -1}}));
    reference.emplace_back("phi3", literal(L, {{{3, 1}, 1}, {{3, 3}, -1}}));
    reference.emplace_back("phi4", literal(L, {{{4, 1}, 1}, {{4, 4}, -1}}));
    reference.emplace_back("phi5", literal(L, {{{1, 2}, 1}, {{4, 2}, -1}}));
    reference.emplace_back("phi6", literal(L, {{{1, 3}, 1}, {{2, 3}, -1}}));
    reference.emplace_back("phi7", literal(L, {{{1, 4}, 1}, {{3, 4}, -1}}));
    reference.emplace_back("phi8", literal(L, {{{1, 5}, 1}, {{2, 5}, -1}}));
    reference.emplace_back("phi9", literal(L, {{{4, 3}, 1}, {{4, 5}, -1}}));
    for (const auto& [label, ket] : reference) {
        const auto* st = set45.find(label);
        EXPECT(st && sameRay(st->ket, ket), "(4,5) state " + label);
    }

    // the 17-state family ray-for-ray against its reference list
    const auto eq6 = buildTripartiteEq6();
    EXPECT(eq6.actualCount() == 17, "17-state count");
    const auto& T = eq6.layout;
    std::vector<std::pair<std::string, Ket>> reference6;
    {
        Ket stopper(T);
        for (int c = 0; c < 4; ++c)
            for (int b = 0; b < 5; ++b)
                for (int a = 0; a < 6; ++a) stopper.setAmplitude({c, b, a}, rat(1));
        reference6.emplace_back("phi1", stopper);
    }
    reference6.emplace_back("phi2", literal(T, {{{4, 2, 1}, 1}, {{4, 2, 2}, -1}}));
    reference6.emplace_back("phi3", literal(T, {{{4, 3, 1}, 1}, {{4, 3, 3}, -1}}));
    reference6.emplace_back("phi4", literal(T, {{{4, 4, 1}, 1}, {{4, 4, 4}, -1}}));
    reference6.emplace_back("phi5", literal(T, {{{4, 5, 1}, 1}, {{4, 5, 5}, -1}}));
    reference6.emplace_back("phi6", literal(T, {{{4, 1, 2}, 1}, {{4, 5, 2}, -1}}));
    reference6.emplace_back("phi7", literal(T, {{{4, 1, 3}, 1}, {{4, 2, 3}, -1}}));
    reference6.emplace_back("phi8", literal(T, {{{4, 1, 4}, 1}, {{4, 3, 4}, -1}}));
    reference6.emplace_back("phi9", literal(T, {{{4, 1, 5}, 1}, {{4, 4, 5}, -1}}));
    reference6.emplace_back("phi10", literal(T, {{{4, 5, 3}, 1}, {{4, 5, 6}, -1}}));
    reference6.emplace_back("phi11", literal(T, {{{4, 1, 6}, 1}, {{4, 2, 6}, -1}}));
    reference6.emplace_back("phi12", literal(T, {{{3, 1, 6}, 1}, {{3, 2, 6}, -1}}));
    reference6.emplace_back("phi13", literal(T, {{{2, 1, 6}, 1}, {{2, 2, 6}, -1}}));
    reference6.emplace_back("phi14", literal(T, {{{1, 1, 6}, 1}, {{1, 2, 6}, -1}}));
    reference6.emplace_back("phi15", literal(T, {{{1, 4, 6}, 1}, {{2, 4, 6}, -1}}));
    reference6.emplace_back("phi16", literal(T, {{{2, 5, 6}, 1}, {{3, 5, 6}, -1}}));
    reference6.emplace_back("phi17", literal(T, {{{3, 4, 6}, 1}, {{4, 4, 6}, -1}}));
    for (const auto& [label, ket] : reference6) {
        const auto* st = eq6.find(label);
        EXPECT(st && sameRay(st->ket, ket), "17-state family " + label);
    }

    for (int m = 4; m <= 8; ++m)
        for (int n = m; n <= 8; ++n)
            EXPECT(buildBipartiteEq1(m, n).actualCount() == 2 * n - 1,
                   "count at (" + std::to_string(m) + "," + std::to_string(n) + ")");
    return ok;
}

bool criterion2() {
    bool ok = true;
    std::vector<StateSet> sets;
    for (int m = 4; m <= 6; ++m)
        for (int n = m; n <= 6; ++n) sets.push_back(buildBipartiteEq1(m, n));
    sets.push_back(buildTripartiteG(4, 5, 6));
    sets.push_back(buildTripartiteG(4, 6, 8));
    sets.push_back(buildTripartiteG(4, 6, 6));
    sets.push_back(buildEvenS({4, 5, 4, 5}));
    sets.push_back(buildOddSprime({4, 5, 6, 4, 5}));
    for (const auto& set : sets)
        EXPECT(gramIsDiagonal(gramMatrix(set)),
               "gram off-diagonal nonzero for " + familyName(set.family));
    return ok;
}

bool criterion3() {
    bool ok = true;
    EXPECT(allCutsRankOne(buildBipartiteEq1(6, 6)), "bipartite (6,6) product structure");
    EXPECT(allCutsRankOne(buildTripartiteG(4, 6, 8)), "tripartite (4,6,8) product structure");
    EXPECT(allCutsRankOne(buildTripartiteEq6()), "17-state product structure");
    EXPECT(allCutsRankOne(buildEvenS({4, 5, 4, 5})), "even (4,5,4,5) product structure");
    EXPECT(allCutsRankOne(buildOddSprime({4, 5, 6, 4, 5})), "odd (4,5,6,4,5) product structure");
    for (int d = 2; d <= 8; ++d) {
        const auto info = schmidtRankAcross(buildMES(d), {"a"}, {"b"});
        EXPECT(info.rank == static_cast<std::size_t>(d) && info.balanced,
               "MES(" + std::to_string(d) + ") rank/balance");
    }
    return ok;
}

bool criterion4() {
    bool ok = true;
    const auto set = buildBipartiteEq1(4, 5);
    const Ket mes = buildMES(5);
    const SystemLayout full = set.layout.concat(mes.layout());
    const LocalOperator b1 = matchedPairProjector(full, "b", "B", "B1");

    // expected post-resource states, tuples over (A,B,a,b)
    std::vector<std::pair<std::string, Ket>> expected;
    {
        Ket w1(full);
        for (int p = 1; p <= 4; ++p)
            for (int j = 1; j <= 5; ++j) w1.setAmplitude({p - 1, j - 1, j - 1, j - 1}, rat(1));
        expected.emplace_back("phi1", w1);
    }
    auto pairState = [&](int aLabelPlus, int aLabelMinus, int bPlus, int bMinus) {
        return literal(full, {{{aLabelPlus, bPlus, bPlus, bPlus}, 1},
                              {{aLabelMinus, bMinus, bMinus, bMinus}, -1}});
    };
    expected.emplace_back("phi2", pairState(2, 2, 1, 2));
    expected.emplace_back("phi3", pairState(3, 3, 1, 3));
    expected.emplace_back("phi4", pairState(4, 4, 1, 4));
    expected.emplace_back("phi5", literal(full, {{{1, 2, 2, 2}, 1}, {{4, 2, 2, 2}, -1}}));
    expected.emplace_back("phi6", literal(full, {{{1, 3, 3, 3}, 1}, {{2, 3, 3, 3}, -1}}));
    expected.emplace_back("phi7", literal(full, {{{1, 4, 4, 4}, 1}, {{3, 4, 4, 4}, -1}}));
    expected.emplace_back("phi8", literal(full, {{{1, 5, 5, 5}, 1}, {{2, 5, 5, 5}, -1}}));
    expected.emplace_back("phi9", pairState(4, 4, 3, 5));

    for (const auto& [label, want] : expected) {
        const Ket got = applyLocal(b1, tensor(set.find(label)->ket, mes));
        EXPECT(sameRay(got, want), "post-resource form of " + label);
    }

    // the reference phi2 derivation, exactly (not just up to scale)
    const Ket got2 = applyLocal(b1, tensor(set.find("phi2")->ket, mes));
    EXPECT(got2.amplitude({1, 0, 0, 0}) == rat(1) && got2.amplitude({1, 1, 1, 1}) == rat(-1) &&
               got2.support() == 2,
           "phi2 derivation chain");
    return ok;
}

bool criterion5() {
    bool ok = true;
    for (int m = 4; m <= 7; ++m)
        for (int n = m; n <= 7; ++n) {
            const std::string at = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
            const auto tree = theorem1Protocol(m, n);
            const auto set = buildBipartiteEq1(m, n);
            EXPECT(validate(tree, &set).ok(), "structural diagnostics at " + at);
            const auto report = verifyPerfect(tree, set, true);
            EXPECT(report.perfect, "conditional discrimination at " + at);

            const LocalOperator& b1 = tree.root->node->outcomes[0];
            const Ket resource = tree.resource.ket(tree.layout);
            for (const auto& st : set.states) {
                const Ket input = tensor(st.ket, resource);
                const Rat branch = oracle::directProjectionProbability(b1, input);
                EXPECT(report.find(st.label)->identified == branch,
                       "branch probability oracle mismatch for " + st.label + " at " + at);
                EXPECT(branch == rat(1, n), "branch probability is 1/n at " + at);
                // the gated complement is the stopper's leaf alone
                if (st.label != set.stopperLabel) {
                    Rat complementMass = 0;
                    for (const auto& h : report.find(st.label)->leaves)
                        if (h.path == "B1/~") complementMass += h.probability;
                    EXPECT(complementMass == rat(0), "complement leaked at " + at);
                }
            }
        }
    // the worked example: phi5 at (4,5) survives the resource branch with 1/5
    const auto tree = theorem1Protocol(4, 5);
    const auto set = buildBipartiteEq1(4, 5);
    const auto report = verifyPerfect(tree, set, true);
    EXPECT(report.find("phi5")->identified == rat(1, 5), "phi5 branch probability");
    return ok;
}

bool criterion6() {
    bool ok = true;
    const auto tree = tripartite456Protocol();
    const auto set = buildTripartiteEq6();
    EXPECT(validate(tree, &set).ok(), "structural diagnostics");
    const auto report = verifyPerfect(tree, set, true);
    EXPECT(report.perfect, "conditional discrimination of the 17 states");
    EXPECT(tree.discrepancies.size() == 2, "discrepancy ledger size");
    EXPECT(tree.discrepancies.size() >= 1 &&
               tree.discrepancies[0].find("B10") != std::string::npos,
           "ledger names the B10 substitution");
    EXPECT(tree.discrepancies.size() >= 2 &&
               tree.discrepancies[1].find("phi10") != std::string::npos,
           "ledger names the phi10 sign");
    return ok;
}

bool criterion7() {
    bool ok = true;
    {
        const auto tree = composeEven({4, 5, 4, 5});
        const auto set = buildEvenS({4, 5, 4, 5});
        const auto report = verifyPerfect(tree, set, true);
        EXPECT(report.perfect, "even composition (4,5,4,5)");
        const Ket resource = tree.resource.ket(tree.layout);
        for (const auto& st : set.states) {
            Rat dupMass = 0;
            for (const auto& h : simulate(tree, tensor(st.ket, resource)))
                if (h.dupViolation) dupMass += h.probability;
            EXPECT(dupMass == rat(0), "active-block rule for " + st.label);
        }
    }
    {
        const auto tree = composeOdd({4, 5, 6, 4, 5});
        const auto set = buildOddSprime({4, 5, 6, 4, 5});
        const auto report = verifyPerfect(tree, set, true);
        EXPECT(report.perfect, "odd composition (4,5,6,4,5)");
        const Ket resource = tree.resource.ket(tree.layout);
        for (const auto& st : set.states) {
            Rat dupMass = 0;
            for (const auto& h : simulate(tree, tensor(st.ket, resource)))
                if (h.dupViolation) dupMass += h.probability;
            EXPECT(dupMass == rat(0), "active-block rule for " + st.label);
        }
    }
    return ok;
}

bool criterion8() {
    bool ok = true;
    for (const auto& party : {"Alice", "Bob"}) {
        const auto w = indistinguishabilityWitness(buildBipartiteEq1(4, 5), party);
        EXPECT(w.trivialOnly, std::string("(4,5) witness for ") + party);
    }
    for (const auto& party : {"Charles", "Bob", "Alice"}) {
        const auto w = indistinguishabilityWitness(buildTripartiteEq6(), party);
        EXPECT(w.trivialOnly, std::string("17-state witness for ") + party);
    }
    {
        SystemLayout layout({{"A", "Alice", 2, RegisterRole::Principal},
                             {"B", "Bob", 2, RegisterRole::Principal}});
        StateSet control;
        control.family = Family::BipartiteEq1;
        control.params = {2, 2};
        control.layout = layout;
        control.states.push_back({"s1", Ket::basisState(layout, {1, 1}), {}});
        control.states.push_back({"s2", Ket::basisState(layout, {2, 2}), {}});
        control.claimedCount = 2;
        control.stopperLabel = "s1";
        const auto w = indistinguishabilityWitness(control, "Alice");
        EXPECT(!w.trivialOnly, "negative control {|11>,|22>}");
    }
    return ok;
}

bool criterion9(const char* cliPath) {
    bool ok = true;
    if (cliPath == nullptr) {
        note("x no CLI path given on the command line");
        return false;
    }
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "loccdisc_acceptance";
    fs::create_directories(dir);

    auto readFile = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    };
    auto runTwice = [&](const std::string& args, const std::string& tag) {
        const fs::path out1 = dir / (tag + ".1.out");
        const fs::path out2 = dir / (tag + ".2.out");
        const std::string base = std::string("\"") + cliPath + "\" " + args;
        const int rc1 = std::system((base + " > " + out1.string() + " 2>/dev/null").c_str());
        const int rc2 = std::system((base + " > " + out2.string() + " 2>/dev/null").c_str());
        EXPECT(rc1 == rc2, tag + ": exit codes differ");
        const std::string a = readFile(out1), b = readFile(out2);
        EXPECT(!a.empty(), tag + ": empty output");
        EXPECT(a == b, tag + ": outputs are not byte-identical");
        return out1;
    };

    const fs::path set45 = runTwice("build-set --family bipartite --dims 4,5", "build-set-45");
    runTwice("build-set --family odd --dims 4,5,6,4,5", "build-set-odd");
    const fs::path proto45 = runTwice("build-protocol --theorem 1 --dims 4,5", "protocol-1");
    runTwice("build-protocol --theorem example456", "protocol-456");
    runTwice("build-protocol --theorem 2 --dims 4,5,4,5", "protocol-2");
    runTwice("check-set --in " + set45.string(), "check-set");
    runTwice("verify-protocol --in " + proto45.string() + " --post-selected", "verify");
    runTwice("witness --in " + set45.string() + " --party Alice", "witness");
    runTwice("render-tiles --dims 4,5", "tiles");
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    const char* cliPath = argc > 1 ? argv[1] : nullptr;

    criterion(1, "family cardinality and reference-state match", criterion1());
    criterion(2, "exact pairwise orthogonality", criterion2());
    criterion(3, "product structure and resource-state rank", criterion3());
    criterion(4, "post-resource fixture states", criterion4());
    criterion(5, "bipartite discrimination across the grid", criterion5());
    criterion(6, "tripartite walkthrough discrimination", criterion6());
    criterion(7, "even/odd composition and the active-block rule", criterion7());
    criterion(8, "first-move indistinguishability witness", criterion8());
    criterion(9, "byte-identical command outputs", criterion9(cliPath));

    if (g_failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << g_failures << " acceptance criteria failed\n";
    return 1;
}
