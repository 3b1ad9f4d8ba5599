#include "loccdisc/json_io.hpp"

#include <json.hpp>

namespace loccdisc {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

long mpzToLong(const mpz_class& v, const char* what) {
    if (!v.fits_slong_p())
        throw std::runtime_error(std::string("json: ") + what + " does not fit a 64-bit integer");
    return v.get_si();
}

Json layoutToJson(const SystemLayout& layout) {
    Json arr = Json::array();
    for (const auto& r : layout.registers()) {
        Json jr;
        jr["id"] = r.id;
        jr["party"] = r.party;
        jr["dim"] = r.dim;
        jr["role"] = r.role == RegisterRole::Principal ? "principal" : "ancilla";
        arr.push_back(std::move(jr));
    }
    return arr;
}

SystemLayout layoutFromJson(const Json& arr) {
    std::vector<Register> regs;
    for (const auto& jr : arr) {
        Register r;
        r.id = jr.at("id").get<std::string>();
        r.party = jr.at("party").get<std::string>();
        r.dim = jr.at("dim").get<int>();
        const auto role = jr.at("role").get<std::string>();
        if (role == "principal")
            r.role = RegisterRole::Principal;
        else if (role == "ancilla")
            r.role = RegisterRole::Ancilla;
        else
            throw std::runtime_error("json: layout role must be 'principal' or 'ancilla'");
        regs.push_back(std::move(r));
    }
    return SystemLayout(std::move(regs));
}

Json ketToJsonObj(const Ket& k) {
    Json j;
    j["layout"] = layoutToJson(k.layout());
    Json amps = Json::array();
    for (const auto& [t, a] : k.amplitudes()) {
        Json row = Json::array();
        for (int idx : t) row.push_back(idx + 1);
        row.push_back(mpzToLong(a.get_num(), "amplitude numerator"));
        row.push_back(mpzToLong(a.get_den(), "amplitude denominator"));
        amps.push_back(std::move(row));
    }
    j["amps"] = std::move(amps);
    return j;
}

Ket ketFromJsonObj(const Json& j) {
    Ket k(layoutFromJson(j.at("layout")));
    const std::size_t nregs = k.layout().size();
    for (const auto& row : j.at("amps")) {
        if (row.size() != nregs + 2)
            throw std::runtime_error("json: amps row must hold one label per register plus num/den");
        IndexTuple t(nregs);
        for (std::size_t i = 0; i < nregs; ++i) t[i] = row.at(i).get<int>() - 1;
        const long num = row.at(nregs).get<long>();
        const long den = row.at(nregs + 1).get<long>();
        k.setAmplitude(t, rat(num, den));
    }
    return k;
}

Json matrixToJson(const RatMatrix& m) {
    Json rows = Json::array();
    for (const auto& row : m) {
        Json jr = Json::array();
        for (const auto& x : row) jr.push_back(ratToString(x));
        rows.push_back(std::move(jr));
    }
    return rows;
}

RatMatrix matrixFromJson(const Json& rows) {
    RatMatrix m;
    for (const auto& jr : rows) {
        std::vector<Rat> row;
        for (const auto& x : jr) row.push_back(ratFromString(x.get<std::string>()));
        m.push_back(std::move(row));
    }
    return m;
}

Json treeToJson(const ProtoNode& n) {
    Json j;
    if (n.isLeaf()) {
        j["declare"] = n.leaf->declare;
        if (n.leaf->resourceDiscard) j["resource_discard"] = true;
        if (n.leaf->dupViolation) j["active_block_violation"] = true;
        return j;
    }
    j["party"] = n.node->party;
    Json outs = Json::array();
    for (const auto& op : n.node->outcomes) {
        Json jo;
        jo["label"] = op.label;
        jo["registers"] = op.registers;
        jo["matrix"] = matrixToJson(op.matrix);
        outs.push_back(std::move(jo));
    }
    j["outcomes"] = std::move(outs);
    Json children = Json::object();
    for (std::size_t i = 0; i < n.node->children.size(); ++i)
        children[n.node->outcomes[i].label] = treeToJson(*n.node->children[i]);
    j["children"] = std::move(children);
    if (n.node->complement) j["complement"] = treeToJson(*n.node->complement);
    return j;
}

ProtoPtr treeFromJson(const Json& j, const SystemLayout& layout) {
    if (j.contains("declare")) {
        Leaf l;
        l.declare = j.at("declare").get<std::string>();
        l.resourceDiscard = j.value("resource_discard", false);
        l.dupViolation = j.value("active_block_violation", false);
        return ProtoNode::makeLeaf(std::move(l));
    }
    MeasurementNode node;
    node.party = j.at("party").get<std::string>();
    const auto& children = j.at("children");
    for (const auto& jo : j.at("outcomes")) {
        LocalOperator op;
        op.label = jo.at("label").get<std::string>();
        op.registers = jo.at("registers").get<std::vector<std::string>>();
        op.matrix = matrixFromJson(jo.at("matrix"));
        op.party = node.party;
        if (!children.contains(op.label))
            throw std::runtime_error("json: protocol node lacks a child for outcome '" + op.label + "'");
        node.children.push_back(treeFromJson(children.at(op.label), layout));
        node.outcomes.push_back(std::move(op));
    }
    if (j.contains("complement")) node.complement = treeFromJson(j.at("complement"), layout);
    return ProtoNode::makeNode(std::move(node));
}

Json leafHitToJson(const LeafHit& hit) {
    Json j;
    j["path"] = hit.path;
    j["declare"] = hit.declare;
    j["prob"] = ratToString(hit.probability);
    return j;
}

Json diagnosticsToJson(const Diagnostics& d) {
    Json j;
    j["ok"] = d.ok();
    j["locality"] = d.localityViolations;
    j["non_projector"] = d.nonProjectorOutcomes;
    j["non_orthogonal"] = d.nonOrthogonalOutcomes;
    j["incomplete"] = d.incompleteNodes;
    j["unknown_labels"] = d.unknownLeafLabels;
    j["structure"] = d.structureErrors;
    return j;
}

}  // namespace

std::string ketToJson(const Ket& k) { return dump(ketToJsonObj(k)); }

Ket ketFromJson(const std::string& text) { return ketFromJsonObj(Json::parse(text)); }

std::string stateSetToJson(const StateSet& set) {
    Json j;
    j["schema"] = 1;
    j["family"] = familyName(set.family);
    j["params"] = set.params;
    j["claimed_count"] = set.claimedCount;
    j["stopper"] = set.stopperLabel;
    Json states = Json::array();
    for (const auto& st : set.states) {
        Json js;
        js["label"] = st.label;
        js["ket"] = ketToJsonObj(st.ket);
        states.push_back(std::move(js));
    }
    j["states"] = std::move(states);
    return dump(j);
}

StateSet stateSetFromJson(const std::string& text) {
    const Json j = Json::parse(text);
    StateSet set;
    set.family = familyFromName(j.at("family").get<std::string>());
    set.params = j.at("params").get<std::vector<int>>();
    set.claimedCount = j.at("claimed_count").get<long>();
    set.stopperLabel = j.at("stopper").get<std::string>();
    for (const auto& js : j.at("states"))
        set.states.push_back({js.at("label").get<std::string>(), ketFromJsonObj(js.at("ket")), {}});
    if (set.states.empty()) throw std::runtime_error("json: state set has no states");
    set.layout = set.states.front().ket.layout();
    for (const auto& st : set.states)
        if (!(st.ket.layout() == set.layout))
            throw std::runtime_error("json: state '" + st.label + "' has a different layout");
    return set;
}

std::string protocolToJson(const ProtocolTree& tree) {
    Json j;
    j["schema"] = 1;
    j["family"] = familyName(tree.family);
    j["params"] = tree.params;
    j["layout"] = layoutToJson(tree.layout);
    Json res = Json::array();
    for (const auto& f : tree.resource.factors) {
        Json jf;
        jf["reg_a"] = f.regX;
        jf["reg_b"] = f.regY;
        jf["dim"] = f.dim;
        res.push_back(std::move(jf));
    }
    j["resource"] = std::move(res);
    j["discrepancies"] = tree.discrepancies;
    j["notes"] = tree.notes;
    j["tree"] = treeToJson(*tree.root);
    return dump(j);
}

ProtocolTree protocolFromJson(const std::string& text) {
    const Json j = Json::parse(text);
    ProtocolTree tree;
    tree.family = familyFromName(j.at("family").get<std::string>());
    tree.params = j.at("params").get<std::vector<int>>();
    tree.layout = layoutFromJson(j.at("layout"));
    for (const auto& jf : j.at("resource"))
        tree.resource.factors.push_back({jf.at("reg_a").get<std::string>(),
                                         jf.at("reg_b").get<std::string>(), jf.at("dim").get<int>()});
    tree.discrepancies = j.at("discrepancies").get<std::vector<std::string>>();
    tree.notes = j.at("notes").get<std::vector<std::string>>();
    tree.root = treeFromJson(j.at("tree"), tree.layout);
    return tree;
}

std::string discriminationReportToJson(const DiscriminationReport& report) {
    Json j;
    j["schema"] = 1;
    j["post_selected"] = report.postSelected;
    j["perfect"] = report.perfect;
    Json states = Json::array();
    for (const auto& s : report.perState) {
        Json js;
        js["label"] = s.label;
        js["identified"] = ratToString(s.identified);
        js["cross"] = ratToString(s.cross);
        js["other_fail"] = ratToString(s.otherFail);
        js["resource_discard"] = ratToString(s.resourceDiscard);
        Json leaves = Json::array();
        for (const auto& hit : s.leaves) leaves.push_back(leafHitToJson(hit));
        js["leaves"] = std::move(leaves);
        states.push_back(std::move(js));
    }
    j["states"] = std::move(states);
    j["shared_leaves"] = report.sharedLeaves;
    j["diagnostics"] = diagnosticsToJson(report.structural);
    return dump(j);
}

namespace {

Json witnessToJsonObj(const WitnessResult& w) {
    Json j;
    j["party"] = w.party;
    j["solution_dim"] = w.solutionDimension;
    j["trivial_only"] = w.trivialOnly;
    Json basis = Json::array();
    for (const auto& e : w.basis) basis.push_back(matrixToJson(e));
    j["basis"] = std::move(basis);
    return j;
}

}  // namespace

std::string witnessToJson(const WitnessResult& w) {
    Json j;
    j["schema"] = 1;
    j.update(witnessToJsonObj(w));
    return dump(j);
}

std::string witnessesToJson(const std::vector<WitnessResult>& ws) {
    Json j;
    j["schema"] = 1;
    Json arr = Json::array();
    for (const auto& w : ws) arr.push_back(witnessToJsonObj(w));
    j["witnesses"] = std::move(arr);
    return dump(j);
}

std::string setCheckToJson(const SetCheckReport& r) {
    Json j;
    j["schema"] = 1;
    j["family"] = familyName(r.family);
    j["params"] = r.params;
    j["gram_ok"] = r.gramOk;
    j["product_ok"] = r.productOk;
    j["count_ok"] = r.count.match();
    j["claimed_count"] = r.count.claimed;
    j["actual_count"] = r.count.actual;
    j["count_detail"] = r.count.detail;
    Json witness = Json::array();
    for (const auto& w : r.witness) {
        Json jw;
        jw["party"] = w.party;
        jw["solution_dim"] = w.solutionDimension;
        jw["trivial_only"] = w.trivialOnly;
        witness.push_back(std::move(jw));
    }
    j["witness"] = std::move(witness);
    return dump(j);
}

std::string simulationToJson(
    const std::vector<std::pair<std::string, std::vector<LeafHit>>>& runs) {
    Json j;
    j["schema"] = 1;
    Json states = Json::array();
    for (const auto& [label, hits] : runs) {
        Json js;
        js["label"] = label;
        Json leaves = Json::array();
        for (const auto& hit : hits) leaves.push_back(leafHitToJson(hit));
        js["leaves"] = std::move(leaves);
        states.push_back(std::move(js));
    }
    j["states"] = std::move(states);
    return dump(j);
}

}  // namespace loccdisc
