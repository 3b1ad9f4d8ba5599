#include "loccdisc/layout.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace loccdisc {

SystemLayout::SystemLayout(std::vector<Register> regs) : regs_(std::move(regs)) { check(); }

void SystemLayout::check() const {
    std::set<std::string> seen;
    for (const auto& r : regs_) {
        if (r.id.empty()) throw std::invalid_argument("layout: empty register id");
        if (r.party.empty()) throw std::invalid_argument("layout: register '" + r.id + "' has no party");
        if (r.dim < 1) throw std::invalid_argument("layout: register '" + r.id + "' has dim < 1");
        if (!seen.insert(r.id).second)
            throw std::invalid_argument("layout: duplicate register id '" + r.id + "'");
    }
}

bool SystemLayout::hasRegister(const std::string& id) const {
    return std::any_of(regs_.begin(), regs_.end(), [&](const Register& r) { return r.id == id; });
}

std::size_t SystemLayout::position(const std::string& id) const {
    for (std::size_t i = 0; i < regs_.size(); ++i)
        if (regs_[i].id == id) return i;
    throw std::out_of_range("layout: no register '" + id + "'");
}

long SystemLayout::totalDim() const {
    long d = 1;
    for (const auto& r : regs_) d *= r.dim;
    return d;
}

SystemLayout SystemLayout::concat(const SystemLayout& other) const {
    for (const auto& r : other.regs_)
        if (hasRegister(r.id))
            throw std::invalid_argument("layout concat: register id collision '" + r.id + "'");
    std::vector<Register> all = regs_;
    all.insert(all.end(), other.regs_.begin(), other.regs_.end());
    return SystemLayout(std::move(all));
}

std::vector<std::string> SystemLayout::parties(bool principalOnly) const {
    std::vector<std::string> out;
    for (const auto& r : regs_) {
        if (principalOnly && r.role != RegisterRole::Principal) continue;
        if (std::find(out.begin(), out.end(), r.party) == out.end()) out.push_back(r.party);
    }
    return out;
}

std::vector<std::string> SystemLayout::registersOf(const std::string& party) const {
    std::vector<std::string> out;
    for (const auto& r : regs_)
        if (r.party == party) out.push_back(r.id);
    return out;
}

bool SystemLayout::operator==(const SystemLayout& o) const {
    if (regs_.size() != o.regs_.size()) return false;
    for (std::size_t i = 0; i < regs_.size(); ++i) {
        const auto& a = regs_[i];
        const auto& b = o.regs_[i];
        if (a.id != b.id || a.party != b.party || a.dim != b.dim || a.role != b.role) return false;
    }
    return true;
}

}  // namespace loccdisc
