#pragma once

#include <string>
#include <vector>

namespace loccdisc {

enum class RegisterRole { Principal, Ancilla };

struct Register {
    std::string id;     // unique within a layout, e.g. "A", "b2"
    std::string party;  // owning party, e.g. "Alice", "Bob2"
    int dim = 0;
    RegisterRole role = RegisterRole::Principal;
};

// Ordered multi-register system. Basis tuples are stored 0-based internally;
// all user-facing labels (construction helpers, JSON) are 1-based.
class SystemLayout {
public:
    SystemLayout() = default;
    explicit SystemLayout(std::vector<Register> regs);

    const std::vector<Register>& registers() const { return regs_; }
    std::size_t size() const { return regs_.size(); }
    const Register& at(std::size_t pos) const { return regs_[pos]; }

    bool hasRegister(const std::string& id) const;
    std::size_t position(const std::string& id) const;  // throws if absent
    const Register& reg(const std::string& id) const { return regs_[position(id)]; }

    long totalDim() const;

    // Concatenation for tensor products; throws on register-id collision.
    SystemLayout concat(const SystemLayout& other) const;

    // Parties in first-appearance order; optionally principal-owning only.
    std::vector<std::string> parties(bool principalOnly = false) const;
    std::vector<std::string> registersOf(const std::string& party) const;

    bool operator==(const SystemLayout& o) const;

private:
    void check() const;
    std::vector<Register> regs_;
};

}  // namespace loccdisc
