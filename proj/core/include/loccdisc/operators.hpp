#pragma once

#include <string>
#include <utility>
#include <vector>

#include "loccdisc/ket.hpp"

namespace loccdisc {

// A measurement operator acting on a subset of one party's registers. The
// matrix is dense, square, dimension = product of the listed register dims,
// with basis ordering = tensor order of `registers` as listed.
struct LocalOperator {
    std::string party;
    std::vector<std::string> registers;
    RatMatrix matrix;
    std::string label;

    std::size_t dim() const { return matrix.size(); }
    bool isSymmetric() const;
    bool isProjector() const;  // symmetric and idempotent
};

// (op (x) identity-on-other-registers) |x>, exact; may return the zero ket.
Ket applyLocal(const LocalOperator& op, const Ket& x);

// Rank-1 projectors |a-b><a-b| and |a+b><a+b| on one register, 1-based
// labels, entries +-1/2. Returned as (minus, plus).
std::pair<LocalOperator, LocalOperator> embedBasisChange(const SystemLayout& layout,
                                                         const std::string& registerId,
                                                         int alpha, int beta);

// Operator construction helpers used by the protocol builders.
LocalOperator zeroOperator(const SystemLayout& layout, const std::vector<std::string>& regs,
                           std::string label);
LocalOperator identityOperator(const SystemLayout& layout, const std::vector<std::string>& regs,
                               std::string label);
// |label><label| on a single register (1-based).
LocalOperator basisProjector(const SystemLayout& layout, const std::string& reg, int label,
                             std::string opLabel);
// Projector onto the (unnormalized) vector sum_i c_i |labels_i> of one register.
LocalOperator rayProjector(const SystemLayout& layout, const std::string& reg,
                           const ProductFactor& ray, std::string opLabel);
// Projector onto sum_i c_i |u_i>_X |u_i>_Y across two registers of one party
// (the correlated-pair rays used by the discrimination protocols).
LocalOperator pairRayProjector(const SystemLayout& layout, const std::string& regX,
                               const std::string& regY, const ProductFactor& ray,
                               std::string opLabel);
// sum_{u in ancLabels} |u>_anc<u| (x) P_prin where P_prin projects onto
// `prinRay` of the principal register.
LocalOperator ancillaGatedProjector(const SystemLayout& layout, const std::string& ancReg,
                                    const std::vector<int>& ancLabels, const std::string& prinReg,
                                    const ProductFactor& prinRay, std::string opLabel);
// sum_{i} |ii><ii| across two registers of equal dimension (resource couplers
// and correlated projective outcomes).
LocalOperator matchedPairProjector(const SystemLayout& layout, const std::string& regX,
                                   const std::string& regY, std::string opLabel);

// Operator algebra on identical register sets (used by validation).
RatMatrix matMul(const RatMatrix& a, const RatMatrix& b);
bool matIsZero(const RatMatrix& a);
RatMatrix matAdd(const RatMatrix& a, const RatMatrix& b);
RatMatrix matIdentity(std::size_t n);

}  // namespace loccdisc
