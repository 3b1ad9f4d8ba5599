#include <doctest.h>

#include "loccdisc/families.hpp"
#include "loccdisc/operators.hpp"
#include "support/dense_oracle.hpp"

using namespace loccdisc;

namespace {

SystemLayout bip45() { return bipartiteLayout(4, 5); }

Ket singleReg(const std::string& id, const std::string& party, int dim, const ProductFactor& f) {
    SystemLayout layout({{id, party, dim, RegisterRole::Principal}});
    return Ket::productState(layout, {f});
}

}  // namespace

TEST_CASE("tensor of basis states") {
    Ket a = singleReg("A", "Alice", 2, ProductFactor::basis(1));
    Ket b = singleReg("B", "Bob", 2, ProductFactor::basis(1));
    Ket t = tensor(a, b);
    CHECK(t.support() == 1);
    CHECK(t.amplitude({0, 0}) == rat(1));
    CHECK(t.normSquared() == rat(1));
}

TEST_CASE("tensor of |1-2>_A and |2>_B") {
    Ket a = singleReg("A", "Alice", 4, ProductFactor::minus(1, 2));
    Ket b = singleReg("B", "Bob", 5, ProductFactor::basis(2));
    Ket t = tensor(a, b);
    CHECK(t.amplitude({0, 1}) == rat(1));
    CHECK(t.amplitude({1, 1}) == rat(-1));
    CHECK(t.support() == 2);
    CHECK(t.normSquared() == rat(2));
}

TEST_CASE("tensor of MES(5) with |2>") {
    Ket mes = buildMES(5);
    Ket b = singleReg("X", "Bob", 5, ProductFactor::basis(2));
    Ket t = tensor(mes, b);
    // brute-force expectation: exactly the five tuples (i,i,2)
    CHECK(t.support() == 5);
    for (int i = 0; i < 5; ++i) CHECK(t.amplitude({i, i, 1}) == rat(1));
    CHECK(t.normSquared() == rat(5));
}

TEST_CASE("tensor rejects register id collisions") {
    Ket a = singleReg("A", "Alice", 2, ProductFactor::basis(1));
    Ket b = singleReg("A", "Bob", 2, ProductFactor::basis(1));
    CHECK_THROWS_AS(tensor(a, b), std::invalid_argument);
}

TEST_CASE("inner products of +- combinations") {
    Ket minus = singleReg("A", "Alice", 4, ProductFactor::minus(1, 2));
    Ket plus = singleReg("A", "Alice", 4, ProductFactor::plus(1, 2));
    CHECK(inner(minus, plus) == rat(0));
    CHECK(inner(minus, minus) == minus.normSquared());
}

TEST_CASE("inner of phi2 and phi3 from the 4x5 family") {
    const auto set = buildBipartiteEq1(4, 5);
    CHECK(inner(set.find("phi2")->ket, set.find("phi3")->ket) == rat(0));
}

TEST_CASE("inner requires identical layouts") {
    Ket a = singleReg("A", "Alice", 2, ProductFactor::basis(1));
    Ket b = singleReg("B", "Bob", 2, ProductFactor::basis(1));
    CHECK_THROWS_AS(inner(a, b), std::invalid_argument);
}

TEST_CASE("inner: symmetry, positivity, agreement with the dense oracle") {
    std::mt19937 rng(20240811);
    SystemLayout layout({{"A", "Alice", 3, RegisterRole::Principal},
                         {"B", "Bob", 4, RegisterRole::Principal},
                         {"c", "Bob", 2, RegisterRole::Ancilla}});
    for (int trial = 0; trial < 25; ++trial) {
        Ket x = oracle::randomKet(layout, rng, 6);
        Ket y = oracle::randomKet(layout, rng, 6);
        CHECK(inner(x, y) == inner(y, x));
        CHECK(inner(x, y) == oracle::denseInner(x, y));
        CHECK(inner(x, x) >= rat(0));
        if (!x.isZero()) CHECK(inner(x, x) > rat(0));
        CHECK(inner(x, x) == x.normSquared());
    }
}

TEST_CASE("inner factorizes over tensor products") {
    std::mt19937 rng(7);
    SystemLayout la({{"A", "Alice", 3, RegisterRole::Principal}});
    SystemLayout lb({{"B", "Bob", 4, RegisterRole::Principal}});
    for (int trial = 0; trial < 25; ++trial) {
        Ket x = oracle::randomKet(la, rng, 2), y = oracle::randomKet(la, rng, 2);
        Ket u = oracle::randomKet(lb, rng, 3), v = oracle::randomKet(lb, rng, 3);
        CHECK(inner(tensor(x, u), tensor(y, v)) == inner(x, y) * inner(u, v));
    }
}

TEST_CASE("applyLocal reproduces the post-resource form of phi2 at (4,5)") {
    const auto set = buildBipartiteEq1(4, 5);
    SystemLayout full = bip45().concat(buildMES(5).layout());
    Ket input = tensor(set.find("phi2")->ket, buildMES(5));
    LocalOperator b1 = matchedPairProjector(full, "b", "B", "B1");
    Ket out = applyLocal(b1, input);
    // |2>_A (|1>_B |11>_ab - |2>_B |22>_ab), exactly
    CHECK(out.support() == 2);
    CHECK(out.amplitude({1, 0, 0, 0}) == rat(1));
    CHECK(out.amplitude({1, 1, 1, 1}) == rat(-1));
    CHECK(oracle::denseApplyLocal(b1, input).amplitudes() == out.amplitudes());
}

TEST_CASE("applyLocal with the identity leaves the input unchanged") {
    std::mt19937 rng(99);
    SystemLayout layout({{"A", "Alice", 3, RegisterRole::Principal},
                         {"B", "Bob", 3, RegisterRole::Principal}});
    Ket x = oracle::randomKet(layout, rng, 5);
    LocalOperator id = identityOperator(layout, {"A"}, "I");
    CHECK(applyLocal(id, x).amplitudes() == x.amplitudes());
}

TEST_CASE("projection onto orthogonal support yields the zero ket") {
    SystemLayout layout = bip45();
    Ket x = Ket::productState(layout, {ProductFactor::minus(1, 2), ProductFactor::basis(5)});
    LocalOperator p3 = basisProjector(layout, "A", 3, "P3");
    Ket out = applyLocal(p3, x);
    CHECK(out.isZero());
    CHECK(out.normSquared() == rat(0));
}

TEST_CASE("applyLocal error paths") {
    SystemLayout layout = bip45();
    Ket x = Ket::basisState(layout, {1, 1});
    LocalOperator op = basisProjector(layout, "A", 1, "P");
    op.registers = {"Z"};
    CHECK_THROWS_AS(applyLocal(op, x), std::invalid_argument);
    LocalOperator bad = basisProjector(layout, "A", 1, "P");
    bad.matrix.pop_back();
    CHECK_THROWS_AS(applyLocal(bad, x), std::invalid_argument);
}

TEST_CASE("embedBasisChange produces the +-1/2 projector pair") {
    SystemLayout layout({{"B", "Bob", 5, RegisterRole::Principal}});
    auto [minus, plus] = embedBasisChange(layout, "B", 1, 2);
    CHECK(minus.matrix[0][0] == rat(1, 2));
    CHECK(minus.matrix[0][1] == rat(-1, 2));
    CHECK(minus.matrix[1][0] == rat(-1, 2));
    CHECK(minus.matrix[1][1] == rat(1, 2));
    CHECK(plus.matrix[0][1] == rat(1, 2));
    for (int r = 2; r < 5; ++r) CHECK(minus.matrix[r][r] == rat(0));

    CHECK(minus.isProjector());
    CHECK(plus.isProjector());

    // completeness on the span, annihilation across the pair
    Ket alpha = Ket::basisState(layout, {1});
    Ket both = applyLocal(minus, alpha) + applyLocal(plus, alpha);
    CHECK(both.amplitudes() == alpha.amplitudes());
    Ket plusKet = Ket::productState(layout, {ProductFactor::plus(1, 2)});
    CHECK(applyLocal(minus, plusKet).isZero());

    CHECK_THROWS_AS(embedBasisChange(layout, "B", 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(embedBasisChange(layout, "B", 1, 6), std::invalid_argument);
}

TEST_CASE("projectors are idempotent under repeated application") {
    std::mt19937 rng(5);
    SystemLayout layout({{"A", "Alice", 4, RegisterRole::Principal},
                         {"B", "Bob", 4, RegisterRole::Principal}});
    auto [minus, plus] = embedBasisChange(layout, "A", 2, 4);
    for (int trial = 0; trial < 10; ++trial) {
        Ket x = oracle::randomKet(layout, rng, 6);
        Ket once = applyLocal(minus, x);
        CHECK(applyLocal(minus, once).amplitudes() == once.amplitudes());
        Ket p = applyLocal(plus, x);
        CHECK(applyLocal(plus, p).amplitudes() == p.amplitudes());
    }
}

TEST_CASE("scaling a ket never leaves a stored zero amplitude") {
    SystemLayout layout({{"A", "Alice", 2, RegisterRole::Principal}});
    Ket x = Ket::basisState(layout, {1});
    x.scale(rat(0));
    CHECK(x.isZero());
    Ket y = Ket::basisState(layout, {1});
    y.addAmplitude({0}, rat(-1));
    CHECK(y.isZero());
}
