#include "doctest.h"

#include <cmath>
#include <random>

#include "chinos/modes.hpp"
#include "chinos/qstate.hpp"

using namespace chinos;

namespace {

constexpr double kPi = 3.14159265358979323846;

StateVector random_state(std::mt19937_64& rng, Basis basis) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cx> amps(static_cast<size_t>(basis_dim(basis)));
    for (cx& z : amps) z = cx{u(rng), u(rng)};
    return normalize(StateVector(basis, amps)).state;
}

StateVector single_op_state(double theta, int k) {
    const modes::OperatorFamily fam = modes::bell_family(theta);
    return apply(fam.ops[static_cast<size_t>(k)], StateVector::basis_state(Basis::Qubit2, 0));
}

DensityMatrix rho1(double theta) {
    return partial_trace_qubit0(pure_density(single_op_state(theta, 0)));
}

}  // namespace

TEST_CASE("tensor products follow the |i1,i0> ordering") {
    const StateVector q0 = StateVector::basis_state(Basis::Qubit1, 0);
    const StateVector both = tensor(q0, q0);
    CHECK(both.amps[0] == cx{1.0, 0.0});
    for (int k = 1; k < 4; ++k) CHECK(std::abs(both.amps[static_cast<size_t>(k)]) == 0.0);

    // X on the first factor flips qubit 1: |00> -> |10>.
    LinearOperator x = LinearOperator::zero(2);
    x.at(0, 1) = cx{1.0, 0.0};
    x.at(1, 0) = cx{1.0, 0.0};
    const StateVector flipped = apply(tensor(x, LinearOperator::identity(2)), both);
    CHECK(std::abs(flipped.amps[2] - cx{1.0, 0.0}) < kExactTol);

    // H on the second factor: |10> -> (|10>+|11>)/sqrt(2).
    const double r = 1.0 / std::sqrt(2.0);
    LinearOperator h(2, {cx{r, 0}, cx{r, 0}, cx{r, 0}, cx{-r, 0}}, true);
    const StateVector plus = apply(tensor(LinearOperator::identity(2), h), flipped);
    CHECK(std::abs(plus.amps[2] - cx{r, 0.0}) < kExactTol);
    CHECK(std::abs(plus.amps[3] - cx{r, 0.0}) < kExactTol);
    CHECK(std::abs(plus.amps[0]) < kExactTol);
}

TEST_CASE("apply is the exact matrix-vector product") {
    const StateVector f0 = StateVector::basis_state(Basis::Fock3, 0);
    CHECK(std::abs(apply(LinearOperator::identity(3), f0).amps[0] - cx{1.0, 0.0}) < kExactTol);

    const LinearOperator bdag = modes::boson_creation();
    const StateVector f1 = StateVector::basis_state(Basis::Fock3, 1);
    const StateVector up = apply(bdag, f1);
    CHECK(std::abs(up.amps[2] - cx{std::sqrt(2.0), 0.0}) < kExactTol);

    // Hard-core double excitation is a null move.
    const LinearOperator hc = modes::hardcore_creation();
    const StateVector one = StateVector::basis_state(Basis::Qubit1, 1);
    const StateVector dead = apply(hc, one);
    CHECK(norm(dead) == 0.0);
    CHECK_THROWS_AS(normalize(dead), NullMoveError);

    CHECK_THROWS_AS(apply(LinearOperator::identity(2), f0), DimensionMismatchError);
}

TEST_CASE("normalize returns the state and its original norm") {
    const StateVector plus(Basis::Qubit1, {cx{1.0, 0.0}, cx{1.0, 0.0}});
    const NormalizeResult res = normalize(plus);
    CHECK(res.norm == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(norm(res.state) == doctest::Approx(1.0).epsilon(1e-14));

    // (I + b^dag)^2 |0> has amplitudes (1, 2, sqrt(2)); norm^2 = 7.
    const StateVector spread(Basis::Fock3, {cx{1.0, 0.0}, cx{2.0, 0.0}, cx{std::sqrt(2.0), 0.0}});
    const NormalizeResult r2 = normalize(spread);
    CHECK(r2.norm * r2.norm == doctest::Approx(7.0).epsilon(1e-14));
    CHECK(std::norm(r2.state.amps[2]) == doctest::Approx(2.0 / 7.0).epsilon(1e-14));
}

TEST_CASE("overlap and trace distance") {
    const StateVector f0 = StateVector::basis_state(Basis::Fock3, 0);
    const StateVector f1 = StateVector::basis_state(Basis::Fock3, 1);
    CHECK(std::abs(overlap(f0, f1)) < kExactTol);
    CHECK(trace_distance_pure(f0, f0) < kExactTol);
    CHECK(trace_distance_pure(f0, f1) == doctest::Approx(1.0).epsilon(1e-14));

    const StateVector phi_plus = normalize(single_op_state(0.0, 0)).state;
    CHECK(std::abs(overlap(phi_plus, phi_plus) - cx{1.0, 0.0}) < kExactTol);
    CHECK(std::abs(overlap(single_op_state(0.0, 3), single_op_state(0.0, 2))) < kExactTol);

    // Guess |1> against a state with p(1) = 4/5: d = sqrt(1/5).
    const StateVector psi(Basis::Qubit1, {cx{1.0 / std::sqrt(5.0), 0}, cx{2.0 / std::sqrt(5.0), 0}}, true);
    CHECK(trace_distance_pure(StateVector::basis_state(Basis::Qubit1, 1), psi) ==
          doctest::Approx(std::sqrt(0.2)).epsilon(1e-13));
}

TEST_CASE("partial trace over qubit 0") {
    const DensityMatrix d00 = partial_trace_qubit0(pure_density(StateVector::basis_state(Basis::Qubit2, 0)));
    CHECK(d00.at(0, 0).real() == doctest::Approx(1.0));
    CHECK(std::abs(d00.at(1, 1)) < kExactTol);

    const DensityMatrix dphi = partial_trace_qubit0(pure_density(normalize(single_op_state(0.0, 0)).state));
    CHECK(dphi.at(0, 0).real() == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(dphi.at(1, 1).real() == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(std::abs(dphi.at(0, 1)) < kExactTol);

    // Separable at theta = pi: the reduced state is pure.
    const auto [lo, hi] = eig2_hermitian(rho1(kPi));
    CHECK(lo == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(hi == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("purity") {
    DensityMatrix mixed(2, {cx{0.5, 0}, cx{0, 0}, cx{0, 0}, cx{0.5, 0}});
    CHECK(purity(mixed) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(purity(rho1(kPi / 2.0)) == doctest::Approx(0.75).epsilon(1e-13));
    DensityMatrix pure(2, {cx{1, 0}, cx{0, 0}, cx{0, 0}, cx{0, 0}});
    CHECK(purity(pure) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("closed-form 2x2 eigenvalues") {
    DensityMatrix mixed(2, {cx{0.5, 0}, cx{0, 0}, cx{0, 0}, cx{0.5, 0}});
    const auto [a, b] = eig2_hermitian(mixed);
    CHECK(a == doctest::Approx(0.5));
    CHECK(b == doctest::Approx(0.5));

    const auto [lo, hi] = eig2_hermitian(rho1(kPi / 3.0));
    CHECK(lo == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(hi == doctest::Approx(0.75).epsilon(1e-13));
}

TEST_CASE("trace distance is a metric on random states") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 1000; ++trial) {
        const StateVector a = random_state(rng, Basis::Qubit2);
        const StateVector b = random_state(rng, Basis::Qubit2);
        const StateVector c = random_state(rng, Basis::Qubit2);
        const double dab = trace_distance_pure(a, b);
        const double dba = trace_distance_pure(b, a);
        const double dac = trace_distance_pure(a, c);
        const double dbc = trace_distance_pure(b, c);
        CHECK(std::abs(dab - dba) < 1e-12);
        CHECK(trace_distance_pure(a, a) < 1e-10);
        CHECK(dac <= dab + dbc + 1e-10);
    }
}

TEST_CASE("partial trace preserves the trace") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const StateVector a = random_state(rng, Basis::Qubit2);
        const StateVector b = random_state(rng, Basis::Qubit2);
        // Mix of two pure states is a valid density matrix.
        DensityMatrix rho = pure_density(a);
        const DensityMatrix rb = pure_density(b);
        for (size_t k = 0; k < rho.entries.size(); ++k)
            rho.entries[k] = 0.3 * rho.entries[k] + 0.7 * rb.entries[k];
        CHECK(trace_real(partial_trace_qubit0(rho)) == doctest::Approx(trace_real(rho)).epsilon(1e-13));
    }
}

TEST_CASE("reduced spectrum is invariant under theta -> 2pi - theta") {
    for (double theta : {0.3, 1.0, kPi / 2.0, 2.2, 3.0}) {
        const auto [a1, b1] = eig2_hermitian(rho1(theta));
        const auto [a2, b2] = eig2_hermitian(rho1(2.0 * kPi - theta));
        CHECK(std::abs(a1 - a2) < kExactTol);
        CHECK(std::abs(b1 - b2) < kExactTol);
    }
}

TEST_CASE("unitary operators preserve norms") {
    std::mt19937_64 rng(7);
    const modes::OperatorFamily fam = modes::bell_family(1.1);
    for (int trial = 0; trial < 50; ++trial) {
        const StateVector psi = random_state(rng, Basis::Qubit2);
        for (const LinearOperator& op : fam.ops) {
            REQUIRE(op.unitary_hint);
            CHECK(std::abs(norm(apply(op, psi)) - 1.0) < kExactTol);
        }
    }
}
