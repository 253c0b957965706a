#include "chinos/modes.hpp"

#include <cmath>

#include "chinos/errors.hpp"

namespace chinos::modes {

namespace {
constexpr double kPi = 3.14159265358979323846;
const cx kOne{1.0, 0.0};
}  // namespace

LinearOperator boson_creation() {
    // b^dag |n> = sqrt(n+1) |n+1>, b^dag |2> = 0 at the cutoff.
    LinearOperator b = LinearOperator::zero(3);
    b.at(1, 0) = kOne;
    b.at(2, 1) = cx{std::sqrt(2.0), 0.0};
    return b;
}

LinearOperator hardcore_creation() {
    LinearOperator b = LinearOperator::zero(2);
    b.at(1, 0) = kOne;
    return b;
}

OperatorFamily boson_family() {
    const LinearOperator id = LinearOperator::identity(3);
    const LinearOperator b = boson_creation();
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    OperatorFamily fam;
    fam.kind = ModeKind::boson();
    fam.index_base = 1;
    fam.ops = {
        id,
        id.plus(b).scaled(cx{inv_sqrt2, 0.0}),
        id.plus(b.scaled(cx{-1.0, 0.0})).scaled(cx{inv_sqrt2, 0.0}),
        b,
    };
    fam.labels = {"O1", "O2", "O3", "O4"};
    return fam;
}

OperatorFamily hardcore_family(double theta) {
    if (!(theta > 0.0 && theta < kPi / 2.0)) {
        throw DegenerateAngleError("hard-core angle must lie strictly inside (0, pi/2)");
    }
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const LinearOperator id = LinearOperator::identity(2);
    const LinearOperator b = hardcore_creation();
    OperatorFamily fam;
    fam.kind = ModeKind::hardcore(theta);
    fam.index_base = 1;
    fam.ops = {
        id,
        id.scaled(cx{c, 0.0}).plus(b.scaled(cx{s, 0.0})),
        id.scaled(cx{c, 0.0}).plus(b.scaled(cx{-s, 0.0})),
    };
    fam.labels = {"O1", "O2", "O3"};
    return fam;
}

namespace {

LinearOperator rotation_y(double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    LinearOperator r = LinearOperator::zero(2);
    r.at(0, 0) = cx{c, 0.0};
    r.at(0, 1) = cx{-s, 0.0};
    r.at(1, 0) = cx{s, 0.0};
    r.at(1, 1) = cx{c, 0.0};
    r.unitary_hint = true;
    return r;
}

}  // namespace

OperatorFamily qubit_family(double theta) {
    OperatorFamily fam;
    fam.kind = ModeKind::qubit(theta);
    fam.index_base = 1;
    fam.ops = {LinearOperator::identity(2), rotation_y(theta), rotation_y(-theta)};
    fam.labels = {"O1", "O2", "O3"};
    return fam;
}

LinearOperator gate_x1() {
    LinearOperator x = LinearOperator::zero(2);
    x.at(0, 1) = kOne;
    x.at(1, 0) = kOne;
    x.unitary_hint = true;
    return tensor(x, LinearOperator::identity(2));
}

LinearOperator gate_x0() {
    LinearOperator x = LinearOperator::zero(2);
    x.at(0, 1) = kOne;
    x.at(1, 0) = kOne;
    x.unitary_hint = true;
    return tensor(LinearOperator::identity(2), x);
}

LinearOperator gate_h0() {
    const double h = 1.0 / std::sqrt(2.0);
    LinearOperator had = LinearOperator::zero(2);
    had.at(0, 0) = cx{h, 0.0};
    had.at(0, 1) = cx{h, 0.0};
    had.at(1, 0) = cx{h, 0.0};
    had.at(1, 1) = cx{-h, 0.0};
    had.unitary_hint = true;
    return tensor(LinearOperator::identity(2), had);
}

LinearOperator gate_cnot() {
    LinearOperator g = LinearOperator::zero(4);
    g.at(0, 0) = kOne;  // |00> -> |00>
    g.at(3, 1) = kOne;  // |01> -> |11>
    g.at(2, 2) = kOne;  // |10> -> |10>
    g.at(1, 3) = kOne;  // |11> -> |01>
    g.unitary_hint = true;
    return g;
}

LinearOperator gate_cu(double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const cx mis{0.0, -s};
    LinearOperator g = LinearOperator::zero(4);
    g.at(0, 0) = kOne;
    g.at(2, 2) = kOne;
    // U(theta) on qubit 1, i.e. on the {|01>, |11>} block.
    g.at(1, 1) = cx{c, 0.0};
    g.at(1, 3) = mis;
    g.at(3, 1) = mis;
    g.at(3, 3) = cx{c, 0.0};
    g.unitary_hint = true;
    return g;
}

OperatorFamily bell_family(double theta) {
    const LinearOperator entangler = gate_cu(theta).compose(gate_cnot()).compose(gate_h0());
    const LinearOperator x1 = gate_x1();
    const LinearOperator x0 = gate_x0();
    OperatorFamily fam;
    fam.kind = ModeKind::two_qubit(theta);
    fam.index_base = 0;
    for (int k = 0; k < 4; ++k) {
        LinearOperator layer = LinearOperator::identity(4);
        if (k & 2) layer = x1.compose(layer);
        if (k & 1) layer = x0.compose(layer);
        fam.ops.push_back(entangler.compose(layer));
        fam.labels.push_back("O" + std::to_string(k));
    }
    return fam;
}

}  // namespace chinos::modes
