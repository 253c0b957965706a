#pragma once

// Operator families the players draw from, one per game variant.

#include <string>
#include <vector>

#include "chinos/qstate.hpp"

namespace chinos::modes {

enum class ModeTag { BosonFock3, HardCore, Qubit, TwoQubitBell };

struct ModeKind {
    ModeTag tag;
    double theta = 0.0;  // unused for BosonFock3

    static ModeKind boson() { return {ModeTag::BosonFock3, 0.0}; }
    static ModeKind hardcore(double theta) { return {ModeTag::HardCore, theta}; }
    static ModeKind qubit(double theta) { return {ModeTag::Qubit, theta}; }
    static ModeKind two_qubit(double theta) { return {ModeTag::TwoQubitBell, theta}; }
};

// Indexed list of operators. Families written O1..On in the literature are
// 1-based, the Bell family O0..O3 is 0-based; `index_base` keeps the labels
// honest in reports.
struct OperatorFamily {
    ModeKind kind;
    std::vector<LinearOperator> ops;
    std::vector<std::string> labels;
    int index_base = 1;

    int size() const { return static_cast<int>(ops.size()); }
    const LinearOperator& op(int label_index) const { return ops.at(static_cast<size_t>(label_index - index_base)); }
    const std::string& label(int label_index) const { return labels.at(static_cast<size_t>(label_index - index_base)); }
};

// Truncated creation operator on the n = 0,1,2 Fock space; the truncation is
// exact for this game because at most two creations ever act on |0>.
LinearOperator boson_creation();

// Hard-core creation operator, (b^dag)^2 = 0 by construction.
LinearOperator hardcore_creation();

// O1 = I, O2 = (I+b^dag)/sqrt(2), O3 = (I-b^dag)/sqrt(2), O4 = b^dag.
OperatorFamily boson_family();

// O1 = I, O2 = cos(theta) I + sin(theta) b^dag, O3 = cos(theta) I - sin(theta) b^dag.
// Throws DegenerateAngleError outside (0, pi/2), where O2 = +-O3.
OperatorFamily hardcore_family(double theta);

// O1 = I, O2/O3 = rotations by +-theta around the y axis.
OperatorFamily qubit_family(double theta);

// Elementary two-qubit gates in the |i1,i0> basis (index 2*i1 + i0).
LinearOperator gate_x1();
LinearOperator gate_x0();
LinearOperator gate_h0();
// CNOT|i1,i0> = |i1 xor i0, i0>: qubit 0 controls, qubit 1 is the target.
LinearOperator gate_cnot();
// Controlled x-rotation: CU(|i1> (x) |i0>) = (U(theta)^{i0} |i1>) (x) |i0>,
// U(theta) = exp(-i theta X / 2). CU(0) is the identity.
LinearOperator gate_cu(double theta);

// Entangling family O_k = CU(theta) CNOT (id (x) H)(X^{i1} (x) X^{i0}),
// k = 2*i1 + i0. At theta = 0 the CU factor is trivial and the four operators
// produce the Bell basis from |00>; at theta = pi the generated states are
// separable.
OperatorFamily bell_family(double theta);

}  // namespace chinos::modes
