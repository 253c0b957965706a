#pragma once

// Minimal complex linear algebra for the small pure states, operators and
// density matrices the games are played with (dimensions 2, 3 and 4).

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "chinos/errors.hpp"

namespace chinos {

using cx = std::complex<double>;

// Absolute tolerance for exactness checks; everything here is a short product
// of closed-form factors, so 1e-12 leaves two orders of headroom.
inline constexpr double kExactTol = 1e-12;

enum class Basis { Fock3, Qubit1, Qubit2 };

int basis_dim(Basis b);

// Pure state over a fixed finite basis. Two-qubit amplitudes are ordered as
// |i1,i0> with index 2*i1 + i0 (qubit 0 is the rightmost / least significant).
struct StateVector {
    Basis basis;
    std::vector<cx> amps;
    bool normalized = false;

    StateVector(Basis b, std::vector<cx> a, bool is_normalized = false);

    int dim() const { return static_cast<int>(amps.size()); }

    static StateVector basis_state(Basis b, int index);
};

struct LinearOperator {
    int dim;
    std::vector<cx> entries;  // row-major, dim x dim
    bool unitary_hint = false;

    LinearOperator(int d, std::vector<cx> m, bool unitary = false);

    cx at(int r, int c) const { return entries[static_cast<size_t>(r) * dim + c]; }
    cx& at(int r, int c) { return entries[static_cast<size_t>(r) * dim + c]; }

    static LinearOperator identity(int d);
    static LinearOperator zero(int d);

    LinearOperator adjoint() const;
    LinearOperator compose(const LinearOperator& rhs) const;  // this * rhs
    LinearOperator scaled(cx factor) const;
    LinearOperator plus(const LinearOperator& rhs) const;
};

struct DensityMatrix {
    int dim;
    std::vector<cx> entries;  // row-major

    DensityMatrix(int d, std::vector<cx> m);

    cx at(int r, int c) const { return entries[static_cast<size_t>(r) * dim + c]; }
    cx& at(int r, int c) { return entries[static_cast<size_t>(r) * dim + c]; }
};

// ---- operations ----

// Kronecker product; the first factor is the most significant index, so
// tensor(X, I) flips qubit 1 and tensor(I, H) acts on qubit 0.
StateVector tensor(const StateVector& a, const StateVector& b);
LinearOperator tensor(const LinearOperator& a, const LinearOperator& b);

// Exact matrix-vector product; the result may be unnormalized.
StateVector apply(const LinearOperator& op, const StateVector& psi);

double norm(const StateVector& psi);

struct NormalizeResult {
    StateVector state;
    double norm;
};

// Throws NullMoveError when the norm is below 1e-12.
NormalizeResult normalize(const StateVector& psi);

// Inner product <a|b>, conjugate-linear in the first argument.
cx overlap(const StateVector& a, const StateVector& b);

// Trace distance between pure states, sqrt(1 - |<a|b>|^2).
double trace_distance_pure(const StateVector& a, const StateVector& b);

DensityMatrix pure_density(const StateVector& psi);

// Traces out the rightmost qubit (index i0) of a two-qubit density matrix.
DensityMatrix partial_trace_qubit0(const DensityMatrix& rho);

double trace_real(const DensityMatrix& rho);

// tr(rho^2); 1/dim for the maximally mixed state, 1 for pure states.
double purity(const DensityMatrix& rho);

// Eigenvalues of a 2x2 Hermitian matrix, ascending, by the closed form.
std::pair<double, double> eig2_hermitian(const DensityMatrix& rho);

// max |(O^dag O - I)_{ij}|
double unitarity_defect(const LinearOperator& op);

bool is_unitary(const LinearOperator& op, double tol = kExactTol);

}  // namespace chinos
