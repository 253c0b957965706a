#include "chinos/qstate.hpp"

#include <algorithm>
#include <cmath>

namespace chinos {

namespace {

void check_finite(const std::vector<cx>& v) {
    for (const cx& z : v) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw ValidationError("non-finite amplitude or matrix entry");
        }
    }
}

}  // namespace

int basis_dim(Basis b) {
    switch (b) {
        case Basis::Fock3: return 3;
        case Basis::Qubit1: return 2;
        case Basis::Qubit2: return 4;
    }
    throw ValidationError("unknown basis");
}

StateVector::StateVector(Basis b, std::vector<cx> a, bool is_normalized)
    : basis(b), amps(std::move(a)), normalized(is_normalized) {
    if (static_cast<int>(amps.size()) != basis_dim(basis)) {
        throw DimensionMismatchError("state dimension does not match basis");
    }
    check_finite(amps);
}

StateVector StateVector::basis_state(Basis b, int index) {
    const int d = basis_dim(b);
    if (index < 0 || index >= d) throw ValidationError("basis index out of range");
    std::vector<cx> a(static_cast<size_t>(d), cx{0.0, 0.0});
    a[static_cast<size_t>(index)] = cx{1.0, 0.0};
    return StateVector(b, std::move(a), true);
}

LinearOperator::LinearOperator(int d, std::vector<cx> m, bool unitary)
    : dim(d), entries(std::move(m)), unitary_hint(unitary) {
    if (d <= 0 || entries.size() != static_cast<size_t>(d) * static_cast<size_t>(d)) {
        throw DimensionMismatchError("operator entries do not form a dim x dim matrix");
    }
    check_finite(entries);
}

LinearOperator LinearOperator::identity(int d) {
    LinearOperator op = zero(d);
    for (int i = 0; i < d; ++i) op.at(i, i) = cx{1.0, 0.0};
    op.unitary_hint = true;
    return op;
}

LinearOperator LinearOperator::zero(int d) {
    return LinearOperator(d, std::vector<cx>(static_cast<size_t>(d) * d, cx{0.0, 0.0}));
}

LinearOperator LinearOperator::adjoint() const {
    LinearOperator out = zero(dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) out.at(r, c) = std::conj(at(c, r));
    out.unitary_hint = unitary_hint;
    return out;
}

LinearOperator LinearOperator::compose(const LinearOperator& rhs) const {
    if (dim != rhs.dim) throw DimensionMismatchError("operator dimensions differ");
    LinearOperator out = zero(dim);
    for (int r = 0; r < dim; ++r) {
        for (int k = 0; k < dim; ++k) {
            const cx a = at(r, k);
            if (a == cx{0.0, 0.0}) continue;
            for (int c = 0; c < dim; ++c) out.at(r, c) += a * rhs.at(k, c);
        }
    }
    out.unitary_hint = unitary_hint && rhs.unitary_hint;
    return out;
}

LinearOperator LinearOperator::scaled(cx factor) const {
    LinearOperator out = *this;
    for (cx& z : out.entries) z *= factor;
    out.unitary_hint = false;
    return out;
}

LinearOperator LinearOperator::plus(const LinearOperator& rhs) const {
    if (dim != rhs.dim) throw DimensionMismatchError("operator dimensions differ");
    LinearOperator out = *this;
    for (size_t i = 0; i < out.entries.size(); ++i) out.entries[i] += rhs.entries[i];
    out.unitary_hint = false;
    return out;
}

DensityMatrix::DensityMatrix(int d, std::vector<cx> m) : dim(d), entries(std::move(m)) {
    if (d <= 0 || entries.size() != static_cast<size_t>(d) * static_cast<size_t>(d)) {
        throw DimensionMismatchError("density matrix entries do not form a dim x dim matrix");
    }
    check_finite(entries);
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    if (a.basis != Basis::Qubit1 || b.basis != Basis::Qubit1) {
        throw ValidationError("state tensor products are defined for single qubits");
    }
    std::vector<cx> out(4, cx{0.0, 0.0});
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out[static_cast<size_t>(2 * i + j)] = a.amps[i] * b.amps[j];
    return StateVector(Basis::Qubit2, std::move(out), a.normalized && b.normalized);
}

LinearOperator tensor(const LinearOperator& a, const LinearOperator& b) {
    const int d = a.dim * b.dim;
    LinearOperator out = LinearOperator::zero(d);
    for (int ra = 0; ra < a.dim; ++ra)
        for (int ca = 0; ca < a.dim; ++ca)
            for (int rb = 0; rb < b.dim; ++rb)
                for (int cb = 0; cb < b.dim; ++cb)
                    out.at(ra * b.dim + rb, ca * b.dim + cb) = a.at(ra, ca) * b.at(rb, cb);
    out.unitary_hint = a.unitary_hint && b.unitary_hint;
    return out;
}

StateVector apply(const LinearOperator& op, const StateVector& psi) {
    if (op.dim != psi.dim()) throw DimensionMismatchError("operator and state dimensions differ");
    std::vector<cx> out(static_cast<size_t>(op.dim), cx{0.0, 0.0});
    for (int r = 0; r < op.dim; ++r) {
        cx acc{0.0, 0.0};
        for (int c = 0; c < op.dim; ++c) acc += op.at(r, c) * psi.amps[static_cast<size_t>(c)];
        out[static_cast<size_t>(r)] = acc;
    }
    return StateVector(psi.basis, std::move(out), op.unitary_hint && psi.normalized);
}

double norm(const StateVector& psi) {
    double s = 0.0;
    for (const cx& z : psi.amps) s += std::norm(z);
    return std::sqrt(s);
}

NormalizeResult normalize(const StateVector& psi) {
    const double n = norm(psi);
    if (n <= kExactTol) throw NullMoveError("cannot normalize a null state");
    std::vector<cx> out(psi.amps);
    for (cx& z : out) z /= n;
    return NormalizeResult{StateVector(psi.basis, std::move(out), true), n};
}

cx overlap(const StateVector& a, const StateVector& b) {
    if (a.basis != b.basis) throw DimensionMismatchError("states live in different bases");
    cx acc{0.0, 0.0};
    for (size_t i = 0; i < a.amps.size(); ++i) acc += std::conj(a.amps[i]) * b.amps[i];
    return acc;
}

double trace_distance_pure(const StateVector& a, const StateVector& b) {
    if (a.basis != b.basis) throw DimensionMismatchError("states live in different bases");
    // sqrt(1 - |<a|b>|^2) for unit vectors, computed through Lagrange's
    // identity: 1 - |<a|b>|^2 = sum_{i<j} |a_i b_j - a_j b_i|^2. The pair sum
    // is free of the cancellation that makes the direct form lose half the
    // significant digits near d = 0.
    double s = 0.0;
    for (size_t i = 0; i < a.amps.size(); ++i)
        for (size_t j = i + 1; j < a.amps.size(); ++j)
            s += std::norm(a.amps[i] * b.amps[j] - a.amps[j] * b.amps[i]);
    return std::min(1.0, std::sqrt(s));
}

DensityMatrix pure_density(const StateVector& psi) {
    const int d = psi.dim();
    std::vector<cx> m(static_cast<size_t>(d) * d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            m[static_cast<size_t>(r) * d + c] =
                psi.amps[static_cast<size_t>(r)] * std::conj(psi.amps[static_cast<size_t>(c)]);
    return DensityMatrix(d, std::move(m));
}

DensityMatrix partial_trace_qubit0(const DensityMatrix& rho) {
    if (rho.dim != 4) throw DimensionMismatchError("partial trace expects a two-qubit density matrix");
    std::vector<cx> m(4, cx{0.0, 0.0});
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int k = 0; k < 2; ++k) m[static_cast<size_t>(2 * a + b)] += rho.at(2 * a + k, 2 * b + k);
    return DensityMatrix(2, std::move(m));
}

double trace_real(const DensityMatrix& rho) {
    double t = 0.0;
    for (int i = 0; i < rho.dim; ++i) t += rho.at(i, i).real();
    return t;
}

double purity(const DensityMatrix& rho) {
    // tr(rho^2) = sum_{ij} rho_ij rho_ji = sum_{ij} |rho_ij|^2 for Hermitian rho.
    double p = 0.0;
    for (const cx& z : rho.entries) p += std::norm(z);
    return p;
}

std::pair<double, double> eig2_hermitian(const DensityMatrix& rho) {
    if (rho.dim != 2) throw DimensionMismatchError("closed-form eigenvalues expect a 2x2 matrix");
    const double a = rho.at(0, 0).real();
    const double d = rho.at(1, 1).real();
    const double mean = 0.5 * (a + d);
    const double off = std::abs(rho.at(0, 1));
    const double half = 0.5 * (a - d);
    const double disc = std::sqrt(half * half + off * off);
    return {mean - disc, mean + disc};
}

double unitarity_defect(const LinearOperator& op) {
    const LinearOperator probe = op.adjoint().compose(op);
    double worst = 0.0;
    for (int r = 0; r < op.dim; ++r) {
        for (int c = 0; c < op.dim; ++c) {
            const cx want = (r == c) ? cx{1.0, 0.0} : cx{0.0, 0.0};
            worst = std::max(worst, std::abs(probe.at(r, c) - want));
        }
    }
    return worst;
}

bool is_unitary(const LinearOperator& op, double tol) {
    return unitarity_defect(op) <= tol;
}

}  // namespace chinos
