#pragma once

#include <Eigen/Dense>

#include "quench/basis.hpp"

namespace quench {

enum class BoundaryCondition { Periodic, Open };

// Couplings of the next-nearest-neighbor Ising chain in a transverse field:
//
//   H = -j sum_i sx_i sx_{i+1} + kappa sum_i sx_i sx_{i+2} - b sum_i sz_i
//
// Under periodic boundaries all three sums run over i = 0..N-1 with indices
// wrapping; under open boundaries the first sum stops at N-2 and the second
// at N-3. j > 0 sets the energy and time unit (j = 1 throughout the CLI).
struct ModelSpec {
    double j = 1.0;
    double kappa = 0.0;
    double b = 0.0;
    BoundaryCondition boundary = BoundaryCondition::Periodic;
    int n_sites = 0;

    // Periodic chains shorter than 5 sites double-count or collapse
    // next-nearest bonds, so they are rejected outright.
    void validate() const;

    SpinBasis spin_basis() const { return SpinBasis(n_sites); }
};

// out = H |psi| (unnormalized), assembled matrix-free: the field term is
// diagonal, each Ising bond contributes via a two-bit flip mask.
void apply_hamiltonian(const ModelSpec& spec, const StateVector& psi,
                       StateVector& out);
StateVector apply_hamiltonian(const ModelSpec& spec, const StateVector& psi);

// Explicit 2^N x 2^N matrix built from Kronecker-embedded site operators;
// intended as a small-N oracle and for exact propagation. Requires
// n_sites <= 12.
Eigen::MatrixXcd dense_matrix(const ModelSpec& spec);

namespace detail {
// Same operators with the nearest-neighbor term rescaled by j_scale and no
// spec validation; lets tests reach limits the public invariants exclude
// (e.g. a purely diagonal field Hamiltonian).
void apply_hamiltonian_scaled(const ModelSpec& spec, double j_scale,
                              const StateVector& psi, StateVector& out);
Eigen::MatrixXcd dense_matrix_unchecked(const ModelSpec& spec, double j_scale);
}  // namespace detail

}  // namespace quench
