#pragma once

#include <bit>
#include <complex>
#include <cstdint>
#include <vector>

namespace quench {

using complex_t = std::complex<double>;

// Computational basis of N spin-1/2 sites. Basis index bit i encodes site i:
// bit = 0 is spin up (sigma^z eigenvalue +1), bit = 1 is spin down (-1).
// With this convention the fully polarized up state is basis index 0.
struct SpinBasis {
    static constexpr int kDefaultMaxSites = 24;

    int n_sites = 0;
    std::uint64_t dimension = 0;

    SpinBasis() = default;
    explicit SpinBasis(int n, int max_sites = kDefaultMaxSites);

    // sigma^z sum eigenvalue of a basis state, in units of 1/2:
    // S_z = (N - 2 popcount) / 2.
    double sz_eigenvalue(std::uint64_t index) const {
        return 0.5 * (n_sites - 2 * std::popcount(index));
    }

    friend bool operator==(const SpinBasis& a, const SpinBasis& b) {
        return a.n_sites == b.n_sites;
    }
};

struct StateVector {
    SpinBasis basis;
    std::vector<complex_t> amplitudes;

    StateVector() = default;
    explicit StateVector(SpinBasis b)
        : basis(b), amplitudes(b.dimension, complex_t{0.0, 0.0}) {}

    double norm() const;
    void normalize();
    // <this|other>
    complex_t overlap(const StateVector& other) const;
};

enum class ObservableKind { Sx, Sz };

// Collective spin operator S = sum_i sigma_i / 2 along x or z. Eigenvalues
// lie on the (half-)integer lattice {-N/2, -N/2 + 1, ..., N/2}.
struct CollectiveObservable {
    ObservableKind kind;
    SpinBasis basis;
};

struct Moments {
    double mean = 0.0;
    double variance = 0.0;
};

// |up>^(x)N : amplitude 1 on basis index 0.
StateVector polarized_state(const SpinBasis& basis);

// out = O |psi| (unnormalized). S_z scales diagonally; S_x sums the N
// single-bit-flip images weighted 1/2. `out` is resized to match.
void apply_observable(const CollectiveObservable& obs, const StateVector& psi,
                      StateVector& out);
StateVector apply_observable(const CollectiveObservable& obs,
                             const StateVector& psi);

// mean = <O>, variance = <O^2> - <O>^2 for a normalized state. Round-off
// can push the variance of an eigenstate slightly negative; values within
// 1e-12 of zero are clamped to 0.
Moments expectation_and_variance(const CollectiveObservable& obs,
                                 const StateVector& psi);

// Per-site Hadamard rotation taking sigma^x eigenstates onto computational
// basis states, so the S_x outcome law of psi equals the S_z outcome law of
// the rotated state. The rotation is an involution.
void rotate_to_x_basis_inplace(StateVector& psi);
StateVector rotate_to_x_basis(const StateVector& psi);

namespace detail {
// Fills with complex Gaussian amplitudes and normalizes; test/tooling helper.
StateVector random_state(const SpinBasis& basis, std::uint64_t seed);
}  // namespace detail

}  // namespace quench
