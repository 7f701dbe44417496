#include "quench/basis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "quench/rng.hpp"

namespace quench {

SpinBasis::SpinBasis(int n, int max_sites) : n_sites(n) {
    if (n < 1) throw std::invalid_argument("SpinBasis: n_sites must be >= 1");
    if (n > max_sites)
        throw std::invalid_argument("SpinBasis: n_sites " + std::to_string(n) +
                                    " exceeds maximum " + std::to_string(max_sites));
    dimension = std::uint64_t{1} << n;
}

double StateVector::norm() const {
    double s = 0.0;
    for (const auto& a : amplitudes) s += std::norm(a);
    return std::sqrt(s);
}

void StateVector::normalize() {
    const double n = norm();
    if (n <= 0.0) throw std::invalid_argument("StateVector: cannot normalize zero vector");
    const double inv = 1.0 / n;
    for (auto& a : amplitudes) a *= inv;
}

complex_t StateVector::overlap(const StateVector& other) const {
    if (!(basis == other.basis))
        throw std::invalid_argument("StateVector::overlap: basis mismatch");
    complex_t s{0.0, 0.0};
    for (std::uint64_t k = 0; k < basis.dimension; ++k)
        s += std::conj(amplitudes[k]) * other.amplitudes[k];
    return s;
}

StateVector polarized_state(const SpinBasis& basis) {
    StateVector psi(basis);
    psi.amplitudes[0] = complex_t{1.0, 0.0};
    return psi;
}

void apply_observable(const CollectiveObservable& obs, const StateVector& psi,
                      StateVector& out) {
    if (!(obs.basis == psi.basis))
        throw std::invalid_argument("apply_observable: basis mismatch");
    const SpinBasis& basis = psi.basis;
    out.basis = basis;
    out.amplitudes.resize(basis.dimension);

    if (obs.kind == ObservableKind::Sz) {
        for (std::uint64_t k = 0; k < basis.dimension; ++k)
            out.amplitudes[k] = basis.sz_eigenvalue(k) * psi.amplitudes[k];
        return;
    }

    // S_x: gather form, out[k] = (1/2) sum_i in[k ^ (1 << i)].
    const int n = basis.n_sites;
    for (std::uint64_t k = 0; k < basis.dimension; ++k) {
        complex_t acc{0.0, 0.0};
        for (int i = 0; i < n; ++i) acc += psi.amplitudes[k ^ (std::uint64_t{1} << i)];
        out.amplitudes[k] = 0.5 * acc;
    }
}

StateVector apply_observable(const CollectiveObservable& obs,
                             const StateVector& psi) {
    StateVector out(psi.basis);
    apply_observable(obs, psi, out);
    return out;
}

Moments expectation_and_variance(const CollectiveObservable& obs,
                                 const StateVector& psi) {
    StateVector op_psi(psi.basis);
    apply_observable(obs, psi, op_psi);

    // O Hermitian: <O> = Re <psi|O psi>, <O^2> = |O psi|^2.
    double mean = 0.0;
    double second = 0.0;
    for (std::uint64_t k = 0; k < psi.basis.dimension; ++k) {
        mean += std::real(std::conj(psi.amplitudes[k]) * op_psi.amplitudes[k]);
        second += std::norm(op_psi.amplitudes[k]);
    }

    double variance = second - mean * mean;
    if (variance < 0.0) {
        if (variance < -1e-12)
            throw std::runtime_error("expectation_and_variance: variance " +
                                     std::to_string(variance) + " below clamp threshold");
        variance = 0.0;
    }
    return Moments{mean, variance};
}

void rotate_to_x_basis_inplace(StateVector& psi) {
    // Fast Walsh-Hadamard transform with a 1/sqrt(2) scale per stage.
    const std::uint64_t dim = psi.basis.dimension;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    auto& a = psi.amplitudes;
    for (std::uint64_t h = 1; h < dim; h <<= 1) {
        for (std::uint64_t base = 0; base < dim; base += (h << 1)) {
            for (std::uint64_t k = base; k < base + h; ++k) {
                const complex_t x = a[k];
                const complex_t y = a[k + h];
                a[k] = (x + y) * inv_sqrt2;
                a[k + h] = (x - y) * inv_sqrt2;
            }
        }
    }
}

StateVector rotate_to_x_basis(const StateVector& psi) {
    StateVector out = psi;
    rotate_to_x_basis_inplace(out);
    return out;
}

namespace detail {

StateVector random_state(const SpinBasis& basis, std::uint64_t seed) {
    SplitMix64 rng(seed);
    StateVector psi(basis);
    for (auto& a : psi.amplitudes)
        a = complex_t{rng.next_gaussian(), rng.next_gaussian()};
    psi.normalize();
    return psi;
}

}  // namespace detail

}  // namespace quench
