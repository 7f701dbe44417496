#include "quench/hamiltonian.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace quench {

namespace {

struct BondMasks {
    std::vector<std::uint64_t> nearest;       // sx_i sx_{i+1}
    std::vector<std::uint64_t> next_nearest;  // sx_i sx_{i+2}
};

BondMasks bond_masks(const ModelSpec& spec) {
    const int n = spec.n_sites;
    const bool periodic = spec.boundary == BoundaryCondition::Periodic;
    BondMasks masks;
    const int nn_bonds = periodic ? n : n - 1;
    for (int i = 0; i < nn_bonds; ++i)
        masks.nearest.push_back((std::uint64_t{1} << i) |
                                (std::uint64_t{1} << ((i + 1) % n)));
    const int nnn_bonds = periodic ? n : n - 2;
    for (int i = 0; i < nnn_bonds; ++i)
        masks.next_nearest.push_back((std::uint64_t{1} << i) |
                                     (std::uint64_t{1} << ((i + 2) % n)));
    return masks;
}

}  // namespace

void ModelSpec::validate() const {
    if (n_sites < 2)
        throw std::invalid_argument("ModelSpec: n_sites must be >= 2");
    if (n_sites > SpinBasis::kDefaultMaxSites)
        throw std::invalid_argument("ModelSpec: n_sites exceeds maximum " +
                                    std::to_string(SpinBasis::kDefaultMaxSites));
    if (boundary == BoundaryCondition::Periodic && n_sites < 5)
        throw std::invalid_argument(
            "ModelSpec: periodic boundaries need n_sites >= 5 "
            "(shorter rings double-count next-nearest bonds)");
    if (!(j > 0.0))
        throw std::invalid_argument("ModelSpec: j must be positive");
}

namespace detail {

void apply_hamiltonian_scaled(const ModelSpec& spec, double j_scale,
                              const StateVector& psi, StateVector& out) {
    if (spec.n_sites != psi.basis.n_sites)
        throw std::invalid_argument("apply_hamiltonian: site-count mismatch");
    const SpinBasis& basis = psi.basis;
    out.basis = basis;
    out.amplitudes.resize(basis.dimension);

    const BondMasks masks = bond_masks(spec);
    const double cj = -spec.j * j_scale;
    const double ck = spec.kappa;
    const double cb = spec.b;
    const auto& in = psi.amplitudes;

    for (std::uint64_t k = 0; k < basis.dimension; ++k) {
        // diagonal field term: -b (N - 2 popcount)
        complex_t acc = (-cb * 2.0 * basis.sz_eigenvalue(k)) * in[k];
        complex_t flips{0.0, 0.0};
        for (std::uint64_t m : masks.nearest) flips += in[k ^ m];
        acc += cj * flips;
        flips = complex_t{0.0, 0.0};
        for (std::uint64_t m : masks.next_nearest) flips += in[k ^ m];
        acc += ck * flips;
        out.amplitudes[k] = acc;
    }
}

Eigen::MatrixXcd dense_matrix_unchecked(const ModelSpec& spec, double j_scale) {
    const int n = spec.n_sites;
    const std::uint64_t dim = std::uint64_t{1} << n;

    // Kronecker embedding of a single-site 2x2 operator. Site i lives on
    // bit i of the basis index, so the embedded matrix acts on that bit.
    auto site_op = [&](int site, const Eigen::Matrix2cd& op) {
        Eigen::MatrixXcd full = Eigen::MatrixXcd::Identity(1, 1);
        for (int s = 0; s < n; ++s) {
            const Eigen::MatrixXcd& factor =
                (s == site) ? Eigen::MatrixXcd(op)
                            : Eigen::MatrixXcd(Eigen::Matrix2cd::Identity());
            Eigen::MatrixXcd next(full.rows() * 2, full.cols() * 2);
            // s is applied as the more significant block each round, keeping
            // bit s of the index attached to site s.
            next.block(0, 0, full.rows(), full.cols()) = factor(0, 0) * full;
            next.block(0, full.cols(), full.rows(), full.cols()) = factor(0, 1) * full;
            next.block(full.rows(), 0, full.rows(), full.cols()) = factor(1, 0) * full;
            next.block(full.rows(), full.cols(), full.rows(), full.cols()) =
                factor(1, 1) * full;
            full = std::move(next);
        }
        return full;
    };

    Eigen::Matrix2cd sx;
    sx << 0, 1, 1, 0;
    Eigen::Matrix2cd sz;
    sz << 1, 0, 0, -1;

    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
    const bool periodic = spec.boundary == BoundaryCondition::Periodic;
    const int nn_bonds = periodic ? n : n - 1;
    for (int i = 0; i < nn_bonds; ++i)
        h -= spec.j * j_scale * (site_op(i, sx) * site_op((i + 1) % n, sx));
    const int nnn_bonds = periodic ? n : n - 2;
    for (int i = 0; i < nnn_bonds; ++i)
        h += spec.kappa * (site_op(i, sx) * site_op((i + 2) % n, sx));
    for (int i = 0; i < n; ++i) h -= spec.b * site_op(i, sz);
    return h;
}

}  // namespace detail

void apply_hamiltonian(const ModelSpec& spec, const StateVector& psi,
                       StateVector& out) {
    spec.validate();
    detail::apply_hamiltonian_scaled(spec, 1.0, psi, out);
}

StateVector apply_hamiltonian(const ModelSpec& spec, const StateVector& psi) {
    StateVector out(psi.basis);
    apply_hamiltonian(spec, psi, out);
    return out;
}

Eigen::MatrixXcd dense_matrix(const ModelSpec& spec) {
    spec.validate();
    if (spec.n_sites > 12)
        throw std::invalid_argument("dense_matrix: dimension too large (n_sites > 12)");
    return detail::dense_matrix_unchecked(spec, 1.0);
}

}  // namespace quench
