#include "trigsurf/interpolant.hpp"

#include "trigsurf/recovery.hpp"
#include "trigsurf/rng.hpp"
#include "trigsurf/zero_sampler.hpp"

#include <Eigen/Eigenvalues>

#include <stdexcept>
#include <utility>

namespace trigsurf {

Interpolant::Interpolant(SampleSet anchors, Eigen::VectorXcd weights, FrequencySet gamma,
                         double pinv_tol)
    : anchors_(std::move(anchors)),
      weights_(std::move(weights)),
      gamma_(std::move(gamma)),
      pinv_tol_(pinv_tol) {
    if (anchors_.empty()) {
        throw std::invalid_argument("Interpolant: anchor set is empty");
    }
    if (weights_.size() != static_cast<Eigen::Index>(anchors_.size())) {
        throw std::invalid_argument("Interpolant: weight count does not match anchor count");
    }
    anchor_features_ = feature_matrix(gamma_, anchors_);
    const Eigen::MatrixXcd k = anchor_features_.adjoint() * anchor_features_;
    kernel_matrix_rank_ = numerical_rank(k, pinv_tol_);
}

Complex Interpolant::eval(const Point& x) const {
    if (x.size() != gamma_.dim()) {
        throw std::invalid_argument("Interpolant::eval: dimension mismatch");
    }
    // kappa_i = k_gamma(x_i, x) = phi(x_i)^H phi(x)
    const Eigen::VectorXcd kappa = anchor_features_.adjoint() * feature_map(gamma_, x);
    return weights_.transpose() * kappa;
}

SampleSet select_anchors(const TrigPolynomial& surface, const FrequencySet& gamma,
                         std::uint64_t seed, int max_retries, double root_tol, double rank_tol) {
    if (!gamma.contains_all(surface.support())) {
        throw std::invalid_argument("select_anchors: gamma must contain the surface bandwidth");
    }
    const int target =
        static_cast<int>(gamma.size()) - static_cast<int>(shift_set(gamma, surface.support()).size());

    // A pool several times larger than P, thinned by pivoted QR subset
    // selection, keeps the anchor Gram matrix far better conditioned than a
    // bare P-point draw; the kernel solve inherits that conditioning squared.
    constexpr int kOversample = 4;

    int best_rank = 0;
    for (int retry = 0; retry < max_retries; ++retry) {
        const SampleSet pool = sample_zero_set(surface, kOversample * target, root_tol,
                                               mix_seed(seed, 0x5e1ec7 + retry));
        const Eigen::MatrixXcd phi_pool = feature_matrix(gamma, pool);
        Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(phi_pool);
        const auto& perm = qr.colsPermutation();

        SampleSet anchors(pool.dim());
        for (int i = 0; i < target; ++i) {
            const auto col = static_cast<std::size_t>(perm.indices()[i]);
            anchors.add(pool.point(col), pool.component(col), pool.residual(col));
        }

        const int rank = numerical_rank(feature_matrix(gamma, anchors), rank_tol);
        if (rank == target) return anchors;
        best_rank = std::max(best_rank, rank);
    }
    throw AnchorSelectionError("select_anchors: rank " + std::to_string(best_rank) + " of " +
                                   std::to_string(target) + " after " +
                                   std::to_string(max_retries) + " retries",
                               best_rank, target);
}

Interpolant build_interpolant(const Eigen::VectorXcd& f_values, const SampleSet& anchors,
                              const FrequencySet& gamma, double pinv_tol) {
    const auto p_count = static_cast<Eigen::Index>(anchors.size());
    if (f_values.size() != p_count) {
        throw std::invalid_argument("build_interpolant: " + std::to_string(f_values.size()) +
                                    " function values for " + std::to_string(anchors.size()) +
                                    " anchors");
    }

    const Eigen::MatrixXcd phi = feature_matrix(gamma, anchors);
    Eigen::MatrixXcd k = phi.adjoint() * phi;  // K_ij = k_gamma(x_i, x_j)
    k = 0.5 * (k + k.adjoint().eval());        // scrub roundoff asymmetry

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(k);
    const Eigen::VectorXd& lambda = eig.eigenvalues();  // ascending
    const double lambda_max = lambda[p_count - 1];
    const double cutoff = pinv_tol * lambda_max;

    int rank = 0;
    for (Eigen::Index i = 0; i < p_count; ++i) {
        if (lambda[i] > cutoff) ++rank;
    }
    if (rank < p_count) {
        throw IllConditionedKernelError(
            "build_interpolant: kernel matrix rank " + std::to_string(rank) + " below " +
                std::to_string(p_count) + " at pinv cutoff " + std::to_string(pinv_tol),
            rank);
    }

    Eigen::VectorXd inv_lambda = Eigen::VectorXd::Zero(p_count);
    for (Eigen::Index i = 0; i < p_count; ++i) {
        if (lambda[i] > cutoff) inv_lambda[i] = 1.0 / lambda[i];
    }
    const Eigen::MatrixXcd pinv =
        eig.eigenvectors() * inv_lambda.asDiagonal() * eig.eigenvectors().adjoint();

    // p^T K = f^T  =>  p = pinv(K)^T f
    Eigen::VectorXcd weights = pinv.transpose() * f_values;
    return Interpolant(anchors, std::move(weights), gamma, pinv_tol);
}

}  // namespace trigsurf
