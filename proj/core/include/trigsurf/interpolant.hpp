#pragma once

#include "trigsurf/freq_set.hpp"
#include "trigsurf/sample_set.hpp"
#include "trigsurf/trig_poly.hpp"

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace trigsurf {

/// Thrown when anchor selection cannot reach a rank-complete point set.
class AnchorSelectionError : public std::runtime_error {
public:
    AnchorSelectionError(const std::string& what, int achieved_rank, int target_rank)
        : std::runtime_error(what), achieved_rank_(achieved_rank), target_rank_(target_rank) {}
    int achieved_rank() const noexcept { return achieved_rank_; }
    int target_rank() const noexcept { return target_rank_; }

private:
    int achieved_rank_;
    int target_rank_;
};

/// Thrown when the kernel matrix falls below full rank at the pseudo-inverse
/// cutoff, i.e. the anchors were not admissible at this tolerance.
class IllConditionedKernelError : public std::runtime_error {
public:
    IllConditionedKernelError(const std::string& what, int achieved_rank)
        : std::runtime_error(what), achieved_rank_(achieved_rank) {}
    int achieved_rank() const noexcept { return achieved_rank_; }

private:
    int achieved_rank_;
};

/// Local kernel representation of a bandlimited function restricted to a
/// surface: P anchor points on the surface, a weight vector p, and the
/// Dirichlet kernel bandwidth gamma. Evaluates
///
///   f_hat(x) = sum_i p_i k_gamma(x_i, x).
///
/// On the surface the value reproduces the original function exactly; off
/// the surface it is unconstrained and generally deviates. Immutable;
/// evaluation is reentrant.
class Interpolant {
public:
    /// Rebuilds the anchor feature cache and the kernel matrix rank from the
    /// stored fields; used directly when loading a serialized interpolant.
    Interpolant(SampleSet anchors, Eigen::VectorXcd weights, FrequencySet gamma, double pinv_tol);

    Complex eval(const Point& x) const;

    const SampleSet& anchors() const noexcept { return anchors_; }
    const Eigen::VectorXcd& weights() const noexcept { return weights_; }
    const FrequencySet& gamma() const noexcept { return gamma_; }
    int kernel_matrix_rank() const noexcept { return kernel_matrix_rank_; }
    double pinv_tol() const noexcept { return pinv_tol_; }

private:
    SampleSet anchors_;
    Eigen::VectorXcd weights_;
    FrequencySet gamma_;
    double pinv_tol_;
    int kernel_matrix_rank_ = 0;
    Eigen::MatrixXcd anchor_features_;  // |gamma| x P evaluation cache
};

/// Draws P = |gamma| - |gamma : lambda| points on the zero set of `surface`
/// and accepts them iff their gamma-feature matrix has numerical rank P;
/// otherwise redraws, up to max_retries. The default certification tolerance
/// is sqrt of the default pseudo-inverse cutoff, so certified anchors keep
/// the kernel Gram matrix above the cutoff. Throws AnchorSelectionError when
/// retries are exhausted.
SampleSet select_anchors(const TrigPolynomial& surface, const FrequencySet& gamma,
                         std::uint64_t seed, int max_retries = 50, double root_tol = 1e-12,
                         double rank_tol = 1e-5);

/// Assembles the P x P kernel matrix K_ij = k_gamma(x_i, x_j) and solves
/// p^T K = [f(x_1) ... f(x_P)] through the pseudo-inverse with relative
/// cutoff pinv_tol. Throws IllConditionedKernelError if K is numerically
/// rank-deficient at that cutoff.
Interpolant build_interpolant(const Eigen::VectorXcd& f_values, const SampleSet& anchors,
                              const FrequencySet& gamma, double pinv_tol = 1e-10);

}  // namespace trigsurf
