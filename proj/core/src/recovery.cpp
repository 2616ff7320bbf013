#include "trigsurf/recovery.hpp"

#include "trigsurf/zero_sampler.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <stdexcept>

namespace trigsurf {

namespace {

// Aligns the global phase so a null vector over a symmetric support becomes
// conjugate-symmetric, then projects exactly onto that symmetry. For a
// successful recovery this only strips the arbitrary phase of the singular
// vector; the fallback covers degenerate vectors that carry no symmetric
// part.
Eigen::VectorXcd symmetrize_phase(const Eigen::VectorXcd& c, const FrequencySet& support) {
    Complex s(0.0, 0.0);
    for (std::size_t i = 0; i < support.size(); ++i) {
        FreqIndex neg(support[i].size());
        for (std::size_t d = 0; d < neg.size(); ++d) neg[d] = -support[i][d];
        s += c[static_cast<Eigen::Index>(i)] * c[static_cast<Eigen::Index>(*support.position_of(neg))];
    }
    // s = e^{2j theta} |c|^2 when c is a rotated conjugate-symmetric vector.
    const Complex derot = std::polar(1.0, -0.5 * std::arg(s));
    Eigen::VectorXcd aligned = derot * c;

    Eigen::VectorXcd sym(aligned.size());
    for (std::size_t i = 0; i < support.size(); ++i) {
        FreqIndex neg(support[i].size());
        for (std::size_t d = 0; d < neg.size(); ++d) neg[d] = -support[i][d];
        const auto j = static_cast<Eigen::Index>(*support.position_of(neg));
        sym[static_cast<Eigen::Index>(i)] =
            0.5 * (aligned[static_cast<Eigen::Index>(i)] + std::conj(aligned[j]));
    }
    return sym;
}

}  // namespace

int numerical_rank(const Eigen::MatrixXcd& m, double rel_tol) {
    if (m.rows() == 0 || m.cols() == 0) {
        throw std::invalid_argument("numerical_rank: empty matrix");
    }
    if (!(rel_tol > 0.0)) {
        throw std::invalid_argument("numerical_rank: rel_tol must be positive");
    }
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv[0] <= 0.0) return 0;
    const double cutoff = rel_tol * sv[0];
    int rank = 0;
    while (rank < sv.size() && sv[rank] > cutoff) ++rank;
    return rank;
}

RecoveryResult recover_coefficients(const SampleSet& X, const FrequencySet& bandwidth,
                                    double rel_tol) {
    const Eigen::MatrixXcd phi = feature_matrix(bandwidth, X);
    const auto L = static_cast<Eigen::Index>(bandwidth.size());

    // c^T Phi = 0  <=>  Phi^T c = 0: the sought vector is the right singular
    // vector of Phi^T with the smallest singular value.
    Eigen::MatrixXcd a = phi.transpose();
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);

    Eigen::VectorXd sigma = Eigen::VectorXd::Zero(L);
    sigma.head(svd.singularValues().size()) = svd.singularValues();

    int rank = 0;
    if (sigma[0] > 0.0) {
        const double cutoff = rel_tol * sigma[0];
        while (rank < L && sigma[rank] > cutoff) ++rank;
    }

    Eigen::VectorXcd c = svd.matrixV().col(L - 1);
    bool real_flag = false;
    if (bandwidth.is_symmetric()) {
        Eigen::VectorXcd sym = symmetrize_phase(c, bandwidth);
        if (sym.norm() > 1e-6) {
            c = sym;
            real_flag = true;
        }
    }
    c.normalize();

    RecoveryResult result{TrigPolynomial(bandwidth, std::move(c), real_flag),
                          std::move(sigma),
                          static_cast<int>(L) - rank,
                          static_cast<int>(L) - rank == 1};
    return result;
}

double coefficient_match(const TrigPolynomial& recovered, const TrigPolynomial& truth) {
    if (!(recovered.support() == truth.support())) {
        throw std::invalid_argument("coefficient_match: supports differ");
    }
    const double denom = recovered.coeff_l2_norm() * truth.coeff_l2_norm();
    return std::abs(recovered.coeffs().dot(truth.coeffs())) / denom;
}

RankIdentity rank_identity_check(const SampleSet& X, const FrequencySet& gamma,
                                 const FrequencySet& lambda, double rel_tol) {
    if (!gamma.contains_all(lambda)) {
        throw std::invalid_argument("rank_identity_check: lambda must be contained in gamma");
    }
    RankIdentity out;
    out.observed_rank = numerical_rank(feature_matrix(gamma, X), rel_tol);
    out.predicted_rank =
        static_cast<int>(gamma.size()) - static_cast<int>(shift_set(gamma, lambda).size());
    return out;
}

double surface_distance_report(const TrigPolynomial& recovered, const TrigPolynomial& truth,
                               int grid_resolution) {
    if (!recovered.real_valued() || !truth.real_valued()) {
        throw std::invalid_argument("surface_distance_report: inputs must be real-valued");
    }
    if (recovered.dim() != truth.dim()) {
        throw std::invalid_argument("surface_distance_report: dimension mismatch");
    }

    const auto one_sided = [&](const TrigPolynomial& zero_of, const TrigPolynomial& eval_in) {
        const SampleSet trace = trace_zero_set(zero_of, grid_resolution);
        if (trace.empty()) return 1.0;
        double acc = 0.0;
        for (std::size_t i = 0; i < trace.size(); ++i) {
            acc += std::abs(eval_in.eval(trace.point(i)));
        }
        return acc / (static_cast<double>(trace.size()) * eval_in.coeff_l2_norm());
    };

    return 0.5 * (one_sided(truth, recovered) + one_sided(recovered, truth));
}

}  // namespace trigsurf
