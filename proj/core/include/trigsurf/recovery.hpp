#pragma once

#include "trigsurf/freq_set.hpp"
#include "trigsurf/sample_set.hpp"
#include "trigsurf/trig_poly.hpp"

#include <Eigen/Dense>

namespace trigsurf {

/// Outcome of a null-space recovery at a hypothesized bandwidth.
struct RecoveryResult {
    /// Unit-norm null vector of the feature matrix, as a polynomial over the
    /// hypothesized bandwidth. When the bandwidth is symmetric the vector is
    /// phase-aligned and symmetrized so the polynomial is real-valued.
    TrigPolynomial coefficients;
    /// Singular values of the feature matrix, descending, padded with zeros
    /// to the bandwidth cardinality.
    Eigen::VectorXd singular_values;
    /// Bandwidth cardinality minus the numerical rank.
    int null_space_dim = 0;
    /// True iff the null space is one-dimensional, i.e. the samples pin the
    /// surface down up to scale.
    bool unique = false;
};

/// Count of singular values above rel_tol times the largest. Throws on an
/// empty matrix.
int numerical_rank(const Eigen::MatrixXcd& m, double rel_tol = 1e-11);

/// Recovers the coefficient vector annihilating the lifted samples: the
/// right singular vector of the feature matrix transpose with the smallest
/// singular value. An ambiguous result (null space dimension > 1) is
/// reported through unique = false, not an error.
RecoveryResult recover_coefficients(const SampleSet& X, const FrequencySet& bandwidth,
                                    double rel_tol = 1e-11);

/// Scale- and phase-invariant cosine similarity |<a, b>| / (|a| |b|) between
/// coefficient vectors; 1 means equal surfaces. Requires identical supports.
double coefficient_match(const TrigPolynomial& recovered, const TrigPolynomial& truth);

struct RankIdentity {
    int observed_rank = 0;
    int predicted_rank = 0;
};

/// For samples on the zero set of a lambda-bandlimited polynomial, the
/// feature matrix at an over-estimated bandwidth gamma has rank
/// |gamma| - |gamma : lambda|. Returns the observed numerical rank alongside
/// that prediction. Requires lambda to be contained in gamma.
RankIdentity rank_identity_check(const SampleSet& X, const FrequencySet& gamma,
                                 const FrequencySet& lambda, double rel_tol = 1e-11);

/// Symmetric zero-set agreement score: the mean of |recovered| over the
/// traced zero set of truth and vice versa, each normalized by the
/// evaluated polynomial's RMS magnitude (its coefficient l2 norm, by
/// Parseval). Near 0 iff the zero sets coincide; 1.0 when a zero set is
/// empty at this resolution. Requires real-valued inputs of dim 2 or 3.
double surface_distance_report(const TrigPolynomial& recovered, const TrigPolynomial& truth,
                               int grid_resolution);

}  // namespace trigsurf
