#pragma once

#include "trigsurf/freq_set.hpp"
#include "trigsurf/sample_set.hpp"
#include "trigsurf/types.hpp"

#include <Eigen/Dense>
#include <cstdint>

namespace trigsurf {

/// Multidimensional trigonometric polynomial
///
///   psi(x) = sum_{k in support} c_k exp(j 2 pi k.x),   x in [0,1)^n.
///
/// Coefficients are stored densely in the support's canonical order. A
/// polynomial flagged real_valued must have a symmetric support with
/// c_{-k} = conj(c_k), which makes psi(x) real for every x. Immutable after
/// construction; evaluation is reentrant.
class TrigPolynomial {
public:
    /// Throws std::invalid_argument on a size mismatch, an all-zero
    /// coefficient vector, or a real_valued flag that the coefficients do
    /// not satisfy (checked to 1e-12 relative to the l1 norm).
    TrigPolynomial(FrequencySet support, Eigen::VectorXcd coeffs, bool real_valued = false);

    /// Constant polynomial on the zero-bandwidth support {0}.
    static TrigPolynomial constant(int dim, Complex value);

    const FrequencySet& support() const noexcept { return support_; }
    const Eigen::VectorXcd& coeffs() const noexcept { return coeffs_; }
    bool real_valued() const noexcept { return real_valued_; }
    int dim() const noexcept { return support_.dim(); }

    /// Direct summation, O(|support|) trig calls. Throws on a dimension
    /// mismatch.
    Complex eval(const Point& x) const;

    double coeff_l1_norm() const { return coeffs_.lpNorm<1>(); }
    double coeff_l2_norm() const { return coeffs_.norm(); }

private:
    FrequencySet support_;
    Eigen::VectorXcd coeffs_;
    bool real_valued_;
};

/// Lifted feature vector phi(x) = [exp(j 2 pi k.x)]_k in the bandwidth's
/// canonical order. Every entry has unit modulus.
Eigen::VectorXcd feature_map(const FrequencySet& bandwidth, const Point& x);

/// |bandwidth| x N feature matrix; column j is feature_map(bandwidth, X[j]).
/// Throws on an empty sample set.
Eigen::MatrixXcd feature_matrix(const FrequencySet& bandwidth, const SampleSet& X);

/// Product polynomial. Coefficients are the convolution of the factors'
/// coefficients; the support is the Minkowski sum of the factors' supports.
/// Real-valued iff both factors are.
TrigPolynomial multiply(const TrigPolynomial& a, const TrigPolynomial& b);

/// Dirichlet kernel of the given bandwidth:
///   k(x, y) = phi(x)^H phi(y) = sum_{k in bandwidth} exp(j 2 pi k.(y - x)).
/// Hermitian in (x, y); k(x, x) equals the bandwidth cardinality.
Complex dirichlet_kernel(const FrequencySet& bandwidth, const Point& x, const Point& y);

/// q with q(x) = p(x - t): each coefficient picks up the phase
/// exp(-j 2 pi k.t). Preserves real-valuedness.
TrigPolynomial translate(const TrigPolynomial& p, const Point& t);

/// Conjugate-symmetric Gaussian coefficient draw over a symmetric bandwidth;
/// the result is real-valued by construction and deterministic in the seed.
TrigPolynomial random_real_coefficients(const FrequencySet& bandwidth, std::uint64_t seed);

struct AnchoredPolynomial {
    TrigPolynomial poly;
    /// Random point where the polynomial was forced to vanish.
    Point zero_anchor;
};

/// random_real_coefficients plus an adjustment of the constant term so that
/// the polynomial vanishes at a uniformly random anchor point, guaranteeing
/// a nonempty zero set. Requires a symmetric bandwidth containing the zero
/// frequency.
AnchoredPolynomial random_real_polynomial(const FrequencySet& bandwidth, std::uint64_t seed);

}  // namespace trigsurf
