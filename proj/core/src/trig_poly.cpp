#include "trigsurf/trig_poly.hpp"

#include "trigsurf/rng.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace trigsurf {

namespace {

FreqIndex negated(const FreqIndex& k) {
    FreqIndex neg(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) neg[i] = -k[i];
    return neg;
}

double dot(const FreqIndex& k, const Point& x) {
    double s = 0.0;
    for (std::size_t i = 0; i < k.size(); ++i) s += k[i] * x[static_cast<Eigen::Index>(i)];
    return s;
}

}  // namespace

TrigPolynomial::TrigPolynomial(FrequencySet support, Eigen::VectorXcd coeffs, bool real_valued)
    : support_(std::move(support)), coeffs_(std::move(coeffs)), real_valued_(real_valued) {
    if (static_cast<std::size_t>(coeffs_.size()) != support_.size()) {
        throw std::invalid_argument("TrigPolynomial: " + std::to_string(coeffs_.size()) +
                                    " coefficients for a support of size " +
                                    std::to_string(support_.size()));
    }
    if (coeffs_.norm() == 0.0) {
        throw std::invalid_argument("TrigPolynomial: coefficients must not all be zero");
    }
    if (real_valued_) {
        if (!support_.is_symmetric()) {
            throw std::invalid_argument(
                "TrigPolynomial: real_valued requires a symmetric support");
        }
        const double tol = 1e-12 * coeffs_.lpNorm<1>();
        for (std::size_t i = 0; i < support_.size(); ++i) {
            const auto j = support_.position_of(negated(support_[i]));
            if (std::abs(coeffs_[static_cast<Eigen::Index>(i)] -
                         std::conj(coeffs_[static_cast<Eigen::Index>(*j)])) > tol) {
                throw std::invalid_argument(
                    "TrigPolynomial: real_valued requires conjugate-symmetric coefficients");
            }
        }
    }
}

TrigPolynomial TrigPolynomial::constant(int dim, Complex value) {
    FrequencySet zero(dim, {FreqIndex(dim, 0)});
    Eigen::VectorXcd c(1);
    c[0] = value;
    return TrigPolynomial(std::move(zero), std::move(c), value.imag() == 0.0);
}

Complex TrigPolynomial::eval(const Point& x) const {
    if (x.size() != dim()) {
        throw std::invalid_argument("TrigPolynomial::eval: point of dim " +
                                    std::to_string(x.size()) + ", polynomial of dim " +
                                    std::to_string(dim()));
    }
    Complex acc(0.0, 0.0);
    for (std::size_t i = 0; i < support_.size(); ++i) {
        acc += coeffs_[static_cast<Eigen::Index>(i)] *
               std::polar(1.0, kTwoPi * dot(support_[i], x));
    }
    return acc;
}

Eigen::VectorXcd feature_map(const FrequencySet& bandwidth, const Point& x) {
    if (x.size() != bandwidth.dim()) {
        throw std::invalid_argument("feature_map: dimension mismatch");
    }
    Eigen::VectorXcd phi(static_cast<Eigen::Index>(bandwidth.size()));
    for (std::size_t i = 0; i < bandwidth.size(); ++i) {
        phi[static_cast<Eigen::Index>(i)] = std::polar(1.0, kTwoPi * dot(bandwidth[i], x));
    }
    return phi;
}

Eigen::MatrixXcd feature_matrix(const FrequencySet& bandwidth, const SampleSet& X) {
    if (X.empty()) {
        throw std::invalid_argument("feature_matrix: empty sample set");
    }
    if (X.dim() != bandwidth.dim()) {
        throw std::invalid_argument("feature_matrix: dimension mismatch");
    }
    Eigen::MatrixXcd phi(static_cast<Eigen::Index>(bandwidth.size()),
                         static_cast<Eigen::Index>(X.size()));
    for (std::size_t j = 0; j < X.size(); ++j) {
        phi.col(static_cast<Eigen::Index>(j)) = feature_map(bandwidth, X.point(j));
    }
    return phi;
}

TrigPolynomial multiply(const TrigPolynomial& a, const TrigPolynomial& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("multiply: dimension mismatch");
    }
    FrequencySet support = minkowski_sum(a.support(), b.support());
    Eigen::VectorXcd coeffs = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(support.size()));
    FreqIndex sum(a.dim());
    for (std::size_t i = 0; i < a.support().size(); ++i) {
        const auto& ka = a.support()[i];
        for (std::size_t j = 0; j < b.support().size(); ++j) {
            const auto& kb = b.support()[j];
            for (std::size_t d = 0; d < sum.size(); ++d) sum[d] = ka[d] + kb[d];
            const auto pos = support.position_of(sum);
            coeffs[static_cast<Eigen::Index>(*pos)] +=
                a.coeffs()[static_cast<Eigen::Index>(i)] * b.coeffs()[static_cast<Eigen::Index>(j)];
        }
    }
    return TrigPolynomial(std::move(support), std::move(coeffs),
                          a.real_valued() && b.real_valued());
}

Complex dirichlet_kernel(const FrequencySet& bandwidth, const Point& x, const Point& y) {
    if (x.size() != bandwidth.dim() || y.size() != bandwidth.dim()) {
        throw std::invalid_argument("dirichlet_kernel: dimension mismatch");
    }
    const Point diff = y - x;
    Complex acc(0.0, 0.0);
    for (std::size_t i = 0; i < bandwidth.size(); ++i) {
        acc += std::polar(1.0, kTwoPi * dot(bandwidth[i], diff));
    }
    return acc;
}

TrigPolynomial translate(const TrigPolynomial& p, const Point& t) {
    if (t.size() != p.dim()) {
        throw std::invalid_argument("translate: dimension mismatch");
    }
    Eigen::VectorXcd coeffs = p.coeffs();
    for (std::size_t i = 0; i < p.support().size(); ++i) {
        coeffs[static_cast<Eigen::Index>(i)] *= std::polar(1.0, -kTwoPi * dot(p.support()[i], t));
    }
    return TrigPolynomial(p.support(), std::move(coeffs), p.real_valued());
}

TrigPolynomial random_real_coefficients(const FrequencySet& bandwidth, std::uint64_t seed) {
    if (!bandwidth.is_symmetric()) {
        throw std::invalid_argument("random_real_coefficients: bandwidth must be symmetric");
    }
    Rng rng(mix_seed(seed, 0));
    const auto n = static_cast<Eigen::Index>(bandwidth.size());
    Eigen::VectorXcd coeffs(n);
    const FreqIndex zero(bandwidth.dim(), 0);
    // Draw one member of each +-k pair (whichever comes first in canonical
    // order) and mirror its conjugate; the fixed order makes the draw
    // sequence deterministic.
    for (std::size_t i = 0; i < bandwidth.size(); ++i) {
        const auto& k = bandwidth[i];
        if (k == zero) {
            coeffs[static_cast<Eigen::Index>(i)] = Complex(rng.normal(), 0.0);
            continue;
        }
        const FreqIndex neg = negated(k);
        if (neg < k) continue;  // partner was already drawn
        const double re = rng.normal();
        const double im = rng.normal();
        const Complex c(re / std::sqrt(2.0), im / std::sqrt(2.0));
        coeffs[static_cast<Eigen::Index>(i)] = c;
        coeffs[static_cast<Eigen::Index>(*bandwidth.position_of(neg))] = std::conj(c);
    }
    return TrigPolynomial(bandwidth, std::move(coeffs), true);
}

AnchoredPolynomial random_real_polynomial(const FrequencySet& bandwidth, std::uint64_t seed) {
    const FreqIndex zero(bandwidth.dim(), 0);
    const auto zero_pos = bandwidth.position_of(zero);
    if (!zero_pos) {
        throw std::invalid_argument(
            "random_real_polynomial: bandwidth must contain the zero frequency");
    }
    TrigPolynomial base = random_real_coefficients(bandwidth, seed);
    const auto c0_index = static_cast<Eigen::Index>(*zero_pos);

    // RMS of the oscillating part, exact by Parseval.
    const double osc_rms = std::sqrt(std::max(
        0.0, base.coeffs().squaredNorm() - std::norm(base.coeffs()[c0_index])));

    // Shifting the constant term by -psi(anchor) pins the zero set through
    // the anchor; psi(anchor) is real, so conjugate symmetry is untouched.
    // Anchors where the field sits near its extremes are redrawn: they
    // produce near-extremal level sets (a few tiny islands) whose on-surface
    // feature matrices are numerically rank-deficient. Keeping the anchored
    // constant term within half the oscillation RMS keeps the level typical.
    Rng rng(mix_seed(seed, 1));
    Point anchor(bandwidth.dim());
    double shift = 0.0;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        for (int i = 0; i < bandwidth.dim(); ++i) anchor[i] = rng.uniform01();
        shift = base.eval(anchor).real();
        const double anchored_c0 = base.coeffs()[c0_index].real() - shift;
        if (std::abs(anchored_c0) <= 0.5 * osc_rms) break;
    }

    Eigen::VectorXcd coeffs = base.coeffs();
    coeffs[c0_index] -= shift;
    return AnchoredPolynomial{TrigPolynomial(bandwidth, std::move(coeffs), true), anchor};
}

}  // namespace trigsurf
