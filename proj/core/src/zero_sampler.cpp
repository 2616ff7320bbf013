#include "trigsurf/zero_sampler.hpp"

#include "trigsurf/rng.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace trigsurf {

namespace {

constexpr int kSliceGridNodes = 256;
constexpr int kMaxBisectIterations = 200;

// psi restricted to a 1-D slice collapses to a short trigonometric
// polynomial in the free coordinate; grid scans and bisection then cost a
// handful of trig calls per evaluation instead of |support|.
class SliceEval {
public:
    SliceEval(const TrigPolynomial& p, int axis, const Point& base) {
        const auto& support = p.support();
        m_min_ = 0;
        m_max_ = 0;
        for (const auto& k : support.indices()) {
            m_min_ = std::min(m_min_, k[axis]);
            m_max_ = std::max(m_max_, k[axis]);
        }
        coeffs_.assign(static_cast<std::size_t>(m_max_ - m_min_ + 1), Complex(0.0, 0.0));
        for (std::size_t i = 0; i < support.size(); ++i) {
            const auto& k = support[i];
            double phase = 0.0;
            for (std::size_t d = 0; d < k.size(); ++d) {
                if (static_cast<int>(d) == axis) continue;
                phase += k[d] * base[static_cast<Eigen::Index>(d)];
            }
            coeffs_[static_cast<std::size_t>(k[axis] - m_min_)] +=
                p.coeffs()[static_cast<Eigen::Index>(i)] * std::polar(1.0, kTwoPi * phase);
        }
    }

    double real_at(double t) const {
        Complex acc(0.0, 0.0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            acc += coeffs_[i] * std::polar(1.0, kTwoPi * (m_min_ + static_cast<int>(i)) * t);
        }
        return acc.real();
    }

private:
    int m_min_, m_max_;
    std::vector<Complex> coeffs_;
};

}  // namespace

SampleSet sample_zero_set(const TrigPolynomial& p, int count, double tol, std::uint64_t seed,
                          int max_attempts) {
    if (!p.real_valued()) {
        throw std::invalid_argument("sample_zero_set: polynomial must be real-valued");
    }
    if (count < 1) {
        throw std::invalid_argument("sample_zero_set: count must be >= 1");
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("sample_zero_set: tol must be positive");
    }
    const int n = p.dim();
    SampleSet out(n);

    for (int idx = 0; idx < count; ++idx) {
        // Independent substream per point; scheduling cannot change results.
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(idx)));
        bool found = false;

        for (int attempt = 0; attempt < max_attempts && !found; ++attempt) {
            const int axis = n == 1 ? 0 : rng.uniform_int(0, n - 1);
            Point x(n);
            for (int d = 0; d < n; ++d) x[d] = d == axis ? 0.0 : rng.uniform01();

            const SliceEval slice(p, axis, x);
            double values[kSliceGridNodes];
            for (int g = 0; g < kSliceGridNodes; ++g) {
                values[g] = slice.real_at(static_cast<double>(g) / kSliceGridNodes);
            }

            // psi is 1-periodic, so the interval wrapping back to node 0 counts.
            std::vector<int> brackets;
            for (int g = 0; g < kSliceGridNodes; ++g) {
                if (values[g] * values[(g + 1) % kSliceGridNodes] < 0.0) {
                    brackets.push_back(g);
                }
            }
            if (brackets.empty()) continue;

            const int g = brackets[static_cast<std::size_t>(
                rng.uniform_int(0, static_cast<int>(brackets.size()) - 1))];
            double lo = static_cast<double>(g) / kSliceGridNodes;
            double hi = static_cast<double>(g + 1) / kSliceGridNodes;
            double flo = values[g];
            double root = lo;
            for (int it = 0; it < kMaxBisectIterations; ++it) {
                root = 0.5 * (lo + hi);
                const double fm = slice.real_at(root);
                if (std::abs(fm) <= 0.5 * tol) break;
                if (flo * fm < 0.0) {
                    hi = root;
                } else {
                    lo = root;
                    flo = fm;
                }
            }

            if (root >= 1.0) root -= 1.0;  // wrap interval may touch the periodic seam
            x[axis] = root;
            // Certify against the full evaluator; the slice and the direct
            // sum differ only by summation roundoff.
            double residual = std::abs(p.eval(x));
            for (int it = 0; it < 64 && residual > tol; ++it) {
                const double fm = slice.real_at(0.5 * (lo + hi));
                if (flo * fm < 0.0) {
                    hi = 0.5 * (lo + hi);
                } else {
                    lo = 0.5 * (lo + hi);
                    flo = fm;
                }
                x[axis] = 0.5 * (lo + hi);
                residual = std::abs(p.eval(x));
            }
            if (residual <= tol) {
                if (x[axis] >= 1.0) x[axis] -= 1.0;
                out.add(x, 0, residual);
                found = true;
            }
        }
        if (!found) {
            throw SamplingError("sample_zero_set: no root found for point " +
                                    std::to_string(idx) + " after " +
                                    std::to_string(max_attempts) + " slices",
                                max_attempts);
        }
    }
    return out;
}

SampleSet trace_zero_set(const TrigPolynomial& p, int grid_resolution) {
    if (!p.real_valued()) {
        throw std::invalid_argument("trace_zero_set: polynomial must be real-valued");
    }
    const int n = p.dim();
    if (n != 2 && n != 3) {
        throw std::invalid_argument("trace_zero_set: dim must be 2 or 3");
    }
    if (grid_resolution < 2) {
        throw std::invalid_argument("trace_zero_set: grid resolution must be >= 2");
    }
    const int res = grid_resolution;
    const int nodes = res + 1;

    const auto node_count = static_cast<std::size_t>(n == 2 ? nodes * nodes : nodes * nodes * nodes);
    std::vector<double> values(node_count);
    const auto flat = [&](int i, int j, int k) {
        return n == 2 ? static_cast<std::size_t>(i) * nodes + j
                      : (static_cast<std::size_t>(i) * nodes + j) * nodes + k;
    };

    Point x(n);
    for (int i = 0; i < nodes; ++i) {
        x[0] = static_cast<double>(i) / res;
        for (int j = 0; j < nodes; ++j) {
            x[1] = static_cast<double>(j) / res;
            if (n == 2) {
                values[flat(i, j, 0)] = p.eval(x).real();
            } else {
                for (int k = 0; k < nodes; ++k) {
                    x[2] = static_cast<double>(k) / res;
                    values[flat(i, j, k)] = p.eval(x).real();
                }
            }
        }
    }

    SampleSet out(n);
    const auto emit_crossing = [&](const std::array<int, 3>& node, int axis, double v0, double v1) {
        if (v0 == 0.0) {
            // Node itself is a root; emitted once for the edge leaving it.
            Point c(n);
            for (int d = 0; d < n; ++d) c[d] = static_cast<double>(node[d]) / res;
            for (int d = 0; d < n; ++d) {
                if (c[d] >= 1.0) c[d] = 0.0;
            }
            out.add(c, 0, std::abs(p.eval(c)));
            return;
        }
        if (v0 * v1 >= 0.0) return;
        const double frac = v0 / (v0 - v1);
        Point c(n);
        for (int d = 0; d < n; ++d) c[d] = static_cast<double>(node[d]) / res;
        c[axis] += frac / res;
        for (int d = 0; d < n; ++d) {
            if (c[d] >= 1.0) c[d] = 0.0;  // exact-endpoint crossing wraps by periodicity
        }
        out.add(c, 0, std::abs(p.eval(c)));
    };

    for (int i = 0; i < nodes; ++i) {
        for (int j = 0; j < nodes; ++j) {
            const int kmax = n == 2 ? 1 : nodes;
            for (int k = 0; k < kmax; ++k) {
                const double v = values[flat(i, j, k)];
                if (i + 1 < nodes) emit_crossing({i, j, k}, 0, v, values[flat(i + 1, j, k)]);
                if (j + 1 < nodes) emit_crossing({i, j, k}, 1, v, values[flat(i, j + 1, k)]);
                if (n == 3 && k + 1 < nodes) {
                    emit_crossing({i, j, k}, 2, v, values[flat(i, j, k + 1)]);
                }
            }
        }
    }
    return out;
}

}  // namespace trigsurf
