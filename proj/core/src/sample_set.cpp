#include "trigsurf/sample_set.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace trigsurf {

SampleSet::SampleSet(int dim) : dim_(dim) {
    if (dim < 1) {
        throw std::invalid_argument("SampleSet: dim must be >= 1");
    }
}

void SampleSet::add(const Point& x, int component, double residual) {
    if (x.size() != dim_) {
        throw std::invalid_argument("SampleSet: point of dim " + std::to_string(x.size()) +
                                    " added to a set of dim " + std::to_string(dim_));
    }
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (!(x[i] >= 0.0 && x[i] < 1.0)) {
            throw std::invalid_argument("SampleSet: coordinate " + std::to_string(x[i]) +
                                        " outside [0,1)");
        }
    }
    points_.push_back(x);
    components_.push_back(component);
    residuals_.push_back(residual);
}

void SampleSet::append(const SampleSet& other, int component) {
    if (other.dim_ != dim_) {
        throw std::invalid_argument("SampleSet: dimension mismatch in append");
    }
    for (std::size_t i = 0; i < other.size(); ++i) {
        add(other.point(i), component, other.residual(i));
    }
}

SampleSet SampleSet::head(std::size_t n) const {
    SampleSet out(dim_);
    const std::size_t m = std::min(n, size());
    for (std::size_t i = 0; i < m; ++i) {
        out.add(points_[i], components_[i], residuals_[i]);
    }
    return out;
}

double SampleSet::max_residual() const {
    double m = 0.0;
    for (double r : residuals_) m = std::max(m, r);
    return m;
}

bool operator==(const SampleSet& a, const SampleSet& b) {
    if (a.dim_ != b.dim_ || a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if ((a.points_[i].array() != b.points_[i].array()).any()) return false;
    }
    return a.components_ == b.components_ && a.residuals_ == b.residuals_;
}

}  // namespace trigsurf
