#pragma once

#include "trigsurf/types.hpp"

#include <cstddef>
#include <vector>

namespace trigsurf {

/// Ordered list of points in [0,1)^n. Each point carries a provenance tag
/// (which component surface it was drawn from) and the |psi| residual the
/// root finder achieved for it.
class SampleSet {
public:
    explicit SampleSet(int dim);

    int dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }

    /// Appends one point. Throws std::invalid_argument if the point has the
    /// wrong dimension or any coordinate outside [0, 1).
    void add(const Point& x, int component, double residual);

    /// Appends all points of `other`, re-tagged with `component`.
    void append(const SampleSet& other, int component);

    /// The first `n` points, in order.
    SampleSet head(std::size_t n) const;

    const Point& point(std::size_t i) const { return points_[i]; }
    int component(std::size_t i) const { return components_[i]; }
    double residual(std::size_t i) const { return residuals_[i]; }

    const std::vector<Point>& points() const noexcept { return points_; }
    const std::vector<int>& components() const noexcept { return components_; }
    const std::vector<double>& residuals() const noexcept { return residuals_; }

    double max_residual() const;

    friend bool operator==(const SampleSet& a, const SampleSet& b);

private:
    int dim_;
    std::vector<Point> points_;
    std::vector<int> components_;
    std::vector<double> residuals_;
};

}  // namespace trigsurf
