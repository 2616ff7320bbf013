#include "trigsurf/freq_set.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace trigsurf {

FrequencySet::FrequencySet(int dim, std::vector<FreqIndex> indices) : dim_(dim) {
    if (dim < 1) {
        throw std::invalid_argument("FrequencySet: dim must be >= 1");
    }
    if (indices.empty()) {
        throw std::invalid_argument("FrequencySet: index set must be nonempty");
    }
    for (const auto& k : indices) {
        if (static_cast<int>(k.size()) != dim) {
            throw std::invalid_argument("FrequencySet: index of length " +
                                        std::to_string(k.size()) + " in a set of dim " +
                                        std::to_string(dim));
        }
    }
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    indices_ = std::move(indices);

    for (const auto& k : indices_) {
        for (int v : k) {
            max_abs_ = std::max(max_abs_, std::abs(v));
        }
    }

    symmetric_ = true;
    for (const auto& k : indices_) {
        FreqIndex neg(k.size());
        for (std::size_t i = 0; i < k.size(); ++i) neg[i] = -k[i];
        if (!std::binary_search(indices_.begin(), indices_.end(), neg)) {
            symmetric_ = false;
            break;
        }
    }
}

FrequencySet FrequencySet::rect(int dim, const std::vector<int>& extents) {
    if (dim < 1) {
        throw std::invalid_argument("rect: dim must be >= 1");
    }
    if (static_cast<int>(extents.size()) != dim) {
        throw std::invalid_argument("rect: expected " + std::to_string(dim) + " extents, got " +
                                    std::to_string(extents.size()));
    }
    std::size_t total = 1;
    for (int e : extents) {
        if (e < 1 || e % 2 == 0) {
            throw std::invalid_argument("rect: extents must be odd and positive, got " +
                                        std::to_string(e));
        }
        total *= static_cast<std::size_t>(e);
    }

    std::vector<FreqIndex> indices;
    indices.reserve(total);
    FreqIndex k(dim);
    for (int i = 0; i < dim; ++i) k[i] = -(extents[i] - 1) / 2;
    // Odometer with the last axis fastest emits lexicographic order directly.
    while (true) {
        indices.push_back(k);
        int axis = dim - 1;
        while (axis >= 0) {
            if (k[axis] < (extents[axis] - 1) / 2) {
                ++k[axis];
                break;
            }
            k[axis] = -(extents[axis] - 1) / 2;
            --axis;
        }
        if (axis < 0) break;
    }
    return FrequencySet(dim, std::move(indices));
}

bool FrequencySet::contains(const FreqIndex& k) const {
    return std::binary_search(indices_.begin(), indices_.end(), k);
}

bool FrequencySet::contains_all(const FrequencySet& other) const {
    if (other.dim_ != dim_) return false;
    return std::all_of(other.indices_.begin(), other.indices_.end(),
                       [this](const FreqIndex& k) { return contains(k); });
}

std::optional<std::size_t> FrequencySet::position_of(const FreqIndex& k) const {
    auto it = std::lower_bound(indices_.begin(), indices_.end(), k);
    if (it == indices_.end() || *it != k) return std::nullopt;
    return static_cast<std::size_t>(it - indices_.begin());
}

FrequencySet minkowski_sum(const FrequencySet& a, const FrequencySet& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("minkowski_sum: dimension mismatch");
    }
    std::vector<FreqIndex> sums;
    sums.reserve(a.size() * b.size());
    for (const auto& ka : a.indices()) {
        for (const auto& kb : b.indices()) {
            FreqIndex s(ka.size());
            for (std::size_t i = 0; i < s.size(); ++i) s[i] = ka[i] + kb[i];
            sums.push_back(std::move(s));
        }
    }
    return FrequencySet(a.dim(), std::move(sums));
}

FrequencySet shift_set(const FrequencySet& gamma, const FrequencySet& lambda) {
    if (gamma.dim() != lambda.dim()) {
        throw std::invalid_argument("shift_set: dimension mismatch");
    }
    if (!gamma.contains_all(lambda)) {
        throw std::invalid_argument("shift_set: lambda must be contained in gamma");
    }
    const int n = gamma.dim();

    // A valid shift must map lambda's bounding box inside gamma's.
    std::vector<int> lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
        int gmin = gamma[0][i], gmax = gamma[0][i];
        for (const auto& k : gamma.indices()) {
            gmin = std::min(gmin, k[i]);
            gmax = std::max(gmax, k[i]);
        }
        int lmin = lambda[0][i], lmax = lambda[0][i];
        for (const auto& k : lambda.indices()) {
            lmin = std::min(lmin, k[i]);
            lmax = std::max(lmax, k[i]);
        }
        lo[i] = gmin - lmin;
        hi[i] = gmax - lmax;
    }

    std::vector<FreqIndex> shifts;
    FreqIndex t(lo.begin(), lo.end());
    while (true) {
        bool ok = true;
        FreqIndex shifted(n);
        for (const auto& k : lambda.indices()) {
            for (int i = 0; i < n; ++i) shifted[i] = k[i] + t[i];
            if (!gamma.contains(shifted)) {
                ok = false;
                break;
            }
        }
        if (ok) shifts.push_back(t);

        int axis = n - 1;
        while (axis >= 0) {
            if (t[axis] < hi[axis]) {
                ++t[axis];
                break;
            }
            t[axis] = lo[axis];
            --axis;
        }
        if (axis < 0) break;
    }
    // t = 0 is always admissible (lambda is inside gamma), so shifts is nonempty.
    return FrequencySet(n, std::move(shifts));
}

}  // namespace trigsurf
