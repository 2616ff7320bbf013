#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace trigsurf {

/// Integer frequency vector. Its length equals the ambient dimension.
using FreqIndex = std::vector<int>;

/// A finite set of integer frequency vectors in n dimensions, kept
/// duplicate-free and in lexicographic order. The canonical order fixes the
/// row order of feature matrices and the coefficient layout everywhere else,
/// so it must never change after construction. Instances are immutable and
/// safe to share across threads.
class FrequencySet {
public:
    /// Sorts and deduplicates `indices`. Throws std::invalid_argument if
    /// `dim` < 1, the set is empty, or any index has the wrong length.
    FrequencySet(int dim, std::vector<FreqIndex> indices);

    /// Centered rectangle {k : |k_i| <= (extent_i - 1) / 2}. Extents must be
    /// odd and positive so the set is symmetric about the origin; the
    /// cardinality is the product of the extents.
    static FrequencySet rect(int dim, const std::vector<int>& extents);

    int dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return indices_.size(); }
    const std::vector<FreqIndex>& indices() const noexcept { return indices_; }
    const FreqIndex& operator[](std::size_t i) const { return indices_[i]; }

    bool contains(const FreqIndex& k) const;
    bool contains_all(const FrequencySet& other) const;

    /// Position of `k` in canonical order, or nullopt if absent.
    std::optional<std::size_t> position_of(const FreqIndex& k) const;

    /// True when k is in the set iff -k is. Real-valued polynomials require
    /// a symmetric support.
    bool is_symmetric() const noexcept { return symmetric_; }

    /// Largest |k_i| over all indices and axes.
    int max_abs_coordinate() const noexcept { return max_abs_; }

    friend bool operator==(const FrequencySet& a, const FrequencySet& b) {
        return a.dim_ == b.dim_ && a.indices_ == b.indices_;
    }

private:
    int dim_ = 0;
    std::vector<FreqIndex> indices_;
    bool symmetric_ = false;
    int max_abs_ = 0;
};

/// {k_a + k_b : k_a in a, k_b in b}, deduplicated. This is the coefficient
/// support of a polynomial product.
FrequencySet minkowski_sum(const FrequencySet& a, const FrequencySet& b);

/// The shift set: all integer translates t with (lambda + t) contained in
/// gamma. Requires lambda to be a subset of gamma; the zero shift is then
/// always a member.
FrequencySet shift_set(const FrequencySet& gamma, const FrequencySet& lambda);

}  // namespace trigsurf
