// Copyright 2026 The hyperborn Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HYPERBORN_SPACE_HPP
#define HYPERBORN_SPACE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hyperborn/rational.hpp"

namespace hyperborn {

/// A subset of the ground set, as a bitmask over point indices. With at most
/// 5 points everything fits comfortably; equality of masks is extensional
/// equality of subsets.
using Subset = std::uint32_t;

/// A family of subsets, as a bitmask over subset masks: bit m is set iff the
/// subset with mask m belongs to the family. Needs 2^|X| <= 64, i.e. |X| <= 6.
using Family = std::uint64_t;

inline int popcount(Subset s) { return __builtin_popcount(s); }
inline int family_size(Family f) { return __builtin_popcountll(f); }
inline bool subset_in(Family f, Subset s) { return (f >> s) & 1u; }
inline Family family_with(Family f, Subset s) { return f | (Family{1} << s); }
inline bool family_subset(Family a, Family b) { return (a & ~b) == 0; }

/// Finite pseudometric space with an exact rational distance matrix.
/// Immutable after construction; `make_space` validates the axioms.
class FiniteSpace {
public:
    static FiniteSpace make(std::vector<std::string> labels,
                            std::vector<std::vector<Rat>> dist);

    int size() const { return n_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const Rat& dist(int i, int j) const { return dist_[i * n_ + j]; }

    Subset full_set() const { return (n_ == 32) ? ~Subset{0} : ((Subset{1} << n_) - 1); }
    int hyper_size() const { return 1 << n_; }
    Family full_hyperspace() const {
        return (hyper_size() == 64) ? ~Family{0} : ((Family{1} << hyper_size()) - 1);
    }
    Family family_complement(Family f) const { return full_hyperspace() & ~f; }

    /// Strictly increasing distinct positive matrix entries. Enlargements are
    /// constant in eps on each band (t_i, t_{i+1}]; this list is what turns
    /// "for all eps > 0" into a finite check.
    const std::vector<Rat>& critical_bands() const { return thresholds_; }

    /// One representative eps per band: each threshold t_i represents the band
    /// (t_{i-1}, t_i], and the last entry represents (t_max, inf). Never empty.
    const std::vector<Rat>& band_reps() const { return band_reps_; }

    /// Representative of the sub-minimal band (0, t_1].
    const Rat& sub_minimal_eps() const { return band_reps_.front(); }

    /// Points at distance zero from point i (its zero-class plus i itself).
    Subset zero_class(int i) const { return zero_class_[i]; }

    /// {x | d(x, A) = 0}; the common value of all sub-minimal enlargements.
    Subset saturate(Subset a) const;

    std::string subset_str(Subset a) const;

private:
    FiniteSpace() = default;
    int n_ = 0;
    std::vector<std::string> labels_;
    std::vector<Rat> dist_; // row-major n*n
    std::vector<Rat> thresholds_;
    std::vector<Rat> band_reps_;
    std::vector<Subset> zero_class_;
};

/// min_{a in A} d(x, a); +inf when A is empty.
ExtRat point_set_dist(const FiniteSpace& space, int x, Subset a);

/// {x | d(x, A) < eps}, strict inequality. enlarge(empty, eps) is empty.
Subset enlarge(const FiniteSpace& space, Subset a, const Rat& eps);

/// Extended Hausdorff distance: max of the two directed point-set distances;
/// 0 when both sets are empty, +inf when exactly one is.
ExtRat hausdorff(const FiniteSpace& space, Subset a, Subset b);

} // namespace hyperborn

#endif
