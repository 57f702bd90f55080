// Copyright 2026 The hyperborn Authors
// SPDX-License-Identifier: Apache-2.0

#include "hyperborn/space.hpp"

#include <algorithm>

#include "hyperborn/errors.hpp"

namespace hyperborn {

FiniteSpace FiniteSpace::make(std::vector<std::string> labels,
                              std::vector<std::vector<Rat>> dist) {
    const int n = static_cast<int>(labels.size());
    if (n < 1 || n > 5)
        throw ParseError("point count must be between 1 and 5, got " + std::to_string(n));
    if (static_cast<int>(dist.size()) != n)
        throw ParseError("distance matrix must have one row per point");
    for (const auto& row : dist)
        if (static_cast<int>(row.size()) != n)
            throw ParseError("distance matrix rows must match point count");

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (dist[i][j].is_negative()) throw MetricAxiomError("negative", i, j);
    for (int i = 0; i < n; ++i)
        if (!dist[i][i].is_zero()) throw MetricAxiomError("diagonal", i, i);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (dist[i][j] != dist[j][i]) throw MetricAxiomError("symmetry", i, j);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (dist[i][j] + dist[j][k] < dist[i][k])
                    throw MetricAxiomError("triangle", i, j, k);

    FiniteSpace s;
    s.n_ = n;
    s.labels_ = std::move(labels);
    s.dist_.reserve(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s.dist_.push_back(dist[i][j]);

    for (const Rat& d : s.dist_)
        if (!d.is_zero() && std::find(s.thresholds_.begin(), s.thresholds_.end(), d) ==
                                s.thresholds_.end())
            s.thresholds_.push_back(d);
    std::sort(s.thresholds_.begin(), s.thresholds_.end());

    s.band_reps_ = s.thresholds_;
    if (s.band_reps_.empty())
        s.band_reps_.push_back(Rat(1));
    else
        s.band_reps_.push_back(s.thresholds_.back() + Rat(1));

    s.zero_class_.resize(n);
    for (int i = 0; i < n; ++i) {
        Subset z = 0;
        for (int j = 0; j < n; ++j)
            if (s.dist(i, j).is_zero()) z |= Subset{1} << j;
        s.zero_class_[i] = z;
    }
    return s;
}

Subset FiniteSpace::saturate(Subset a) const {
    Subset r = 0;
    for (int i = 0; i < n_; ++i)
        if ((a >> i) & 1u) r |= zero_class_[i];
    return r;
}

std::string FiniteSpace::subset_str(Subset a) const {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < n_; ++i)
        if ((a >> i) & 1u) {
            if (!first) out += ",";
            out += labels_[i];
            first = false;
        }
    return out + "}";
}

ExtRat point_set_dist(const FiniteSpace& space, int x, Subset a) {
    if (a == 0) return ExtRat::infinity();
    bool have = false;
    Rat best;
    for (int i = 0; i < space.size(); ++i)
        if ((a >> i) & 1u) {
            const Rat& d = space.dist(x, i);
            if (!have || d < best) { best = d; have = true; }
        }
    return ExtRat(best);
}

Subset enlarge(const FiniteSpace& space, Subset a, const Rat& eps) {
    if (!(Rat(0) < eps)) throw DomainError("enlargement radius must be positive");
    if (a == 0) return 0;
    Subset r = 0;
    for (int x = 0; x < space.size(); ++x) {
        ExtRat d = point_set_dist(space, x, a);
        if (!d.is_infinite() && d.finite() < eps) r |= Subset{1} << x;
    }
    return r;
}

ExtRat hausdorff(const FiniteSpace& space, Subset a, Subset b) {
    if (a == 0 && b == 0) return ExtRat(Rat(0));
    if (a == 0 || b == 0) return ExtRat::infinity();
    ExtRat worst(Rat(0));
    for (int x = 0; x < space.size(); ++x) {
        if ((a >> x) & 1u) worst = max(worst, point_set_dist(space, x, b));
        if ((b >> x) & 1u) worst = max(worst, point_set_dist(space, x, a));
    }
    return worst;
}

} // namespace hyperborn
