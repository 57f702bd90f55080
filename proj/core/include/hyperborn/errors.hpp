// Copyright 2026 The hyperborn Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HYPERBORN_ERRORS_HPP
#define HYPERBORN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hyperborn {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A distance matrix violated one of the pseudometric axioms. `axiom` is one
/// of "diagonal", "symmetry", "triangle", "negative"; the indices name the
/// witnessing points (unused slots are -1).
struct MetricAxiomError : std::runtime_error {
    std::string axiom;
    int i, j, k;
    MetricAxiomError(std::string ax, int i_, int j_, int k_ = -1)
        : std::runtime_error("metric axiom violated: " + ax + " at (" +
                             std::to_string(i_) + "," + std::to_string(j_) +
                             (k_ >= 0 ? "," + std::to_string(k_) : "") + ")"),
          axiom(std::move(ax)), i(i_), j(j_), k(k_) {}
};

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidSpec : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonIdempotentTable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotLowerTopology : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotUpperTopology : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotIdempotentInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownTarget : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace hyperborn

#endif
