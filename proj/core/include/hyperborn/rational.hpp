// Copyright 2026 The hyperborn Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HYPERBORN_RATIONAL_HPP
#define HYPERBORN_RATIONAL_HPP

#include <cstdint>
#include <compare>
#include <numeric>
#include <string>

#include "hyperborn/errors.hpp"

namespace hyperborn {

/// Exact rational on int64. All distances and thresholds in this project are
/// tiny desk-scale values; intermediate products are taken in __int128 so the
/// comparisons stay exact.
class Rat {
public:
    constexpr Rat() : num_(0), den_(1) {}
    constexpr Rat(std::int64_t n) : num_(n), den_(1) {}
    Rat(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    /// Accepts "p/q", plain integers and decimal literals like "1.25".
    static Rat parse(const std::string& text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return den_ == 1; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw DomainError("division by zero rational");
        return Rat(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rat operator-() const { Rat r; r.num_ = -num_; r.den_ = den_; return r; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        __int128 l = static_cast<__int128>(a.num_) * b.den_;
        __int128 r = static_cast<__int128>(b.num_) * a.den_;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string str() const;

private:
    void normalize();
    std::int64_t num_;
    std::int64_t den_; // always > 0
};

/// Value of the extended half-line [0, +inf]; what a Hausdorff distance is.
class ExtRat {
public:
    ExtRat() : inf_(false), val_() {}
    ExtRat(Rat v) : inf_(false), val_(v) {}
    static ExtRat infinity() { ExtRat e; e.inf_ = true; return e; }

    bool is_infinite() const { return inf_; }
    const Rat& finite() const {
        if (inf_) throw DomainError("value is infinite");
        return val_;
    }

    friend bool operator==(const ExtRat& a, const ExtRat& b) {
        if (a.inf_ != b.inf_) return false;
        return a.inf_ || a.val_ == b.val_;
    }
    friend bool operator<(const ExtRat& a, const ExtRat& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.val_ < b.val_;
    }
    friend bool operator<=(const ExtRat& a, const ExtRat& b) { return a == b || a < b; }

    std::string str() const { return inf_ ? "inf" : val_.str(); }

private:
    bool inf_;
    Rat val_;
};

inline ExtRat max(const ExtRat& a, const ExtRat& b) { return a < b ? b : a; }

} // namespace hyperborn

#endif
