// Copyright 2026 The hyperborn Authors
// SPDX-License-Identifier: Apache-2.0

#include "hyperborn/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace hyperborn {

void Rat::normalize() {
    if (den_ == 0) throw DomainError("rational with zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
    if (num_ == 0) den_ = 1;
}

Rat Rat::parse(const std::string& text) {
    std::size_t begin = text.find_first_not_of(" \t");
    std::size_t end = text.find_last_not_of(" \t");
    if (begin == std::string::npos) throw ParseError("empty rational literal");
    std::string s = text.substr(begin, end - begin + 1);

    auto parse_int = [](const std::string& t) -> std::int64_t {
        if (t.empty()) throw ParseError("empty integer in rational literal");
        std::size_t pos = 0;
        std::int64_t v;
        try {
            v = std::stoll(t, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad rational literal: '" + t + "'");
        }
        if (pos != t.size()) throw ParseError("bad rational literal: '" + t + "'");
        return v;
    };

    std::size_t slash = s.find('/');
    if (slash != std::string::npos) {
        std::int64_t n = parse_int(s.substr(0, slash));
        std::int64_t d = parse_int(s.substr(slash + 1));
        if (d == 0) throw ParseError("zero denominator in '" + s + "'");
        return Rat(n, d);
    }
    std::size_t dot = s.find('.');
    if (dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        if (frac.empty()) throw ParseError("bad decimal literal: '" + s + "'");
        for (char c : frac)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError("bad decimal literal: '" + s + "'");
        bool neg = !whole.empty() && whole[0] == '-';
        std::string wdigits = neg ? whole.substr(1) : whole;
        if (wdigits.empty()) wdigits = "0";
        std::int64_t w = parse_int(wdigits);
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        std::int64_t f = parse_int(frac);
        std::int64_t n = w * den + f;
        if (neg) n = -n;
        return Rat(n, den);
    }
    return Rat(parse_int(s));
}

std::string Rat::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

} // namespace hyperborn
