#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rhomax {

// All lattice, invariant and census arithmetic runs on GMP types; machine
// integers only appear where a value is structurally small (Dynkin indices,
// exponents, copy counts).
using Int = mpz_class;
using Rat = mpq_class;

struct Error : std::runtime_error {
    std::string kind;
    Error(std::string k, const std::string& msg)
        : std::runtime_error(msg), kind(std::move(k)) {}
};

inline std::string str(const Int& z) { return z.get_str(); }
inline std::string str(const Rat& q) { return q.get_str(); }

inline bool fits_int64(const Int& z) {
    static const Int lo(std::to_string(INT64_MIN));
    static const Int hi(std::to_string(INT64_MAX));
    return z >= lo && z <= hi;
}

inline long to_ll(const Int& z) {
    if (!fits_int64(z)) throw Error("overflow", "integer too large for a machine index: " + z.get_str());
    return std::stoll(z.get_str());
}

// Accepts "p", "-p", "p/q" with q > 0 after normalization.
inline Rat parse_rational(const std::string& s) {
    if (s.empty()) throw Error("parse", "empty rational literal");
    try {
        Rat q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw Error("parse", "bad rational literal: " + s);
    }
}

}  // namespace rhomax
