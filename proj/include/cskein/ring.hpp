#ifndef CSKEIN_RING_HPP
#define CSKEIN_RING_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace cskein {

using Int = mpz_class;

// Coefficient ring of a computation context. Fixed per context; mixing
// rings in one expression is an error.
enum class CoeffRing { Integers, IntegersMod2 };

inline Int ring_reduce(Int v, CoeffRing ring) {
    if (ring == CoeffRing::IntegersMod2) {
        v = v % 2;
        if (v < 0) v += 2;
    }
    return v;
}

inline std::string ring_name(CoeffRing r) {
    return r == CoeffRing::Integers ? "Z" : "Z2";
}

struct ring_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace cskein

#endif
