#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace loccdisc {

// Exact rational scalar. Every amplitude, inner product and probability in
// this library is a Rat; no floating point appears anywhere in core/.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// "p/q" (or plain "p") with canonical sign, e.g. "-1/2", "0", "3".
inline std::string ratToString(const Rat& q) { return q.get_str(); }

inline Rat ratFromString(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("ratFromString: cannot parse '" + s + "'");
    q.canonicalize();
    return q;
}

using RatMatrix = std::vector<std::vector<Rat>>;

}  // namespace loccdisc
