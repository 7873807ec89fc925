#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace gpi {

// Exact arbitrary-precision rational scalar. Every computation in the
// library is over these; there is no floating point anywhere.
using Rat = mpq_class;

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
// or zero denominator.
Rat rat_parse(const std::string& s);

// Canonical form: "p" for integers, "p/q" otherwise, q > 0, gcd(p,q)=1.
std::string rat_str(const Rat& q);

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

RatVec zero_vec(int n);
bool is_zero_vec(const RatVec& v);

}  // namespace gpi
