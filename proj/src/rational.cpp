#include "gpi/rational.hpp"

#include <stdexcept>

namespace gpi {

Rat rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational literal: '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

RatVec zero_vec(int n) { return RatVec(static_cast<size_t>(n), Rat(0)); }

bool is_zero_vec(const RatVec& v) {
  for (const Rat& x : v)
    if (!is_zero(x)) return false;
  return true;
}

}  // namespace gpi
