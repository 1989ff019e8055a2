#include "logsplit/numeric.hpp"

#include <stdexcept>

namespace logsplit {

Rat rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("rat: bad literal '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("rat: zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integer(const Rat& q) { return q.get_den() == 1; }

long to_long(const Int& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer out of long range");
  return v.get_si();
}

Int binomial2(const Int& n) {
  if (n < 2) return 0;
  return n * (n - 1) / 2;
}

}  // namespace logsplit
