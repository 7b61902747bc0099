#include "gsw/rational.hpp"

#include <cctype>

namespace gsw {

Rat rat_from_string(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw input_error("empty rational");
  if (t.find('/') == std::string::npos) t += "/1";
  Rat r;
  if (r.set_str(t, 10) != 0) throw input_error("bad rational '" + s + "'");
  if (r.get_den() == 0) throw input_error("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_pow(const Rat& base, long exp) {
  if (exp == 0) return Rat(1);
  Rat b = exp < 0 ? Rat(1) / base : base;
  unsigned long n = exp < 0 ? static_cast<unsigned long>(-(exp + 1)) + 1
                            : static_cast<unsigned long>(exp);
  Rat acc(1);
  while (n) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

Grade Grade::pow(unsigned long e) const {
  Rat acc(1), b = v_;
  while (e) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return Grade(acc);
}

}  // namespace gsw
