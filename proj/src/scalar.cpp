#include "cuntzlab/scalar.hpp"

namespace cuntzlab {

std::string Scalar::to_string() const {
  if (is_real()) return re_.get_str();
  if (sgn(re_) == 0) return im_.get_str() + 'i';
  std::string out = re_.get_str();
  out += sgn(im_) < 0 ? '-' : '+';
  out += Rational(abs(im_)).get_str();
  out += 'i';
  return out;
}

}  // namespace cuntzlab
