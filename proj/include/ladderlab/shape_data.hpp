#ifndef LADDERLAB_SHAPE_DATA_HPP
#define LADDERLAB_SHAPE_DATA_HPP

#include <functional>
#include <vector>

#include "ladderlab/common.hpp"

namespace ladderlab {

// Shape-invariance data attached to a model: parameter vector, its shift,
// the factor varphi(x) (proportional to eta'), and the forward/backward
// shift constants f_n, b_n with f_n b_{n-1}/2 = E_n.
struct ShapeData {
  std::vector<double> lambda;
  std::vector<double> delta;       // additive shift; q-shift models scale by q^delta
  double delta_prime = 0.0;        // extra constant in the q-shifted relation
  bool multiplicative_shift = false;
  std::function<Complex(Complex)> varphi;
  std::function<double(int)> f_n, b_n;
  bool has_shift_ops = false;      // true for the difference-operator models
};

}  // namespace ladderlab

#endif
