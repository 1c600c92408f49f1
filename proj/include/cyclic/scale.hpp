#ifndef CYCLIC_SCALE_HPP
#define CYCLIC_SCALE_HPP

#include <cstdint>

#include "cyclic/prec_real.hpp"

namespace cyclic {

enum class ScaleMode { integer_x, synthetic };

// Window geometry for one evaluation point.
//   lambda = log log x, L = log lambda,
//   y = lambda / (2L), z = lambda * exp(sqrt(L)).
// Synthetic points fix L directly and take lambda = exp(L).
struct ScalePoint {
  ScaleMode mode = ScaleMode::integer_x;
  std::uint64_t x = 0;  // 0 in synthetic mode
  PrecReal lambda;
  PrecReal L;
  PrecReal y;
  PrecReal z;
};

ScalePoint make_scale(std::uint64_t x, long precision_bits = 256);

ScalePoint make_scale_synthetic(const PrecReal& L, long precision_bits = 256);

}  // namespace cyclic

#endif
