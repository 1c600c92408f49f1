#include "cyclic/scale.hpp"

#include "cyclic/errors.hpp"

namespace cyclic {

namespace {

// Requires L > 0 so y and z are defined.
void fill_window(ScalePoint& pt, const PrecReal& lambda, const PrecReal& L,
                 long work, long out_prec) {
  if (L.sign() <= 0) throw usage_error("scale point needs log log log x > 0");
  PrecReal y = lambda / (L * PrecReal::from_uint(2, work));
  PrecReal z = lambda * exp(sqrt(L));
  pt.lambda = lambda.with_precision(out_prec);
  pt.L = L.with_precision(out_prec);
  pt.y = y.with_precision(out_prec);
  pt.z = z.with_precision(out_prec);
}

}  // namespace

ScalePoint make_scale(std::uint64_t x, long precision_bits) {
  if (x < 16) throw usage_error("scale point needs x >= 16");
  long work = precision_bits + 32;
  ScalePoint pt;
  pt.mode = ScaleMode::integer_x;
  pt.x = x;
  PrecReal lambda = log(log(PrecReal::from_uint(x, work)));
  fill_window(pt, lambda, log(lambda), work, precision_bits);
  return pt;
}

ScalePoint make_scale_synthetic(const PrecReal& L, long precision_bits) {
  long work = precision_bits + 32;
  ScalePoint pt;
  pt.mode = ScaleMode::synthetic;
  pt.x = 0;
  PrecReal L_w = L.with_precision(work);
  if (L_w.sign() <= 0)
    throw usage_error("synthetic scale needs positive log log log x");
  fill_window(pt, exp(L_w), L_w, work, precision_bits);
  return pt;
}

}  // namespace cyclic
