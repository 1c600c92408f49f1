#ifndef CYCLIC_QUADRATURE_HPP
#define CYCLIC_QUADRATURE_HPP

#include <functional>

#include "cyclic/prec_real.hpp"

namespace cyclic {

// Integrand evaluated at a point of the accumulator's precision.
using Integrand = std::function<PrecReal(const PrecReal&)>;

inline constexpr long kDefaultPanelBudget = 20000;

// Adaptive Gauss-Legendre on [a, b], absolute error target abs_tol.
// Deterministic: fixed order, depth-first left-to-right refinement.
// Throws capacity_error when the panel budget runs out before convergence.
PrecReal integrate(const Integrand& fn, const PrecReal& a, const PrecReal& b,
                   const PrecReal& abs_tol, long panel_budget = kDefaultPanelBudget);

}  // namespace cyclic

#endif
