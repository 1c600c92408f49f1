#include "cyclic/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "cyclic/errors.hpp"

namespace cyclic {

namespace {

constexpr int kOrder = 24;

struct Rule {
  std::vector<PrecReal> nodes;    // on (0, 1), symmetric half omitted
  std::vector<PrecReal> weights;  // matching weights, times 1 (sum over both halves = 2)
};

// Legendre P_n and P_{n-1} at x via the three-term recurrence.
void legendre_pair(int n, const PrecReal& x, PrecReal& pn, PrecReal& pn1) {
  long prec = x.precision();
  PrecReal p0 = PrecReal::from_uint(1, prec);
  PrecReal p1 = x;
  for (int k = 2; k <= n; ++k) {
    // k P_k = (2k-1) x P_{k-1} - (k-1) P_{k-2}
    PrecReal t = x * p1 * PrecReal::from_uint(2 * k - 1, prec) -
                 p0 * PrecReal::from_uint(k - 1, prec);
    p0 = p1;
    p1 = t / PrecReal::from_uint(static_cast<std::uint64_t>(k), prec);
  }
  pn = p1;
  pn1 = p0;
}

// Nodes/weights for the positive half of the order-n rule at prec bits.
Rule build_rule(int n, long prec) {
  long work = prec + 32;
  Rule rule;
  PrecReal one = PrecReal::from_uint(1, work);
  // Newton converges quadratically from the Chebyshev estimate; the bit
  // count doubles per step, so iterate until past the target precision.
  int steps = 6;
  for (long got = 50; got < work; got *= 2) ++steps;
  for (int i = 1; i <= n / 2; ++i) {
    double seed = std::cos(M_PI * (i - 0.25) / (n + 0.5));
    PrecReal x = PrecReal::from_double(seed, work);
    PrecReal pn(work), pn1(work);
    for (int s = 0; s < steps; ++s) {
      legendre_pair(n, x, pn, pn1);
      // P'_n(x) = n (x P_n - P_{n-1}) / (x^2 - 1)
      PrecReal dnum = (x * pn - pn1) * PrecReal::from_uint(n, work);
      PrecReal dden = x * x - one;
      PrecReal deriv = dnum / dden;
      x = x - pn / deriv;
    }
    legendre_pair(n, x, pn, pn1);
    PrecReal dnum = (x * pn - pn1) * PrecReal::from_uint(n, work);
    PrecReal dden = x * x - one;
    PrecReal deriv = dnum / dden;
    PrecReal w = PrecReal::from_uint(2, work) / ((one - x * x) * deriv * deriv);
    rule.nodes.push_back(x.with_precision(prec));
    rule.weights.push_back(w.with_precision(prec));
  }
  return rule;
}

const Rule& cached_rule(int n, long prec) {
  static std::mutex mu;
  static std::map<std::pair<int, long>, Rule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, prec);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_rule(n, prec)).first;
  return it->second;
}

PrecReal apply_rule(const Rule& rule, const Integrand& fn, const PrecReal& a,
                    const PrecReal& b, long prec) {
  PrecReal half = PrecReal::from_double(0.5, prec);
  PrecReal mid = (a + b) * half;
  PrecReal rad = (b - a) * half;
  PrecReal acc(prec);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    PrecReal off = rad * rule.nodes[i];
    acc += rule.weights[i] * (fn(mid + off) + fn(mid - off));
  }
  return acc * rad;
}

}  // namespace

PrecReal integrate(const Integrand& fn, const PrecReal& a, const PrecReal& b,
                   const PrecReal& abs_tol, long panel_budget) {
  if (!(a < b)) throw usage_error("integration needs a < b");
  if (abs_tol.sign() <= 0) throw usage_error("integration tolerance must be positive");
  long prec = std::min(a.precision(), b.precision());
  const Rule& rule = cached_rule(kOrder, prec);

  PrecReal total_width = b - a;
  long used = 0;

  // Depth-first, left child first: panel order is a pure function of the
  // integrand, so results are reproducible across runs.
  struct Frame {
    PrecReal a, b, whole;
  };
  std::vector<Frame> stack;
  PrecReal whole = apply_rule(rule, fn, a, b, prec);
  ++used;
  stack.push_back({a, b, whole});
  PrecReal result(prec);

  while (!stack.empty()) {
    Frame fr = std::move(stack.back());
    stack.pop_back();
    if (used + 2 > panel_budget)
      throw capacity_error("quadrature panel budget exhausted");
    PrecReal mid = (fr.a + fr.b) * PrecReal::from_double(0.5, prec);
    PrecReal left = apply_rule(rule, fn, fr.a, mid, prec);
    PrecReal right = apply_rule(rule, fn, mid, fr.b, prec);
    used += 2;
    PrecReal sum = left + right;
    PrecReal err = abs(sum - fr.whole);
    PrecReal share = abs_tol * ((fr.b - fr.a) / total_width);
    if (err <= share) {
      result += sum;
    } else {
      // Push right first so the left half is processed next (depth-first).
      stack.push_back({mid, fr.b, std::move(right)});
      stack.push_back({fr.a, mid, std::move(left)});
    }
  }
  return result;
}

}  // namespace cyclic
