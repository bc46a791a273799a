#pragma once

// Independent reference computations used by the tests. None of these call
// into the code paths they are compared against.

#include <cmath>
#include <complex>
#include <map>
#include <set>
#include <vector>

#include "sl3/charring.hpp"
#include "sl3/gendim.hpp"

namespace oracle {

using sl3::Int;
using sl3::Weight;
using cplx = std::complex<double>;

inline cplx zeta(Int p) { return std::polar(1.0, 2.0 * M_PI / static_cast<double>(p)); }

inline cplx to_complex(const sl3::CycloElement& z) {
  cplx acc = 0, zk = 1;
  for (const auto& c : z.coords()) {
    acc += c.get_d() * zk;
    zk *= zeta(z.p());
  }
  return acc;
}

// f^{(order)} at t = zeta, straight from the coefficients.
inline cplx eval_derivative(const sl3::LaurentPoly& f, int order, Int p) {
  cplx acc = 0;
  const cplx z = zeta(p);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const double e = static_cast<double>(f.low() + static_cast<Int>(i));
    double fall = 1;
    for (int k = 0; k < order; ++k) fall *= e - k;
    acc += static_cast<double>(f.coeffs()[i]) * fall * std::pow(z, e - order);
  }
  return acc;
}

// Killing-form data in fundamental-weight coordinates for A2: (w_i, w_j) = [[2,1],[1,2]]/3.
// Values are scaled by 3 to stay integral.
inline Int form3(const Weight& a, const Weight& b) { return 2 * a.r * b.r + a.r * b.s + a.s * b.r + 2 * a.s * b.s; }

// Freudenthal's recursion for weight multiplicities of the irreducible
// characteristic-zero module of highest weight lambda (dominant).
inline std::map<Weight, Int> freudenthal(const Weight& lambda) {
  static const Weight pos[3] = {{2, -1}, {-1, 2}, {1, 1}};
  const Weight rho{1, 1};
  std::map<Weight, Int> mult;
  mult[lambda] = 1;
  const Int depth = 2 * (lambda.r + lambda.s) + 2;
  // mu = lambda - a*alpha - b*beta, processed by increasing a+b
  for (Int level = 1; level <= depth; ++level)
    for (Int a = 0; a <= level; ++a) {
      const Int b = level - a;
      const Weight mu{lambda.r - 2 * a + b, lambda.s + a - 2 * b};
      Int num = 0;
      for (const Weight& g : pos)
        for (Int k = 1;; ++k) {
          const Weight nu{mu.r + k * g.r, mu.s + k * g.s};
          auto it = mult.find(nu);
          if (it == mult.end()) {
            if (k > depth) break;
            continue;
          }
          num += 2 * it->second * form3(nu, g);
        }
      const Weight lr{lambda.r + rho.r, lambda.s + rho.s}, mr{mu.r + rho.r, mu.s + rho.s};
      const Int den = form3(lr, lr) - form3(mr, mr);
      if (den == 0 || num == 0) continue;
      mult[mu] = num / den;
    }
  for (auto it = mult.begin(); it != mult.end();) it = it->second ? std::next(it) : mult.erase(it);
  return mult;
}

// Orbit W_p . 0 within max(|r|,|s|) <= bound, by closing under the affine reflections
// s_{gamma,kp} . x = x - (<x+rho,gamma^v> - kp) gamma.
inline std::set<Weight> linkage_orbit_of_zero(Int p, Int bound) {
  struct R {
    Weight g;
    Int cr, cs;
  };
  const R refl[3] = {{{2, -1}, 1, 0}, {{-1, 2}, 0, 1}, {{1, 1}, 1, 1}};
  std::set<Weight> seen{{0, 0}};
  std::vector<Weight> todo{{0, 0}};
  const Int slack = bound + 4 * p;
  while (!todo.empty()) {
    const Weight x = todo.back();
    todo.pop_back();
    for (const R& g : refl) {
      const Int pair = g.cr * (x.r + 1) + g.cs * (x.s + 1);
      for (Int k = -3; k <= 3; ++k) {
        const Int c = pair - k * p;
        const Weight y{x.r - c * g.g.r, x.s - c * g.g.s};
        if (std::max(std::llabs(y.r), std::llabs(y.s)) > slack || seen.count(y)) continue;
        seen.insert(y);
        todo.push_back(y);
      }
    }
  }
  return seen;
}

}  // namespace oracle
