#pragma once

#include <string>

#include "sl3/identities.hpp"

namespace sl3 {

// Largest lattice half-width a single SVG may cover.
inline constexpr Int kFigureCap = 200;

struct FigureOptions {
  Int p = 5;
  Int box = 5;  // S/T labels for |r|,|s| <= box
  int degree = 1;
};

// Weight-lattice picture: shaded cells where H^1 and H^2 are both nonzero,
// S^i(r,s) at (pr,ps), T^i(r,s) at (p-2+pr,p-2+ps), and the fundamental line.
std::string render_figure(Calculus& calc, const FigureOptions& opts);

}  // namespace sl3
