#include "figure.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace sl3 {

namespace {

constexpr double kScale = 12.0;
const double kSqrt3Half = std::sqrt(3.0) / 2.0;

// Fundamental-weight coordinates to the page; the two fundamental weights sit at 60 degrees.
struct Point {
  double x, y;
};
Point place(double r, double s) { return {kScale * (r + s / 2.0), -kScale * kSqrt3Half * s}; }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string cell(const Weight& w) {
  const double r = static_cast<double>(w.r), s = static_cast<double>(w.s);
  std::ostringstream out;
  const Point c[4] = {place(r - 0.5, s - 0.5), place(r + 0.5, s - 0.5), place(r + 0.5, s + 0.5),
                      place(r - 0.5, s + 0.5)};
  for (int k = 0; k < 4; ++k) out << (k ? " " : "") << num(c[k].x) << "," << num(c[k].y);
  return out.str();
}

}  // namespace

std::string render_figure(Calculus& calc, const FigureOptions& opts) {
  const Int p = opts.p;
  if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
  if (p < 3) throw std::invalid_argument("the figure needs p >= 3");
  if (opts.box < 0) throw std::invalid_argument("box must be nonnegative");
  if (opts.degree < 0 || opts.degree > 3) throw std::invalid_argument("degree must lie in 0..3");
  const Int half = p * (opts.box + 1);
  if (half > kFigureCap)
    throw std::invalid_argument("box too large for one figure: p*(box+1) = " + std::to_string(half) + " exceeds " +
                                std::to_string(kFigureCap));

  const Point lo = place(-half - 1, half + 1), hi = place(half + 1, -half - 1);
  const double top = place(0, half + 1).y, bottom = place(0, -half - 1).y;
  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << num(lo.x) << " " << num(top) << " "
      << num(hi.x - lo.x) << " " << num(bottom - top) << "\" data-p=\"" << p << "\" data-box=\"" << opts.box
      << "\" data-degree=\"" << opts.degree << "\">\n";
  svg << "<title>SL3 weight lattice, p=" << p << "</title>\n";

  svg << "<g id=\"multi-nonvanishing\" fill=\"#b9d7a8\" stroke=\"none\">\n";
  for (Int r = -half; r <= half; ++r)
    for (Int s = -half; s <= half; ++s)
      if (andersen_criterion({r, s}, p))
        svg << "<polygon points=\"" << cell({r, s}) << "\" data-weight=\"" << r << "," << s << "\"/>\n";
  svg << "</g>\n";

  // Axes and the fundamental line r + s = -1.
  svg << "<g id=\"lines\" fill=\"none\" stroke-width=\"0.6\">\n";
  auto line = [&](Point a, Point b, const char* id, const char* colour) {
    svg << "<line id=\"" << id << "\" x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x)
        << "\" y2=\"" << num(b.y) << "\" stroke=\"" << colour << "\"/>\n";
  };
  line(place(-half, 0), place(half, 0), "axis-r", "#999999");
  line(place(0, -half), place(0, half), "axis-s", "#999999");
  line(place(-half + 1, half), place(half, -half - 1), "fundamental-line", "#cc3333");
  svg << "</g>\n";

  svg << "<g id=\"labels\" font-family=\"sans-serif\" font-size=\"7\" text-anchor=\"middle\">\n";
  for (Int r = -opts.box; r <= opts.box; ++r)
    for (Int s = -opts.box; s <= opts.box; ++s) {
      const STRecord st = st_values(calc, opts.degree, {r, s});
      auto label = [&](Int value, Weight at, const char* kind) {
        if (value == 0) return;
        const Point pt = place(static_cast<double>(at.r), static_cast<double>(at.s));
        svg << "<text x=\"" << num(pt.x) << "\" y=\"" << num(pt.y) << "\" data-kind=\"" << kind << "\" data-weight=\""
            << at.r << "," << at.s << "\" data-source=\"" << r << "," << s << "\">" << value << "</text>\n";
      };
      label(st.S, Weight{r, s} * p, "S");
      label(st.T, Weight{p - 2, p - 2} + Weight{r, s} * p, "T");
    }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace sl3
