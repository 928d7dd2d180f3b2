#ifndef POLYSOLVE_CASE_STUDIES_HPP
#define POLYSOLVE_CASE_STUDIES_HPP

#include "polysolve/line_substitution.hpp"
#include "polysolve/parser.hpp"
#include "polysolve/system.hpp"

namespace polysolve {

// Cubic surface with all 27 of its lines real; variables x, y, z.
inline PolyQ clebsch_surface() {
  static const char* text =
      "81*x^3 + 81*y^3 + 81*z^3"
      " - 189*x^2*y - 189*x^2*z - 189*x*y^2 - 189*x*z^2 - 189*y^2*z - 189*y*z^2"
      " + 54*x*y*z + 126*x*y + 126*x*z + 126*y*z"
      " - 9*x^2 - 9*y^2 - 9*z^2 - 9*x - 9*y - 9*z + 1";
  return parse_polynomial(text, {"x", "y", "z"});
}

// The lines-on-the-surface system: substitute x_i -> a_i + t*b_i into
// the Clebsch cubic, take the four t-coefficients, and fix the gauge
// so that n = s = 4 in variables a1, a2, b1, b2.
inline SystemQ clebsch_line_system() {
  auto coeffs = substitute_line(clebsch_surface());
  std::vector<PolyQ> polys;
  for (const auto& c : coeffs) polys.push_back(fix_line_gauge(c));
  return SystemQ(4, std::move(polys));
}

// Two plane cubics with seven real intersection points, two of them
// rational: (0,0) and (1,1).
inline SystemQ plane_curves_system() {
  std::vector<std::string> vars = {"x", "y"};
  PolyQ f = parse_polynomial(
      "-7*x - 9*y - 10*x^2 + 17*x*y + 10*y^2 + 16*x^2*y - 17*x*y^2", vars);
  PolyQ g = parse_polynomial(
      "2*x - 5*y + 5*x^2 + 5*x*y + 5*y^2 - 6*x^2*y - 6*x*y^2", vars);
  return SystemQ(2, {f, g});
}

// The pair of quadrics whose Macaulay matrix reduction is checked
// entry-for-entry against known values: x^2+y^2-2, 3x^2-y^2-2.
inline SystemQ two_conics_system() {
  std::vector<std::string> vars = {"x", "y"};
  return SystemQ(2, {parse_polynomial("x^2 + y^2 - 2", vars),
                     parse_polynomial("3*x^2 - y^2 - 2", vars)});
}

// (x-1)(x-2)...(x-d), expanded exactly.
inline PolyQ wilkinson(int d) {
  PolyQ p = PolyQ::constant(1, Rational(1));
  PolyQ x = PolyQ::variable(1, 0);
  for (int k = 1; k <= d; ++k) p = p * (x - PolyQ::constant(1, Rational(k)));
  return p;
}

// Elbow positions of a planar two-segment arm: circle of radius L1
// about the origin meets circle of radius L2 about the hand (a, b).
inline SystemQ robot_circles(const Rational& L1, const Rational& L2,
                             const Rational& a, const Rational& b) {
  const int N = 2;
  PolyQ x = PolyQ::variable(N, 0), y = PolyQ::variable(N, 1);
  PolyQ f = x * x + y * y - PolyQ::constant(N, L1 * L1);
  PolyQ g = (PolyQ::constant(N, a) - x).pow(2) + (PolyQ::constant(N, b) - y).pow(2) -
            PolyQ::constant(N, L2 * L2);
  return SystemQ(N, {f, g});
}

}  // namespace polysolve

#endif
