#ifndef POLYSOLVE_OPTIMIZATION_HPP
#define POLYSOLVE_OPTIMIZATION_HPP

#include <string>
#include <vector>

#include "polysolve/line_substitution.hpp"
#include "polysolve/system.hpp"

namespace polysolve {

struct LagrangeSystem {
  SystemQ system;                  // k + l equations in k + l variables
  std::vector<std::string> vars;   // original variables then multipliers
};

// Critical-point system of g on the variety h_1 = ... = h_l = 0: the
// gradient of L = g - sum lam_i h_i in the original variables,
// followed by the constraints themselves. With l = 0 this is the
// plain gradient system.
inline LagrangeSystem lagrange_system(const PolyQ& g, const std::vector<PolyQ>& constraints,
                                      const std::vector<std::string>& vars) {
  int k = g.nvars();
  if (static_cast<int>(vars.size()) != k)
    throw DimensionMismatch("variable name count does not match the objective");
  int l = static_cast<int>(constraints.size());
  for (const auto& h : constraints)
    if (h.nvars() != k) throw DimensionMismatch("constraint in a different ring");

  LagrangeSystem out;
  out.vars = vars;
  for (int i = 1; i <= l; ++i) {
    std::string name = "lam" + std::to_string(i);
    for (const auto& v : vars)
      if (v == name)
        throw std::invalid_argument("variable name '" + name +
                                    "' collides with a multiplier");
    out.vars.push_back(name);
  }

  int n = k + l;
  std::vector<int> var_map(k);
  for (int i = 0; i < k; ++i) var_map[i] = i;
  PolyQ L = extend_ring(g, n, var_map);
  for (int i = 0; i < l; ++i)
    L = L - PolyQ::variable(n, k + i) * extend_ring(constraints[i], n, var_map);

  std::vector<PolyQ> polys;
  for (int i = 0; i < k; ++i) polys.push_back(L.derivative(i));
  for (int i = 0; i < l; ++i) polys.push_back(extend_ring(constraints[i], n, var_map));
  out.system = SystemQ(n, std::move(polys));
  return out;
}

}  // namespace polysolve

#endif
