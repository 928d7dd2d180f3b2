#ifndef POLYSOLVE_POLYSOLVE_HPP
#define POLYSOLVE_POLYSOLVE_HPP

#include "polysolve/case_studies.hpp"
#include "polysolve/eigen.hpp"
#include "polysolve/groebner.hpp"
#include "polysolve/homotopy.hpp"
#include "polysolve/hull.hpp"
#include "polysolve/line_substitution.hpp"
#include "polysolve/macaulay.hpp"
#include "polysolve/matrix.hpp"
#include "polysolve/monomial.hpp"
#include "polysolve/optimization.hpp"
#include "polysolve/parser.hpp"
#include "polysolve/polynomial.hpp"
#include "polysolve/reports.hpp"
#include "polysolve/root_counts.hpp"
#include "polysolve/scalar.hpp"
#include "polysolve/solution.hpp"
#include "polysolve/system.hpp"

#endif
