#pragma once

#include <vector>

#include "egc/scalar.hpp"

namespace egc {

/// Exact-rational linear program in standard equality form:
///   maximize c.x  subject to  A x = b, x >= 0.
struct LinearProgram {
  std::vector<std::vector<Scalar>> A;
  std::vector<Scalar> b;
  std::vector<Scalar> c;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status;
  Scalar objective;        // valid when optimal
  std::vector<Scalar> x;   // valid when optimal
};

/// Two-phase tableau simplex with Bland's anti-cycling rule, everything in
/// exact rationals. Sized for small dense problems (tens of rows, thousands
/// of columns).
LpResult solve_lp(const LinearProgram& lp);

}  // namespace egc
