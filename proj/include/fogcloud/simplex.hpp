#ifndef FOGCLOUD_SIMPLEX_HPP
#define FOGCLOUD_SIMPLEX_HPP

#include <vector>

namespace fogcloud {

// Dense linear program: min c'x subject to row constraints and x >= 0.
// Upper bounds on single variables are expressed as ordinary rows.
struct LpRow {
  enum class Relation { LessEqual, Equal };
  std::vector<double> coeffs;  // length n
  double rhs = 0.0;
  Relation relation = Relation::LessEqual;
};

struct LpProblem {
  int num_vars = 0;
  std::vector<double> objective;  // length num_vars
  std::vector<LpRow> rows;
};

struct LpSolution {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Infeasible;
  std::vector<double> x;      // length num_vars
  double objective = 0.0;
  std::vector<double> duals;  // one per input row (y for min problem)
};

// Two-phase primal simplex with Bland's anti-cycling rule, dense
// arithmetic. Intended for desk-scale instances only.
LpSolution solve_lp(const LpProblem& problem);

}  // namespace fogcloud

#endif
