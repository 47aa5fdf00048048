#pragma once

#include "pqbrace/skew_brace.hpp"

namespace pqbrace {

/**
 * Set-theoretic Yang-Baxter map r(x, y) = (sigma_x(y), tau_y(x)) on the
 * pq-element carrier, stored as two n*n tables.
 */
struct YbeSolution {
  std::int64_t n = 0;
  std::vector<std::int32_t> sigma;  // sigma[x*n+y] = sigma_x(y)
  std::vector<std::int32_t> tau;    // tau[x*n+y]   = tau_y(x)

  std::pair<std::int64_t, std::int64_t> r(std::int64_t x, std::int64_t y) const {
    return {sigma[x * n + y], tau[x * n + y]};
  }
};

/**
 * Canonical solution of a skew brace:
 *   sigma_x(y) = lambda_x(y),
 *   tau_y(x)   = (lambda_x(y))' circ x circ y   (' the circ-inverse).
 */
YbeSolution solution_from_brace(const SkewBrace& b);

struct SolutionReport {
  bool braid = false;          // braid identity over all n^3 triples
  bool nondegenerate = false;  // every sigma_x and tau_y a bijection
  bool involutive = false;     // r(r(x, y)) = (x, y)
};

SolutionReport verify_solution(const YbeSolution& sol);

}  // namespace pqbrace
