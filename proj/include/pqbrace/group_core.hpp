#pragma once

#include <cstdint>
#include <compare>

namespace pqbrace {

/// Which of the two groups of order pq an element lives in:
/// C = Z_p x Z_q (cyclic), M = Z_p x|_g Z_q (metacyclic, exists iff p = 1 mod q).
enum class Kind { C, M };

const char* kind_name(Kind k);

// ---- modular arithmetic helpers ----

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod);
std::int64_t mod_inv(std::int64_t a, std::int64_t mod);  // mod must be prime here
bool is_prime(std::int64_t n);                           // trial division
std::int64_t multiplicative_order(std::int64_t a, std::int64_t mod);
std::int64_t smallest_primitive_root(std::int64_t p);

/**
 * Fixed data for a classification run: the primes p > q, whether p = 1 mod q,
 * and in the congruent case the chosen residue g of multiplicative order q
 * mod p together with a0 = (g-1)^{-1} mod p.
 */
struct Params {
  std::int64_t p = 0;
  std::int64_t q = 0;
  bool congruent = false;
  std::int64_t g = 0;   // meaningful iff congruent
  std::int64_t a0 = 0;  // meaningful iff congruent

  std::int64_t size() const { return p * q; }
};

/// Validates primality and p > q; picks g as the smallest residue of order q.
Params make_params(std::int64_t p, std::int64_t q);

/// Same, but with a caller-chosen g (must have multiplicative order exactly q).
Params make_params_with_g(std::int64_t p, std::int64_t q, std::int64_t g);

/**
 * Element sigma^n tau^m of C or M, stored as the residue pair (n mod p, m mod q).
 * Flat index n*q + m gives the canonical ordering used for tables.
 */
struct GroupElem {
  Kind kind;
  std::int64_t n;
  std::int64_t m;

  friend bool operator==(const GroupElem&, const GroupElem&) = default;
};

std::int64_t flat_index(const Params& pr, const GroupElem& x);
GroupElem elem_from_flat(const Params& pr, Kind kind, std::int64_t idx);
GroupElem group_identity(Kind kind);

/// C: (n+s, m+t).  M: (n + g^m s, m+t).
GroupElem group_op(const Params& pr, const GroupElem& x, const GroupElem& y);
GroupElem group_inv(const Params& pr, const GroupElem& x);
GroupElem group_pow(const Params& pr, const GroupElem& x, std::int64_t e);
std::int64_t element_order(const Params& pr, const GroupElem& x);

/// Sum_{i=0}^{r-1} g^i mod p, computed as a0 * (g^r - 1).
std::int64_t geometric_sum(const Params& pr, std::int64_t r);

}  // namespace pqbrace
