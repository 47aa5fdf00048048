#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pqbrace/regular_subgroups.hpp"

namespace pqbrace {

/**
 * Skew brace on the pq-element carrier: two group operations stored as full
 * Cayley tables of flat indices.  Element 0 (= (0,0)) is the identity of both.
 */
struct SkewBrace {
  Params params;
  Kind add_kind;  // iso type of (A, +)
  std::int64_t n; // pq
  std::vector<std::int32_t> add;   // n*n row-major
  std::vector<std::int32_t> circ;  // n*n row-major
  std::vector<std::int32_t> add_inv;
  std::vector<std::int32_t> circ_inv;
  std::string label;

  std::int64_t add_of(std::int64_t x, std::int64_t y) const { return add[x * n + y]; }
  std::int64_t circ_of(std::int64_t x, std::int64_t y) const { return circ[x * n + y]; }
  std::int64_t add_inv_of(std::int64_t x) const { return add_inv[x]; }
  std::int64_t circ_inv_of(std::int64_t x) const { return circ_inv[x]; }
};

/// Builds a brace value from its two tables; computes inverse lookups.
SkewBrace brace_from_tables(const Params& pr, Kind add_kind,
                            std::vector<std::int32_t> add,
                            std::vector<std::int32_t> circ, std::string label);

/// The trivial brace over the given group: circ = add.
SkewBrace trivial_brace(const Params& pr, Kind kind);

/// a circ b = a + f(b) where (a, f) is the unique preimage of a under pi1|_S.
SkewBrace brace_from_regular(const Params& pr, Kind kind, const Subgroup& s);

/**
 * The full classification for (p, q): one trivial brace when p != 1 mod q,
 * otherwise the 2q+2 braces (trivial-C, cyclic-nontrivial, trivial-M, kerq,
 * A_gamma and A_mu for 1 < gamma, mu <= q).
 */
std::vector<SkewBrace> catalog(const Params& pr);

struct AxiomReport {
  bool add_group = false;
  bool circ_group = false;
  bool brace_law = false;
  // first violating triple of the brace law, when any
  std::array<std::int64_t, 3> witness{-1, -1, -1};

  bool ok() const { return add_group && circ_group && brace_law; }
};

/// Exhaustive check of both group structures and the left brace law.
AxiomReport verify_skew_axioms(const SkewBrace& b);

struct LambdaMap {
  // maps[a][x] = lambda_a(x) = -a + a circ x
  std::vector<std::vector<std::int32_t>> maps;
  std::vector<std::int64_t> kernel;  // elements with lambda_a = id
  bool automorphisms = false;        // every lambda_a in Aut(A, +)
  bool homomorphism = false;         // a -> lambda_a is a hom from (A, circ)
};

LambdaMap lambda_of(const SkewBrace& b);

/// (A, circ, +), the operations swapped.
SkewBrace swapped(const SkewBrace& b);

/// True iff (A, circ, +) also satisfies the skew brace law.
bool is_biskew(const SkewBrace& b);

/**
 * Bi-skew brace on Z_p x Z_q with + the eta-semidirect product and circ the
 * rho-semidirect product.  Actions are given as units mod p whose
 * multiplicative order divides q: eta_s(y) = eta_mult^s * y.
 */
SkewBrace semidirect_biskew(const Params& pr, std::int64_t eta_mult,
                            std::int64_t rho_mult);

/// Iso type of (A, circ): C iff abelian.
Kind circ_iso_type(const SkewBrace& b);

/**
 * Simultaneous (+, circ) isomorphism search; returns the witness bijection
 * (b2_elem = witness[b1_elem]) when one exists.  Candidate maps are generated
 * from generator images in the additive group and verified in full.
 */
std::optional<std::vector<std::int32_t>> are_isomorphic(const SkewBrace& b1,
                                                        const SkewBrace& b2);

}  // namespace pqbrace
