#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pqbrace/group_core.hpp"

namespace pqbrace {

/**
 * Automorphism of C or of M.
 *
 * Kind C: the pair (u, v) of units acting by sigma -> sigma^u, tau -> tau^v,
 * stored in (a, b) = (u, v).
 * Kind M: phi_{i,j} with sigma -> sigma^i, tau -> sigma^j tau,
 * stored in (a, b) = (i, j).
 */
struct Aut {
  Kind kind;
  std::int64_t a;
  std::int64_t b;

  friend bool operator==(const Aut&, const Aut&) = default;
};

Aut aut_identity(Kind kind);
bool is_valid_aut(const Params& pr, const Aut& f);

GroupElem aut_apply(const Params& pr, const Aut& f, const GroupElem& x);

/// Composition f after h.  For M: phi_{i,j} phi_{k,l} = phi_{ik, il+j}.
Aut aut_compose(const Params& pr, const Aut& f, const Aut& h);
Aut aut_invert(const Params& pr, const Aut& f);
Aut aut_pow(const Params& pr, const Aut& f, std::int64_t e);

/// Every automorphism of the given group; |Aut(C)| = (p-1)(q-1), |Aut(M)| = p(p-1).
std::vector<Aut> all_automorphisms(const Params& pr, Kind kind);

/// For M: (alpha, beta) = (phi_{1,1}, phi_{g,0}), generators of the unique
/// order-pq subgroup of Aut(M).  For C: alpha = (u=g, v=1), no beta.
std::pair<Aut, std::optional<Aut>> alpha_beta(const Params& pr, Kind kind);

/// Element (a, f) of Hol(A) = A x| Aut(A).
struct HolElem {
  GroupElem a;
  Aut f;

  friend bool operator==(const HolElem&, const HolElem&) = default;
};

HolElem hol_identity(Kind kind);

/// (a,f)(b,g) = (a + f(b), fg).
HolElem hol_mul(const Params& pr, const HolElem& x, const HolElem& y);
HolElem hol_inv(const Params& pr, const HolElem& x);
HolElem hol_pow(const Params& pr, const HolElem& x, std::int64_t e);

/// The action (a,f)(b) = a + f(b).
GroupElem hol_act(const Params& pr, const HolElem& h, const GroupElem& b);

/// Canonical ordering key: lexicographic on (flat element index, a, b).
std::int64_t hol_code(const Params& pr, const HolElem& h);

}  // namespace pqbrace
