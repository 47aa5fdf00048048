#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "pqbrace/automorphisms.hpp"

namespace pqbrace {

/**
 * Subgroup of Hol(A), stored as the canonically sorted set of its elements.
 * Identity and deduplication always go through the element set; the generator
 * list is informational.
 */
struct Subgroup {
  Kind kind;                      // ambient additive group A
  std::vector<HolElem> elements;  // sorted by hol_code
  std::vector<HolElem> gens;
  std::string label;              // family tag, may be empty
};

/// Canonical identity key: sorted hol_code list.
std::vector<std::int64_t> subgroup_key(const Params& pr, const Subgroup& s);

Subgroup close_subgroup(const Params& pr, std::vector<HolElem> gens,
                        std::string label = {});

/// Closure that aborts once more than `cap` elements are produced.
std::optional<std::vector<HolElem>> close_elements_capped(
    const Params& pr, const std::vector<HolElem>& gens, std::int64_t cap);

bool is_regular(const Params& pr, const Subgroup& s);
bool is_abelian(const Params& pr, const Subgroup& s);
std::int64_t pi2_image_size(const Params& pr, const Subgroup& s);

/// Iso type of a subgroup of order pq: abelian <=> cyclic <=> C.
Kind iso_type(const Params& pr, const Subgroup& s);

// ---- closed-form families of regular subgroups ----

/// A x {1}, the left translations.
Subgroup trivial_translation_subgroup(const Params& pr, Kind kind);

/// G_b = <sigma, tau^b alpha> <= Hol(C), 1 <= b <= q-1.
Subgroup family_cyclic_Gb(const Params& pr, std::int64_t b);

/// G_c = <sigma^{a0} alpha, sigma^c tau> <= Hol(M), 0 <= c <= p-1.
Subgroup family_meta_Gc(const Params& pr, std::int64_t c);

/// G_{a,b} = <sigma, tau^a alpha^b beta> <= Hol(M), 1 <= a <= q-1, 0 <= b <= p-1.
Subgroup family_meta_Gab(const Params& pr, std::int64_t a, std::int64_t b);

/// G_{c,d} = <sigma^{a0} alpha, sigma^c tau^d beta> <= Hol(M),
/// d in 1..q-1, with c = 0 forced when d = q-1.
Subgroup family_meta_Gcd(const Params& pr, std::int64_t c, std::int64_t d);

/// Union of the families above (plus the trivial subgroup) for the given kind.
std::vector<Subgroup> closed_form_regular_subgroups(const Params& pr, Kind kind);

/**
 * Independent oracle: all regular subgroups of Hol(A), found by closing pairs
 * (order-p element, order-q element) and filtering.  Complete because every
 * group of order pq is generated by such a pair.
 */
std::vector<Subgroup> enumerate_regular_bruteforce(const Params& pr, Kind kind,
                                                   std::int64_t budget = 39);

/// {(0,f) h (0,f)^{-1} : h in S}.
Subgroup conjugate_subgroup(const Params& pr, const Subgroup& s, const Aut& f);

struct Orbit {
  std::vector<std::size_t> members;  // indices into the input list
  std::size_t representative;        // member with lex-minimal canonical key
};

/// Partition under conjugation by all of Aut(A).
std::vector<Orbit> compute_orbits(const Params& pr,
                                  const std::vector<Subgroup>& subgroups);

/// Counts e'(G, A, m) keyed by (iso type of G, ambient A, |pi2 image|).
struct EPrimeTable {
  std::map<std::tuple<Kind, Kind, std::int64_t>, std::int64_t> counts;

  std::int64_t at(Kind iso, Kind ambient, std::int64_t m) const;
  friend bool operator==(const EPrimeTable&, const EPrimeTable&) = default;
};

EPrimeTable e_prime_counts_closed_form(const Params& pr, Kind kind);
EPrimeTable e_prime_counts(const Params& pr, const std::vector<Subgroup>& subgroups);

}  // namespace pqbrace
