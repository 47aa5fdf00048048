#include "pqbrace/regular_subgroups.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pqbrace {

namespace {

void sort_canonical(const Params& pr, std::vector<HolElem>& elems) {
  std::sort(elems.begin(), elems.end(),
            [&](const HolElem& x, const HolElem& y) {
              return hol_code(pr, x) < hol_code(pr, y);
            });
}

}  // namespace

std::vector<std::int64_t> subgroup_key(const Params& pr, const Subgroup& s) {
  std::vector<std::int64_t> key;
  key.reserve(s.elements.size());
  for (const HolElem& h : s.elements) key.push_back(hol_code(pr, h));
  return key;
}

std::optional<std::vector<HolElem>> close_elements_capped(
    const Params& pr, const std::vector<HolElem>& gens, std::int64_t cap) {
  if (gens.empty())
    throw std::invalid_argument("close_elements_capped: empty generator list");
  Kind kind = gens.front().a.kind;
  for (const HolElem& g : gens)
    if (g.a.kind != kind || g.f.kind != kind)
      throw std::invalid_argument("close_elements_capped: mixed kinds");

  std::set<std::int64_t> seen;
  std::vector<HolElem> elems;
  std::vector<HolElem> frontier;
  auto insert = [&](const HolElem& h) {
    if (seen.insert(hol_code(pr, h)).second) {
      elems.push_back(h);
      frontier.push_back(h);
      return true;
    }
    return false;
  };
  insert(hol_identity(kind));
  for (const HolElem& g : gens) insert(g);

  while (!frontier.empty()) {
    if (cap >= 0 && static_cast<std::int64_t>(elems.size()) > cap)
      return std::nullopt;
    HolElem h = frontier.back();
    frontier.pop_back();
    for (std::size_t i = 0; i < elems.size(); ++i) {
      insert(hol_mul(pr, elems[i], h));
      insert(hol_mul(pr, h, elems[i]));
      if (cap >= 0 && static_cast<std::int64_t>(elems.size()) > cap)
        return std::nullopt;
    }
  }
  sort_canonical(pr, elems);
  return elems;
}

Subgroup close_subgroup(const Params& pr, std::vector<HolElem> gens,
                        std::string label) {
  auto elems = close_elements_capped(pr, gens, -1);
  return Subgroup{gens.front().a.kind, std::move(*elems), std::move(gens),
                  std::move(label)};
}

bool is_regular(const Params& pr, const Subgroup& s) {
  if (static_cast<std::int64_t>(s.elements.size()) != pr.size()) return false;
  std::set<std::int64_t> orbit;
  GroupElem e = group_identity(s.kind);
  for (const HolElem& h : s.elements)
    orbit.insert(flat_index(pr, hol_act(pr, h, e)));
  return static_cast<std::int64_t>(orbit.size()) == pr.size();
}

bool is_abelian(const Params& pr, const Subgroup& s) {
  for (std::size_t i = 0; i < s.elements.size(); ++i)
    for (std::size_t j = i + 1; j < s.elements.size(); ++j)
      if (!(hol_mul(pr, s.elements[i], s.elements[j]) ==
            hol_mul(pr, s.elements[j], s.elements[i])))
        return false;
  return true;
}

std::int64_t pi2_image_size(const Params& pr, const Subgroup& s) {
  std::set<std::pair<std::int64_t, std::int64_t>> auts;
  for (const HolElem& h : s.elements) auts.insert({h.f.a, h.f.b});
  (void)pr;
  return static_cast<std::int64_t>(auts.size());
}

Kind iso_type(const Params& pr, const Subgroup& s) {
  return is_abelian(pr, s) ? Kind::C : Kind::M;
}

Subgroup trivial_translation_subgroup(const Params& pr, Kind kind) {
  std::vector<HolElem> gens = {
      HolElem{GroupElem{kind, 1, 0}, aut_identity(kind)},
      HolElem{GroupElem{kind, 0, 1}, aut_identity(kind)}};
  return close_subgroup(pr, std::move(gens), "trivial");
}

Subgroup family_cyclic_Gb(const Params& pr, std::int64_t b) {
  if (!pr.congruent)
    throw std::invalid_argument("family_cyclic_Gb: requires congruent params");
  if (b < 1 || b > pr.q - 1)
    throw std::out_of_range("family_cyclic_Gb: b out of range");
  Aut alpha = alpha_beta(pr, Kind::C).first;
  std::vector<HolElem> gens = {
      HolElem{GroupElem{Kind::C, 1, 0}, aut_identity(Kind::C)},
      HolElem{GroupElem{Kind::C, 0, b}, alpha}};
  return close_subgroup(pr, std::move(gens), "G_b(" + std::to_string(b) + ")");
}

Subgroup family_meta_Gc(const Params& pr, std::int64_t c) {
  if (!pr.congruent)
    throw std::invalid_argument("family_meta_Gc: requires congruent params");
  if (c < 0 || c > pr.p - 1)
    throw std::out_of_range("family_meta_Gc: c out of range");
  Aut alpha = alpha_beta(pr, Kind::M).first;
  std::vector<HolElem> gens = {
      HolElem{GroupElem{Kind::M, pr.a0, 0}, alpha},
      HolElem{GroupElem{Kind::M, c, 1}, aut_identity(Kind::M)}};
  return close_subgroup(pr, std::move(gens), "G_c(" + std::to_string(c) + ")");
}

Subgroup family_meta_Gab(const Params& pr, std::int64_t a, std::int64_t b) {
  if (!pr.congruent)
    throw std::invalid_argument("family_meta_Gab: requires congruent params");
  if (a < 1 || a > pr.q - 1 || b < 0 || b > pr.p - 1)
    throw std::out_of_range("family_meta_Gab: parameters out of range");
  auto [alpha, beta] = alpha_beta(pr, Kind::M);
  Aut f = aut_compose(pr, aut_pow(pr, alpha, b), *beta);  // alpha^b beta
  std::vector<HolElem> gens = {
      HolElem{GroupElem{Kind::M, 1, 0}, aut_identity(Kind::M)},
      HolElem{GroupElem{Kind::M, 0, a}, f}};
  return close_subgroup(
      pr, std::move(gens),
      "G_ab(" + std::to_string(a) + "," + std::to_string(b) + ")");
}

Subgroup family_meta_Gcd(const Params& pr, std::int64_t c, std::int64_t d) {
  if (!pr.congruent)
    throw std::invalid_argument("family_meta_Gcd: requires congruent params");
  if (d < 1 || d > pr.q - 1 || c < 0 || c > pr.p - 1)
    throw std::out_of_range("family_meta_Gcd: parameters out of range");
  if (d == pr.q - 1 && c != 0)
    throw std::out_of_range("family_meta_Gcd: c must be 0 when d = q-1");
  auto [alpha, beta] = alpha_beta(pr, Kind::M);
  std::vector<HolElem> gens = {
      HolElem{GroupElem{Kind::M, pr.a0, 0}, alpha},
      HolElem{GroupElem{Kind::M, c, d}, *beta}};
  return close_subgroup(
      pr, std::move(gens),
      "G_cd(" + std::to_string(c) + "," + std::to_string(d) + ")");
}

std::vector<Subgroup> closed_form_regular_subgroups(const Params& pr, Kind kind) {
  std::vector<Subgroup> out;
  out.push_back(trivial_translation_subgroup(pr, kind));
  if (!pr.congruent) return out;
  if (kind == Kind::C) {
    for (std::int64_t b = 1; b <= pr.q - 1; ++b)
      out.push_back(family_cyclic_Gb(pr, b));
  } else {
    for (std::int64_t c = 0; c <= pr.p - 1; ++c)
      out.push_back(family_meta_Gc(pr, c));
    for (std::int64_t a = 1; a <= pr.q - 1; ++a)
      for (std::int64_t b = 0; b <= pr.p - 1; ++b)
        out.push_back(family_meta_Gab(pr, a, b));
    for (std::int64_t d = 1; d <= pr.q - 1; ++d) {
      std::int64_t cmax = (d == pr.q - 1) ? 0 : pr.p - 1;
      for (std::int64_t c = 0; c <= cmax; ++c)
        out.push_back(family_meta_Gcd(pr, c, d));
    }
  }
  return out;
}

std::vector<Subgroup> enumerate_regular_bruteforce(const Params& pr, Kind kind,
                                                   std::int64_t budget) {
  if (pr.size() > budget)
    throw std::invalid_argument(
        "enumerate_regular_bruteforce: pq exceeds the oracle budget");
  if (kind == Kind::M && !pr.congruent)
    throw std::invalid_argument(
        "enumerate_regular_bruteforce: M requires congruent params");

  // One generator per cyclic subgroup of order p resp. q; closing a pair only
  // depends on the cyclic subgroups the generators span.
  std::vector<HolElem> gen_p, gen_q;
  std::set<std::vector<std::int64_t>> seen_cyclic;
  auto cyclic_key = [&](const HolElem& h, std::int64_t ord) {
    std::vector<std::int64_t> key;
    HolElem x = hol_identity(kind);
    for (std::int64_t i = 0; i < ord; ++i) {
      key.push_back(hol_code(pr, x));
      x = hol_mul(pr, x, h);
    }
    std::sort(key.begin(), key.end());
    return key;
  };
  HolElem id = hol_identity(kind);
  for (const Aut& f : all_automorphisms(pr, kind)) {
    for (std::int64_t idx = 0; idx < pr.size(); ++idx) {
      HolElem h{elem_from_flat(pr, kind, idx), f};
      if (h == id) continue;
      if (hol_pow(pr, h, pr.p) == id) {
        if (seen_cyclic.insert(cyclic_key(h, pr.p)).second) gen_p.push_back(h);
      } else if (hol_pow(pr, h, pr.q) == id) {
        if (seen_cyclic.insert(cyclic_key(h, pr.q)).second) gen_q.push_back(h);
      }
    }
  }

  std::vector<Subgroup> out;
  std::set<std::vector<std::int64_t>> seen;
  for (const HolElem& x : gen_p) {
    for (const HolElem& y : gen_q) {
      auto closed = close_elements_capped(pr, {x, y}, pr.size());
      if (!closed) continue;
      Subgroup s{kind, std::move(*closed), {x, y}, ""};
      if (!is_regular(pr, s)) continue;
      if (seen.insert(subgroup_key(pr, s)).second) out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end(), [&](const Subgroup& a, const Subgroup& b) {
    return subgroup_key(pr, a) < subgroup_key(pr, b);
  });
  return out;
}

Subgroup conjugate_subgroup(const Params& pr, const Subgroup& s, const Aut& f) {
  if (!s.elements.empty() && s.elements.front().a.kind != f.kind)
    throw std::invalid_argument("conjugate_subgroup: kind mismatch");
  HolElem cf{group_identity(f.kind), f};
  HolElem cfi = hol_inv(pr, cf);
  Subgroup out;
  out.kind = s.kind;
  out.elements.reserve(s.elements.size());
  for (const HolElem& h : s.elements)
    out.elements.push_back(hol_mul(pr, hol_mul(pr, cf, h), cfi));
  sort_canonical(pr, out.elements);
  for (const HolElem& g : s.gens)
    out.gens.push_back(hol_mul(pr, hol_mul(pr, cf, g), cfi));
  return out;
}

std::vector<Orbit> compute_orbits(const Params& pr,
                                  const std::vector<Subgroup>& subgroups) {
  std::map<std::vector<std::int64_t>, std::size_t> index;
  for (std::size_t i = 0; i < subgroups.size(); ++i)
    index[subgroup_key(pr, subgroups[i])] = i;

  Kind kind = subgroups.empty() ? Kind::C : subgroups.front().kind;
  std::vector<Aut> auts = all_automorphisms(pr, kind);
  std::vector<bool> visited(subgroups.size(), false);
  std::vector<Orbit> orbits;

  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    if (visited[i]) continue;
    Orbit orb;
    std::vector<std::size_t> stack{i};
    visited[i] = true;
    while (!stack.empty()) {
      std::size_t cur = stack.back();
      stack.pop_back();
      orb.members.push_back(cur);
      for (const Aut& f : auts) {
        Subgroup conj = conjugate_subgroup(pr, subgroups[cur], f);
        auto it = index.find(subgroup_key(pr, conj));
        if (it == index.end())
          throw std::logic_error(
              "compute_orbits: conjugate not in the input list");
        if (!visited[it->second]) {
          visited[it->second] = true;
          stack.push_back(it->second);
        }
      }
    }
    std::sort(orb.members.begin(), orb.members.end());
    orb.representative = orb.members.front();
    for (std::size_t m : orb.members)
      if (subgroup_key(pr, subgroups[m]) <
          subgroup_key(pr, subgroups[orb.representative]))
        orb.representative = m;
    orbits.push_back(std::move(orb));
  }
  return orbits;
}

std::int64_t EPrimeTable::at(Kind iso, Kind ambient, std::int64_t m) const {
  auto it = counts.find({iso, ambient, m});
  return it == counts.end() ? 0 : it->second;
}

EPrimeTable e_prime_counts_closed_form(const Params& pr, Kind kind) {
  EPrimeTable t;
  auto put = [&](Kind iso, std::int64_t m, std::int64_t c) {
    if (c > 0) t.counts[{iso, kind, m}] = c;
  };
  put(Kind::C, 1, kind == Kind::C ? 1 : 0);
  put(Kind::M, 1, kind == Kind::M ? 1 : 0);
  if (!pr.congruent) return t;
  if (kind == Kind::C) {
    put(Kind::M, pr.q, pr.q - 1);
  } else {
    put(Kind::C, pr.p, pr.p);
    put(Kind::M, pr.q, pr.p * (pr.q - 2));
    put(Kind::C, pr.q, pr.p);
    put(Kind::M, pr.size(), pr.p * (pr.q - 2) + 1);
  }
  return t;
}

EPrimeTable e_prime_counts(const Params& pr,
                           const std::vector<Subgroup>& subgroups) {
  EPrimeTable t;
  for (const Subgroup& s : subgroups)
    ++t.counts[{iso_type(pr, s), s.kind, pi2_image_size(pr, s)}];
  return t;
}

}  // namespace pqbrace
