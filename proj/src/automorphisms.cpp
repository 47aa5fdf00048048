#include "pqbrace/automorphisms.hpp"

#include <numeric>
#include <stdexcept>

namespace pqbrace {

Aut aut_identity(Kind kind) { return Aut{kind, 1, kind == Kind::C ? 1 : 0}; }

bool is_valid_aut(const Params& pr, const Aut& f) {
  if (f.kind == Kind::C)
    return f.a >= 1 && f.a < pr.p && f.b >= 1 && f.b < pr.q &&
           std::gcd(f.a, pr.p) == 1 && std::gcd(f.b, pr.q) == 1;
  return pr.congruent && f.a >= 1 && f.a < pr.p && f.b >= 0 && f.b < pr.p;
}

GroupElem aut_apply(const Params& pr, const Aut& f, const GroupElem& x) {
  if (f.kind != x.kind)
    throw std::invalid_argument("aut_apply: kind mismatch");
  if (f.kind == Kind::C)
    return GroupElem{Kind::C, f.a * x.n % pr.p, f.b * x.m % pr.q};
  // phi_{i,j}(sigma^n tau^m) = sigma^{i n} (sigma^j tau)^m
  //                          = sigma^{i n + j (1 + g + ... + g^{m-1})} tau^m
  std::int64_t n = (f.a * x.n + f.b * geometric_sum(pr, x.m)) % pr.p;
  return GroupElem{Kind::M, n, x.m};
}

Aut aut_compose(const Params& pr, const Aut& f, const Aut& h) {
  if (f.kind != h.kind)
    throw std::invalid_argument("aut_compose: kind mismatch");
  if (f.kind == Kind::C)
    return Aut{Kind::C, f.a * h.a % pr.p, f.b * h.b % pr.q};
  return Aut{Kind::M, f.a * h.a % pr.p, (f.a * h.b + f.b) % pr.p};
}

Aut aut_invert(const Params& pr, const Aut& f) {
  if (f.kind == Kind::C)
    return Aut{Kind::C, mod_inv(f.a, pr.p), mod_inv(f.b, pr.q)};
  std::int64_t i = mod_inv(f.a, pr.p);
  return Aut{Kind::M, i, (pr.p - i * f.b % pr.p) % pr.p};
}

Aut aut_pow(const Params& pr, const Aut& f, std::int64_t e) {
  Aut base = f;
  if (e < 0) {
    base = aut_invert(pr, f);
    e = -e;
  }
  Aut r = aut_identity(f.kind);
  for (std::int64_t i = 0; i < e; ++i) r = aut_compose(pr, r, base);
  return r;
}

std::vector<Aut> all_automorphisms(const Params& pr, Kind kind) {
  std::vector<Aut> out;
  if (kind == Kind::C) {
    out.reserve((pr.p - 1) * (pr.q - 1));
    for (std::int64_t u = 1; u < pr.p; ++u)
      for (std::int64_t v = 1; v < pr.q; ++v) out.push_back(Aut{Kind::C, u, v});
  } else {
    if (!pr.congruent)
      throw std::invalid_argument("all_automorphisms: M requires congruent params");
    out.reserve(pr.p * (pr.p - 1));
    for (std::int64_t i = 1; i < pr.p; ++i)
      for (std::int64_t j = 0; j < pr.p; ++j) out.push_back(Aut{Kind::M, i, j});
  }
  return out;
}

std::pair<Aut, std::optional<Aut>> alpha_beta(const Params& pr, Kind kind) {
  if (!pr.congruent)
    throw std::invalid_argument("alpha_beta: requires congruent params");
  if (kind == Kind::C) return {Aut{Kind::C, pr.g, 1}, std::nullopt};
  return {Aut{Kind::M, 1, 1}, Aut{Kind::M, pr.g, 0}};
}

HolElem hol_identity(Kind kind) {
  return HolElem{group_identity(kind), aut_identity(kind)};
}

HolElem hol_mul(const Params& pr, const HolElem& x, const HolElem& y) {
  return HolElem{group_op(pr, x.a, aut_apply(pr, x.f, y.a)),
                 aut_compose(pr, x.f, y.f)};
}

HolElem hol_inv(const Params& pr, const HolElem& x) {
  Aut fi = aut_invert(pr, x.f);
  return HolElem{aut_apply(pr, fi, group_inv(pr, x.a)), fi};
}

HolElem hol_pow(const Params& pr, const HolElem& x, std::int64_t e) {
  HolElem base = x;
  if (e < 0) {
    base = hol_inv(pr, x);
    e = -e;
  }
  HolElem r = hol_identity(x.a.kind);
  for (std::int64_t i = 0; i < e; ++i) r = hol_mul(pr, r, base);
  return r;
}

GroupElem hol_act(const Params& pr, const HolElem& h, const GroupElem& b) {
  return group_op(pr, h.a, aut_apply(pr, h.f, b));
}

std::int64_t hol_code(const Params& pr, const HolElem& h) {
  // a < p in both kinds, b < max(p, q) <= p
  return (flat_index(pr, h.a) * pr.p + h.f.a) * pr.p + h.f.b;
}

}  // namespace pqbrace
