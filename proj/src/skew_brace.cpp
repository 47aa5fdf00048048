#include "pqbrace/skew_brace.hpp"

#include <algorithm>
#include <stdexcept>

namespace pqbrace {

namespace {

std::vector<std::int32_t> build_group_table(const Params& pr, Kind kind) {
  std::int64_t n = pr.size();
  std::vector<std::int32_t> t(n * n);
  for (std::int64_t x = 0; x < n; ++x) {
    GroupElem ex = elem_from_flat(pr, kind, x);
    for (std::int64_t y = 0; y < n; ++y) {
      GroupElem ey = elem_from_flat(pr, kind, y);
      t[x * n + y] = static_cast<std::int32_t>(flat_index(pr, group_op(pr, ex, ey)));
    }
  }
  return t;
}

std::vector<std::int32_t> inverse_lookup(const std::vector<std::int32_t>& t,
                                         std::int64_t n) {
  std::vector<std::int32_t> inv(n, -1);
  for (std::int64_t x = 0; x < n; ++x)
    for (std::int64_t y = 0; y < n; ++y)
      if (t[x * n + y] == 0 && t[y * n + x] == 0) {
        inv[x] = static_cast<std::int32_t>(y);
        break;
      }
  return inv;
}

bool is_group_table(const std::vector<std::int32_t>& t, std::int64_t n) {
  // identity must be element 0 (the braces here share the identity (0,0))
  for (std::int64_t x = 0; x < n; ++x)
    if (t[0 * n + x] != x || t[x * n + 0] != x) return false;
  // Latin square
  for (std::int64_t x = 0; x < n; ++x) {
    std::vector<bool> row(n, false), col(n, false);
    for (std::int64_t y = 0; y < n; ++y) {
      std::int64_t r = t[x * n + y], c = t[y * n + x];
      if (r < 0 || r >= n || c < 0 || c >= n || row[r] || col[c]) return false;
      row[r] = col[c] = true;
    }
  }
  for (std::int64_t x = 0; x < n; ++x)
    for (std::int64_t y = 0; y < n; ++y)
      for (std::int64_t z = 0; z < n; ++z)
        if (t[t[x * n + y] * n + z] != t[x * n + t[y * n + z]]) return false;
  return true;
}

std::int64_t order_in_table(const std::vector<std::int32_t>& t, std::int64_t n,
                            std::int64_t x) {
  std::int64_t y = x, ord = 1;
  while (y != 0) {
    y = t[y * n + x];
    ++ord;
    if (ord > n) throw std::logic_error("order_in_table: not a group table");
  }
  return ord;
}

}  // namespace

SkewBrace brace_from_tables(const Params& pr, Kind add_kind,
                            std::vector<std::int32_t> add,
                            std::vector<std::int32_t> circ, std::string label) {
  std::int64_t n = pr.size();
  if (static_cast<std::int64_t>(add.size()) != n * n ||
      static_cast<std::int64_t>(circ.size()) != n * n)
    throw std::invalid_argument("brace_from_tables: table size mismatch");
  SkewBrace b;
  b.params = pr;
  b.add_kind = add_kind;
  b.n = n;
  b.add = std::move(add);
  b.circ = std::move(circ);
  b.add_inv = inverse_lookup(b.add, n);
  b.circ_inv = inverse_lookup(b.circ, n);
  b.label = std::move(label);
  return b;
}

SkewBrace trivial_brace(const Params& pr, Kind kind) {
  auto t = build_group_table(pr, kind);
  return brace_from_tables(pr, kind, t, t,
                           std::string("trivial-") + kind_name(kind));
}

SkewBrace brace_from_regular(const Params& pr, Kind kind, const Subgroup& s) {
  if (s.kind != kind)
    throw std::invalid_argument("brace_from_regular: kind mismatch");
  std::int64_t n = pr.size();
  // pi1 restricted to S must be a bijection onto A
  std::vector<const HolElem*> preimage(n, nullptr);
  for (const HolElem& h : s.elements) {
    std::int64_t idx = flat_index(pr, h.a);
    if (preimage[idx] != nullptr)
      throw std::invalid_argument("brace_from_regular: subgroup is not regular");
    preimage[idx] = &h;
  }
  for (std::int64_t i = 0; i < n; ++i)
    if (preimage[i] == nullptr)
      throw std::invalid_argument("brace_from_regular: subgroup is not regular");

  std::vector<std::int32_t> circ(n * n);
  for (std::int64_t a = 0; a < n; ++a) {
    GroupElem ea = elem_from_flat(pr, kind, a);
    const Aut& f = preimage[a]->f;
    for (std::int64_t bb = 0; bb < n; ++bb) {
      GroupElem eb = elem_from_flat(pr, kind, bb);
      circ[a * n + bb] = static_cast<std::int32_t>(
          flat_index(pr, group_op(pr, ea, aut_apply(pr, f, eb))));
    }
  }
  std::string label = s.label.empty() ? "from-subgroup" : "from-" + s.label;
  return brace_from_tables(pr, kind, build_group_table(pr, kind),
                           std::move(circ), std::move(label));
}

namespace {

// circ tables of the classification theorem, on the flat carrier (n, m)
std::vector<std::int32_t> formula_table(const Params& pr, bool twist_n,
                                        std::int64_t exp) {
  // (n, m) circ (s, t) = (g^{t * [twist_n]} n + g^{exp * m} s, m + t)
  std::int64_t n = pr.size();
  std::vector<std::int32_t> t(n * n);
  for (std::int64_t x = 0; x < n; ++x) {
    std::int64_t xn = x / pr.q, xm = x % pr.q;
    std::int64_t gm = mod_pow(pr.g, exp * xm % pr.q, pr.p);
    for (std::int64_t y = 0; y < n; ++y) {
      std::int64_t yn = y / pr.q, ym = y % pr.q;
      std::int64_t gt = twist_n ? mod_pow(pr.g, ym, pr.p) : 1;
      t[x * n + y] = static_cast<std::int32_t>(
          ((gt * xn + gm * yn) % pr.p) * pr.q + (xm + ym) % pr.q);
    }
  }
  return t;
}

}  // namespace

std::vector<SkewBrace> catalog(const Params& pr) {
  std::vector<SkewBrace> out;
  out.push_back(trivial_brace(pr, Kind::C));
  if (!pr.congruent) return out;

  auto addC = build_group_table(pr, Kind::C);
  auto addM = build_group_table(pr, Kind::M);

  out.push_back(brace_from_tables(pr, Kind::C, addC, formula_table(pr, false, 1),
                                  "cyclic-nontrivial"));
  out.push_back(trivial_brace(pr, Kind::M));
  out.push_back(
      brace_from_tables(pr, Kind::M, addM, formula_table(pr, true, 1), "kerq"));
  // gamma, mu run over 1 < e <= q; e = q stands for exponent 0 mod q
  for (std::int64_t e = 2; e <= pr.q; ++e)
    out.push_back(brace_from_tables(pr, Kind::M, addM,
                                    formula_table(pr, false, e % pr.q),
                                    "A_gamma(" + std::to_string(e) + ")"));
  for (std::int64_t e = 2; e <= pr.q; ++e)
    out.push_back(brace_from_tables(pr, Kind::M, addM,
                                    formula_table(pr, true, e % pr.q),
                                    "A_mu(" + std::to_string(e) + ")"));
  return out;
}

AxiomReport verify_skew_axioms(const SkewBrace& b) {
  AxiomReport rep;
  std::int64_t n = b.n;
  rep.add_group = is_group_table(b.add, n);
  rep.circ_group = is_group_table(b.circ, n);
  rep.brace_law = true;
  for (std::int64_t a = 0; a < n && rep.brace_law; ++a) {
    std::int64_t neg_a = b.add_inv_of(a);
    if (neg_a < 0) {
      rep.brace_law = false;
      rep.witness = {a, -1, -1};
      break;
    }
    for (std::int64_t x = 0; x < n && rep.brace_law; ++x) {
      std::int64_t ax = b.circ_of(a, x);
      for (std::int64_t y = 0; y < n; ++y) {
        // a circ (x + y) = a circ x - a + a circ y
        std::int64_t lhs = b.circ_of(a, b.add_of(x, y));
        std::int64_t rhs = b.add_of(b.add_of(ax, neg_a), b.circ_of(a, y));
        if (lhs != rhs) {
          rep.brace_law = false;
          rep.witness = {a, x, y};
          break;
        }
      }
    }
  }
  return rep;
}

LambdaMap lambda_of(const SkewBrace& b) {
  std::int64_t n = b.n;
  LambdaMap lm;
  lm.maps.assign(n, std::vector<std::int32_t>(n));
  for (std::int64_t a = 0; a < n; ++a) {
    std::int64_t neg_a = b.add_inv_of(a);
    for (std::int64_t x = 0; x < n; ++x)
      lm.maps[a][x] = static_cast<std::int32_t>(b.add_of(neg_a, b.circ_of(a, x)));
  }
  for (std::int64_t a = 0; a < n; ++a) {
    bool id = true;
    for (std::int64_t x = 0; x < n; ++x)
      if (lm.maps[a][x] != x) {
        id = false;
        break;
      }
    if (id) lm.kernel.push_back(a);
  }
  lm.automorphisms = true;
  for (std::int64_t a = 0; a < n && lm.automorphisms; ++a) {
    std::vector<bool> hit(n, false);
    for (std::int64_t x = 0; x < n; ++x) hit[lm.maps[a][x]] = true;
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
      lm.automorphisms = false;
      break;
    }
    for (std::int64_t x = 0; x < n && lm.automorphisms; ++x)
      for (std::int64_t y = 0; y < n; ++y)
        if (lm.maps[a][b.add_of(x, y)] !=
            b.add_of(lm.maps[a][x], lm.maps[a][y])) {
          lm.automorphisms = false;
          break;
        }
  }
  lm.homomorphism = true;
  for (std::int64_t a = 0; a < n && lm.homomorphism; ++a)
    for (std::int64_t c = 0; c < n && lm.homomorphism; ++c) {
      const auto& composed = lm.maps[b.circ_of(a, c)];
      for (std::int64_t x = 0; x < n; ++x)
        if (composed[x] != lm.maps[a][lm.maps[c][x]]) {
          lm.homomorphism = false;
          break;
        }
    }
  return lm;
}

SkewBrace swapped(const SkewBrace& b) {
  SkewBrace s = b;
  std::swap(s.add, s.circ);
  std::swap(s.add_inv, s.circ_inv);
  s.add_kind = circ_iso_type(b);
  s.label = b.label + "-swapped";
  return s;
}

bool is_biskew(const SkewBrace& b) {
  // x + (y circ z) = (x + y) circ x' circ (x + z), x' the circ-inverse
  std::int64_t n = b.n;
  for (std::int64_t x = 0; x < n; ++x) {
    std::int64_t xi = b.circ_inv_of(x);
    for (std::int64_t y = 0; y < n; ++y) {
      std::int64_t left_part = b.circ_of(b.add_of(x, y), xi);
      for (std::int64_t z = 0; z < n; ++z)
        if (b.add_of(x, b.circ_of(y, z)) !=
            b.circ_of(left_part, b.add_of(x, z)))
          return false;
    }
  }
  return true;
}

SkewBrace semidirect_biskew(const Params& pr, std::int64_t eta_mult,
                            std::int64_t rho_mult) {
  auto check = [&](std::int64_t m) {
    m = ((m % pr.p) + pr.p) % pr.p;
    if (m == 0 || mod_pow(m, pr.q, pr.p) != 1)
      throw std::invalid_argument(
          "semidirect_biskew: multiplier must be a unit of order dividing q");
    return m;
  };
  eta_mult = check(eta_mult);
  rho_mult = check(rho_mult);
  std::int64_t n = pr.size();
  auto semidirect_table = [&](std::int64_t mult) {
    std::vector<std::int32_t> t(n * n);
    for (std::int64_t x = 0; x < n; ++x) {
      std::int64_t xn = x / pr.q, xs = x % pr.q;
      std::int64_t ms = mod_pow(mult, xs, pr.p);
      for (std::int64_t y = 0; y < n; ++y)
        t[x * n + y] = static_cast<std::int32_t>(
            ((xn + ms * (y / pr.q)) % pr.p) * pr.q + (xs + y % pr.q) % pr.q);
    }
    return t;
  };
  Kind add_kind = eta_mult == 1 ? Kind::C : Kind::M;
  return brace_from_tables(pr, add_kind, semidirect_table(eta_mult),
                           semidirect_table(rho_mult),
                           "semidirect(" + std::to_string(eta_mult) + "," +
                               std::to_string(rho_mult) + ")");
}

Kind circ_iso_type(const SkewBrace& b) {
  for (std::int64_t x = 0; x < b.n; ++x)
    for (std::int64_t y = x + 1; y < b.n; ++y)
      if (b.circ_of(x, y) != b.circ_of(y, x)) return Kind::M;
  return Kind::C;
}

std::optional<std::vector<std::int32_t>> are_isomorphic(const SkewBrace& b1,
                                                        const SkewBrace& b2) {
  if (b1.n != b2.n) return std::nullopt;
  std::int64_t n = b1.n;
  const std::int64_t p = b1.params.p, q = b1.params.q;

  auto pick_orders = [&](const SkewBrace& b, std::int64_t want) {
    std::vector<std::int64_t> out;
    for (std::int64_t x = 1; x < n; ++x)
      if (order_in_table(b.add, n, x) == want) out.push_back(x);
    return out;
  };
  std::vector<std::int64_t> xs1 = pick_orders(b1, p), ys1 = pick_orders(b1, q);
  if (xs1.empty() || ys1.empty()) return std::nullopt;
  std::int64_t x0 = xs1.front(), y0 = ys1.front();

  // every additive element is x0^a + y0^b, uniquely
  auto powers = [&](const SkewBrace& b, std::int64_t x, std::int64_t count) {
    std::vector<std::int64_t> pw(count);
    pw[0] = 0;
    for (std::int64_t i = 1; i < count; ++i) pw[i] = b.add_of(pw[i - 1], x);
    return pw;
  };
  auto xp1 = powers(b1, x0, p), yp1 = powers(b1, y0, q);

  for (std::int64_t xi : pick_orders(b2, p)) {
    auto xp2 = powers(b2, xi, p);
    for (std::int64_t yi : pick_orders(b2, q)) {
      auto yp2 = powers(b2, yi, q);
      std::vector<std::int32_t> phi(n, -1);
      std::vector<bool> used(n, false);
      bool bijective = true;
      for (std::int64_t a = 0; a < p && bijective; ++a)
        for (std::int64_t c = 0; c < q; ++c) {
          std::int64_t src = b1.add_of(xp1[a], yp1[c]);
          std::int64_t dst = b2.add_of(xp2[a], yp2[c]);
          if (used[dst]) {
            bijective = false;
            break;
          }
          used[dst] = true;
          phi[src] = static_cast<std::int32_t>(dst);
        }
      if (!bijective) continue;
      bool hom = true;
      for (std::int64_t x = 0; x < n && hom; ++x)
        for (std::int64_t y = 0; y < n; ++y)
          if (phi[b1.add_of(x, y)] != b2.add_of(phi[x], phi[y]) ||
              phi[b1.circ_of(x, y)] != b2.circ_of(phi[x], phi[y])) {
            hom = false;
            break;
          }
      if (hom) return phi;
    }
  }
  return std::nullopt;
}

}  // namespace pqbrace
