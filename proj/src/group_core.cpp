#include "pqbrace/group_core.hpp"

#include <stdexcept>
#include <string>

namespace pqbrace {

const char* kind_name(Kind k) { return k == Kind::C ? "C" : "M"; }

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  if (mod <= 0) throw std::invalid_argument("mod_pow: non-positive modulus");
  if (exp < 0) throw std::invalid_argument("mod_pow: negative exponent");
  base %= mod;
  if (base < 0) base += mod;
  std::int64_t r = 1 % mod;
  while (exp > 0) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t mod) {
  a %= mod;
  if (a < 0) a += mod;
  if (a == 0) throw std::invalid_argument("mod_inv: zero is not invertible");
  // mod is prime throughout this project
  return mod_pow(a, mod - 2, mod);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t multiplicative_order(std::int64_t a, std::int64_t mod) {
  a %= mod;
  if (a < 0) a += mod;
  if (a == 0) throw std::invalid_argument("multiplicative_order: zero input");
  std::int64_t x = a % mod, ord = 1;
  while (x != 1) {
    x = x * a % mod;
    ++ord;
    if (ord > mod) throw std::logic_error("multiplicative_order: no finite order");
  }
  return ord;
}

std::int64_t smallest_primitive_root(std::int64_t p) {
  for (std::int64_t a = 1; a < p; ++a)
    if (multiplicative_order(a, p) == p - 1) return a;
  throw std::invalid_argument("smallest_primitive_root: modulus not prime");
}

namespace {

Params make_params_impl(std::int64_t p, std::int64_t q, std::int64_t forced_g) {
  if (!is_prime(p) || !is_prime(q))
    throw std::invalid_argument("make_params: p and q must be prime");
  if (p <= q) throw std::invalid_argument("make_params: require p > q");

  Params pr;
  pr.p = p;
  pr.q = q;
  pr.congruent = (p - 1) % q == 0;
  if (pr.congruent) {
    if (forced_g != 0) {
      std::int64_t g = ((forced_g % p) + p) % p;
      if (g <= 1 || mod_pow(g, q, p) != 1)
        throw std::invalid_argument("make_params: g must have multiplicative order q mod p");
      pr.g = g;
    } else {
      // smallest residue of order exactly q; q prime, so order q <=> g^q = 1, g != 1
      for (std::int64_t g = 2; g < p; ++g) {
        if (mod_pow(g, q, p) == 1) {
          pr.g = g;
          break;
        }
      }
    }
    pr.a0 = mod_inv(pr.g - 1, p);
  }
  return pr;
}

}  // namespace

Params make_params(std::int64_t p, std::int64_t q) { return make_params_impl(p, q, 0); }

Params make_params_with_g(std::int64_t p, std::int64_t q, std::int64_t g) {
  Params pr = make_params_impl(p, q, g);
  if (!pr.congruent)
    throw std::invalid_argument("make_params_with_g: p != 1 mod q, no valid g exists");
  return pr;
}

std::int64_t flat_index(const Params& pr, const GroupElem& x) { return x.n * pr.q + x.m; }

GroupElem elem_from_flat(const Params& pr, Kind kind, std::int64_t idx) {
  if (idx < 0 || idx >= pr.size())
    throw std::out_of_range("elem_from_flat: index out of range");
  return GroupElem{kind, idx / pr.q, idx % pr.q};
}

GroupElem group_identity(Kind kind) { return GroupElem{kind, 0, 0}; }

GroupElem group_op(const Params& pr, const GroupElem& x, const GroupElem& y) {
  if (x.kind != y.kind)
    throw std::invalid_argument("group_op: mixed element kinds");
  if (x.kind == Kind::C)
    return GroupElem{Kind::C, (x.n + y.n) % pr.p, (x.m + y.m) % pr.q};
  if (!pr.congruent)
    throw std::invalid_argument("group_op: kind M requires p = 1 mod q");
  return GroupElem{Kind::M, (x.n + mod_pow(pr.g, x.m, pr.p) * y.n) % pr.p,
                   (x.m + y.m) % pr.q};
}

GroupElem group_inv(const Params& pr, const GroupElem& x) {
  std::int64_t m = (pr.q - x.m) % pr.q;
  if (x.kind == Kind::C) return GroupElem{Kind::C, (pr.p - x.n) % pr.p, m};
  // (n,m)^{-1} = (-g^{-m} n, -m): solve (n,m)(s,t) = (0,0)
  std::int64_t ginv_m = mod_pow(mod_inv(pr.g, pr.p), x.m, pr.p);
  return GroupElem{Kind::M, (pr.p - ginv_m * x.n % pr.p) % pr.p, m};
}

GroupElem group_pow(const Params& pr, const GroupElem& x, std::int64_t e) {
  GroupElem base = x;
  if (e < 0) {
    base = group_inv(pr, x);
    e = -e;
  }
  GroupElem r = group_identity(x.kind);
  for (std::int64_t i = 0; i < e; ++i) r = group_op(pr, r, base);
  return r;
}

std::int64_t element_order(const Params& pr, const GroupElem& x) {
  GroupElem id = group_identity(x.kind);
  GroupElem y = x;
  std::int64_t ord = 1;
  while (!(y == id)) {
    y = group_op(pr, y, x);
    ++ord;
    if (ord > pr.size()) throw std::logic_error("element_order: runaway");
  }
  return ord;
}

std::int64_t geometric_sum(const Params& pr, std::int64_t r) {
  if (!pr.congruent)
    throw std::invalid_argument("geometric_sum: requires congruent params");
  if (r < 0) throw std::invalid_argument("geometric_sum: negative length");
  std::int64_t gr = mod_pow(pr.g, r, pr.p);
  return pr.a0 * ((gr - 1 + pr.p) % pr.p) % pr.p;
}

}  // namespace pqbrace
