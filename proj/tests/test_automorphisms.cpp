#include <doctest.h>

#include <stdexcept>
#include <utility>

#include "pqbrace/automorphisms.hpp"

using namespace pqbrace;

namespace {

bool pointwise_equal(const Params& pr, const Aut& f, const Aut& h) {
  Kind kind = f.kind;
  for (std::int64_t i = 0; i < pr.size(); ++i) {
    GroupElem x = elem_from_flat(pr, kind, i);
    if (!(aut_apply(pr, f, x) == aut_apply(pr, h, x))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("aut_apply: spec examples for M") {
  Params pr = make_params(7, 3);
  // phi_{1,1}(tau) = sigma tau
  CHECK(aut_apply(pr, Aut{Kind::M, 1, 1}, {Kind::M, 0, 1}) ==
        GroupElem{Kind::M, 1, 1});
  // phi_{3,0}(sigma^2) = sigma^6
  CHECK(aut_apply(pr, Aut{Kind::M, 3, 0}, {Kind::M, 2, 0}) ==
        GroupElem{Kind::M, 6, 0});
  for (Kind kind : {Kind::C, Kind::M}) {
    Aut id = aut_identity(kind);
    for (std::int64_t i = 0; i < pr.size(); ++i) {
      GroupElem x = elem_from_flat(pr, kind, i);
      REQUIRE(aut_apply(pr, id, x) == x);
    }
  }
  CHECK_THROWS_AS(aut_apply(pr, Aut{Kind::M, 1, 0}, {Kind::C, 1, 0}),
                  std::invalid_argument);
}

TEST_CASE("aut_compose: closed form agrees with pointwise composition") {
  Params pr = make_params(7, 3);
  // phi_{2,3} . phi_{3,1} = phi_{6,5}
  Aut c = aut_compose(pr, Aut{Kind::M, 2, 3}, Aut{Kind::M, 3, 1});
  CHECK(c == Aut{Kind::M, 6, 5});
  CHECK(aut_compose(pr, Aut{Kind::M, 2, 3}, aut_identity(Kind::M)) ==
        Aut{Kind::M, 2, 3});
  CHECK(aut_compose(pr, Aut{Kind::C, 3, 2}, Aut{Kind::C, 5, 2}) ==
        aut_identity(Kind::C));

  for (Kind kind : {Kind::C, Kind::M})
    for (const Aut& f : all_automorphisms(pr, kind))
      for (const Aut& h : all_automorphisms(pr, kind)) {
        Aut fh = aut_compose(pr, f, h);
        for (std::int64_t i = 0; i < pr.size(); ++i) {
          GroupElem x = elem_from_flat(pr, kind, i);
          REQUIRE(aut_apply(pr, fh, x) ==
                  aut_apply(pr, f, aut_apply(pr, h, x)));
        }
      }
}

TEST_CASE("aut_invert") {
  Params pr = make_params(7, 3);
  // phi_{1,-c} inverse of phi_{1,c}
  for (std::int64_t c = 0; c < 7; ++c)
    CHECK(aut_compose(pr, Aut{Kind::M, 1, (7 - c) % 7}, Aut{Kind::M, 1, c}) ==
          aut_identity(Kind::M));
  CHECK(aut_invert(pr, aut_identity(Kind::M)) == aut_identity(Kind::M));
  CHECK(aut_invert(pr, Aut{Kind::M, 2, 3}) == Aut{Kind::M, 4, 2});
  for (Kind kind : {Kind::C, Kind::M})
    for (const Aut& f : all_automorphisms(pr, kind))
      REQUIRE(aut_compose(pr, f, aut_invert(pr, f)) == aut_identity(kind));
}

TEST_CASE("automorphism group sizes and homomorphism property") {
  for (auto [p, q] : {std::pair<std::int64_t, std::int64_t>{7, 3}, {7, 2}}) {
    Params pr = make_params(p, q);
    auto autc = all_automorphisms(pr, Kind::C);
    auto autm = all_automorphisms(pr, Kind::M);
    CHECK(static_cast<std::int64_t>(autc.size()) == (p - 1) * (q - 1));
    CHECK(static_cast<std::int64_t>(autm.size()) == p * (p - 1));

    // Aut(C) abelian
    for (const Aut& f : autc)
      for (const Aut& h : autc)
        REQUIRE(aut_compose(pr, f, h) == aut_compose(pr, h, f));

    // every Aut is a bijective homomorphism
    for (Kind kind : {Kind::C, Kind::M}) {
      for (const Aut& f : all_automorphisms(pr, kind)) {
        std::vector<bool> hit(pr.size(), false);
        for (std::int64_t i = 0; i < pr.size(); ++i) {
          GroupElem x = elem_from_flat(pr, kind, i);
          hit[flat_index(pr, aut_apply(pr, f, x))] = true;
          for (std::int64_t j = 0; j < pr.size(); ++j) {
            GroupElem y = elem_from_flat(pr, kind, j);
            REQUIRE(aut_apply(pr, f, group_op(pr, x, y)) ==
                    group_op(pr, aut_apply(pr, f, x), aut_apply(pr, f, y)));
          }
        }
        for (bool b : hit) REQUIRE(b);
      }
    }
  }
}

TEST_CASE("alpha and beta") {
  Params pr = make_params(7, 3);
  auto [alpha, beta] = alpha_beta(pr, Kind::M);
  CHECK(alpha == Aut{Kind::M, 1, 1});
  CHECK(*beta == Aut{Kind::M, 2, 0});

  // order of alpha is p, order of beta is q
  auto order_of = [&](const Aut& f) {
    Aut x = f;
    std::int64_t ord = 1;
    while (!(x == aut_identity(Kind::M))) {
      x = aut_compose(pr, x, f);
      ++ord;
    }
    return ord;
  };
  CHECK(order_of(alpha) == 7);
  CHECK(order_of(*beta) == 3);

  // beta alpha beta^{-1} = alpha^g
  Aut conj = aut_compose(pr, aut_compose(pr, *beta, alpha), aut_invert(pr, *beta));
  CHECK(pointwise_equal(pr, conj, aut_pow(pr, alpha, pr.g)));

  // <alpha, beta> has order pq
  std::vector<Aut> elems{aut_identity(Kind::M)};
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (const Aut* gen : {&alpha, &*beta}) {
        Aut cand = aut_compose(pr, elems[i], *gen);
        bool found = false;
        for (const Aut& e : elems)
          if (e == cand) found = true;
        if (!found) {
          elems.push_back(cand);
          grew = true;
        }
      }
  }
  CHECK(static_cast<std::int64_t>(elems.size()) == pr.size());

  auto [ac, bc] = alpha_beta(pr, Kind::C);
  CHECK(ac == Aut{Kind::C, 2, 1});
  CHECK_FALSE(bc.has_value());
  CHECK_THROWS_AS(alpha_beta(make_params(5, 3), Kind::C), std::invalid_argument);
}

TEST_CASE("holomorph product and action") {
  Params pr = make_params(7, 3);
  HolElem id = hol_identity(Kind::M);
  HolElem h{GroupElem{Kind::M, 1, 0}, Aut{Kind::M, 1, 1}};
  CHECK(hol_mul(pr, id, h) == h);
  CHECK(hol_mul(pr, h, id) == h);

  // ((1,0), phi_{1,1}) . ((1,0), id) = ((2,0), phi_{1,1})
  HolElem prod = hol_mul(pr, h, HolElem{GroupElem{Kind::M, 1, 0},
                                        aut_identity(Kind::M)});
  CHECK(prod == HolElem{GroupElem{Kind::M, 2, 0}, Aut{Kind::M, 1, 1}});

  // translation action
  CHECK(hol_act(pr, HolElem{GroupElem{Kind::C, 1, 0}, aut_identity(Kind::C)},
                {Kind::C, 0, 0}) == GroupElem{Kind::C, 1, 0});
  // ((0,0), phi_{2,0}) . sigma^3 tau = sigma^6 tau
  CHECK(hol_act(pr, HolElem{GroupElem{Kind::M, 0, 0}, Aut{Kind::M, 2, 0}},
                {Kind::M, 3, 1}) == GroupElem{Kind::M, 6, 1});

  for (Kind kind : {Kind::C, Kind::M}) {
    auto auts = all_automorphisms(pr, kind);
    // inverses, associativity on a sample, faithfulness of the action
    std::vector<HolElem> sample;
    for (std::int64_t i = 0; i < pr.size(); ++i)
      sample.push_back(HolElem{elem_from_flat(pr, kind, i), auts[i % auts.size()]});
    for (const HolElem& x : sample) {
      REQUIRE(hol_mul(pr, x, hol_inv(pr, x)) == hol_identity(kind));
      REQUIRE(hol_mul(pr, hol_inv(pr, x), x) == hol_identity(kind));
      for (const HolElem& y : sample) {
        for (std::int64_t i = 0; i < pr.size(); ++i) {
          GroupElem b = elem_from_flat(pr, kind, i);
          REQUIRE(hol_act(pr, hol_mul(pr, x, y), b) ==
                  hol_act(pr, x, hol_act(pr, y, b)));
        }
        for (const HolElem& z : sample)
          REQUIRE(hol_mul(pr, hol_mul(pr, x, y), z) ==
                  hol_mul(pr, x, hol_mul(pr, y, z)));
      }
    }
    // only the identity fixes every point
    for (const Aut& f : auts)
      for (std::int64_t i = 0; i < pr.size(); ++i) {
        HolElem h2{elem_from_flat(pr, kind, i), f};
        if (h2 == hol_identity(kind)) continue;
        bool fixes_all = true;
        for (std::int64_t j = 0; j < pr.size(); ++j) {
          GroupElem b = elem_from_flat(pr, kind, j);
          if (!(hol_act(pr, h2, b) == b)) fixes_all = false;
        }
        REQUIRE_FALSE(fixes_all);
      }
  }
}
