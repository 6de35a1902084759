// Acceptance gate: one pass/fail line per criterion, exact arithmetic, no
// tolerances. Exits nonzero if any criterion fails.
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gfrob/algebra.hpp"
#include "gfrob/cli.hpp"
#include "gfrob/cover.hpp"
#include "gfrob/gmodule.hpp"
#include "gfrob/group.hpp"
#include "gfrob/io.hpp"
#include "gfrob/models.hpp"
#include "gfrob/registry.hpp"

using namespace gfrob;

namespace {

struct Criterion {
  bool pass = true;
  long long checks = 0;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond) {
      pass = false;
      if (notes.size() < 8) notes.push_back(what);
    }
  }
};

const std::vector<std::string> kGroupRefs = {"Z2", "Z4", "V4", "S3", "D4", "Q8", "S4"};
const std::vector<std::string> kSweepRefs = {"Z4", "S3", "D4", "Q8"};

HolonomyDatum random_holonomy(const FiniteGroup& G, std::mt19937& rng, int genus, int npoints) {
  std::uniform_int_distribution<int> pick(0, G.order() - 1);
  HolonomyDatum hol;
  hol.genus = genus;
  int p = G.identity();
  for (int i = 0; i < genus; ++i) {
    int a = pick(rng), b = pick(rng);
    hol.handles.push_back({a, b});
    p = G.mul(p, G.commutator(a, b));
  }
  for (int i = 0; i + 1 < npoints; ++i) {
    int c = pick(rng);
    hol.monodromies.push_back(c);
    p = G.mul(p, c);
  }
  hol.monodromies.push_back(G.inv(p));
  return hol;
}

// Independent automorphism oracle: scan every h and apply the deck move
// (conjugate the holonomy, left-translate the pointing); h is an automorphism
// when the object comes back unchanged.
std::vector<int> brute_automorphisms(const FiniteGroup& G, const CoverObject& obj) {
  std::vector<int> out;
  std::vector<int> ims = holonomy_images(obj.hol);
  for (int h = 0; h < G.order(); ++h) {
    bool ok = true;
    for (int v : ims)
      if (G.conj(v, h) != v) {
        ok = false;
        break;
      }
    int hi = G.inv(h);
    for (size_t i = 0; ok && i < obj.pointing.size(); ++i) {
      std::vector<int> moved;
      for (int x : obj.pointing[i]) moved.push_back(G.mul(hi, x));
      std::sort(moved.begin(), moved.end());
      if (moved != obj.pointing[i]) ok = false;
    }
    if (ok) out.push_back(h);
  }
  return out;
}

bool cc_classes_differ(const FiniteGroup& G, int a, int b) {
  for (int h = 0; h < G.order(); ++h)
    if (G.conj(a, h) == b) return false;
  return true;
}

void for_each_multiset(int k, int n, std::vector<int>& cur,
                       const std::function<void(const std::vector<int>&)>& fn, int lo = 0) {
  if (int(cur.size()) == n) {
    fn(cur);
    return;
  }
  for (int c = lo; c < k; ++c) {
    cur.push_back(c);
    for_each_multiset(k, n, cur, fn, c);
    cur.pop_back();
  }
}

// ---------------------------------------------------------------------------

Criterion criterion1_group_rings() {
  Criterion c;
  for (const std::string& ref : kGroupRefs) {
    auto G = build_group_ref(ref);
    AxiomReport rep = check_all(group_ring(G));
    c.expect(rep.checks.size() == 11, ref + ": expected eleven checks");
    for (const auto& chk : rep.checks)
      c.expect(chk.pass, ref + ": law " + chk.id + " failed: " + chk.witness);
  }
  return c;
}

Criterion criterion2_coinvariants() {
  Criterion c;
  auto S3 = build_group("symmetric 3");
  GFrobeniusAlgebra A = group_ring(S3);
  CoinvariantAlgebra Q = coinvariant_algebra(A);
  auto& cc = Q.classes;
  c.expect(Q.alg.dim == 3, "quotient dimension should be 3");
  c.expect(Q.alg.check().ok(), "quotient algebra laws");
  c.expect(Q.closed, "products must stay inside the invariant span");

  // basis vectors are class averages; the transposition class sum is 3 b_T
  Vec bT = pi_G(A.mod, A.mod.basis_vector(1, 0));
  c.expect(Q.basis.vectors.size() == 3 && Q.basis.vectors[1] == bT,
           "second basis vector should be the projected transposition");

  // sigma_T^2 = 3 sigma_e + 3 sigma_R  (class sums; sizes 1, 3, 2)
  Rat sTT_e = Rat(9) * Q.alg.mult.at(1 * 3 + 1, 0);
  Rat sTT_T = Rat(9) * Q.alg.mult.at(1 * 3 + 1, 1) / Rat(3);
  Rat sTT_R = Rat(9) * Q.alg.mult.at(1 * 3 + 1, 2) / Rat(2);
  c.expect(sTT_e == Rat(3) && sTT_T == Rat(0) && sTT_R == Rat(3),
           "square of the transposition class sum should be 3*id + 3*rotations");

  // pairing values
  c.expect(Rat(9) * Q.alg.metric.at(1, 1) == Rat(1, 2),
           "pairing of the transposition class sum with itself should be 1/2");
  c.expect(Q.alg.metric.at(1, 1) == Rat(1, 18),
           "pairing of the projected transposition with itself should be 1/18");
  c.expect(A.eta(bT, bT) * Rat(1, 6) == Rat(1, 18), "projected pairing cross-check");

  // the quotient is the class-sum subalgebra: structure constants from an
  // independent pair count over G x G
  ClassAlgebra ca = class_algebra(*S3, cc);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        Rat expected = Rat(ca.pair_counts[size_t(i)][size_t(j)][size_t(k)]) /
                       Rat(cc.sizes[size_t(i)] * cc.sizes[size_t(j)]);
        c.expect(Q.alg.mult.at(i * 3 + j, k) == expected,
                 "structure constants must match the pair-count route");
      }

  // mu-bar = (1/|G|) mu on all basis triples
  c.expect(Q.mu_scaling_ok, "three-point function must scale by 1/|G|");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        Rat direct = A.mu(Q.basis.vectors[size_t(i)], Q.basis.vectors[size_t(j)],
                          Q.basis.vectors[size_t(k)]);
        Rat quotient_mu;
        for (int l = 0; l < 3; ++l)
          quotient_mu += Q.alg.mult.at(i * 3 + j, l) * Q.alg.metric.at(l, k);
        c.expect(quotient_mu == direct * Rat(1, 6), "mu-bar = mu/6 on basis triples");
      }
  return c;
}

Criterion criterion3_cover_counts() {
  Criterion c;
  auto S3 = build_group("symmetric 3");
  {
    ConjClassTable cc = conjugacy_data(*S3);
    ClassAlgebra ca = class_algebra(*S3, cc);
    c.expect(omega(*S3, cc, ca, 0, {2, 2, 2}) == Rat(1, 3),
             "three rotation points on the sphere should count 1/3");
    c.expect(omega(*S3, cc, ca, 1, {0}) == Rat(3),
             "identity point on the torus should count 3");
  }

  // sphere with (m, m^-1, identity) counts 1/|C(m)| for every class
  for (const std::string& ref : kGroupRefs) {
    auto G = build_group_ref(ref);
    ConjClassTable cc = conjugacy_data(*G);
    ClassAlgebra ca = class_algebra(*G, cc);
    for (int cls = 0; cls < cc.num_classes(); ++cls) {
      Rat v = omega(*G, cc, ca, 0, {cls, cc.inverse_class[size_t(cls)], 0});
      c.expect(v == Rat(1) / Rat(cc.centralizer_orders[size_t(cls)]),
               ref + ": sphere pair count should be 1/|C| at class " + std::to_string(cls));
    }
  }

  // gluing identities and independent enumeration over the sweep groups
  for (const std::string& ref : kSweepRefs) {
    auto G = build_group_ref(ref);
    ConjClassTable cc = conjugacy_data(*G);
    ClassAlgebra ca = class_algebra(*G, cc);
    int k = cc.num_classes();
    for (int genus = 0; genus <= 2; ++genus)
      for (int n = 1; n <= 4; ++n) {
        std::vector<int> cur;
        for_each_multiset(k, n, cur, [&](const std::vector<int>& classes) {
          // independent enumeration of the same count
          Rat conv = omega(*G, cc, ca, genus, classes);
          try {
            Rat enumd = omega_enumerated(*G, cc, genus, classes);
            c.expect(conv == enumd, ref + ": enumeration disagrees with convolution");
          } catch (const size_error&) {
            // space over the cap: skip the cross-check, keep the identities
          }
          // every separating split and genus split
          for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> left;
            for (int i = 0; i < n; ++i)
              if (mask & (1u << i)) left.push_back(i);
            for (int gl = 0; gl <= genus; ++gl) {
              GluingCheck t = gluing_tree_check(*G, cc, ca, genus, classes, left, gl);
              c.expect(t.pass, ref + ": tree gluing failed: " + t.description);
            }
          }
          if (genus >= 1) {
            GluingCheck l = gluing_loop_check(*G, cc, ca, genus, classes);
            c.expect(l.pass, ref + ": loop gluing failed: " + l.description);
          }
        });
      }
  }
  return c;
}

Criterion criterion4_modules() {
  Criterion c;
  std::mt19937 rng(20260815);
  for (const std::string& ref : kGroupRefs) {
    auto G = build_group_ref(ref);
    ConjClassTable cc = conjugacy_data(*G);

    // the group ring module and one random transitive-action module
    std::vector<GGradedModule> modules;
    modules.push_back(group_ring(G).mod);
    std::uniform_int_distribution<int> pick(0, G->order() - 1);
    Subgroup H = subgroup_generated(*G, {pick(rng)});
    modules.push_back(fg_finite_gset(coset_gset(G, H)).alg.mod);

    for (const GGradedModule& M : modules) {
      c.expect(validate_module(M).ok(), ref + ": module data must validate");

      // invariant-sector transport: mutually inverse on every class
      for (int m = 0; m < G->order(); ++m) {
        SectorIso iso = pi_m_iso(M, cc, m);
        c.expect(iso.round_trip_ok, ref + ": sector transport must round-trip");
      }

      // quotient pairing nondegenerate and compatible with the projection
      CoinvariantBasis basis = coinvariant_basis(M, cc);
      CoinvariantMetricReport met = coinvariant_metric(M, cc, basis);
      c.expect(met.nondegenerate, ref + ": quotient pairing must be nondegenerate");
      c.expect(met.projection_identity, ref + ": projected pairing identity");

      // braid relations on tensor powers up to four slots
      int D = M.total_dim();
      auto braid_equal = [&](int n, const std::vector<int>& w1, const std::vector<int>& w2,
                             const std::string& label) {
        std::vector<int> key(size_t(n), 0);
        long long total = 1;
        for (int i = 0; i < n; ++i) total *= D;
        for (long long r = 0; r < total; ++r) {
          long long x = r;
          for (int i = 0; i < n; ++i) {
            key[size_t(i)] = int(x % D);
            x /= D;
          }
          TensorVec t = tensor_basis_vector(key);
          if (braid_word_on_tensor(M, t, w1) != braid_word_on_tensor(M, t, w2)) {
            c.expect(false, ref + ": " + label);
            return;
          }
        }
        c.expect(true, label);
      };
      braid_equal(2, {1, -1}, {}, "two slots: generator times inverse is the identity");
      braid_equal(3, {1, 2, 1}, {2, 1, 2}, "three slots: adjacent braid relation");
      braid_equal(4, {1, 2, 1}, {2, 1, 2}, "four slots: braid relation at the left");
      braid_equal(4, {2, 3, 2}, {3, 2, 3}, "four slots: braid relation at the right");
      braid_equal(4, {1, 3}, {3, 1}, "four slots: distant generators commute");
      braid_equal(4, {3, -3}, {}, "four slots: generator times inverse is the identity");
    }
  }

  // involutive sections: exist for every abelian group, fail for S3 at the
  // 3-cycle class
  for (const char* spec : {"cyclic 2", "cyclic 3", "cyclic 4", "cyclic 6", "perm 4: (1 2), (3 4)"}) {
    auto G = build_group(spec);
    ConjClassTable cc = conjugacy_data(*G);
    InvolutiveSection sec = involutive_section(*G, cc);
    c.expect(sec.exists, std::string(spec) + ": abelian section should exist");
    if (sec.exists) {
      for (int cls = 0; cls < cc.num_classes(); ++cls) {
        int s = sec.section[size_t(cls)];
        c.expect(cc.class_of[size_t(s)] == cls, "section must pick inside each class");
        int t = sec.section[size_t(cc.inverse_class[size_t(cls)])];
        c.expect(G->inv(s) == t, "section must intertwine inversion");
      }
    }
  }
  {
    auto S3 = build_group("symmetric 3");
    ConjClassTable cc = conjugacy_data(*S3);
    InvolutiveSection sec = involutive_section(*S3, cc);
    c.expect(!sec.exists, "no involutive section over S3");
    c.expect(!sec.exists && S3->order_of(cc.reps[size_t(sec.witness_class)]) == 3,
             "witness must be the 3-cycle class");
  }
  return c;
}

Criterion criterion5_covers() {
  Criterion c;
  std::mt19937 rng(987654321);
  for (const std::string& ref : kSweepRefs) {
    auto Gp = build_group_ref(ref);
    const FiniteGroup& G = *Gp;
    std::uniform_int_distribution<int> pick(0, G.order() - 1);
    std::uniform_int_distribution<int> pick_genus(0, 2);
    std::uniform_int_distribution<int> pick_n(1, 3);

    for (int trial = 0; trial < 50; ++trial) {
      HolonomyDatum hol = random_holonomy(G, rng, pick_genus(rng), pick_n(rng));
      std::vector<int> gammas;
      for (size_t i = 0; i < hol.monodromies.size(); ++i) gammas.push_back(pick(rng));
      CoverObject obj = translate(G, base_cover(G, hol), gammas);

      Subgroup aut = automorphisms(G, obj);
      c.expect(aut.members == brute_automorphisms(G, obj),
               ref + ": automorphisms must match the exhaustive scan");

      Subgroup base_aut = automorphisms(G, base_cover(G, hol));
      c.expect(base_aut.members == automorphisms_closed_form(G, hol).members,
               ref + ": base-pointing automorphisms must match the closed form");

      if (hol.genus == 0) {
        FiberGroupoid fib = fiber_groupoid(G, hol);
        c.expect(fib.mass_identity, ref + ": groupoid mass must equal the raw pointing count");
        long long expect_raw = 1;
        for (int m : hol.monodromies) expect_raw *= G.order() / G.order_of(m);
        c.expect(fib.raw_count == expect_raw, ref + ": raw pointing count formula");
        c.expect(deg_st_tilde(G, hol) == Rat(expect_raw), ref + ": unfiltered degree formula");
      }
    }

    // transport-locus degrees on (m, m^-1, e) for every element
    for (int m = 0; m < G.order(); ++m) {
      HolonomyDatum pairhol{0, {}, {m, G.inv(m), G.identity()}};
      c.expect(deg_st_tilde(G, pairhol, XiFilter::orbit()) == Rat(G.order()),
               ref + ": transport-locus degree should be the group order");
      c.expect(deg_st_tilde(G, pairhol, XiFilter::component(pairhol.monodromies)) ==
                   Rat(centralizer(G, m).order()),
               ref + ": component degree should be the centralizer order");
    }
  }

  // conjugating the holonomy is the same as translating every pointing by the
  // conjugator: exhaustive over S3 and D4 sphere triples
  for (const std::string& ref : {std::string("S3"), std::string("D4")}) {
    auto Gp = build_group_ref(ref);
    const FiniteGroup& G = *Gp;
    for (int m1 = 0; m1 < G.order(); ++m1)
      for (int m2 = 0; m2 < G.order(); ++m2) {
        HolonomyDatum hol{0, {}, {m1, m2, G.inv(G.mul(m1, m2))}};
        CoverObject base = base_cover(G, hol);
        for (int h = 0; h < G.order(); ++h) {
          HolonomyDatum chol = hol;
          for (int& m : chol.monodromies) m = G.conj(m, h);
          std::vector<int> hh(3, h);
          CoverObject moved = translate(G, base, hh);
          CoverObject target = base_cover(G, chol);
          auto w = is_isomorphic(G, moved, target);
          c.expect(w.has_value(), ref + ": translated cover must match the conjugated one");
          if (w.has_value()) {
            bool valid = true;
            for (size_t i = 0; i < 3; ++i) {
              valid = valid && G.conj(moved.hol.monodromies[i], *w) == chol.monodromies[i];
              std::vector<int> carried;
              for (int x : moved.pointing[i]) carried.push_back(G.mul(G.inv(*w), x));
              std::sort(carried.begin(), carried.end());
              valid = valid && carried == target.pointing[i];
            }
            c.expect(valid, ref + ": isomorphism witness must verify");
          }
          // marked-point monodromy transforms by conjugation under translation
          for (int i = 0; i < 3; ++i)
            c.expect(monodromy_at(G, moved, i) == chol.monodromies[size_t(i)],
                     ref + ": translated monodromy must be the conjugate");
        }
        // distinct conjugacy data must be rejected
        if (cc_classes_differ(G, m1, m2)) {
          HolonomyDatum h1{0, {}, {m1, G.inv(m1), G.identity()}};
          HolonomyDatum h2{0, {}, {m2, G.inv(m2), G.identity()}};
          c.expect(!is_isomorphic(G, base_cover(G, h1), base_cover(G, h2)).has_value(),
                   ref + ": covers with non-conjugate monodromy must not be isomorphic");
        }
      }
  }

  // braid moves on sphere tuples: exhaustive over all S3 triples
  {
    auto Gp = build_group_ref("S3");
    const FiniteGroup& G = *Gp;
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b)
        for (int d = 0; d < 6; ++d) {
          std::vector<int> tup{a, b, d};
          c.expect(hurwitz_braid(G, hurwitz_braid(G, tup, {1}), {-1}) == tup,
                   "braid move must invert");
          c.expect(hurwitz_braid(G, tup, {1, 2, 1}) == hurwitz_braid(G, tup, {2, 1, 2}),
                   "braid relation on three strands");
          for (const std::vector<int>& word :
               {std::vector<int>{1}, std::vector<int>{2}, std::vector<int>{1, 2, 1}}) {
            std::vector<int> moved = hurwitz_braid(G, tup, word);
            int p1 = G.mul(G.mul(a, b), d);
            int p2 = G.mul(G.mul(moved[0], moved[1]), moved[2]);
            c.expect(p1 == p2, "braid moves must preserve the tuple product");
          }
        }
  }
  return c;
}

Criterion criterion6_models() {
  Criterion c;
  auto S3 = build_group("symmetric 3");
  auto D4 = build_group("dihedral 4");
  auto Z4 = build_group("cyclic 4");
  auto Q8 = build_group("quaternion8");
  auto S4 = build_group("symmetric 4");

  c.expect(check_all(fg_finite_gset(natural_gset(S3)).alg).all_pass(),
           "three-point model must pass all laws");
  c.expect(check_all(fg_finite_gset(natural_gset(D4)).alg).all_pass(),
           "square-corner model must pass all laws");

  for (const std::string& ref : kGroupRefs) {
    auto G = build_group_ref(ref);
    c.expect(algebras_structurally_equal(fg_finite_gset(point_gset(G)).alg, group_ring(G)),
             ref + ": one-point model must equal the group ring");
  }

  {
    FgModel free4 = fg_finite_gset(regular_gset(Z4));
    bool untwisted_only = free4.alg.mod.dim(0) == 4;
    for (int g = 1; g < 4; ++g) untwisted_only = untwisted_only && free4.alg.mod.dim(g) == 0;
    c.expect(untwisted_only, "free action model must live in the identity sector");
    PlainFrobenius U = untwisted_sector(free4.alg);
    PlainFrobenius F = functions_algebra(4);
    c.expect(U.mult == F.mult && U.metric == F.metric && U.unit == F.unit,
             "free action model must be plain functions on the points");
  }

  {
    PlainFrobenius F = functions_algebra(2);
    GFrobeniusAlgebra direct = trivial_action_model(F, S3);
    auto one = build_group("cyclic 1");
    GFrobeniusAlgebra viaTensor =
        tensor_external_alg(plain_as_single_sector(F), group_ring(S3), direct_product(one, S3));
    c.expect(algebras_structurally_equal(direct, viaTensor),
             "trivial-action model must equal the external tensor with the group ring");
  }

  for (const FiniteGSet& X :
       {natural_gset(S3), natural_gset(D4), point_gset(Q8), trivial_gset(S3, 2),
        regular_gset(Q8), coset_gset(S4, cyclic_subgroup(*S4, 1)),
        disjoint_union(natural_gset(S3), point_gset(S3))}) {
    FgCoinvariants fc = fg_coinvariants(X);
    c.expect(fc.dim_matches, "quotient dimension must count inertia orbits (group order " +
                                 std::to_string(X.group->order()) + ", " +
                                 std::to_string(X.npoints) + " points)");
  }

  {
    // an involution acting by -1 on a line: ages 1/2 on both factors
    Rat a1 = age({Rat(1, 2)});
    ObstructionRank R = obstruction_rank(a1, a1, Rat(0), Rat(0));
    c.expect(R.value == Rat(1) && R.integral_nonneg, "involution self-pairing has rank one");
    ObstructionRank Rswap = obstruction_rank(a1, a1, Rat(0), Rat(0));
    c.expect(Rswap.value == R.value, "rank is symmetric in the two factors");
    ObstructionRank frac = obstruction_rank(Rat(1, 3), Rat(1, 3), Rat(0), Rat(0));
    c.expect(!frac.integral_nonneg, "non-integral combination must be flagged");
  }
  return c;
}

Criterion criterion7_tensors() {
  Criterion c;
  auto Z2 = build_group("cyclic 2");
  auto Z3 = build_group("cyclic 3");
  auto Z6 = build_group("cyclic 6");
  auto S3 = build_group("symmetric 3");

  auto P = direct_product(Z2, Z3);
  GFrobeniusAlgebra T = tensor_external_alg(group_ring(Z2), group_ring(Z3), P);
  c.expect(check_all(T).all_pass(), "external tensor must pass all laws");

  // arithmetic isomorphism (a, b) -> 3a + 4b mod 6 onto the cyclic-six ring
  GFrobeniusAlgebra C6 = group_ring(Z6);
  std::vector<int> phi(6);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 3; ++b) phi[size_t(a * 3 + b)] = (3 * a + 4 * b) % 6;
  bool hom = true, bij = std::set<int>(phi.begin(), phi.end()).size() == 6;
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y)
      hom = hom && phi[size_t(P->mul(x, y))] == Z6->mul(phi[size_t(x)], phi[size_t(y)]);
  c.expect(hom && bij, "remainder map must be a group isomorphism");
  bool match = true;
  for (int x = 0; x < 6 && match; ++x) {
    match = T.unit[size_t(T.mod.offset(x))] == C6.unit[size_t(C6.mod.offset(phi[size_t(x)]))];
    for (int y = 0; y < 6 && match; ++y) {
      match = T.multiply(T.mod.basis_vector(x, 0), T.mod.basis_vector(y, 0)) ==
              T.mod.basis_vector(P->mul(x, y), 0);
      match = match && T.eta(T.mod.basis_vector(x, 0), T.mod.basis_vector(y, 0)) ==
                           C6.eta(C6.mod.basis_vector(phi[size_t(x)], 0),
                                  C6.mod.basis_vector(phi[size_t(y)], 0));
    }
  }
  c.expect(match, "transported structure must equal the cyclic-six ring");

  GFrobeniusAlgebra Todot = tensor_odot_alg(fg_finite_gset(natural_gset(S3)).alg, group_ring(S3));
  c.expect(check_all(Todot).all_pass(), "diagonal tensor must pass all laws");

  for (const std::string& ref : kGroupRefs) {
    auto G = build_group_ref(ref);
    c.expect(groupring_absorption_check(group_ring(G)),
             ref + ": group ring must absorb into itself");
  }
  c.expect(groupring_absorption_check(fg_finite_gset(natural_gset(S3)).alg),
           "group ring must absorb into the three-point model");
  return c;
}

Criterion criterion8_cli() {
  Criterion c;
  auto run = [](const std::vector<std::string>& args, std::string* out_text = nullptr,
                std::string* err_text = nullptr) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
  };
  auto golden = [&c](const std::string& name) {
    std::filesystem::path p = std::filesystem::path(GFROB_TEST_DIR) / "golden" / name;
    std::ifstream in(p, std::ios::binary);
    if (!in.good()) {
      c.expect(false, "missing golden file " + name);
      return std::string();
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };

  const std::vector<std::pair<std::vector<std::string>, std::string>> cases = {
      {{"group", "--group", "S3"}, "group_S3.json"},
      {{"omega", "--group", "S3"}, "omega_S3.csv"},
      {{"omega", "--group", "S3", "--max-points", "2", "--format", "json"}, "omega_S3_n2.json"},
      {{"check", "--model", "groupring:S3"}, "check_groupring_S3.json"},
      {{"quotient", "--model", "groupring:S3"}, "quotient_groupring_S3.json"},
  };
  for (const auto& [args, name] : cases) {
    std::string first, second;
    c.expect(run(args, &first) == 0, name + ": command must succeed");
    c.expect(run(args, &second) == 0, name + ": repeat run must succeed");
    c.expect(first == second, name + ": output must be byte-deterministic");
    c.expect(first == golden(name), name + ": output must match the golden file");
  }

  // exit codes: 1 for verification failures, 2 for input errors
  auto Z4 = build_group("cyclic 4");
  GFrobeniusAlgebra broken = group_ring(Z4);
  broken.unit[0] = Rat(0);
  std::filesystem::path bad =
      std::filesystem::temp_directory_path() / "gfrob_acceptance_bad.json";
  {
    std::ofstream f(bad);
    f << algebra_to_json(broken).dump(2) << "\n";
  }
  c.expect(run({"check", "--model", bad.string()}) == 1, "broken model must exit 1");
  std::string err;
  c.expect(run({"quotient", "--model", bad.string()}, nullptr, &err) == 1,
           "quotient of a broken model must exit 1");
  c.expect(err.find("refusing") != std::string::npos, "quotient must explain the refusal");
  std::filesystem::remove(bad);

  c.expect(run({"group", "--group", "no such group"}) == 2, "bad group spec must exit 2");
  c.expect(run({"check", "--model", "groupring:bogus"}) == 2, "bad model ref must exit 2");
  c.expect(run({"omega", "--group", "S3", "--format", "yaml"}) == 2, "bad format must exit 2");
  c.expect(run({}) == 2, "missing subcommand must exit 2");
  c.expect(run({"--help"}) == 0, "help must exit 0");
  return c;
}

}  // namespace

int main() {
  struct Entry {
    const char* label;
    Criterion (*fn)();
  };
  const Entry entries[] = {
      {"criterion 1: group rings satisfy all eleven laws", criterion1_group_rings},
      {"criterion 2: coinvariant quotient of the six-element group ring", criterion2_coinvariants},
      {"criterion 3: cover counts, gluing identities, independent enumeration",
       criterion3_cover_counts},
      {"criterion 4: module layer, braid relations, involutive sections", criterion4_modules},
      {"criterion 5: pointed covers, automorphisms, degrees, braid moves", criterion5_covers},
      {"criterion 6: fixed-point models, inertia counts, obstruction ranks", criterion6_models},
      {"criterion 7: tensor laws and absorption", criterion7_tensors},
      {"criterion 8: command line golden outputs and exit codes", criterion8_cli},
  };

  int failed = 0;
  for (const Entry& e : entries) {
    Criterion c = e.fn();
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << e.label << " (" << c.checks << " checks)\n";
    if (!c.pass) {
      ++failed;
      for (const std::string& note : c.notes) std::cout << "       - " << note << "\n";
    }
  }
  if (failed) std::cout << failed << " criterion(s) failed\n";
  return failed == 0 ? 0 : 1;
}
