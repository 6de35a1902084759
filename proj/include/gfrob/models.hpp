// Geometric sources of G-Frobenius algebras at degree zero:
//   * functions on the fixed-point loci of a finite right G-set, with the
//     three-point function counting common fixed points,
//   * trivially graded algebras spread over all sectors with trivial action.
// Plus the inertia construction, orbit counting, and the age / obstruction
// bookkeeping used for discrete torsion-free rank checks.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gfrob/algebra.hpp"
#include "gfrob/gmodule.hpp"
#include "gfrob/group.hpp"

namespace gfrob {

// -------------------------------------------------------------------------
// Finite right G-sets. act[gamma][x] is x * gamma; the law is
// act(gamma delta) = act(delta) after act(gamma).

struct FiniteGSet {
  GroupPtr group;
  int npoints = 0;
  std::vector<std::vector<int>> act;

  int apply(int gamma, int x) const { return act[size_t(gamma)][size_t(x)]; }
};

inline std::vector<std::string> validate_gset(const FiniteGSet& X) {
  std::vector<std::string> issues;
  const FiniteGroup& G = *X.group;
  if (int(X.act.size()) != G.order()) {
    issues.push_back("action table arity mismatch");
    return issues;
  }
  for (int g = 0; g < G.order(); ++g) {
    if (int(X.act[size_t(g)].size()) != X.npoints) {
      issues.push_back("action row size mismatch at " + G.name(g));
      return issues;
    }
    std::vector<char> seen(size_t(X.npoints), 0);
    for (int x = 0; x < X.npoints; ++x) {
      int y = X.act[size_t(g)][size_t(x)];
      if (y < 0 || y >= X.npoints || seen[size_t(y)]) {
        issues.push_back("action of " + G.name(g) + " is not a bijection");
        break;
      }
      seen[size_t(y)] = 1;
    }
  }
  for (int x = 0; x < X.npoints; ++x)
    if (X.apply(G.identity(), x) != x) {
      issues.push_back("identity moves a point");
      break;
    }
  for (int g = 0; g < G.order() && issues.empty(); ++g)
    for (int h = 0; h < G.order() && issues.empty(); ++h) {
      int gh = G.mul(g, h);
      for (int x = 0; x < X.npoints; ++x)
        if (X.apply(gh, x) != X.apply(h, X.apply(g, x))) {
          issues.push_back("action law fails at (" + G.name(g) + ", " + G.name(h) + ")");
          break;
        }
    }
  return issues;
}

// The defining permutation action of the group's own construction.
inline FiniteGSet natural_gset(const GroupPtr& Gp) {
  const FiniteGroup& G = *Gp;
  FiniteGSet X;
  X.group = Gp;
  X.npoints = G.degree();
  X.act.resize(size_t(G.order()));
  for (int g = 0; g < G.order(); ++g) X.act[size_t(g)] = G.perm(g);
  return X;
}

inline FiniteGSet point_gset(const GroupPtr& Gp) {
  FiniteGSet X;
  X.group = Gp;
  X.npoints = 1;
  X.act.assign(size_t(Gp->order()), std::vector<int>{0});
  return X;
}

inline FiniteGSet trivial_gset(const GroupPtr& Gp, int k) {
  if (k < 0) throw std::invalid_argument("point count must be nonnegative");
  FiniteGSet X;
  X.group = Gp;
  X.npoints = k;
  std::vector<int> id(static_cast<size_t>(k));
  std::iota(id.begin(), id.end(), 0);
  X.act.assign(size_t(Gp->order()), id);
  return X;
}

// Right multiplication on right cosets H\G, points ordered by the smallest
// element of each coset.
inline FiniteGSet coset_gset(const GroupPtr& Gp, const Subgroup& H) {
  const FiniteGroup& G = *Gp;
  std::vector<int> coset_of(size_t(G.order()), -1);
  std::vector<int> reps;
  for (int x = 0; x < G.order(); ++x) {
    if (coset_of[size_t(x)] >= 0) continue;
    int id = int(reps.size());
    reps.push_back(x);
    for (int h : H.members) coset_of[size_t(G.mul(h, x))] = id;
  }
  FiniteGSet X;
  X.group = Gp;
  X.npoints = int(reps.size());
  X.act.assign(size_t(G.order()), std::vector<int>(reps.size()));
  for (int g = 0; g < G.order(); ++g)
    for (int c = 0; c < X.npoints; ++c)
      X.act[size_t(g)][size_t(c)] = coset_of[size_t(G.mul(reps[size_t(c)], g))];
  return X;
}

inline FiniteGSet disjoint_union(const FiniteGSet& A, const FiniteGSet& B) {
  if (!(*A.group == *B.group)) throw std::invalid_argument("disjoint union needs one group");
  FiniteGSet X;
  X.group = A.group;
  X.npoints = A.npoints + B.npoints;
  X.act.assign(A.act.size(), std::vector<int>(size_t(X.npoints)));
  for (size_t g = 0; g < A.act.size(); ++g) {
    for (int x = 0; x < A.npoints; ++x) X.act[g][size_t(x)] = A.act[g][size_t(x)];
    for (int x = 0; x < B.npoints; ++x)
      X.act[g][size_t(A.npoints + x)] = A.npoints + B.act[g][size_t(x)];
  }
  return X;
}

// Extend generator images to the whole group along words in the generators.
inline FiniteGSet gset_from_generator_images(const GroupPtr& Gp, int npoints,
                                             const std::map<int, std::vector<int>>& gen_images) {
  const FiniteGroup& G = *Gp;
  FiniteGSet X;
  X.group = Gp;
  X.npoints = npoints;
  X.act.assign(size_t(G.order()), {});
  std::vector<int> id(static_cast<size_t>(npoints));
  std::iota(id.begin(), id.end(), 0);
  X.act[size_t(G.identity())] = id;
  for (const auto& [g, images] : gen_images) {
    if (g < 0 || g >= G.order() || int(images.size()) != npoints)
      throw std::invalid_argument("bad generator image table");
    X.act[size_t(g)] = images;
  }
  std::vector<int> gens;
  for (const auto& [g, images] : gen_images) gens.push_back(g);
  std::vector<char> visited(size_t(G.order()), 0);
  std::vector<int> queue{G.identity()};
  visited[size_t(G.identity())] = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (int s : gens) {
      int y = G.mul(x, s);
      if (X.act[size_t(y)].empty()) {
        std::vector<int> row(static_cast<size_t>(npoints));
        for (int p = 0; p < npoints; ++p)
          row[size_t(p)] = X.act[size_t(s)][size_t(X.act[size_t(x)][size_t(p)])];
        X.act[size_t(y)] = std::move(row);
      }
      if (!visited[size_t(y)]) {
        visited[size_t(y)] = 1;
        queue.push_back(y);
      }
    }
  }
  for (int g = 0; g < G.order(); ++g)
    if (X.act[size_t(g)].empty())
      throw std::invalid_argument("generator images do not cover the group");
  auto issues = validate_gset(X);
  if (!issues.empty()) throw std::invalid_argument("invalid action: " + issues.front());
  return X;
}

inline std::vector<int> fixed_points(const FiniteGSet& X, int m) {
  std::vector<int> out;
  for (int x = 0; x < X.npoints; ++x)
    if (X.apply(m, x) == x) out.push_back(x);
  return out;
}

inline std::vector<int> common_fixed_points(const FiniteGSet& X, const std::vector<int>& ms) {
  std::vector<int> out;
  for (int x = 0; x < X.npoints; ++x) {
    bool all = true;
    for (int m : ms)
      if (X.apply(m, x) != x) {
        all = false;
        break;
      }
    if (all) out.push_back(x);
  }
  return out;
}

// -------------------------------------------------------------------------
// Inertia: pairs (x, g) with x fixed by g, acted on by
// (x, g) * gamma = (x gamma, gamma^-1 g gamma).

struct InertiaSet {
  std::vector<std::pair<int, int>> points;  // (x, g), g-major then x ascending
};

inline InertiaSet inertia(const FiniteGSet& X) {
  InertiaSet I;
  for (int g = 0; g < X.group->order(); ++g)
    for (int x : fixed_points(X, g)) I.points.push_back({x, g});
  return I;
}

inline long long inertia_orbit_count(const FiniteGSet& X) {
  const FiniteGroup& G = *X.group;
  InertiaSet I = inertia(X);
  std::map<std::pair<int, int>, int> index;
  for (size_t i = 0; i < I.points.size(); ++i) index[I.points[i]] = int(i);
  std::vector<char> seen(I.points.size(), 0);
  long long orbits = 0;
  for (size_t i = 0; i < I.points.size(); ++i) {
    if (seen[i]) continue;
    ++orbits;
    std::vector<size_t> stack{i};
    seen[i] = 1;
    while (!stack.empty()) {
      auto [x, g] = I.points[stack.back()];
      stack.pop_back();
      for (int gamma = 0; gamma < G.order(); ++gamma) {
        std::pair<int, int> img{X.apply(gamma, x), G.conj(g, gamma)};
        size_t j = size_t(index.at(img));
        if (!seen[j]) {
          seen[j] = 1;
          stack.push_back(j);
        }
      }
    }
  }
  return orbits;
}

// -------------------------------------------------------------------------
// Reconstruction of multiplication blocks from a three-point function and
// the inverse metric: eta(v w, u) must equal mu(v, w, u) for all u in the
// sector paired with the target.

inline std::vector<std::vector<RatMat>> mult_blocks_from_mu(
    const GGradedModule& M,
    const std::function<Rat(int, int, int, int, int, int)>& mu_basis) {
  const FiniteGroup& G = *M.group;
  int n = G.order();
  auto mult = std::vector<std::vector<RatMat>>(size_t(n), std::vector<RatMat>(size_t(n)));
  for (int m1 = 0; m1 < n; ++m1)
    for (int m2 = 0; m2 < n; ++m2) {
      int tgt = G.mul(m1, m2);
      int m3 = G.inv(tgt);
      RatMat blk(M.dim(m1) * M.dim(m2), M.dim(tgt));
      if (M.dim(m1) > 0 && M.dim(m2) > 0 && M.dim(tgt) > 0) {
        // pairing rows: u-basis of H_{m3}; columns: basis of H_{tgt}
        RatMat pairing = M.metric[size_t(tgt)].transposed();
        for (int p = 0; p < M.dim(m1); ++p)
          for (int q = 0; q < M.dim(m2); ++q) {
            std::vector<Rat> rhs(size_t(M.dim(m3)));
            for (int u = 0; u < M.dim(m3); ++u) rhs[size_t(u)] = mu_basis(m1, p, m2, q, m3, u);
            auto coords = pairing.solve(rhs);
            if (!coords) throw std::logic_error("three-point data inconsistent with metric");
            for (int r = 0; r < M.dim(tgt); ++r) blk.at(p * M.dim(m2) + q, r) = (*coords)[size_t(r)];
          }
      }
      mult[size_t(m1)][size_t(m2)] = std::move(blk);
    }
  return mult;
}

// -------------------------------------------------------------------------
// Fixed-point model of a finite G-set: sector m is functions on the fixed
// locus of m (indicator basis in point order), the metric is the point-sum
// pairing, and the three-point function counts common fixed points.

struct FgModel {
  GFrobeniusAlgebra alg;
  std::vector<std::vector<int>> sector_points;  // per sector: fixed points, ascending
};

inline FgModel fg_finite_gset(const FiniteGSet& X) {
  auto issues = validate_gset(X);
  if (!issues.empty()) throw std::invalid_argument("invalid action: " + issues.front());
  const FiniteGroup& G = *X.group;
  const GroupPtr& Gp = X.group;
  int n = G.order();

  FgModel model;
  model.sector_points.resize(size_t(n));
  std::vector<int> dims(size_t(n), 0);
  auto point_index = std::vector<std::map<int, int>>(size_t(n));
  for (int m = 0; m < n; ++m) {
    model.sector_points[size_t(m)] = fixed_points(X, m);
    dims[size_t(m)] = int(model.sector_points[size_t(m)].size());
    for (int i = 0; i < dims[size_t(m)]; ++i)
      point_index[size_t(m)][model.sector_points[size_t(m)][size_t(i)]] = i;
  }

  auto action = std::vector<std::vector<RatMat>>(size_t(n), std::vector<RatMat>(size_t(n)));
  for (int g = 0; g < n; ++g)
    for (int m = 0; m < n; ++m) {
      int tgt = G.conj(m, g);
      RatMat blk(dims[size_t(tgt)], dims[size_t(m)]);
      for (int q = 0; q < dims[size_t(m)]; ++q) {
        int moved = X.apply(g, model.sector_points[size_t(m)][size_t(q)]);
        blk.at(point_index[size_t(tgt)].at(moved), q) = Rat(1);
      }
      action[size_t(g)][size_t(m)] = std::move(blk);
    }

  auto metric = std::vector<RatMat>(size_t(n));
  for (int m = 0; m < n; ++m) metric[size_t(m)] = RatMat::identity(dims[size_t(m)]);

  model.alg.mod = make_module(Gp, std::move(dims), std::move(action), std::move(metric));
  const auto& pts = model.sector_points;
  model.alg.mult = mult_blocks_from_mu(
      model.alg.mod, [&G, &pts](int m1, int p, int m2, int q, int m3, int u) {
        if (G.mul(G.mul(m1, m2), m3) != G.identity()) return Rat(0);
        int x = pts[size_t(m1)][size_t(p)];
        bool same = x == pts[size_t(m2)][size_t(q)] && x == pts[size_t(m3)][size_t(u)];
        return same ? Rat(1) : Rat(0);
      });
  model.alg.unit = model.alg.mod.zero();
  int e = G.identity();
  for (int p = 0; p < model.alg.mod.dim(e); ++p)
    model.alg.unit[size_t(model.alg.mod.offset(e) + p)] = Rat(1);
  return model;
}

// -------------------------------------------------------------------------
// A trivially graded Frobenius algebra copied across every sector, with the
// group acting as the identity. Coincides with the external tensor of the
// input by the group ring under the evident relabeling.

inline GFrobeniusAlgebra trivial_action_model(const PlainFrobenius& F, const GroupPtr& Gp) {
  auto issues = F.check();
  if (!issues.ok()) throw std::invalid_argument("invalid input algebra: " + issues.issues.front());
  const FiniteGroup& G = *Gp;
  int n = G.order();
  std::vector<int> dims(size_t(n), F.dim);
  std::vector<std::vector<RatMat>> action(
      size_t(n), std::vector<RatMat>(size_t(n), RatMat::identity(F.dim)));
  std::vector<RatMat> metric(size_t(n), F.metric);
  GFrobeniusAlgebra A;
  A.mod = make_module(Gp, std::move(dims), std::move(action), std::move(metric));
  A.mult.assign(size_t(n), std::vector<RatMat>(size_t(n), F.mult));
  A.unit = A.mod.zero();
  int e = G.identity();
  for (int p = 0; p < F.dim; ++p) A.unit[size_t(A.mod.offset(e) + p)] = F.unit[size_t(p)];
  return A;
}

// Wrap a plain algebra as the unique sector over the one-element group.
inline GFrobeniusAlgebra plain_as_single_sector(const PlainFrobenius& F) {
  GroupPtr trivial = build_group("cyclic 1");
  GFrobeniusAlgebra A;
  A.mod = make_module(trivial, {F.dim}, {{RatMat::identity(F.dim)}}, {F.metric});
  A.mult.assign(1, std::vector<RatMat>(1, F.mult));
  A.unit = F.unit;
  return A;
}

// -------------------------------------------------------------------------
// Age of a tangent-rotation weight vector and the rank of the obstruction
// bundle computed from ages and the codimension of the common fixed locus.

inline Rat age(const std::vector<Rat>& weights) {
  Rat total;
  for (const Rat& w : weights) {
    if (w < Rat(0) || !(w < Rat(1)))
      throw std::invalid_argument("rotation weights must lie in [0, 1)");
    total += w;
  }
  return total;
}

struct ObstructionRank {
  Rat value;
  bool integral_nonneg = false;
};

inline ObstructionRank obstruction_rank(const Rat& age1, const Rat& age2, const Rat& age12,
                                        const Rat& codim) {
  ObstructionRank R;
  R.value = age1 + age2 - age12 - codim;
  R.integral_nonneg = (R.value.den() == 1) && !(R.value < Rat(0));
  return R;
}

// -------------------------------------------------------------------------
// Coinvariants of a fixed-point model; the dimension is the number of orbits
// of the inertia action.

struct FgCoinvariants {
  CoinvariantAlgebra quotient;
  long long inertia_orbits = 0;
  bool dim_matches = false;
};

inline FgCoinvariants fg_coinvariants(const FiniteGSet& X) {
  FgCoinvariants out;
  FgModel model = fg_finite_gset(X);
  out.quotient = coinvariant_algebra(model.alg);
  out.inertia_orbits = inertia_orbit_count(X);
  out.dim_matches = (out.quotient.alg.dim == int(out.inertia_orbits));
  return out;
}

}  // namespace gfrob
