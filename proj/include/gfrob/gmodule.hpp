// G-graded G-modules: H = direct sum of sectors H_m with maps
// rho(gamma): H_m -> H_{gamma^-1 m gamma} obeying the right action law
// rho(gamma delta) = rho(delta) o rho(gamma), and a symmetric nondegenerate
// pairing supported on sector pairs with m1 m2 = 1.
//
// Vectors are flat coordinate arrays over the concatenated sector bases in
// element order; offsets() gives the slice per sector.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gfrob/group.hpp"
#include "gfrob/matrix.hpp"
#include "gfrob/rational.hpp"

namespace gfrob {

using Vec = std::vector<Rat>;

struct GGradedModule {
  GroupPtr group;
  std::vector<int> dims;                    // per element
  std::vector<int> offsets;                 // per element, plus total at the end
  std::vector<std::vector<RatMat>> action;  // [gamma][m]: dims[m] -> dims[gamma^-1 m gamma]
  std::vector<RatMat> metric;               // [m]: dims[m] x dims[m^-1]

  int total_dim() const { return offsets.back(); }
  int offset(int m) const { return offsets[size_t(m)]; }
  int dim(int m) const { return dims[size_t(m)]; }

  int sector_of_coord(int i) const {
    int lo = 0, hi = int(dims.size()) - 1;
    while (lo < hi) {
      int mid = (lo + hi + 1) / 2;
      if (offsets[size_t(mid)] <= i)
        lo = mid;
      else
        hi = mid - 1;
    }
    return lo;
  }

  Vec zero() const { return Vec(size_t(total_dim())); }

  Vec basis_vector(int m, int k) const {
    Vec v = zero();
    v[size_t(offset(m) + k)] = Rat(1);
    return v;
  }

  std::vector<Rat> sector_slice(const Vec& v, int m) const {
    return std::vector<Rat>(v.begin() + offset(m), v.begin() + offset(m) + dim(m));
  }

  void set_sector(Vec& v, int m, const std::vector<Rat>& x) const {
    for (int k = 0; k < dim(m); ++k) v[size_t(offset(m) + k)] = x[size_t(k)];
  }

  Vec apply(int gamma, const Vec& v) const {
    Vec out = zero();
    for (int m = 0; m < group->order(); ++m) {
      if (dim(m) == 0) continue;
      int tgt = group->conj(m, gamma);
      std::vector<Rat> img = action[size_t(gamma)][size_t(m)].apply(sector_slice(v, m));
      for (int k = 0; k < dim(tgt); ++k) {
        Rat& slot = out[size_t(offset(tgt) + k)];
        slot += img[size_t(k)];
      }
    }
    return out;
  }

  Rat eta(const Vec& v, const Vec& w) const {
    Rat total;
    for (int m = 0; m < group->order(); ++m) {
      int mi = group->inv(m);
      if (dim(m) == 0 || dim(mi) == 0) continue;
      const RatMat& blk = metric[size_t(m)];
      for (int p = 0; p < dim(m); ++p) {
        const Rat& vp = v[size_t(offset(m) + p)];
        if (vp.is_zero()) continue;
        for (int q = 0; q < dim(mi); ++q) {
          const Rat& wq = w[size_t(offset(mi) + q)];
          if (!wq.is_zero()) total += vp * blk.at(p, q) * wq;
        }
      }
    }
    return total;
  }
};

inline std::vector<int> sector_offsets(const std::vector<int>& dims) {
  std::vector<int> off(dims.size() + 1, 0);
  for (size_t m = 0; m < dims.size(); ++m) off[m + 1] = off[m] + dims[m];
  return off;
}

inline GGradedModule make_module(GroupPtr group, std::vector<int> dims,
                                 std::vector<std::vector<RatMat>> action,
                                 std::vector<RatMat> metric) {
  GGradedModule M;
  M.group = std::move(group);
  M.offsets = sector_offsets(dims);
  M.dims = std::move(dims);
  M.action = std::move(action);
  M.metric = std::move(metric);
  return M;
}

// Completes an action table given blocks for a generating set, walking the
// Cayley graph from the identity with rho(x g) = rho(g) o rho(x).
inline std::vector<std::vector<RatMat>> complete_action(
    const FiniteGroup& G, const std::vector<int>& dims,
    const std::map<int, std::vector<RatMat>>& gen_action) {
  int n = G.order();
  std::vector<int> gens;
  for (const auto& [g, blocks] : gen_action) {
    if (int(blocks.size()) != n) throw std::invalid_argument("generator action has wrong arity");
    gens.push_back(g);
  }
  std::vector<std::vector<RatMat>> action(size_t(n), std::vector<RatMat>{});
  std::vector<uint8_t> known(size_t(n), 0);
  auto& idact = action[size_t(G.identity())];
  idact.resize(size_t(n));
  for (int m = 0; m < n; ++m) idact[size_t(m)] = RatMat::identity(dims[size_t(m)]);
  known[size_t(G.identity())] = 1;
  std::vector<int> queue{G.identity()};
  size_t head = 0;
  while (head < queue.size()) {
    int x = queue[head++];
    for (int g : gens) {
      int y = G.mul(x, g);
      if (known[size_t(y)]) continue;
      known[size_t(y)] = 1;
      auto& blocks = action[size_t(y)];
      blocks.resize(size_t(n));
      const auto& gx = gen_action.at(g);
      for (int m = 0; m < n; ++m) {
        int mid = G.conj(m, x);
        blocks[size_t(m)] = gx[size_t(mid)] * action[size_t(x)][size_t(m)];
      }
      queue.push_back(y);
    }
  }
  for (int y = 0; y < n; ++y)
    if (!known[size_t(y)])
      throw std::invalid_argument("given elements do not generate the group");
  return action;
}

// ---------------------------------------------------------------------------
// Validation

struct ValidationReport {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
};

inline ValidationReport validate_module(const GGradedModule& M) {
  ValidationReport rep;
  const FiniteGroup& G = *M.group;
  int n = G.order();
  auto issue = [&](const std::string& s) { rep.issues.push_back(s); };

  if (int(M.dims.size()) != n || int(M.action.size()) != n || int(M.metric.size()) != n) {
    issue("module arity does not match group order");
    return rep;
  }
  for (int gamma = 0; gamma < n && rep.ok(); ++gamma)
    for (int m = 0; m < n; ++m) {
      const RatMat& blk = M.action[size_t(gamma)][size_t(m)];
      int tgt = G.conj(m, gamma);
      if (blk.rows() != M.dim(tgt) || blk.cols() != M.dim(m)) {
        issue("action block shape mismatch at gamma=" + G.name(gamma) + " m=" + G.name(m));
        return rep;
      }
    }
  for (int m = 0; m < n; ++m) {
    const RatMat& blk = M.metric[size_t(m)];
    if (blk.rows() != M.dim(m) || blk.cols() != M.dim(G.inv(m))) {
      issue("metric block shape mismatch at m=" + G.name(m));
      return rep;
    }
  }

  for (int m = 0; m < n; ++m)
    if (M.action[size_t(G.identity())][size_t(m)] != RatMat::identity(M.dim(m))) {
      issue("identity does not act as the identity on sector " + G.name(m));
      break;
    }

  // Right action law on (all gamma) x (generators); full law follows by
  // induction along generator words once the generators generate.
  std::vector<int> gens = G.generators();
  if (subgroup_generated(G, gens).order() != n) {
    issue("stored generators do not generate the group");
    return rep;
  }
  bool law_ok = true;
  for (int gamma = 0; gamma < n && law_ok; ++gamma)
    for (int g : gens) {
      int prod = G.mul(gamma, g);
      for (int m = 0; m < n; ++m) {
        int mid = G.conj(m, gamma);
        if (M.action[size_t(prod)][size_t(m)] !=
            M.action[size_t(g)][size_t(mid)] * M.action[size_t(gamma)][size_t(m)]) {
          issue("action law fails at gamma=" + G.name(gamma) + " g=" + G.name(g) +
                " on sector " + G.name(m));
          law_ok = false;
          break;
        }
      }
      if (!law_ok) break;
    }

  for (int m = 0; m < n; ++m) {
    if (M.metric[size_t(G.inv(m))] != M.metric[size_t(m)].transposed()) {
      issue("metric not symmetric across sectors " + G.name(m) + ", " + G.name(G.inv(m)));
      break;
    }
  }
  for (int m = 0; m < n; ++m) {
    if (M.dim(m) != M.dim(G.inv(m))) {
      issue("paired sectors " + G.name(m) + ", " + G.name(G.inv(m)) + " differ in dimension");
      break;
    }
    if (M.dim(m) > 0 && M.metric[size_t(m)].rank() != M.dim(m)) {
      issue("metric degenerate on sector " + G.name(m));
      break;
    }
  }
  // G-invariance of the metric, on generators (full law follows as above).
  for (int g : gens) {
    bool bad = false;
    for (int m = 0; m < n; ++m) {
      int mi = G.inv(m);
      RatMat lhs = M.action[size_t(g)][size_t(m)].transposed() *
                   M.metric[size_t(G.conj(m, g))] * M.action[size_t(g)][size_t(mi)];
      if (lhs != M.metric[size_t(m)]) {
        issue("metric not invariant under gamma=" + G.name(g) + " on sector " + G.name(m));
        bad = true;
        break;
      }
    }
    if (bad) break;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Averaging projectors

inline Vec pi_subgroup(const GGradedModule& M, const Subgroup& S, const Vec& v) {
  Vec acc = M.zero();
  for (int gamma : S.members) {
    Vec img = M.apply(gamma, v);
    for (size_t i = 0; i < acc.size(); ++i) acc[i] += img[i];
  }
  Rat scale = Rat(1, S.order());
  for (auto& x : acc) x *= scale;
  return acc;
}

inline Vec pi_G(const GGradedModule& M, const Vec& v) {
  std::vector<uint8_t> all(size_t(M.group->order()), 1);
  return pi_subgroup(M, subgroup_from_mask(std::move(all)), v);
}

// Average over the centralizer of m; input must be supported on sector m.
inline Vec pi_Cm(const GGradedModule& M, int m, const Vec& v) {
  for (int i = 0; i < M.total_dim(); ++i)
    if (!v[size_t(i)].is_zero() && M.sector_of_coord(i) != m)
      throw std::invalid_argument("pi_Cm input must be supported on the given sector");
  return pi_subgroup(M, centralizer(*M.group, m), v);
}

// Matrix of the centralizer average as an endomorphism of sector m.
inline RatMat centralizer_projector(const GGradedModule& M, int m) {
  Subgroup C = centralizer(*M.group, m);
  RatMat P(M.dim(m), M.dim(m));
  for (int gamma : C.members) {
    const RatMat& blk = M.action[size_t(gamma)][size_t(m)];
    P = P + blk;
  }
  return P.scaled(Rat(1, C.order()));
}

// Basis of the C(m)-fixed subspace of H_m, RREF-canonical.
inline std::vector<std::vector<Rat>> invariant_sector_basis(const GGradedModule& M, int m) {
  RatMat P = centralizer_projector(M, m);
  RatMat shifted = P - RatMat::identity(M.dim(m));
  return shifted.kernel_basis();
}

// ---------------------------------------------------------------------------
// Coinvariants H-bar = image of pi_G, organized per conjugacy class

struct SectorIso {
  int m = 0;                                  // class representative
  int class_id = 0;
  std::vector<std::vector<Rat>> fixed_basis;  // basis of H_m^{C(m)} (sector coords)
  std::vector<Vec> coinv_basis;               // pi_G images, full coords
  bool round_trip_ok = false;                 // f_m o pi_m = id and pi_m o f_m = id
};

// The mutually inverse maps pi_m: H_m^{C(m)} -> Hbar_{class} (restriction of
// pi_G) and f_m(w) = (|G| / |C(m)|) * (component of w in sector m).
inline SectorIso pi_m_iso(const GGradedModule& M, const ConjClassTable& cc, int m) {
  const FiniteGroup& G = *M.group;
  SectorIso iso;
  iso.m = m;
  iso.class_id = cc.class_of[size_t(m)];
  iso.fixed_basis = invariant_sector_basis(M, m);
  Rat back_scale = Rat(G.order()) / Rat(cc.centralizer_orders[size_t(iso.class_id)]);
  iso.round_trip_ok = true;
  for (const auto& fb : iso.fixed_basis) {
    Vec v = M.zero();
    M.set_sector(v, m, fb);
    Vec w = pi_G(M, v);
    iso.coinv_basis.push_back(w);
    // f_m(pi_m(v)) == v
    std::vector<Rat> back = M.sector_slice(w, m);
    for (auto& x : back) x *= back_scale;
    if (back != fb) iso.round_trip_ok = false;
    // pi_m(f_m(w)) == w
    Vec lift = M.zero();
    M.set_sector(lift, m, back);
    if (pi_G(M, lift) != w) iso.round_trip_ok = false;
  }
  return iso;
}

struct CoinvariantBasis {
  std::vector<Vec> vectors;       // basis of Hbar in full coordinates
  std::vector<int> class_of;      // grading class per basis vector
  std::vector<SectorIso> per_class;
};

inline CoinvariantBasis coinvariant_basis(const GGradedModule& M, const ConjClassTable& cc) {
  CoinvariantBasis out;
  for (int c = 0; c < cc.num_classes(); ++c) {
    SectorIso iso = pi_m_iso(M, cc, cc.reps[size_t(c)]);
    for (const auto& v : iso.coinv_basis) {
      out.vectors.push_back(v);
      out.class_of.push_back(c);
    }
    out.per_class.push_back(std::move(iso));
  }
  return out;
}

struct CoinvariantMetricReport {
  RatMat gram;                 // eta-bar = (1/|G|) eta on the coinvariant basis
  bool nondegenerate = false;
  bool projection_identity = false;  // eta(pi_G v+, pi_G v-) = (|C(m+)|/|G|) eta(v+, v-)
};

inline CoinvariantMetricReport coinvariant_metric(const GGradedModule& M,
                                                  const ConjClassTable& cc,
                                                  const CoinvariantBasis& basis) {
  const FiniteGroup& G = *M.group;
  CoinvariantMetricReport rep;
  int d = int(basis.vectors.size());
  rep.gram = RatMat(d, d);
  Rat inv_order = Rat(1, G.order());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      rep.gram.at(i, j) = M.eta(basis.vectors[size_t(i)], basis.vectors[size_t(j)]) * inv_order;
  rep.nondegenerate = (rep.gram.rank() == d);

  rep.projection_identity = true;
  for (int c = 0; c < cc.num_classes(); ++c) {
    int mp = cc.reps[size_t(c)];
    int mm = G.inv(mp);
    Rat factor = Rat(cc.centralizer_orders[size_t(c)]) / Rat(G.order());
    auto plus = invariant_sector_basis(M, mp);
    auto minus = invariant_sector_basis(M, mm);
    for (const auto& vp : plus)
      for (const auto& vm : minus) {
        Vec a = M.zero(), b = M.zero();
        M.set_sector(a, mp, vp);
        M.set_sector(b, mm, vm);
        if (M.eta(pi_G(M, a), pi_G(M, b)) != factor * M.eta(a, b))
          rep.projection_identity = false;
      }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Tensor products

// Over the product group; sector (m', m'') with index m'*|G''| + m''.
inline GGradedModule tensor_external(const GGradedModule& A, const GGradedModule& B,
                                     const GroupPtr& product) {
  int nb = B.group->order();
  int n = product->order();
  if (n != A.group->order() * nb)
    throw std::invalid_argument("product group order mismatch");
  std::vector<int> dims(size_t(n), 0);
  for (int ma = 0; ma < A.group->order(); ++ma)
    for (int mb = 0; mb < nb; ++mb) dims[size_t(ma * nb + mb)] = A.dim(ma) * B.dim(mb);
  auto action = std::vector<std::vector<RatMat>>(size_t(n), std::vector<RatMat>(size_t(n)));
  for (int ga = 0; ga < A.group->order(); ++ga)
    for (int gb = 0; gb < nb; ++gb)
      for (int ma = 0; ma < A.group->order(); ++ma)
        for (int mb = 0; mb < nb; ++mb)
          action[size_t(ga * nb + gb)][size_t(ma * nb + mb)] =
              A.action[size_t(ga)][size_t(ma)].kron(B.action[size_t(gb)][size_t(mb)]);
  auto metric = std::vector<RatMat>(size_t(n));
  for (int ma = 0; ma < A.group->order(); ++ma)
    for (int mb = 0; mb < nb; ++mb)
      metric[size_t(ma * nb + mb)] = A.metric[size_t(ma)].kron(B.metric[size_t(mb)]);
  return make_module(product, std::move(dims), std::move(action), std::move(metric));
}

// Same-group tensor: sector m carries H'_m (x) H''_m with the diagonal action.
inline GGradedModule tensor_odot(const GGradedModule& A, const GGradedModule& B) {
  if (!(*A.group == *B.group))
    throw std::invalid_argument("diagonal tensor requires one group");
  int n = A.group->order();
  std::vector<int> dims(size_t(n), 0);
  for (int m = 0; m < n; ++m) dims[size_t(m)] = A.dim(m) * B.dim(m);
  auto action = std::vector<std::vector<RatMat>>(size_t(n), std::vector<RatMat>(size_t(n)));
  for (int g = 0; g < n; ++g)
    for (int m = 0; m < n; ++m)
      action[size_t(g)][size_t(m)] = A.action[size_t(g)][size_t(m)].kron(B.action[size_t(g)][size_t(m)]);
  auto metric = std::vector<RatMat>(size_t(n));
  for (int m = 0; m < n; ++m) metric[size_t(m)] = A.metric[size_t(m)].kron(B.metric[size_t(m)]);
  return make_module(A.group, std::move(dims), std::move(action), std::move(metric));
}

// ---------------------------------------------------------------------------
// Braid action on tensor powers
//
// Slots hold global basis indices of M; b_i replaces
// ... v_{m_i} (x) v_{m_{i+1}} ... by ... rho(m_i^-1) v_{m_{i+1}} (x) v_{m_i} ...

using TensorVec = std::map<std::vector<int>, Rat>;

inline TensorVec tensor_basis_vector(const std::vector<int>& key) {
  return TensorVec{{key, Rat(1)}};
}

inline TensorVec braid_on_tensor(const GGradedModule& M, const TensorVec& w, int i,
                                 bool inverse = false) {
  const FiniteGroup& G = *M.group;
  TensorVec out;
  for (const auto& [key, coeff] : w) {
    if (i < 1 || size_t(i) >= key.size())
      throw std::invalid_argument("braid index out of range");
    int left = key[size_t(i - 1)], right = key[size_t(i)];
    int ml = M.sector_of_coord(left), mr = M.sector_of_coord(right);
    if (!inverse) {
      // expand rho(ml^-1) e_right over the target sector basis
      int gamma = G.inv(ml);
      int tgt = G.conj(mr, gamma);
      const RatMat& blk = M.action[size_t(gamma)][size_t(mr)];
      int col = right - M.offset(mr);
      for (int r = 0; r < blk.rows(); ++r) {
        if (blk.at(r, col).is_zero()) continue;
        std::vector<int> nk = key;
        nk[size_t(i - 1)] = M.offset(tgt) + r;
        nk[size_t(i)] = left;
        out[nk] += coeff * blk.at(r, col);
      }
    } else {
      // inverse: ... w_a (x) w_b ... -> ... w_b (x) rho(b) w_a ...
      int gamma = mr;
      int tgt = G.conj(ml, gamma);
      const RatMat& blk = M.action[size_t(gamma)][size_t(ml)];
      int col = left - M.offset(ml);
      for (int r = 0; r < blk.rows(); ++r) {
        if (blk.at(r, col).is_zero()) continue;
        std::vector<int> nk = key;
        nk[size_t(i - 1)] = right;
        nk[size_t(i)] = M.offset(tgt) + r;
        out[nk] += coeff * blk.at(r, col);
      }
    }
  }
  // drop exact zeros so comparisons are canonical
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

inline TensorVec braid_word_on_tensor(const GGradedModule& M, TensorVec w,
                                      const std::vector<int>& word) {
  for (int step : word) w = braid_on_tensor(M, w, step > 0 ? step : -step, step < 0);
  return w;
}

}  // namespace gfrob
