// Combinatorics of pointed principal covers of a genus-g surface with n
// marked points.
//
// A cover is recorded by its holonomy (handle images (a_j, b_j) and marked
// monodromies c_i subject to prod_j [a_j,b_j] prod_i c_i = 1) together with a
// pointing: one right coset <c_i>g per marked point, the component of the
// fiber the point sits in. Deck transformations act by left multiplication,
// marked-point translation by right multiplication.
#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gfrob/group.hpp"
#include "gfrob/rational.hpp"

namespace gfrob {

inline constexpr long long kEnumerationCap = 10'000'000;

struct HolonomyDatum {
  int genus = 0;
  std::vector<std::pair<int, int>> handles;  // size genus
  std::vector<int> monodromies;              // size n
};

inline std::vector<int> holonomy_images(const HolonomyDatum& h) {
  std::vector<int> out;
  for (auto [a, b] : h.handles) {
    out.push_back(a);
    out.push_back(b);
  }
  for (int c : h.monodromies) out.push_back(c);
  return out;
}

inline bool surface_relation_holds(const FiniteGroup& G, const HolonomyDatum& h) {
  if (int(h.handles.size()) != h.genus) return false;
  int p = G.identity();
  for (auto [a, b] : h.handles) p = G.mul(p, G.commutator(a, b));
  for (int c : h.monodromies) p = G.mul(p, c);
  return p == G.identity();
}

struct CoverObject {
  HolonomyDatum hol;
  // pointing[i]: sorted member list of the right coset <c_i> g_i
  std::vector<std::vector<int>> pointing;

  friend bool operator==(const CoverObject& x, const CoverObject& y) {
    return x.hol.genus == y.hol.genus && x.hol.handles == y.hol.handles &&
           x.hol.monodromies == y.hol.monodromies && x.pointing == y.pointing;
  }
};

namespace detail {

inline std::vector<int> right_coset(const FiniteGroup& G, const Subgroup& H, int g) {
  std::vector<int> out;
  out.reserve(size_t(H.order()));
  for (int u : H.members) out.push_back(G.mul(u, g));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<int> left_translate(const FiniteGroup& G, const std::vector<int>& coset,
                                       int h_inv) {
  std::vector<int> out;
  out.reserve(coset.size());
  for (int x : coset) out.push_back(G.mul(h_inv, x));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// Base pointing uses translation g_i; pass all-identity for the base object.
inline CoverObject make_cover(const FiniteGroup& G, const HolonomyDatum& hol,
                              const std::vector<int>& translations) {
  if (!surface_relation_holds(G, hol))
    throw std::invalid_argument("holonomy violates the surface relation");
  if (translations.size() != hol.monodromies.size())
    throw std::invalid_argument("one translation per marked point required");
  CoverObject obj;
  obj.hol = hol;
  for (size_t i = 0; i < hol.monodromies.size(); ++i) {
    Subgroup H = cyclic_subgroup(G, hol.monodromies[i]);
    obj.pointing.push_back(detail::right_coset(G, H, translations[i]));
  }
  return obj;
}

inline CoverObject base_cover(const FiniteGroup& G, const HolonomyDatum& hol) {
  return make_cover(G, hol, std::vector<int>(hol.monodromies.size(), G.identity()));
}

// Moves each marked point within its fiber component: coset times gamma_i.
inline CoverObject translate(const FiniteGroup& G, const CoverObject& obj,
                             const std::vector<int>& gammas) {
  if (gammas.size() != obj.pointing.size())
    throw std::invalid_argument("one translation per marked point required");
  CoverObject out = obj;
  for (size_t i = 0; i < gammas.size(); ++i) {
    std::vector<int> moved;
    moved.reserve(obj.pointing[i].size());
    for (int x : obj.pointing[i]) moved.push_back(G.mul(x, gammas[i]));
    std::sort(moved.begin(), moved.end());
    out.pointing[i] = std::move(moved);
  }
  return out;
}

// Monodromy measured at the chosen point: g^-1 c_i g for any coset member g
// (well defined because <c_i> centralizes c_i).
inline int monodromy_at(const FiniteGroup& G, const CoverObject& obj, int i) {
  int c = obj.hol.monodromies[size_t(i)];
  int g = obj.pointing[size_t(i)].front();
  return G.conj(c, g);
}

// Isomorphism test: some h conjugates every holonomy image and carries the
// pointings over by left multiplication with h^-1. Returns a witness.
inline std::optional<int> is_isomorphic(const FiniteGroup& G, const CoverObject& o1,
                                        const CoverObject& o2) {
  if (o1.hol.genus != o2.hol.genus || o1.hol.monodromies.size() != o2.hol.monodromies.size())
    return std::nullopt;
  std::vector<int> im1 = holonomy_images(o1.hol), im2 = holonomy_images(o2.hol);
  for (int h = 0; h < G.order(); ++h) {
    bool ok = true;
    for (size_t k = 0; k < im1.size() && ok; ++k)
      if (G.conj(im1[k], h) != im2[k]) ok = false;
    int hi = G.inv(h);
    for (size_t i = 0; i < o1.pointing.size() && ok; ++i)
      if (detail::left_translate(G, o1.pointing[i], hi) != o2.pointing[i]) ok = false;
    if (ok) return h;
  }
  return std::nullopt;
}

// Deck transformations fixing every pointed component: elements of the
// holonomy centralizer whose left action fixes each pointing coset.
inline Subgroup automorphisms(const FiniteGroup& G, const CoverObject& obj) {
  Subgroup cent = centralizer_of_set(G, holonomy_images(obj.hol));
  std::vector<uint8_t> mask(size_t(G.order()), 0);
  for (int h : cent.members) {
    bool ok = true;
    int hi = G.inv(h);
    for (const auto& coset : obj.pointing)
      if (detail::left_translate(G, coset, hi) != coset) {
        ok = false;
        break;
      }
    if (ok) mask[size_t(h)] = 1;
  }
  return subgroup_from_mask(std::move(mask));
}

// Closed form for the same subgroup: C(im chi) intersected with every <c_i>.
inline Subgroup automorphisms_closed_form(const FiniteGroup& G, const HolonomyDatum& hol) {
  Subgroup acc = centralizer_of_set(G, holonomy_images(hol));
  for (int c : hol.monodromies) acc = intersect(acc, cyclic_subgroup(G, c));
  return acc;
}

// ---------------------------------------------------------------------------
// Fiber groupoid over one unpointed cover: all pointings modulo deck
// transformations.

struct FiberOrbit {
  std::vector<int> pointing_reps;  // minimal coset member per marked point
  long long size = 0;              // pointings in the orbit
  long long aut_order = 0;         // |C| / size
};

struct FiberGroupoid {
  long long raw_count = 0;         // prod_i |G| / |<c_i>|
  long long centralizer_order = 0; // |C(im chi)|
  std::vector<FiberOrbit> orbits;
  Rat mass;                        // sum over orbits of |C| / |Aut|
  bool mass_identity = false;      // mass == raw_count
};

namespace detail {

struct PointingSpace {
  // cosets[i]: list of cosets of <c_i>, each a sorted member list
  std::vector<std::vector<std::vector<int>>> cosets;
  // coset_index[i][g] = which coset of <c_i> contains g
  std::vector<std::vector<int>> coset_index;
  std::vector<long long> radix;
  long long total = 1;
};

inline PointingSpace pointing_space(const FiniteGroup& G, const HolonomyDatum& hol,
                                    long long cap) {
  PointingSpace ps;
  for (int c : hol.monodromies) {
    Subgroup H = cyclic_subgroup(G, c);
    std::vector<int> index(size_t(G.order()), -1);
    std::vector<std::vector<int>> list;
    for (int g = 0; g < G.order(); ++g) {
      if (index[size_t(g)] >= 0) continue;
      std::vector<int> coset = right_coset(G, H, g);
      for (int x : coset) index[size_t(x)] = int(list.size());
      list.push_back(std::move(coset));
    }
    ps.total *= (long long)list.size();
    if (ps.total > cap)
      throw size_error("pointing enumeration exceeds cap " + std::to_string(cap));
    ps.radix.push_back((long long)list.size());
    ps.cosets.push_back(std::move(list));
    ps.coset_index.push_back(std::move(index));
  }
  return ps;
}

}  // namespace detail

inline FiberGroupoid fiber_groupoid(const FiniteGroup& G, const HolonomyDatum& hol,
                                    long long cap = kEnumerationCap) {
  if (!surface_relation_holds(G, hol))
    throw std::invalid_argument("holonomy violates the surface relation");
  detail::PointingSpace ps = detail::pointing_space(G, hol, cap);
  Subgroup cent = centralizer_of_set(G, holonomy_images(hol));
  size_t n = hol.monodromies.size();

  FiberGroupoid out;
  out.raw_count = ps.total;
  out.centralizer_order = cent.order();

  auto rank = [&](const std::vector<int>& tup) {
    long long r = 0;
    for (size_t i = 0; i < n; ++i) r = r * ps.radix[i] + tup[i];
    return r;
  };
  std::vector<uint8_t> visited(size_t(ps.total), 0);
  std::vector<int> tup(n, 0);
  for (long long start = 0; start < ps.total; ++start) {
    if (visited[size_t(start)]) {
      // advance mixed-radix counter
      for (size_t i = n; i-- > 0;) {
        if (++tup[i] < ps.radix[i]) break;
        tup[i] = 0;
      }
      continue;
    }
    FiberOrbit orbit;
    for (size_t i = 0; i < n; ++i)
      orbit.pointing_reps.push_back(ps.cosets[i][size_t(tup[i])].front());
    // orbit of tup under left action of the centralizer
    std::vector<int> moved(n);
    for (int u : cent.members) {
      int ui = G.inv(u);
      for (size_t i = 0; i < n; ++i) {
        int member = ps.cosets[i][size_t(tup[i])].front();
        moved[i] = ps.coset_index[i][size_t(G.mul(ui, member))];
      }
      long long r = rank(moved);
      if (!visited[size_t(r)]) {
        visited[size_t(r)] = 1;
        ++orbit.size;
      }
    }
    orbit.aut_order = cent.order() / orbit.size;
    out.orbits.push_back(std::move(orbit));
    for (size_t i = n; i-- > 0;) {
      if (++tup[i] < ps.radix[i]) break;
      tup[i] = 0;
    }
  }
  for (const auto& o : out.orbits) out.mass += Rat(cent.order()) / Rat(o.aut_order);
  out.mass_identity = (out.mass == Rat(out.raw_count));
  return out;
}

// ---------------------------------------------------------------------------
// Degree of the pointed-to-unpointed forgetful map over one cover, optionally
// restricted to the single-transport locus.

struct XiFilter {
  enum class Mode { Unfiltered, SingleTransport, Targets };
  Mode mode = Mode::Unfiltered;
  std::vector<int> targets;

  static XiFilter none() { return {}; }
  // all pointings (<c_1>h, ..., <c_n>h) for one h
  static XiFilter orbit() {
    XiFilter f;
    f.mode = Mode::SingleTransport;
    return f;
  }
  // additionally h^-1 c_i h = targets[i]
  static XiFilter component(std::vector<int> targets) {
    XiFilter f;
    f.mode = Mode::Targets;
    f.targets = std::move(targets);
    return f;
  }
};

inline Rat deg_st_tilde(const FiniteGroup& G, const HolonomyDatum& hol,
                        const XiFilter& filter = XiFilter::none(),
                        long long cap = kEnumerationCap) {
  if (filter.mode != XiFilter::Mode::Unfiltered && hol.genus != 0)
    throw std::invalid_argument("component filters require genus 0");
  if (filter.mode == XiFilter::Mode::Targets &&
      filter.targets.size() != hol.monodromies.size())
    throw std::invalid_argument("one target monodromy per marked point required");
  if (!surface_relation_holds(G, hol))
    throw std::invalid_argument("holonomy violates the surface relation");
  detail::PointingSpace ps = detail::pointing_space(G, hol, cap);
  Subgroup cent = centralizer_of_set(G, holonomy_images(hol));
  size_t n = hol.monodromies.size();

  // Membership is constant on deck orbits, so the stacky degree
  // |C| * sum_{orbits in filter} 1/|Aut| collapses to a pointing count;
  // both are accumulated to keep the groupoid bookkeeping honest.
  auto member = [&](const std::vector<int>& tup) {
    if (filter.mode == XiFilter::Mode::Unfiltered) return true;
    if (n == 0) return true;
    std::vector<int> common;
    for (int h : ps.cosets[0][size_t(tup[0])]) common.push_back(h);
    for (size_t i = 1; i < n && !common.empty(); ++i) {
      std::vector<int> keep;
      for (int h : common)
        if (std::binary_search(ps.cosets[i][size_t(tup[i])].begin(),
                               ps.cosets[i][size_t(tup[i])].end(), h))
          keep.push_back(h);
      common.swap(keep);
    }
    if (filter.mode == XiFilter::Mode::SingleTransport) return !common.empty();
    for (int h : common) {
      bool ok = true;
      for (size_t i = 0; i < n; ++i)
        if (G.conj(hol.monodromies[i], h) != filter.targets[i]) {
          ok = false;
          break;
        }
      if (ok) return true;
    }
    return false;
  };

  std::vector<uint8_t> visited(size_t(ps.total), 0);
  auto rank = [&](const std::vector<int>& tup) {
    long long r = 0;
    for (size_t i = 0; i < n; ++i) r = r * ps.radix[i] + tup[i];
    return r;
  };
  Rat deg;
  std::vector<int> tup(n, 0);
  std::vector<int> moved(n);
  for (long long start = 0; start < ps.total; ++start) {
    if (!visited[size_t(start)]) {
      long long orbit_size = 0;
      for (int u : cent.members) {
        int ui = G.inv(u);
        for (size_t i = 0; i < n; ++i) {
          int m = ps.cosets[i][size_t(tup[i])].front();
          moved[i] = ps.coset_index[i][size_t(G.mul(ui, m))];
        }
        long long r = rank(moved);
        if (!visited[size_t(r)]) {
          visited[size_t(r)] = 1;
          ++orbit_size;
        }
      }
      if (member(tup)) {
        long long aut = cent.order() / orbit_size;
        deg += Rat(cent.order()) / Rat(aut);
      }
    }
    for (size_t i = n; i-- > 0;) {
      if (++tup[i] < ps.radix[i]) break;
      tup[i] = 0;
    }
  }
  return deg;
}

// ---------------------------------------------------------------------------
// Hurwitz braid action on monodromy tuples

// word entries: +i applies b_i, -i applies b_i^{-1}, 1 <= i <= n-1;
// b_i: (..., m_i, m_{i+1}, ...) -> (..., m_i m_{i+1} m_i^-1, m_i, ...)
inline std::vector<int> hurwitz_braid(const FiniteGroup& G, std::vector<int> tuple,
                                      const std::vector<int>& word) {
  int n = int(tuple.size());
  for (int w : word) {
    int i = w > 0 ? w : -w;
    if (i < 1 || i >= n) throw std::invalid_argument("braid index out of range");
    int a = tuple[size_t(i - 1)], b = tuple[size_t(i)];
    if (w > 0) {
      tuple[size_t(i - 1)] = G.mul(G.mul(a, b), G.inv(a));
      tuple[size_t(i)] = a;
    } else {
      tuple[size_t(i - 1)] = b;
      tuple[size_t(i)] = G.mul(G.mul(G.inv(b), a), b);
    }
  }
  return tuple;
}

// ---------------------------------------------------------------------------
// Cover counts

// Number of holonomies with monodromy c_i constrained to the given classes,
// divided by |G|. Computed in the class algebra: one commutator-distribution
// convolution per handle, one class convolution per marked point, read off at
// the identity class (a singleton).
inline Rat omega(const FiniteGroup& G, const ConjClassTable& cc, const ClassAlgebra& ca,
                 int genus, const std::vector<int>& classes) {
  if (genus < 0) throw std::invalid_argument("genus must be >= 0");
  for (int cls : classes)
    if (cls < 0 || cls >= cc.num_classes()) throw std::invalid_argument("class id out of range");
  ClassFunction f = delta_identity(cc);
  if (genus > 0) {
    ClassFunction t1 = commutator_distribution(G, cc);
    for (int j = 0; j < genus; ++j) f = convolve(cc, ca, f, t1);
  }
  for (int cls : classes) f = class_convolution(cc, ca, f, cls);
  Rat count = f[size_t(cc.class_of[0])];
  return count / Rat(G.order());
}

// Same count by direct enumeration; the independent cross-check route.
inline Rat omega_enumerated(const FiniteGroup& G, const ConjClassTable& cc, int genus,
                            const std::vector<int>& classes,
                            long long cap = kEnumerationCap) {
  long long space = 1;
  for (int j = 0; j < 2 * genus; ++j) {
    space *= G.order();
    if (space > cap) throw size_error("enumeration space exceeds cap");
  }
  std::vector<std::vector<int>> members;
  for (int cls : classes) {
    members.push_back(class_members(G, cc, cls));
    space *= (long long)members.back().size();
    if (space > cap) throw size_error("enumeration space exceeds cap");
  }
  size_t slots = size_t(2 * genus) + classes.size();
  std::vector<int> choice(slots, 0);
  long long count = 0;
  while (true) {
    int p = G.identity();
    for (int j = 0; j < genus; ++j)
      p = G.mul(p, G.commutator(choice[size_t(2 * j)], choice[size_t(2 * j + 1)]));
    for (size_t i = 0; i < classes.size(); ++i)
      p = G.mul(p, members[i][size_t(choice[size_t(2 * genus) + i])]);
    if (p == G.identity()) ++count;
    size_t k = slots;
    bool done = true;
    while (k-- > 0) {
      int limit = k < size_t(2 * genus) ? G.order() : int(members[k - size_t(2 * genus)].size());
      if (++choice[k] < limit) {
        done = false;
        break;
      }
      choice[k] = 0;
    }
    if (done) break;
  }
  return Rat(count) / Rat(G.order());
}

inline bool holonomy_nonempty(const FiniteGroup& G, const ConjClassTable& cc,
                              const ClassAlgebra& ca, int genus,
                              const std::vector<int>& classes) {
  return omega(G, cc, ca, genus, classes) > Rat(0);
}

// ---------------------------------------------------------------------------
// Gluing identities

struct GluingCheck {
  Rat lhs, rhs;
  bool pass = false;
  std::string description;
};

// Splitting off a node: sum over the middle class cbar of
// |C(cbar)| * omega_{g+,|N+|+1}(classes_{N+}, cbar) * omega_{g-,|N-|+1}(cbar^-1, classes_{N-})
// against omega_{g,n}(classes).
inline GluingCheck gluing_tree_check(const FiniteGroup& G, const ConjClassTable& cc,
                                     const ClassAlgebra& ca, int genus,
                                     const std::vector<int>& classes,
                                     const std::vector<int>& left_indices, int genus_left) {
  int n = int(classes.size());
  std::vector<uint8_t> taken(size_t(n), 0);
  for (int i : left_indices) {
    if (i < 0 || i >= n || taken[size_t(i)])
      throw std::invalid_argument("invalid tree split index set");
    taken[size_t(i)] = 1;
  }
  if (genus_left < 0 || genus_left > genus)
    throw std::invalid_argument("invalid tree split genus");
  std::vector<int> left, right;
  for (int i = 0; i < n; ++i) (taken[size_t(i)] ? left : right).push_back(classes[size_t(i)]);
  Rat lhs;
  for (int mid = 0; mid < cc.num_classes(); ++mid) {
    std::vector<int> lc = left;
    lc.push_back(mid);
    std::vector<int> rc{cc.inverse_class[size_t(mid)]};
    rc.insert(rc.end(), right.begin(), right.end());
    lhs += Rat(cc.centralizer_orders[size_t(mid)]) * omega(G, cc, ca, genus_left, lc) *
           omega(G, cc, ca, genus - genus_left, rc);
  }
  GluingCheck out;
  out.lhs = lhs;
  out.rhs = omega(G, cc, ca, genus, classes);
  out.pass = (out.lhs == out.rhs);
  out.description = "tree split";
  return out;
}

// Closing a handle: sum over cbar of |C(cbar)| * omega_{g-1,n+2}(classes, cbar, cbar^-1)
// against omega_{g,n}(classes).
inline GluingCheck gluing_loop_check(const FiniteGroup& G, const ConjClassTable& cc,
                                     const ClassAlgebra& ca, int genus,
                                     const std::vector<int>& classes) {
  if (genus < 1) throw std::invalid_argument("loop gluing requires genus >= 1");
  Rat lhs;
  for (int mid = 0; mid < cc.num_classes(); ++mid) {
    std::vector<int> ext = classes;
    ext.push_back(mid);
    ext.push_back(cc.inverse_class[size_t(mid)]);
    lhs += Rat(cc.centralizer_orders[size_t(mid)]) * omega(G, cc, ca, genus - 1, ext);
  }
  GluingCheck out;
  out.lhs = lhs;
  out.rhs = omega(G, cc, ca, genus, classes);
  out.pass = (out.lhs == out.rhs);
  out.description = "loop";
  return out;
}

// ---------------------------------------------------------------------------
// Tabulation

struct OmegaRow {
  int genus = 0;
  std::vector<int> classes;  // non-decreasing class ids
  Rat value;
};

struct OmegaTable {
  std::vector<OmegaRow> rows;
};

// Calls fn on every non-decreasing tuple of length n over 0..k-1.
template <typename Fn>
void for_each_class_multiset(int k, int n, Fn&& fn) {
  std::vector<int> tup(size_t(n), 0);
  if (k <= 0) return;
  while (true) {
    fn(const_cast<const std::vector<int>&>(tup));
    int i = n;
    while (i-- > 0) {
      if (tup[size_t(i)] + 1 < k) {
        int v = tup[size_t(i)] + 1;
        for (int j = i; j < n; ++j) tup[size_t(j)] = v;
        break;
      }
    }
    if (i < 0) break;
  }
}

// Values are symmetric in the marked points (the class algebra is
// commutative), so one row per multiset; rows ordered by genus, then point
// count, then tuple.
inline OmegaTable omega_table(const FiniteGroup& G, const ConjClassTable& cc,
                              const ClassAlgebra& ca, int max_genus, int max_points) {
  if (max_genus < 0 || max_points < 1)
    throw std::invalid_argument("table needs max_genus >= 0 and max_points >= 1");
  OmegaTable table;
  for (int g = 0; g <= max_genus; ++g)
    for (int n = 1; n <= max_points; ++n)
      for_each_class_multiset(cc.num_classes(), n, [&](const std::vector<int>& tup) {
        OmegaRow row;
        row.genus = g;
        row.classes = tup;
        row.value = omega(G, cc, ca, g, tup);
        table.rows.push_back(std::move(row));
      });
  return table;
}

}  // namespace gfrob
