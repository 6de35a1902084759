// Finite groups as dense multiplication tables with a deterministic element order.
//
// Groups are built from a small spec grammar:
//   cyclic N | dihedral N | symmetric N | quaternion8 | perm K: (a b ...), (c d ...)
// Elements are enumerated breadth-first over the generators starting at the
// identity, sorting each new frontier (lexicographically by permutation images,
// or by fixed label for the abstract quaternion preset), so equal specs always
// produce identical tables. The identity has index 0.
//
// Permutations compose left to right: (p*q)(x) = q(p(x)). Conjugation used for
// sector moves everywhere downstream is g^h = h^-1 g h, and the commutator is
// [a,b] = a b a^-1 b^-1.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gfrob/rational.hpp"

namespace gfrob {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct size_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultGroupCap = 5040;

class FiniteGroup {
 public:
  int order() const { return n_; }
  int identity() const { return 0; }
  int mul(int a, int b) const { return mul_[size_t(a) * n_ + b]; }
  int inv(int a) const { return inv_[size_t(a)]; }
  // h^-1 g h
  int conj(int g, int h) const { return mul(mul(inv(h), g), h); }
  // a b a^-1 b^-1
  int commutator(int a, int b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }

  int order_of(int g) const {
    int k = 1, x = g;
    while (x != 0) {
      x = mul(x, g);
      ++k;
    }
    return k;
  }

  const std::string& name(int g) const { return names_[size_t(g)]; }
  const std::vector<int>& generators() const { return generators_; }
  const std::string& spec() const { return spec_; }

  // Degree of the defining permutation action (every construction provides one;
  // quaternion8 uses its right regular action on 8 points).
  int degree() const { return degree_; }
  const std::vector<int>& perm(int g) const { return perms_[size_t(g)]; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.n_ == b.n_ && a.mul_ == b.mul_;
  }

  // Internal factory: elements as permutation images in final order.
  static std::shared_ptr<const FiniteGroup> from_perms(
      const std::vector<std::vector<int>>& elems,
      const std::vector<std::vector<int>>& gen_perms, const std::string& spec,
      const std::vector<std::string>* fixed_names = nullptr) {
    auto g = std::make_shared<FiniteGroup>();
    g->finish_tables(elems, gen_perms, fixed_names);
    g->spec_ = spec;
    return g;
  }

  // Internal factory for direct products; exposed for direct_product below.
  struct RawParts {
    int n = 0;
    int degree = 0;
    std::vector<uint16_t> mul, inv;
    std::vector<std::string> names;
    std::vector<std::vector<int>> perms;
    std::vector<int> generators;
    std::string spec;
  };
  static std::shared_ptr<const FiniteGroup> from_raw(RawParts parts) {
    auto g = std::make_shared<FiniteGroup>();
    g->n_ = parts.n;
    g->degree_ = parts.degree;
    g->mul_ = std::move(parts.mul);
    g->inv_ = std::move(parts.inv);
    g->names_ = std::move(parts.names);
    g->perms_ = std::move(parts.perms);
    g->generators_ = std::move(parts.generators);
    g->spec_ = std::move(parts.spec);
    return g;
  }

 private:
  int n_ = 0;
  int degree_ = 0;
  std::vector<uint16_t> mul_;
  std::vector<uint16_t> inv_;
  std::vector<std::string> names_;
  std::vector<std::vector<int>> perms_;
  std::vector<int> generators_;
  std::string spec_;

  void finish_tables(const std::vector<std::vector<int>>& elems,
                     const std::vector<std::vector<int>>& gen_perms,
                     const std::vector<std::string>* fixed_names) {
    n_ = int(elems.size());
    degree_ = elems.empty() ? 0 : int(elems[0].size());
    perms_ = elems;
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < n_; ++i) index[elems[size_t(i)]] = i;
    mul_.assign(size_t(n_) * n_, 0);
    inv_.assign(size_t(n_), 0);
    std::vector<int> comp(static_cast<size_t>(degree_));
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        for (int p = 0; p < degree_; ++p) comp[size_t(p)] = elems[size_t(b)][size_t(elems[size_t(a)][size_t(p)])];
        int c = index.at(comp);
        mul_[size_t(a) * n_ + b] = uint16_t(c);
        if (c == 0) inv_[size_t(a)] = uint16_t(b);
      }
    generators_.clear();
    for (const auto& gp : gen_perms) generators_.push_back(index.at(gp));
    std::sort(generators_.begin(), generators_.end());
    generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
    names_.resize(size_t(n_));
    if (fixed_names) {
      names_ = *fixed_names;
    } else {
      for (int i = 0; i < n_; ++i) names_[size_t(i)] = cycle_notation(elems[size_t(i)]);
    }
  }

  static std::string cycle_notation(const std::vector<int>& img) {
    std::string out;
    std::vector<bool> seen(img.size(), false);
    for (size_t s = 0; s < img.size(); ++s) {
      if (seen[s] || img[s] == int(s)) continue;
      out += "(";
      size_t x = s;
      bool first = true;
      while (!seen[x]) {
        seen[x] = true;
        if (!first) out += " ";
        out += std::to_string(x + 1);
        first = false;
        x = size_t(img[x]);
      }
      out += ")";
    }
    return out.empty() ? "e" : out;
  }
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

namespace detail {

// Breadth-first closure of permutation generators; each new frontier is sorted
// lexicographically before being appended, which fixes the element order.
inline std::vector<std::vector<int>> perm_closure(int degree,
                                                  const std::vector<std::vector<int>>& gens,
                                                  int cap) {
  std::vector<int> id(static_cast<size_t>(degree));
  for (int p = 0; p < degree; ++p) id[size_t(p)] = p;
  std::vector<std::vector<int>> order{id};
  std::set<std::vector<int>> known{id};
  std::vector<std::vector<int>> level{id};
  while (!level.empty()) {
    std::set<std::vector<int>> fresh;
    for (const auto& x : level)
      for (const auto& g : gens) {
        std::vector<int> y(static_cast<size_t>(degree));
        for (int p = 0; p < degree; ++p) y[size_t(p)] = g[size_t(x[size_t(p)])];
        if (!known.count(y)) fresh.insert(std::move(y));
      }
    level.assign(fresh.begin(), fresh.end());
    for (const auto& y : level) {
      known.insert(y);
      order.push_back(y);
      if (int(order.size()) > cap)
        throw size_error("group order exceeds cap " + std::to_string(cap));
    }
  }
  return order;
}

struct Tokens {
  std::vector<std::string> toks;
  size_t pos = 0;
  bool done() const { return pos >= toks.size(); }
  const std::string& peek() const {
    static const std::string empty;
    return done() ? empty : toks[pos];
  }
  std::string next() {
    if (done()) throw parse_error("unexpected end of group spec");
    return toks[pos++];
  }
};

inline Tokens tokenize_spec(const std::string& s) {
  Tokens t;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
    } else if (c == '(' || c == ')' || c == ',' || c == ':') {
      t.toks.emplace_back(1, c);
      ++i;
    } else if (std::isalnum(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
      t.toks.push_back(s.substr(i, j - i));
      i = j;
    } else {
      throw parse_error(std::string("unexpected character '") + c + "' in group spec");
    }
  }
  return t;
}

inline int parse_int(const std::string& tok, const char* what) {
  for (char c : tok)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw parse_error(std::string("expected ") + what + ", got '" + tok + "'");
  try {
    return std::stoi(tok);
  } catch (...) {
    throw parse_error(std::string("integer out of range for ") + what + ": " + tok);
  }
}

// Parses one generator: a juxtaposition of cycles "(a b ...)(c d ...)".
inline std::vector<int> parse_generator(Tokens& t, int degree) {
  std::vector<int> img(static_cast<size_t>(degree));
  for (int p = 0; p < degree; ++p) img[size_t(p)] = p;
  bool any = false;
  while (!t.done() && t.peek() == "(") {
    t.next();
    any = true;
    std::vector<int> cycle;
    while (!t.done() && t.peek() != ")") {
      int p = parse_int(t.next(), "a point");
      if (p < 1 || p > degree)
        throw parse_error("point " + std::to_string(p) + " outside 1.." + std::to_string(degree));
      for (int q : cycle)
        if (q == p - 1) throw parse_error("repeated point " + std::to_string(p) + " in cycle");
      cycle.push_back(p - 1);
    }
    if (t.done()) throw parse_error("unterminated cycle in group spec");
    t.next();  // ')'
    for (size_t k = 0; k + 1 < cycle.size(); ++k) {
      if (img[size_t(cycle[k])] != cycle[k])
        throw parse_error("point " + std::to_string(cycle[k] + 1) + " used twice in one generator");
    }
    for (size_t k = 0; k < cycle.size(); ++k)
      img[size_t(cycle[k])] = cycle[(k + 1) % cycle.size()];
  }
  if (!any) throw parse_error("expected a cycle '(' in group spec");
  return img;
}

inline GroupPtr make_perm_group(int degree, std::vector<std::vector<int>> gens,
                                const std::string& spec, int cap,
                                const std::vector<std::string>* names = nullptr) {
  auto elems = perm_closure(degree, gens, cap);
  return FiniteGroup::from_perms(elems, gens, spec, names);
}

}  // namespace detail

// Builds a group from spec text. Throws parse_error on bad input and
// size_error when the closure exceeds cap.
inline GroupPtr build_group(const std::string& spec, int cap = kDefaultGroupCap) {
  detail::Tokens t = detail::tokenize_spec(spec);
  std::string kw = t.next();
  if (kw == "cyclic") {
    int n = detail::parse_int(t.next(), "cyclic order");
    if (!t.done()) throw parse_error("trailing tokens after 'cyclic N'");
    if (n < 1) throw parse_error("cyclic order must be >= 1");
    std::vector<std::vector<int>> gens;
    if (n > 1) {
      std::vector<int> r(static_cast<size_t>(n));
      for (int p = 0; p < n; ++p) r[size_t(p)] = (p + 1) % n;
      gens.push_back(r);
    }
    return detail::make_perm_group(n, gens, spec, cap);
  }
  if (kw == "dihedral") {
    int n = detail::parse_int(t.next(), "polygon size");
    if (!t.done()) throw parse_error("trailing tokens after 'dihedral N'");
    if (n < 3) throw parse_error("dihedral N requires N >= 3");
    std::vector<int> r(static_cast<size_t>(n)), s(static_cast<size_t>(n));
    for (int p = 0; p < n; ++p) {
      r[size_t(p)] = (p + 1) % n;
      s[size_t(p)] = (n - p) % n;
    }
    return detail::make_perm_group(n, {r, s}, spec, cap);
  }
  if (kw == "symmetric") {
    int n = detail::parse_int(t.next(), "symmetric degree");
    if (!t.done()) throw parse_error("trailing tokens after 'symmetric N'");
    if (n < 1 || n > 5) throw parse_error("symmetric preset supports 1 <= N <= 5");
    std::vector<std::vector<int>> gens;
    if (n >= 2) {
      std::vector<int> sw(static_cast<size_t>(n));
      for (int p = 0; p < n; ++p) sw[size_t(p)] = p;
      sw[0] = 1;
      sw[1] = 0;
      gens.push_back(sw);
    }
    if (n >= 3) {
      std::vector<int> cyc(static_cast<size_t>(n));
      for (int p = 0; p < n; ++p) cyc[size_t(p)] = (p + 1) % n;
      gens.push_back(cyc);
    }
    return detail::make_perm_group(n, gens, spec, cap);
  }
  if (kw == "quaternion8") {
    if (!t.done()) throw parse_error("trailing tokens after 'quaternion8'");
    // Labels 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k; sign bit + axis.
    auto qmul = [](int a, int b) {
      int sa = a & 1, xa = a >> 1;
      int sb = b & 1, xb = b >> 1;
      // axis table over {1,i,j,k}: result axis and extra sign
      static const int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
      static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
      int x = axis[xa][xb];
      int s = sa ^ sb ^ sign[xa][xb];
      return (x << 1) | s;
    };
    // BFS order over abstract labels from generators i (2), j (4).
    std::vector<int> order{0};
    std::vector<bool> known(8, false);
    known[0] = true;
    std::vector<int> level{0};
    while (!level.empty()) {
      std::set<int> fresh;
      for (int x : level)
        for (int g : {2, 4}) {
          int y = qmul(x, g);
          if (!known[size_t(y)]) fresh.insert(y);
        }
      level.assign(fresh.begin(), fresh.end());
      for (int y : level) {
        known[size_t(y)] = true;
        order.push_back(y);
      }
    }
    std::vector<int> pos(8);
    for (int idx = 0; idx < 8; ++idx) pos[size_t(order[size_t(idx)])] = idx;
    // Right regular action on the ordered elements gives the defining permutations.
    std::vector<std::vector<int>> elems(8, std::vector<int>(8));
    for (int g = 0; g < 8; ++g)
      for (int x = 0; x < 8; ++x)
        elems[size_t(pos[size_t(g)])][size_t(pos[size_t(x)])] = pos[size_t(qmul(x, g))];
    static const char* klabel[8] = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    std::vector<std::string> names(8);
    for (int g = 0; g < 8; ++g) names[size_t(pos[size_t(g)])] = klabel[g];
    std::vector<std::vector<int>> gens{elems[size_t(pos[2])], elems[size_t(pos[4])]};
    auto g8 = detail::make_perm_group(8, gens, spec, cap, &names);
    return g8;
  }
  if (kw == "perm") {
    int degree = detail::parse_int(t.next(), "point count");
    if (degree < 1) throw parse_error("perm point count must be >= 1");
    if (t.next() != ":") throw parse_error("expected ':' after point count");
    std::vector<std::vector<int>> gens;
    gens.push_back(detail::parse_generator(t, degree));
    while (!t.done()) {
      if (t.next() != ",") throw parse_error("expected ',' between generators");
      gens.push_back(detail::parse_generator(t, degree));
    }
    return detail::make_perm_group(degree, gens, spec, cap);
  }
  throw parse_error("unknown group spec keyword '" + kw + "'");
}

// Direct product with pair order (a, b) -> a*|B| + b and blockwise defining action.
inline GroupPtr direct_product(const GroupPtr& A, const GroupPtr& B, int cap = kDefaultGroupCap) {
  long long n = (long long)A->order() * B->order();
  if (n > cap) throw size_error("product order exceeds cap " + std::to_string(cap));
  FiniteGroup::RawParts parts;
  parts.n = int(n);
  parts.degree = A->degree() + B->degree();
  parts.mul.assign(size_t(n) * size_t(n), 0);
  parts.inv.assign(size_t(n), 0);
  parts.names.resize(size_t(n));
  parts.perms.resize(size_t(n));
  auto id = [&](int a, int b) { return a * B->order() + b; };
  for (int a = 0; a < A->order(); ++a)
    for (int b = 0; b < B->order(); ++b) {
      int e = id(a, b);
      parts.inv[size_t(e)] = uint16_t(id(A->inv(a), B->inv(b)));
      parts.names[size_t(e)] = "(" + A->name(a) + "," + B->name(b) + ")";
      auto& pm = parts.perms[size_t(e)];
      pm.resize(size_t(parts.degree));
      for (int p = 0; p < A->degree(); ++p) pm[size_t(p)] = A->perm(a)[size_t(p)];
      for (int p = 0; p < B->degree(); ++p)
        pm[size_t(A->degree() + p)] = A->degree() + B->perm(b)[size_t(p)];
    }
  for (int a1 = 0; a1 < A->order(); ++a1)
    for (int b1 = 0; b1 < B->order(); ++b1)
      for (int a2 = 0; a2 < A->order(); ++a2)
        for (int b2 = 0; b2 < B->order(); ++b2)
          parts.mul[size_t(id(a1, b1)) * size_t(n) + size_t(id(a2, b2))] =
              uint16_t(id(A->mul(a1, a2), B->mul(b1, b2)));
  for (int ag : A->generators()) parts.generators.push_back(id(ag, 0));
  for (int bg : B->generators()) parts.generators.push_back(id(0, bg));
  if (parts.generators.empty() && n > 1)
    for (int e = 1; e < int(n); ++e) parts.generators.push_back(e);
  parts.spec = "product(" + A->spec() + "; " + B->spec() + ")";
  return FiniteGroup::from_raw(std::move(parts));
}

// ---------------------------------------------------------------------------
// Conjugacy data

struct ConjClassTable {
  std::vector<int> class_of;              // element -> class id
  std::vector<int> reps;                  // class -> minimal member
  std::vector<long long> sizes;           // class -> member count
  std::vector<long long> centralizer_orders;
  std::vector<int> inverse_class;
  int num_classes() const { return int(reps.size()); }
};

inline ConjClassTable conjugacy_data(const FiniteGroup& G) {
  int n = G.order();
  ConjClassTable cc;
  cc.class_of.assign(size_t(n), -1);
  for (int g = 0; g < n; ++g) {
    if (cc.class_of[size_t(g)] >= 0) continue;
    int cls = cc.num_classes();
    cc.reps.push_back(g);
    long long size = 0;
    for (int h = 0; h < n; ++h) {
      int x = G.conj(g, h);
      if (cc.class_of[size_t(x)] < 0) {
        cc.class_of[size_t(x)] = cls;
        ++size;
      }
    }
    cc.sizes.push_back(size);
    long long cent = 0;
    for (int h = 0; h < n; ++h)
      if (G.conj(g, h) == g) ++cent;
    if (cent * size != n)
      throw std::logic_error("orbit-stabilizer mismatch in conjugacy computation");
    cc.centralizer_orders.push_back(cent);
  }
  cc.inverse_class.resize(size_t(cc.num_classes()));
  for (int c = 0; c < cc.num_classes(); ++c)
    cc.inverse_class[size_t(c)] = cc.class_of[size_t(G.inv(cc.reps[size_t(c)]))];
  return cc;
}

inline std::vector<int> class_members(const FiniteGroup& G, const ConjClassTable& cc, int cls) {
  std::vector<int> out;
  for (int g = 0; g < G.order(); ++g)
    if (cc.class_of[size_t(g)] == cls) out.push_back(g);
  return out;
}

// ---------------------------------------------------------------------------
// Subgroups

struct Subgroup {
  std::vector<uint8_t> mask;  // indexed by element
  std::vector<int> members;   // ascending
  long long order() const { return (long long)members.size(); }
  bool contains(int g) const { return mask[size_t(g)] != 0; }
};

inline Subgroup subgroup_from_mask(std::vector<uint8_t> mask) {
  Subgroup s;
  s.mask = std::move(mask);
  for (size_t g = 0; g < s.mask.size(); ++g)
    if (s.mask[g]) s.members.push_back(int(g));
  return s;
}

inline Subgroup subgroup_generated(const FiniteGroup& G, const std::vector<int>& gens) {
  std::vector<uint8_t> mask(size_t(G.order()), 0);
  mask[size_t(G.identity())] = 1;
  std::vector<int> queue{G.identity()};
  while (!queue.empty()) {
    int x = queue.back();
    queue.pop_back();
    for (int g : gens) {
      int y = G.mul(x, g);
      if (!mask[size_t(y)]) {
        mask[size_t(y)] = 1;
        queue.push_back(y);
      }
    }
  }
  return subgroup_from_mask(std::move(mask));
}

inline Subgroup cyclic_subgroup(const FiniteGroup& G, int g) {
  return subgroup_generated(G, {g});
}

inline Subgroup centralizer_of_set(const FiniteGroup& G, const std::vector<int>& elems) {
  std::vector<uint8_t> mask(size_t(G.order()), 0);
  for (int h = 0; h < G.order(); ++h) {
    bool ok = true;
    for (int x : elems)
      if (G.conj(x, h) != x) {
        ok = false;
        break;
      }
    mask[size_t(h)] = ok ? 1 : 0;
  }
  return subgroup_from_mask(std::move(mask));
}

inline Subgroup centralizer(const FiniteGroup& G, int g) { return centralizer_of_set(G, {g}); }

inline Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<uint8_t> mask(a.mask.size(), 0);
  for (size_t g = 0; g < mask.size(); ++g) mask[g] = (a.mask[g] && b.mask[g]) ? 1 : 0;
  return subgroup_from_mask(std::move(mask));
}

// ---------------------------------------------------------------------------
// Class functions (stored as per-class totals) and the class algebra

using ClassFunction = std::vector<Rat>;

struct ClassAlgebra {
  // pair_counts[c][d][e] = #{(y, z) in class_c x class_d : y*z in class_e}
  std::vector<std::vector<std::vector<long long>>> pair_counts;
};

inline ClassAlgebra class_algebra(const FiniteGroup& G, const ConjClassTable& cc) {
  int k = cc.num_classes();
  ClassAlgebra ca;
  ca.pair_counts.assign(size_t(k), std::vector<std::vector<long long>>(
                                       size_t(k), std::vector<long long>(size_t(k), 0)));
  for (int y = 0; y < G.order(); ++y) {
    int c = cc.class_of[size_t(y)];
    for (int z = 0; z < G.order(); ++z)
      ++ca.pair_counts[size_t(c)][size_t(cc.class_of[size_t(z)])]
                      [size_t(cc.class_of[size_t(G.mul(y, z))])];
  }
  return ca;
}

inline ClassFunction delta_identity(const ConjClassTable& cc) {
  ClassFunction f(size_t(cc.num_classes()));
  f[size_t(cc.class_of[0])] = Rat(1);
  return f;
}

inline Rat total_mass(const ClassFunction& f) {
  Rat t;
  for (const Rat& v : f) t += v;
  return t;
}

// Convolves f with the sum over class cls (weight 1 per member): the result's
// value at a class is the weighted pair count landing in that class.
inline ClassFunction class_convolution(const ConjClassTable& cc, const ClassAlgebra& ca,
                                       const ClassFunction& f, int cls) {
  int k = cc.num_classes();
  ClassFunction out(static_cast<size_t>(k));
  for (int d = 0; d < k; ++d) {
    if (f[size_t(d)].is_zero()) continue;
    Rat per_elem = f[size_t(d)] / Rat(cc.sizes[size_t(d)]);
    for (int e = 0; e < k; ++e) {
      long long cnt = ca.pair_counts[size_t(cls)][size_t(d)][size_t(e)];
      if (cnt) out[size_t(e)] += per_elem * Rat(cnt);
    }
  }
  return out;
}

inline ClassFunction convolve(const ConjClassTable& cc, const ClassAlgebra& ca,
                              const ClassFunction& f, const ClassFunction& h) {
  int k = cc.num_classes();
  ClassFunction out(static_cast<size_t>(k));
  for (int c = 0; c < k; ++c) {
    if (f[size_t(c)].is_zero()) continue;
    Rat fw = f[size_t(c)] / Rat(cc.sizes[size_t(c)]);
    for (int d = 0; d < k; ++d) {
      if (h[size_t(d)].is_zero()) continue;
      Rat hw = h[size_t(d)] / Rat(cc.sizes[size_t(d)]);
      for (int e = 0; e < k; ++e) {
        long long cnt = ca.pair_counts[size_t(c)][size_t(d)][size_t(e)];
        if (cnt) out[size_t(e)] += fw * hw * Rat(cnt);
      }
    }
  }
  return out;
}

// Distribution of [a,b] over all pairs; total mass |G|^2.
inline ClassFunction commutator_distribution(const FiniteGroup& G, const ConjClassTable& cc) {
  ClassFunction out(size_t(cc.num_classes()));
  for (int a = 0; a < G.order(); ++a)
    for (int b = 0; b < G.order(); ++b)
      out[size_t(cc.class_of[size_t(G.commutator(a, b))])] += Rat(1);
  return out;
}

// ---------------------------------------------------------------------------
// Involutive sections

struct InvolutiveSection {
  bool exists = false;
  std::vector<int> section;  // class -> chosen element, when exists
  int witness_class = -1;    // first self-inverse class with no involution, when not
};

// Chooses s(class) with s(cbar^-1) = s(cbar)^-1. The constraint splits per
// inverse-pair of classes, so the minimal valid choice per class (in class
// order) is the first section in lexicographic order; a self-inverse class
// without an element of order <= 2 blocks every choice.
inline InvolutiveSection involutive_section(const FiniteGroup& G, const ConjClassTable& cc) {
  InvolutiveSection out;
  out.section.assign(size_t(cc.num_classes()), -1);
  for (int c = 0; c < cc.num_classes(); ++c) {
    int ci = cc.inverse_class[size_t(c)];
    if (ci == c) {
      int pick = -1;
      for (int g = 0; g < G.order(); ++g)
        if (cc.class_of[size_t(g)] == c && G.mul(g, g) == G.identity()) {
          pick = g;
          break;
        }
      if (pick < 0) {
        out.exists = false;
        out.witness_class = c;
        out.section.clear();
        return out;
      }
      out.section[size_t(c)] = pick;
    } else if (c < ci) {
      out.section[size_t(c)] = cc.reps[size_t(c)];
      out.section[size_t(ci)] = G.inv(cc.reps[size_t(c)]);
    }
  }
  out.exists = true;
  return out;
}

}  // namespace gfrob
