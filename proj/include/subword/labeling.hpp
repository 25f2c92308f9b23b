// labeling.hpp
//
// The Lr position-to-root bijection on words c.w_o, the induced reflection
// orders on the positive roots, rank-2 subsystems with canonical generators,
// stable roots, and quiver orientations with the edge-erasure construction.

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "subword/coxeter.hpp"

namespace subword {

inline void require_reduced_wo(const RootSystem& rs, const Word& wo) {
  if (!is_reduced(rs, wo))
    throw std::invalid_argument("word is not reduced");
  if (!(element_of_word(rs, wo) == longest_element(rs)))
    throw std::invalid_argument("word does not evaluate to the longest element");
}

// ---------------------------------------------------------------------------
// Lr labeling

struct LrLabeling {
  Word word;               // the concatenation c.w_o
  int prefix = 0;          // |c| = rank
  std::vector<int> labels;  // position -> root id, a bijection onto -Pi u Phi+
};

inline LrLabeling lr_labeling(const RootSystem& rs, const Word& c,
                              const Word& wo) {
  require_coxeter_word(rs, c);
  require_reduced_wo(rs, wo);

  LrLabeling lr;
  lr.prefix = static_cast<int>(c.letters.size());
  lr.word.letters = c.letters;
  lr.word.letters.insert(lr.word.letters.end(), wo.letters.begin(),
                         wo.letters.end());
  for (int l : c.letters)
    lr.labels.push_back(rs.negate(rs.simple_root[l]));
  GroupElement prefix = rs.identity();
  for (int l : wo.letters) {
    lr.labels.push_back(prefix.apply(rs.simple_root[l]));
    prefix = rs.multiply(prefix, rs.simple(l));
  }

  // sanity: the labels must hit -Pi and then each positive root once
  std::vector<bool> hit(rs.root_count(), false);
  for (int r : lr.labels) {
    if (hit[r]) throw std::logic_error("Lr labeling is not injective");
    hit[r] = true;
  }
  for (int i = lr.prefix; i < static_cast<int>(lr.labels.size()); ++i)
    if (!rs.is_positive(lr.labels[i]))
      throw std::logic_error("Lr labeled a w_o position with a negative root");
  return lr;
}

// ---------------------------------------------------------------------------
// Reflection orders

struct ReflectionOrder {
  std::vector<int> order;        // positive root ids, earliest first
  std::vector<int> position_of;  // indexed by root id; -1 off the order

  explicit ReflectionOrder(std::vector<int> ord, int root_count)
      : order(std::move(ord)), position_of(root_count, -1) {
    for (int i = 0; i < static_cast<int>(order.size()); ++i)
      position_of[order[i]] = i;
  }

  bool before(int a, int b) const { return position_of[a] < position_of[b]; }
};

inline ReflectionOrder reflection_order(const RootSystem& rs, const Word& wo) {
  require_reduced_wo(rs, wo);
  std::vector<int> ord;
  GroupElement prefix = rs.identity();
  for (int l : wo.letters) {
    ord.push_back(prefix.apply(rs.simple_root[l]));
    prefix = rs.multiply(prefix, rs.simple(l));
  }
  return ReflectionOrder(std::move(ord), rs.root_count());
}

// ---------------------------------------------------------------------------
// Rank-2 subsystems

// Positive roots of one rank-2 subsystem, listed along the fan from one
// canonical generator to the other; interior entries are strictly positive
// combinations of the two ends.
struct Rank2Subsystem {
  std::vector<int> fan;

  bool commutative() const { return fan.size() == 2; }
  int gen_first() const { return fan.front(); }
  int gen_second() const { return fan.back(); }
  bool contains_interior(int root) const {
    for (std::size_t i = 1; i + 1 < fan.size(); ++i)
      if (fan[i] == root) return true;
    return false;
  }
};

namespace detail {

// coefficients (x, y) of u in the basis (v1, v2), scaled by the basis
// determinant on a fixed coordinate pair; {} when u is outside the span
inline std::optional<std::pair<GoldenInt, GoldenInt>> span_coefficients(
    const std::vector<GoldenInt>& v1, const std::vector<GoldenInt>& v2,
    const std::vector<GoldenInt>& u) {
  const int n = static_cast<int>(v1.size());
  int ax = -1, ay = -1;
  GoldenInt det(0);
  for (int i = 0; i < n && ax < 0; ++i)
    for (int j = i + 1; j < n; ++j) {
      det = v1[i] * v2[j] - v1[j] * v2[i];
      if (sign(det) != 0) {
        ax = i;
        ay = j;
        break;
      }
    }
  if (ax < 0) throw std::logic_error("degenerate span basis");
  GoldenInt a = u[ax] * v2[ay] - u[ay] * v2[ax];
  GoldenInt b = v1[ax] * u[ay] - v1[ay] * u[ax];
  for (int i = 0; i < n; ++i)
    if (!(det * u[i] == a * v1[i] + b * v2[i])) return std::nullopt;
  return std::make_pair(a, b);
}

}  // namespace detail

inline std::vector<Rank2Subsystem> rank2_subsystems(const RootSystem& rs) {
  std::set<std::vector<int>> member_sets;
  const int N = rs.n_positive;

  for (int r1 = 0; r1 < N; ++r1)
    for (int r2 = r1 + 1; r2 < N; ++r2) {
      int c1 = rs.comp_of_root[r1], c2 = rs.comp_of_root[r2];
      if (c1 != c2) {
        member_sets.insert({r1, r2});  // orthogonal components: nothing between
        continue;
      }
      if (rs.components[c1].dihedral()) continue;  // handled below
      std::vector<int> members;
      for (int u = 0; u < N; ++u) {
        if (rs.comp_of_root[u] != c1) continue;
        if (detail::span_coefficients(rs.coords[r1], rs.coords[r2],
                                      rs.coords[u]))
          members.push_back(u);
      }
      member_sets.insert(std::move(members));
    }

  std::vector<Rank2Subsystem> out;
  for (const auto& members : member_sets) {
    Rank2Subsystem sub;
    if (members.size() == 2) {
      sub.fan = members;
    } else {
      // order along the fan: all members sit in an open half-plane of the
      // span, so the pairwise cross product is a total angular order
      const auto& b1 = rs.coords[members[0]];
      const auto& b2 = rs.coords[members[1]];
      std::vector<std::pair<GoldenInt, GoldenInt>> xy;
      for (int u : members) {
        auto co = detail::span_coefficients(b1, b2, rs.coords[u]);
        if (!co) throw std::logic_error("member left its own span");
        xy.push_back(*co);
      }
      std::vector<int> idx(members.size());
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(), [&](int p, int q) {
        return sign(xy[p].first * xy[q].second - xy[q].first * xy[p].second) > 0;
      });
      for (int p : idx) sub.fan.push_back(members[p]);
    }
    if (sub.fan.back() < sub.fan.front())
      std::reverse(sub.fan.begin(), sub.fan.end());
    out.push_back(std::move(sub));
  }

  // each dihedral-model component is its own unique subsystem
  for (int cid = 0; cid < static_cast<int>(rs.components.size()); ++cid) {
    const auto& comp = rs.components[cid];
    if (!comp.dihedral()) continue;
    int base = -1;
    for (int r = 0; r < N; ++r)
      if (rs.comp_of_root[r] == cid && rs.dihedral_index[r] == 0) base = r;
    Rank2Subsystem sub;
    for (int k = 0; k < comp.bond; ++k) sub.fan.push_back(base + k);
    out.push_back(std::move(sub));
  }

  std::sort(out.begin(), out.end(),
            [](const Rank2Subsystem& a, const Rank2Subsystem& b) {
              return a.fan < b.fan;
            });
  return out;
}

// One of the two monotone orders on every rank-2 fan?
inline bool is_valid_reflection_order(
    const RootSystem& rs, const ReflectionOrder& ord,
    const std::vector<Rank2Subsystem>& subsystems) {
  for (const auto& sub : subsystems) {
    if (sub.fan.size() <= 2) continue;
    bool inc = true, dec = true;
    for (std::size_t i = 0; i + 1 < sub.fan.size(); ++i) {
      if (ord.position_of[sub.fan[i]] < ord.position_of[sub.fan[i + 1]])
        dec = false;
      else
        inc = false;
    }
    if (!inc && !dec) return false;
  }
  return true;
}

inline bool is_valid_reflection_order(const RootSystem& rs,
                                      const ReflectionOrder& ord) {
  return is_valid_reflection_order(rs, ord, rank2_subsystems(rs));
}

// ---------------------------------------------------------------------------
// Stable roots

struct StableSet {
  std::vector<int> roots;  // sorted positive root ids
  Word c_ref;
  Word wo_ref;

  bool contains(int root) const {
    return std::binary_search(roots.begin(), roots.end(), root);
  }
};

inline StableSet stable_set(const RootSystem& rs, const Word& c,
                            const Word& wo,
                            const std::vector<Rank2Subsystem>& subsystems) {
  ReflectionOrder ord_wo = reflection_order(rs, wo);
  ReflectionOrder ord_c =
      reflection_order(rs, sorting_word(rs, c, longest_element(rs)));

  std::vector<bool> stable(rs.n_positive, true);
  for (const auto& sub : subsystems) {
    if (sub.fan.size() <= 2) continue;  // commutative: never disqualifies
    int a = sub.gen_first(), b = sub.gen_second();
    bool agree = ord_c.before(a, b) == ord_wo.before(a, b);
    if (agree) continue;
    for (std::size_t i = 1; i + 1 < sub.fan.size(); ++i)
      stable[sub.fan[i]] = false;
  }

  StableSet st;
  st.c_ref = c;
  st.wo_ref = wo;
  for (int r = 0; r < rs.n_positive; ++r)
    if (stable[r]) st.roots.push_back(r);
  return st;
}

inline StableSet stable_set(const RootSystem& rs, const Word& c,
                            const Word& wo) {
  return stable_set(rs, c, wo, rank2_subsystems(rs));
}

// ---------------------------------------------------------------------------
// Quivers

struct QuiverOrientation {
  CoxeterSpec spec;
  Word source;                                // the defining Coxeter word
  std::map<std::pair<int, int>, bool> edges;  // {i<j} -> true iff i->j

  friend bool operator==(const QuiverOrientation& a,
                         const QuiverOrientation& b) {
    return a.spec == b.spec && a.edges == b.edges;
  }
};

inline QuiverOrientation quiver_of(const RootSystem& rs, const Word& c) {
  require_coxeter_word(rs, c);
  std::vector<int> pos(rs.rank(), -1);
  for (int i = 0; i < static_cast<int>(c.letters.size()); ++i)
    pos[c.letters[i]] = i;
  QuiverOrientation q;
  q.spec = rs.spec;
  q.source = c;
  for (auto [i, j] : rs.spec.diagram_edges()) q.edges[{i, j}] = pos[i] < pos[j];
  return q;
}

// Keep the edges on which both orientations agree; a disagreeing bond becomes
// a commuting pair (vertices are kept).  Returns the erased spec together
// with the first quiver's Coxeter word, reread in the new group.
inline std::pair<CoxeterSpec, Word> erase_disagreements(
    const QuiverOrientation& q, const QuiverOrientation& q2) {
  if (!(q.spec == q2.spec))
    throw std::invalid_argument("quivers live on different Coxeter specs");
  CoxeterSpec erased = q.spec;
  erased.family = "explicit";
  for (const auto& [edge, dir] : q.edges)
    if (q2.edges.at(edge) != dir)
      erased.matrix[edge.first][edge.second] =
          erased.matrix[edge.second][edge.first] = 2;
  return {erased, q.source};
}

}  // namespace subword
