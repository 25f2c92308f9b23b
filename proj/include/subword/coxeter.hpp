// coxeter.hpp
//
// Finite Coxeter groups through their reflection representation: exact root
// systems, group elements as permutations of the root list, lengths, reduced
// words, braid moves, Demazure products, Coxeter elements and sorting words.
//
// Crystallographic and golden-ratio families carry exact root coordinates in
// the simple-root basis (entries in Z[phi]); dihedral I2(m) with m >= 7 uses
// an index model on 2m roots and never touches coordinates.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "subword/golden.hpp"

namespace subword {

// Thrown when an enumeration exceeds its explicit cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Specs and classification

struct CoxeterSpec {
  int rank = 0;
  std::vector<std::vector<int>> matrix;  // m_ij, diagonal 1, off-diagonal >= 2
  std::string family;                    // display tag, "explicit" when built by hand

  int m(int i, int j) const { return matrix[i][j]; }

  std::vector<std::pair<int, int>> diagram_edges() const {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < rank; ++i)
      for (int j = i + 1; j < rank; ++j)
        if (matrix[i][j] >= 3) e.emplace_back(i, j);
    return e;
  }

  friend bool operator==(const CoxeterSpec& x, const CoxeterSpec& y) {
    return x.rank == y.rank && x.matrix == y.matrix;
  }
};

inline CoxeterSpec make_spec(int rank, std::string family) {
  CoxeterSpec s;
  s.rank = rank;
  s.family = std::move(family);
  s.matrix.assign(rank, std::vector<int>(rank, 2));
  for (int i = 0; i < rank; ++i) s.matrix[i][i] = 1;
  return s;
}

inline void set_bond(CoxeterSpec& s, int i, int j, int m) {
  s.matrix[i][j] = s.matrix[j][i] = m;
}

// Coxeter type grammar: A<n>, B<n>, D<n>, E6|E7|E8, F4, G2, H3|H4, I2(<m>).
inline CoxeterSpec parse_type(const std::string& text) {
  auto fail = [&]() -> CoxeterSpec {
    throw std::invalid_argument("unrecognized Coxeter type '" + text + "'");
  };
  if (text.size() < 2) return fail();
  char fam = text[0];
  if (fam == 'I') {
    // I2(m)
    if (text.size() < 5 || text.substr(0, 3) != "I2(" || text.back() != ')')
      return fail();
    int m = 0;
    try {
      m = std::stoi(text.substr(3, text.size() - 4));
    } catch (...) {
      return fail();
    }
    if (m < 2) throw std::invalid_argument("I2(m) needs m >= 2");
    CoxeterSpec s = make_spec(2, text);
    set_bond(s, 0, 1, m);
    return s;
  }
  int n = 0;
  try {
    n = std::stoi(text.substr(1));
  } catch (...) {
    return fail();
  }
  switch (fam) {
    case 'A': {
      if (n < 1) return fail();
      CoxeterSpec s = make_spec(n, text);
      for (int i = 0; i + 1 < n; ++i) set_bond(s, i, i + 1, 3);
      return s;
    }
    case 'B': {
      if (n < 2) return fail();
      CoxeterSpec s = make_spec(n, text);
      set_bond(s, 0, 1, 4);
      for (int i = 1; i + 1 < n; ++i) set_bond(s, i, i + 1, 3);
      return s;
    }
    case 'D': {
      if (n < 3) return fail();
      CoxeterSpec s = make_spec(n, text);
      for (int i = 0; i + 2 < n; ++i) set_bond(s, i, i + 1, 3);
      set_bond(s, n - 3, n - 1, 3);
      return s;
    }
    case 'E': {
      if (n < 6 || n > 8) return fail();
      CoxeterSpec s = make_spec(n, text);
      // Bourbaki numbering: node 2 hangs off node 4 of the path 1-3-4-5-...
      set_bond(s, 0, 2, 3);
      set_bond(s, 1, 3, 3);
      for (int i = 2; i + 1 < n; ++i) set_bond(s, i, i + 1, 3);
      return s;
    }
    case 'F': {
      if (n != 4) return fail();
      CoxeterSpec s = make_spec(4, text);
      set_bond(s, 0, 1, 3);
      set_bond(s, 1, 2, 4);
      set_bond(s, 2, 3, 3);
      return s;
    }
    case 'G': {
      if (n != 2) return fail();
      CoxeterSpec s = make_spec(2, text);
      set_bond(s, 0, 1, 6);
      return s;
    }
    case 'H': {
      if (n != 3 && n != 4) return fail();
      CoxeterSpec s = make_spec(n, text);
      set_bond(s, 0, 1, 5);
      for (int i = 1; i + 1 < n; ++i) set_bond(s, i, i + 1, 3);
      return s;
    }
    default:
      return fail();
  }
}

// One irreducible diagram component, classified against the finite families.
struct Component {
  enum class Kind { A, B, D, E6, E7, E8, F4, H3, H4, I2 };
  Kind kind;
  std::vector<int> verts;  // generator indices, ascending
  int bond = 3;            // I2 only: the edge label m
  bool dihedral() const { return kind == Kind::I2 && bond >= 7; }
  bool golden() const {
    return (kind == Kind::I2 && bond == 5) || kind == Kind::H3 ||
           kind == Kind::H4;
  }

  std::vector<int> degrees() const {
    int k = static_cast<int>(verts.size());
    switch (kind) {
      case Kind::A: {
        std::vector<int> d(k);
        std::iota(d.begin(), d.end(), 2);
        return d;
      }
      case Kind::B: {
        std::vector<int> d;
        for (int i = 1; i <= k; ++i) d.push_back(2 * i);
        return d;
      }
      case Kind::D: {
        std::vector<int> d;
        for (int i = 1; i < k; ++i) d.push_back(2 * i);
        d.push_back(k);
        std::sort(d.begin(), d.end());
        return d;
      }
      case Kind::E6: return {2, 5, 6, 8, 9, 12};
      case Kind::E7: return {2, 6, 8, 10, 12, 14, 18};
      case Kind::E8: return {2, 8, 12, 14, 18, 20, 24, 30};
      case Kind::F4: return {2, 6, 8, 12};
      case Kind::H3: return {2, 6, 10};
      case Kind::H4: return {2, 12, 20, 30};
      case Kind::I2: return {2, bond};
    }
    return {};
  }

  int coxeter_number() const {
    auto d = degrees();
    return d.back();  // h equals the top degree in every finite family
  }

  int positive_count() const {
    int n = 0;
    for (int d : degrees()) n += d - 1;
    return n;
  }
};

namespace detail {

// Classify one connected diagram component; throws std::invalid_argument
// when the component is not of finite type.
inline Component classify_component(const CoxeterSpec& spec,
                                    std::vector<int> verts) {
  Component comp;
  comp.verts = std::move(verts);
  const auto& vs = comp.verts;
  int k = static_cast<int>(vs.size());
  auto reject = [&](const std::string& why) -> Component {
    throw std::invalid_argument("not a finite Coxeter type: " + why);
  };

  if (k == 1) {
    comp.kind = Component::Kind::A;
    return comp;
  }

  // local adjacency over edges m >= 3
  std::map<int, int> pos;
  for (int i = 0; i < k; ++i) pos[vs[i]] = i;
  std::vector<std::vector<int>> adj(k);
  int edge_count = 0;
  std::vector<int> big_bonds;  // labels >= 4 with their local edge
  int big_u = -1, big_v = -1;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      int m = spec.m(vs[a], vs[b]);
      if (m >= 3) {
        adj[a].push_back(b);
        adj[b].push_back(a);
        ++edge_count;
        if (m >= 4) {
          big_bonds.push_back(m);
          big_u = a;
          big_v = b;
        }
      }
    }
  if (edge_count != k - 1) return reject("diagram component has a cycle");

  if (k == 2) {
    comp.kind = Component::Kind::I2;
    comp.bond = spec.m(vs[0], vs[1]);
    return comp;
  }

  if (big_bonds.size() >= 2) return reject("two bonds of order >= 4");

  int max_deg = 0, branch = -1, branch_count = 0;
  for (int a = 0; a < k; ++a) {
    int d = static_cast<int>(adj[a].size());
    max_deg = std::max(max_deg, d);
    if (d >= 3) {
      branch = a;
      ++branch_count;
    }
  }
  if (max_deg >= 4 || branch_count >= 2)
    return reject("diagram branches too much");

  if (branch_count == 1) {
    if (!big_bonds.empty()) return reject("branch node with a bond >= 4");
    // arm lengths from the branch vertex
    std::vector<int> arms;
    for (int s : adj[branch]) {
      int len = 1, prev = branch, cur = s;
      while (static_cast<int>(adj[cur].size()) == 2) {
        int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = nxt;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) {
      comp.kind = Component::Kind::D;
      return comp;
    }
    if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) {
      comp.kind = arms[2] == 2   ? Component::Kind::E6
                  : arms[2] == 3 ? Component::Kind::E7
                                 : Component::Kind::E8;
      return comp;
    }
    return reject("branching diagram outside D/E");
  }

  // path; if there is a big bond, locate it
  if (big_bonds.empty()) {
    comp.kind = Component::Kind::A;
    return comp;
  }
  int L = big_bonds[0];
  bool at_end = adj[big_u].size() == 1 || adj[big_v].size() == 1;
  if (L == 4) {
    if (at_end) {
      comp.kind = Component::Kind::B;
      return comp;
    }
    if (k == 4) {
      comp.kind = Component::Kind::F4;
      return comp;
    }
    return reject("interior bond 4 outside F4");
  }
  if (L == 5) {
    if (at_end && k == 3) {
      comp.kind = Component::Kind::H3;
      return comp;
    }
    if (at_end && k == 4) {
      comp.kind = Component::Kind::H4;
      return comp;
    }
    return reject("bond 5 only in I2(5), H3, H4");
  }
  return reject("bond >= 6 in rank >= 3");
}

struct CoordHash {
  std::size_t operator()(const std::vector<GoldenInt>& v) const {
    std::size_t h = 1469598103934665603ull;
    GoldenIntHash gh;
    for (const auto& x : v) h = (h ^ gh(x)) * 1099511628211ull;
    return h;
  }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Words

struct Word {
  std::vector<int> letters;  // 0-based generator indices

  Word() = default;
  explicit Word(std::vector<int> ls) : letters(std::move(ls)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  friend bool operator==(const Word& a, const Word& b) {
    return a.letters == b.letters;
  }
  friend bool operator<(const Word& a, const Word& b) {
    return a.letters < b.letters;
  }
};

// Parses the external 1-based form, e.g. "1 2 1".
inline Word parse_word(const std::string& text) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    int v;
    try {
      v = std::stoi(tok);
    } catch (...) {
      throw std::invalid_argument("bad word letter '" + tok + "'");
    }
    if (v < 1) throw std::invalid_argument("word letters are 1-based");
    w.letters.push_back(v - 1);
  }
  return w;
}

inline std::string word_str(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(w.letters[i] + 1);
  }
  return s;
}

inline Word reverse_word(Word w) {
  std::reverse(w.letters.begin(), w.letters.end());
  return w;
}

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (int l : w.letters) h = (h ^ static_cast<std::size_t>(l + 1)) * 1099511628211ull;
    return h;
  }
};

// ---------------------------------------------------------------------------
// Group elements

struct GroupElement {
  std::vector<std::int32_t> perm;  // image of each root index

  int apply(int root) const { return perm[root]; }
  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.perm == b.perm;
  }
  friend bool operator!=(const GroupElement& a, const GroupElement& b) {
    return !(a == b);
  }
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : g.perm) h = (h ^ static_cast<std::size_t>(x + 1)) * 1099511628211ull;
    return h;
  }
};

// ---------------------------------------------------------------------------
// Root systems

struct RootSystem {
  CoxeterSpec spec;
  std::vector<Component> components;
  int n_positive = 0;  // N; root indices 0..N-1 positive, i+N is the negation

  // Exact coordinates in the simple-root basis; empty for dihedral-model
  // roots.  Parallel arrays indexed by root id.
  std::vector<std::vector<GoldenInt>> coords;
  std::vector<int> comp_of_root;
  std::vector<int> dihedral_index;  // angle index within the component, or -1

  std::vector<std::vector<std::int32_t>> refl;  // refl[g][r] = s_g(r)
  std::vector<int> simple_root;                 // root id of alpha_g
  std::vector<int> comp_of_gen;

  int rank() const { return spec.rank; }
  int root_count() const { return 2 * n_positive; }
  bool is_positive(int r) const { return r < n_positive; }
  int negate(int r) const {
    return r < n_positive ? r + n_positive : r - n_positive;
  }

  // --- element arithmetic -------------------------------------------------

  GroupElement identity() const {
    GroupElement e;
    e.perm.resize(root_count());
    std::iota(e.perm.begin(), e.perm.end(), 0);
    return e;
  }

  GroupElement simple(int g) const {
    GroupElement s;
    s.perm = refl[g];
    return s;
  }

  // operator composition: (a*b)(x) = a(b(x))
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const {
    GroupElement r;
    r.perm.resize(root_count());
    for (int x = 0; x < root_count(); ++x) r.perm[x] = a.perm[b.perm[x]];
    return r;
  }

  GroupElement inverse(const GroupElement& a) const {
    GroupElement r;
    r.perm.resize(root_count());
    for (int x = 0; x < root_count(); ++x) r.perm[a.perm[x]] = x;
    return r;
  }

  bool is_identity(const GroupElement& a) const {
    for (int x = 0; x < root_count(); ++x)
      if (a.perm[x] != x) return false;
    return true;
  }

  void check_letters(const Word& w) const {
    for (int l : w.letters)
      if (l < 0 || l >= rank())
        throw std::invalid_argument("word letter out of range");
  }

  int length(const GroupElement& w) const {
    int len = 0;
    for (int r = 0; r < n_positive; ++r)
      if (w.perm[r] >= n_positive) ++len;
    return len;
  }
};

// ---------------------------------------------------------------------------
// Construction

inline RootSystem build_root_system(const CoxeterSpec& spec) {
  if (spec.rank <= 0) throw std::invalid_argument("rank must be positive");
  if (static_cast<int>(spec.matrix.size()) != spec.rank)
    throw std::invalid_argument("Coxeter matrix size mismatch");
  for (int i = 0; i < spec.rank; ++i) {
    if (static_cast<int>(spec.matrix[i].size()) != spec.rank)
      throw std::invalid_argument("Coxeter matrix size mismatch");
    if (spec.matrix[i][i] != 1)
      throw std::invalid_argument("Coxeter matrix diagonal must be 1");
    for (int j = 0; j < spec.rank; ++j) {
      if (i != j && (spec.matrix[i][j] < 2 || spec.matrix[i][j] != spec.matrix[j][i]))
        throw std::invalid_argument("Coxeter matrix must be symmetric with m_ij >= 2");
    }
  }

  RootSystem rs;
  rs.spec = spec;
  const int n = spec.rank;

  // connected components over edges m >= 3
  std::vector<int> comp_id(n, -1);
  for (int i = 0; i < n; ++i) {
    if (comp_id[i] != -1) continue;
    int id = static_cast<int>(rs.components.size());
    std::vector<int> stack{i}, verts;
    comp_id[i] = id;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      verts.push_back(u);
      for (int v = 0; v < n; ++v)
        if (v != u && spec.m(u, v) >= 3 && comp_id[v] == -1) {
          comp_id[v] = id;
          stack.push_back(v);
        }
    }
    std::sort(verts.begin(), verts.end());
    rs.components.push_back(detail::classify_component(spec, std::move(verts)));
  }
  rs.comp_of_gen = comp_id;

  int expected_N = 0;
  for (const auto& c : rs.components) expected_N += c.positive_count();

  // Cartan-type matrix: s_i(alpha_j) = alpha_j - C[i][j] alpha_i, for the
  // coordinate components.  On a bond 4 or 6 the lower-numbered generator
  // takes the short root.
  std::vector<std::vector<GoldenInt>> C(n, std::vector<GoldenInt>(n, GoldenInt(0)));
  for (int i = 0; i < n; ++i) C[i][i] = GoldenInt(2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      int m = spec.m(i, j);
      if (m == 2) continue;
      if (rs.components[comp_id[i]].dihedral()) continue;
      switch (m) {
        case 3: C[i][j] = GoldenInt(-1); break;
        case 4: C[i][j] = (i < j) ? GoldenInt(-2) : GoldenInt(-1); break;
        case 5: C[i][j] = GoldenInt(0, -1); break;
        case 6: C[i][j] = (i < j) ? GoldenInt(-3) : GoldenInt(-1); break;
        default:
          throw std::logic_error("coordinate component with bond >= 7");
      }
    }

  // closure of the coordinate simple roots under the coordinate reflections
  std::unordered_map<std::vector<GoldenInt>, int, detail::CoordHash> seen;
  std::vector<std::vector<GoldenInt>> closure;
  std::vector<int> coord_gens;
  for (int g = 0; g < n; ++g)
    if (!rs.components[comp_id[g]].dihedral()) coord_gens.push_back(g);
  for (int g : coord_gens) {
    std::vector<GoldenInt> alpha(n, GoldenInt(0));
    alpha[g] = GoldenInt(1);
    if (seen.emplace(alpha, static_cast<int>(closure.size())).second)
      closure.push_back(alpha);
  }
  auto reflect = [&](int g, std::vector<GoldenInt> v) {
    GoldenInt acc(0);
    for (int j = 0; j < n; ++j)
      if (!(C[g][j] == GoldenInt(0))) acc += C[g][j] * v[j];
    v[g] -= acc;
    return v;
  };
  for (std::size_t head = 0; head < closure.size(); ++head) {
    auto v = closure[head];
    for (int g : coord_gens) {
      auto w = reflect(g, v);
      if (seen.emplace(w, static_cast<int>(closure.size())).second) {
        closure.push_back(w);
        if (static_cast<int>(closure.size()) > 4 * expected_N)
          throw std::invalid_argument(
              "root closure exceeds finite bound; spec is not finite type");
      }
    }
  }

  // split positives, with sign sanity check
  std::vector<std::vector<GoldenInt>> positives;
  for (const auto& v : closure) {
    int pos = 0, neg = 0;
    for (const auto& x : v) {
      int s = sign(x);
      if (s > 0) ++pos;
      if (s < 0) ++neg;
    }
    if (pos && neg)
      throw std::logic_error("root with mixed coordinate signs");
    if (pos) positives.push_back(v);
  }

  // deterministic order: component, then height, then coordinates
  auto height = [](const std::vector<GoldenInt>& v) {
    GoldenInt h(0);
    for (const auto& x : v) h += x;
    return h;
  };
  auto comp_of_coord_root = [&](const std::vector<GoldenInt>& v) {
    for (int j = 0; j < n; ++j)
      if (!v[j].is_zero()) return comp_id[j];
    return 0;
  };
  auto golden_less = [](const GoldenInt& x, const GoldenInt& y) {
    return sign(x - y) < 0;
  };
  std::sort(positives.begin(), positives.end(),
            [&](const auto& u, const auto& v) {
              int cu = comp_of_coord_root(u), cv = comp_of_coord_root(v);
              if (cu != cv) return cu < cv;
              GoldenInt hu = height(u), hv = height(v);
              if (!(hu == hv)) return golden_less(hu, hv);
              return std::lexicographical_compare(u.begin(), u.end(), v.begin(),
                                                  v.end(), golden_less);
            });

  // lay out roots: positives 0..N-1 (coordinate components in sorted order,
  // then dihedral components by angle index), negatives mirrored at +N
  struct DihedralComp {
    int comp;
    int m;
    int first_pos;  // root id of its angle-0 positive root
  };
  std::vector<DihedralComp> dihedrals;
  int N = expected_N;
  rs.n_positive = N;
  rs.coords.assign(2 * N, {});
  rs.comp_of_root.assign(2 * N, -1);
  rs.dihedral_index.assign(2 * N, -1);

  int cursor = 0;
  for (const auto& v : positives) {
    rs.coords[cursor] = v;
    rs.comp_of_root[cursor] = comp_of_coord_root(v);
    std::vector<GoldenInt> negv(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) negv[j] = -v[j];
    rs.coords[cursor + N] = std::move(negv);
    rs.comp_of_root[cursor + N] = rs.comp_of_root[cursor];
    ++cursor;
  }
  for (int cid = 0; cid < static_cast<int>(rs.components.size()); ++cid) {
    const auto& comp = rs.components[cid];
    if (!comp.dihedral()) continue;
    DihedralComp dc{cid, comp.bond, cursor};
    for (int k = 0; k < comp.bond; ++k) {
      rs.comp_of_root[cursor + k] = cid;
      rs.dihedral_index[cursor + k] = k;
      rs.comp_of_root[cursor + k + N] = cid;
      rs.dihedral_index[cursor + k + N] = k + comp.bond;
      }
    cursor += comp.bond;
    dihedrals.push_back(dc);
  }
  if (cursor != N)
    throw std::logic_error("root count does not match the degree table");

  // index lookup for coordinate roots
  std::unordered_map<std::vector<GoldenInt>, int, detail::CoordHash> index_of;
  for (int r = 0; r < 2 * N; ++r)
    if (!rs.coords[r].empty()) index_of.emplace(rs.coords[r], r);

  // simple root ids
  rs.simple_root.assign(n, -1);
  for (int g = 0; g < n; ++g) {
    if (rs.components[comp_id[g]].dihedral()) {
      for (const auto& dc : dihedrals)
        if (dc.comp == comp_id[g]) {
          const auto& vs = rs.components[comp_id[g]].verts;
          rs.simple_root[g] = (g == vs[0]) ? dc.first_pos
                                           : dc.first_pos + dc.m - 1;
        }
    } else {
      std::vector<GoldenInt> alpha(n, GoldenInt(0));
      alpha[g] = GoldenInt(1);
      rs.simple_root[g] = index_of.at(alpha);
    }
  }

  // reflection tables
  rs.refl.assign(n, std::vector<std::int32_t>(2 * N));
  for (int g = 0; g < n; ++g) {
    auto& row = rs.refl[g];
    std::iota(row.begin(), row.end(), 0);
    if (rs.components[comp_id[g]].dihedral()) {
      const auto& comp = rs.components[comp_id[g]];
      const auto& vs = comp.verts;
      int m = comp.bond;
      int base = -1;
      for (const auto& dc : dihedrals)
        if (dc.comp == comp_id[g]) base = dc.first_pos;
      // roots at angles k*pi/m; s_alpha sends angle t to 2a + pi - t
      int a = (g == vs[0]) ? 0 : m - 1;
      auto global = [&](int k) {
        k = ((k % (2 * m)) + 2 * m) % (2 * m);
        return k < m ? base + k : base + (k - m) + N;
      };
      for (int k = 0; k < 2 * m; ++k)
        row[global(k)] = static_cast<std::int32_t>(global(2 * a + m - k));
    } else {
      for (int r = 0; r < 2 * N; ++r) {
        if (rs.coords[r].empty()) continue;
        row[r] = static_cast<std::int32_t>(index_of.at(reflect(g, rs.coords[r])));
      }
    }
  }
  return rs;
}

inline RootSystem build_root_system(const std::string& type) {
  return build_root_system(parse_type(type));
}

// ---------------------------------------------------------------------------
// Word / element operations

inline GroupElement element_of_word(const RootSystem& rs, const Word& w) {
  rs.check_letters(w);
  GroupElement acc = rs.identity();
  for (int l : w.letters) acc = rs.multiply(acc, rs.simple(l));
  return acc;
}

inline bool is_reduced(const RootSystem& rs, const Word& w) {
  return rs.length(element_of_word(rs, w)) ==
         static_cast<int>(w.letters.size());
}

inline GroupElement longest_element(const RootSystem& rs) {
  GroupElement w = rs.identity();
  for (;;) {
    int g = -1;
    for (int i = 0; i < rs.rank(); ++i)
      if (w.perm[rs.simple_root[i]] < rs.n_positive) {  // l(w s_i) > l(w)
        g = i;
        break;
      }
    if (g < 0) return w;
    w = rs.multiply(w, rs.simple(g));
  }
}

inline GroupElement demazure_product(const RootSystem& rs, const Word& q) {
  rs.check_letters(q);
  GroupElement w = rs.identity();
  for (int l : q.letters)
    if (w.perm[rs.simple_root[l]] < rs.n_positive)  // length goes up
      w = rs.multiply(w, rs.simple(l));
  return w;
}

// All Coxeter elements with one canonical (lex-first) reduced word each.
inline std::vector<std::pair<GroupElement, Word>> coxeter_elements(
    const RootSystem& rs) {
  const int n = rs.rank();
  if (n > 10)
    throw std::invalid_argument("Coxeter element enumeration capped at rank 10");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::pair<GroupElement, Word>> out;
  std::unordered_set<GroupElement, GroupElementHash> found;
  do {
    Word w;
    w.letters = order;
    GroupElement g = element_of_word(rs, w);
    if (found.insert(g).second) out.emplace_back(std::move(g), std::move(w));
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

inline bool is_coxeter_word(const RootSystem& rs, const Word& c) {
  if (static_cast<int>(c.letters.size()) != rs.rank()) return false;
  std::vector<bool> used(rs.rank(), false);
  for (int l : c.letters) {
    if (l < 0 || l >= rs.rank() || used[l]) return false;
    used[l] = true;
  }
  return true;
}

inline void require_coxeter_word(const RootSystem& rs, const Word& c) {
  if (!is_coxeter_word(rs, c))
    throw std::invalid_argument(
        "expected a reduced word of a Coxeter element (each generator once)");
}

// Greedy leftmost reduced subword of c^infinity multiplying to w.
inline Word sorting_word(const RootSystem& rs, const Word& c,
                         const GroupElement& w) {
  require_coxeter_word(rs, c);
  Word out;
  GroupElement rinv = rs.inverse(w);
  int len = rs.length(w);
  while (len > 0) {
    int before = len;
    for (int g : c.letters) {
      if (rinv.perm[rs.simple_root[g]] >= rs.n_positive) {  // left descent
        out.letters.push_back(g);
        rinv = rs.multiply(rinv, rs.simple(g));  // (s r)^{-1} = r^{-1} s
        --len;
      }
    }
    if (len == before)
      throw std::logic_error("sorting word scan stalled");  // unreachable
  }
  return out;
}

// All words one braid move away from w (w must be reduced).
inline std::vector<Word> braid_neighbors(const RootSystem& rs, const Word& w) {
  if (!is_reduced(rs, w))
    throw std::invalid_argument("braid moves apply to reduced words only");
  std::set<Word> out;
  const auto& ls = w.letters;
  const int k = static_cast<int>(ls.size());
  for (int p = 0; p + 1 < k; ++p) {
    int i = ls[p], j = ls[p + 1];
    if (i == j) continue;
    int m = rs.spec.m(i, j);
    if (p + m > k) continue;
    bool ok = true;
    for (int t = 0; t < m; ++t)
      if (ls[p + t] != (t % 2 == 0 ? i : j)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    Word nb = w;
    for (int t = 0; t < m; ++t) nb.letters[p + t] = (t % 2 == 0 ? j : i);
    out.insert(std::move(nb));
  }
  return {out.begin(), out.end()};
}

// Braid-connected class of reduced words of w; by the word property this is
// the full set of reduced words.
inline std::vector<Word> reduced_words(const RootSystem& rs,
                                       const GroupElement& w,
                                       std::size_t cap = 1000000) {
  Word seed;
  {
    GroupElement rinv = rs.inverse(w);
    int len = rs.length(w);
    while (len > 0) {
      for (int g = 0; g < rs.rank(); ++g) {
        if (rinv.perm[rs.simple_root[g]] >= rs.n_positive) {
          seed.letters.push_back(g);
          rinv = rs.multiply(rinv, rs.simple(g));
          --len;
          break;
        }
      }
    }
  }
  std::set<Word> all{seed};
  std::vector<Word> queue{seed};
  while (!queue.empty()) {
    Word cur = std::move(queue.back());
    queue.pop_back();
    for (auto& nb : braid_neighbors(rs, cur)) {
      if (all.insert(nb).second) {
        if (all.size() > cap)
          throw CapExceeded("reduced word enumeration exceeded cap");
        queue.push_back(std::move(nb));
      }
    }
  }
  return {all.begin(), all.end()};
}

}  // namespace subword
