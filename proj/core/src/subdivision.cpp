#include "conefun/subdivision.hpp"

#include "conefun/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace conefun {

namespace {

bool lex_less(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

bool lex_less_vecs(const std::vector<IntVec>& a, const std::vector<IntVec>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), lex_less);
}

std::vector<IntVec> sorted_gens(std::vector<IntVec> g) {
  std::sort(g.begin(), g.end(), lex_less);
  return g;
}

std::string vec_str(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

// --- pulling triangulation -------------------------------------------------
//
// Triangulates a full-dimensional cone so that any two cells triangulated by
// the same rule agree on shared faces: every face is triangulated by coning
// its lexicographically least ray over the triangulations of the facets not
// containing that ray.

struct FaceNode {
  std::vector<IntVec> gens;  // sorted
  int dim = 0;
};

std::vector<std::vector<IntVec>> pull_triangulate_face(
    const std::vector<FaceNode>& poset, const FaceNode& face);

std::vector<std::vector<IntVec>> pull_triangulate_face(
    const std::vector<FaceNode>& poset, const FaceNode& face) {
  if (face.dim == 1 || static_cast<int>(face.gens.size()) == face.dim) {
    return {face.gens};  // already simplicial
  }
  const IntVec& v0 = face.gens.front();  // gens sorted, lex-least
  std::vector<std::vector<IntVec>> out;
  for (const FaceNode& g : poset) {
    if (g.dim != face.dim - 1) continue;
    if (!std::includes(face.gens.begin(), face.gens.end(), g.gens.begin(),
                       g.gens.end(), lex_less))
      continue;
    if (std::binary_search(g.gens.begin(), g.gens.end(), v0, lex_less)) continue;
    for (auto& s : pull_triangulate_face(poset, g)) {
      s.push_back(v0);
      out.push_back(sorted_gens(std::move(s)));
    }
  }
  return out;
}

std::vector<SimplicialCone> pull_triangulate(const Cone& c) {
  const int r = c.dim();
  std::vector<FaceNode> poset;
  for (const Face& f : all_proper_faces(c)) {
    FaceNode n;
    n.gens = sorted_gens(f.generators);
    n.dim = r - f.codim;
    poset.push_back(std::move(n));
  }
  FaceNode top;
  top.gens = sorted_gens(c.generators());
  top.dim = r;
  std::vector<SimplicialCone> out;
  for (auto& s : pull_triangulate_face(poset, top)) {
    SimplicialCone sc;
    sc.generators = std::move(s);
    sc.parent_dim = r;
    out.push_back(std::move(sc));
  }
  return out;
}

// --- stellar insertion and multiplicity reduction ---------------------------

// Rational coordinates of u in the generator basis of a full-dimensional
// simplicial cone; empty when u is outside the closed cone.
std::vector<Rat> coords_in(const SimplicialCone& s, const IntVec& u) {
  IntMat cols(s.parent_dim, IntVec(s.parent_dim));
  for (int i = 0; i < s.parent_dim; ++i)
    for (int j = 0; j < s.parent_dim; ++j) cols[i][j] = s.generators[j][i];
  std::vector<Rat> q = solve_rational(cols, u);
  for (const Rat& x : q)
    if (x < 0) return {};
  return q;
}

// Splits every top cone containing u (stellar subdivision at the ray of u).
// Keeps the collection a simplicial complex.
void insert_point(std::vector<SimplicialCone>& complex_, const IntVec& u) {
  std::vector<SimplicialCone> next;
  for (const auto& s : complex_) {
    std::vector<Rat> q = coords_in(s, u);
    if (q.empty()) {
      next.push_back(s);
      continue;
    }
    for (int i = 0; i < static_cast<int>(q.size()); ++i) {
      if (q[i] == 0) continue;
      SimplicialCone child = s;
      child.generators[i] = u;
      child.generators = sorted_gens(std::move(child.generators));
      next.push_back(std::move(child));
    }
  }
  complex_ = std::move(next);
}

// Nonzero primitive lattice points of the half-open parallelepiped
// { q_1 m_1 + ... + q_r m_r : 0 <= q_i < 1 }, with their coordinates.
std::vector<std::pair<IntVec, std::vector<Rat>>> parallelepiped_points(
    const SimplicialCone& s) {
  const int r = s.parent_dim;
  std::vector<Int> lo(r, 0), hi(r, 0);
  for (int j = 0; j < r; ++j) {
    for (const auto& g : s.generators) {
      if (g[j] > 0) hi[j] += g[j];
      if (g[j] < 0) lo[j] += g[j];
    }
  }
  std::vector<std::pair<IntVec, std::vector<Rat>>> out;
  IntVec x(r);
  // iterate the integer box
  std::vector<Int> cur(lo);
  while (true) {
    for (int j = 0; j < r; ++j) x[j] = cur[j];
    if (!is_zero(x)) {
      IntMat cols(r, IntVec(r));
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) cols[i][j] = s.generators[j][i];
      std::vector<Rat> q = solve_rational(cols, x);
      bool ok = true;
      for (const Rat& c : q)
        if (c < 0 || c >= 1) { ok = false; break; }
      if (ok && content(x) == 1) out.emplace_back(x, q);
    }
    int j = 0;
    for (; j < r; ++j) {
      if (cur[j] < hi[j]) { ++cur[j]; break; }
      cur[j] = lo[j];
    }
    if (j == r) break;
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
  return out;
}

void reduce_to_unimodular(std::vector<SimplicialCone>& complex_) {
  while (true) {
    std::sort(complex_.begin(), complex_.end(),
              [](const SimplicialCone& a, const SimplicialCone& b) {
                return lex_less_vecs(a.generators, b.generators);
              });
    const SimplicialCone* worst = nullptr;
    for (const auto& s : complex_) {
      if (s.mult() > 1) { worst = &s; break; }
    }
    if (!worst) return;

    auto candidates = parallelepiped_points(*worst);
    if (candidates.empty())
      throw Error("reduce_to_unimodular: no insertion point in a cone of multiplicity > 1");
    // pick the u minimizing the largest child multiplicity, ties lexicographic
    Int mult = worst->mult();
    const IntVec* best = nullptr;
    Rat best_score;
    for (const auto& [u, q] : candidates) {
      Rat score = 0;
      for (const Rat& c : q) score = std::max(score, c);
      if (!best || score < best_score) {
        best = &u;
        best_score = score;
      }
    }
    (void)mult;
    insert_point(complex_, *best);
  }
}

// --- C_rho construction for ray exclusion -----------------------------------

// Lattice points x of F with rho - x also in F (a bounded region), sorted.
std::vector<IntVec> sandwich_candidates(const Cone& c, const std::vector<int>& face_normals,
                                        const IntVec& rho, const Int& bound) {
  const int r = c.dim();
  std::vector<Int> lo(r), hi(r);
  for (int j = 0; j < r; ++j) { lo[j] = -bound; hi[j] = bound; }
  auto in_face = [&](const IntVec& x) {
    if (!c.contains(x, false)) return false;
    for (int ni : face_normals)
      if (dot(c.normals()[ni], x) != 0) return false;
    return true;
  };
  std::vector<IntVec> out;
  std::vector<Int> cur(lo);
  IntVec x(r);
  while (true) {
    for (int j = 0; j < r; ++j) x[j] = cur[j];
    if (!is_zero(x) && x != rho && in_face(x) && in_face(sub(rho, x))) out.push_back(x);
    int j = 0;
    for (; j < r; ++j) {
      if (cur[j] < hi[j]) { ++cur[j]; break; }
      cur[j] = lo[j];
    }
    if (j == r) break;
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

// Searches for w_1 < ... < w_d in `candidates` with sum rho forming a
// Z-basis of the lattice spanned by basis_rows (d x r saturated basis).
bool search_face_basis(const std::vector<IntVec>& candidates, const IntVec& rho,
                       const IntMat& basis_rows, int d, std::size_t start,
                       IntVec partial, std::vector<IntVec>& chosen,
                       std::vector<IntVec>& result) {
  const int got = static_cast<int>(chosen.size());
  if (got == d - 1) {
    IntVec last = sub(rho, partial);
    if (is_zero(last)) return false;
    if (last == rho) return false;
    if (!chosen.empty() && !lex_less(chosen.back(), last)) return false;
    if (std::find(candidates.begin(), candidates.end(), last) == candidates.end())
      return false;
    chosen.push_back(last);
    // express chosen in the face lattice basis and test |det| = 1
    IntMat coords(d, IntVec(d));
    // solve basis_rows^T * c = w  (least squares is exact: w in the span)
    // Use rational solve on the Gram system.
    IntMat gram(d, IntVec(d, 0));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) gram[i][j] = dot(basis_rows[i], basis_rows[j]);
    bool ok = true;
    for (int k = 0; k < d && ok; ++k) {
      IntVec rhs(d);
      for (int i = 0; i < d; ++i) rhs[i] = dot(basis_rows[i], chosen[k]);
      std::vector<Rat> sol = solve_rational(gram, rhs);
      for (int i = 0; i < d; ++i) {
        if (boost::multiprecision::denominator(sol[i]) != 1) { ok = false; break; }
        coords[k][i] = boost::multiprecision::numerator(sol[i]);
      }
    }
    if (ok) {
      Int dd = det(coords);
      ok = (dd == 1 || dd == -1);
    }
    if (ok) {
      result = chosen;
      return true;
    }
    chosen.pop_back();
    return false;
  }
  for (std::size_t i = start; i < candidates.size(); ++i) {
    chosen.push_back(candidates[i]);
    if (search_face_basis(candidates, rho, basis_rows, d, i + 1,
                          add(partial, candidates[i]), chosen, result))
      return true;
    chosen.pop_back();
  }
  return false;
}

// Small lattice points of C (preferring the interior) used to complete a
// partial basis in the boundary case of the ray-exclusion lemma.
std::vector<IntVec> completion_candidates(const Cone& c, Int bound) {
  const int r = c.dim();
  std::vector<IntVec> out;
  std::vector<Int> cur(r, -bound);
  IntVec x(r);
  while (true) {
    for (int j = 0; j < r; ++j) x[j] = cur[j];
    if (!is_zero(x) && c.contains(x, false)) out.push_back(x);
    int j = 0;
    for (; j < r; ++j) {
      if (cur[j] < bound) { ++cur[j]; break; }
      cur[j] = -bound;
    }
    if (j == r) break;
  }
  // interior points first, then lexicographic
  std::stable_sort(out.begin(), out.end(), lex_less);
  std::stable_sort(out.begin(), out.end(), [&](const IntVec& a, const IntVec& b) {
    return c.contains(a, true) > c.contains(b, true);
  });
  return out;
}

bool search_completion(const std::vector<IntVec>& candidates, IntMat rows, int need,
                       std::size_t start, std::vector<IntVec>& extra) {
  if (need == 0) {
    Int d = det(rows);
    return d == 1 || d == -1;
  }
  for (std::size_t i = start; i < candidates.size(); ++i) {
    rows.push_back(candidates[i]);
    if (rank(rows) == static_cast<int>(rows.size())) {
      extra.push_back(candidates[i]);
      if (search_completion(candidates, rows, need - 1, i + 1, extra)) return true;
      extra.pop_back();
    }
    rows.pop_back();
  }
  return false;
}

// Splits a cone (given by its rays) along the hyperplane u·x = 0; returns the
// rays of the nonnegative and nonpositive sides.
struct CutSides {
  std::vector<IntVec> pos, neg;
};

CutSides cut_rays(const Cone& cell, const IntVec& u) {
  CutSides out;
  const auto& rays = cell.generators();
  const int n = static_cast<int>(rays.size());
  std::vector<Int> side(n);
  for (int i = 0; i < n; ++i) side[i] = dot(u, rays[i]);
  for (int i = 0; i < n; ++i) {
    if (side[i] >= 0) out.pos.push_back(rays[i]);
    if (side[i] <= 0) out.neg.push_back(rays[i]);
  }
  // new rays on 2-faces crossing the hyperplane
  const int r = cell.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!((side[i] > 0 && side[j] < 0) || (side[i] < 0 && side[j] > 0))) continue;
      // adjacency: normals vanishing on both rays have rank r-2
      IntMat vanish;
      for (const auto& v : cell.normals())
        if (dot(v, rays[i]) == 0 && dot(v, rays[j]) == 0) vanish.push_back(v);
      if (r > 2 && (vanish.empty() || rank(vanish) != r - 2)) continue;
      const IntVec& a = side[i] > 0 ? rays[i] : rays[j];
      const IntVec& b = side[i] > 0 ? rays[j] : rays[i];
      Int da = dot(u, a), db = dot(u, b);
      IntVec w = primitive(sub(scale(b, da), scale(a, db)));
      out.pos.push_back(w);
      out.neg.push_back(w);
    }
  }
  return out;
}

}  // namespace

Int SimplicialCone::mult() const {
  const int k = dim();
  IntMat rows(generators.begin(), generators.end());
  if (k == parent_dim) {
    Int d = det(rows);
    if (d == 0) throw Degenerate("SimplicialCone: dependent generators");
    return boost::multiprecision::abs(d);
  }
  // lower-dimensional: |det| with respect to a basis of the saturated span
  IntMat basis = saturation_basis(rows);
  IntMat gram(k, IntVec(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) gram[i][j] = dot(basis[i], basis[j]);
  IntMat coords(k, IntVec(k));
  for (int i = 0; i < k; ++i) {
    IntVec rhs(k);
    for (int j = 0; j < k; ++j) rhs[j] = dot(basis[j], generators[i]);
    std::vector<Rat> sol = solve_rational(gram, rhs);
    for (int j = 0; j < k; ++j) {
      if (boost::multiprecision::denominator(sol[j]) != 1)
        throw Degenerate("SimplicialCone: generator outside the lattice span");
      coords[i][j] = boost::multiprecision::numerator(sol[j]);
    }
  }
  Int d = det(coords);
  if (d == 0) throw Degenerate("SimplicialCone: dependent generators");
  return boost::multiprecision::abs(d);
}

bool SignedTerm::member(const std::vector<std::int64_t>& p, bool strict) const {
  const int r = static_cast<int>(to_standard_i64.size());
  for (int i = 0; i < r; ++i) {
    std::int64_t y = 0;
    for (int j = 0; j < r; ++j) y += to_standard_i64[i][j] * p[j];
    if (i < dim) {
      if (strict ? y < 1 : y < 0) return false;
    } else {
      if (y != 0) return false;
    }
  }
  return true;
}

int SignedComplex::signed_count(const std::vector<std::int64_t>& p) const {
  int total = 0;
  for (const auto& t : terms)
    if (t.member(p, false)) total += t.sign;
  return total;
}

int SignedComplex::interior_count(const std::vector<std::int64_t>& p) const {
  int total = 0;
  for (const auto& t : terms)
    if (t.member(p, true)) ++total;
  return total;
}

std::vector<SimplicialCone> unimodular_subdivide(const Cone& c) {
  GoodnessResult g = is_good(c);
  if (!g.good)
    throw NotGood("unimodular_subdivide: cone is not good at " + g.violating_face);
  std::vector<SimplicialCone> complex_ = pull_triangulate(c);
  reduce_to_unimodular(complex_);
  return complex_;
}

std::vector<SimplicialCone> subdivide_through_point(const Cone& c, const IntVec& u) {
  if (!c.contains(u, false)) throw RayOutsideCone("subdivide_through_point: point outside cone");
  IntVec up = primitive(u);
  std::vector<SimplicialCone> complex_ = pull_triangulate(c);
  insert_point(complex_, up);
  reduce_to_unimodular(complex_);
  return complex_;
}

std::vector<SimplicialCone> subdivide_avoiding_ray(const Cone& c, const IntVec& rho_in) {
  const int r = c.dim();
  IntVec rho = primitive(rho_in);
  if (!c.contains(rho, false))
    throw RayOutsideCone("subdivide_avoiding_ray: " + vec_str(rho) + " is not in the cone");
  for (const auto& g : c.generators())
    if (g == rho)
      throw RayIsGenerator("subdivide_avoiding_ray: " + vec_str(rho) + " is a generator");

  // smallest face containing rho
  std::vector<int> face_normals;
  for (int ni = 0; ni < static_cast<int>(c.normals().size()); ++ni)
    if (dot(c.normals()[ni], rho) == 0) face_normals.push_back(ni);

  // span of that face
  IntMat face_gen_rows;
  for (const auto& g : c.generators()) {
    bool on = true;
    for (int ni : face_normals)
      if (dot(c.normals()[ni], g) != 0) { on = false; break; }
    if (on) face_gen_rows.push_back(g);
  }
  const int d = face_normals.empty() ? r : rank(face_gen_rows);

  // basis of the face lattice
  IntMat face_basis =
      face_normals.empty() ? identity_matrix(r) : saturation_basis(face_gen_rows);

  // surround rho inside the face: w_1 + ... + w_d = rho, {w_i} a basis of the
  // face lattice, every w_i in the face
  Int bound = 1;
  for (const Int& v : rho) bound = std::max(bound, Int(boost::multiprecision::abs(v)));
  bound += 1;
  std::vector<IntVec> w;
  for (int attempt = 0; attempt < 3 && w.empty(); ++attempt, bound *= 3) {
    std::vector<IntVec> candidates = sandwich_candidates(c, face_normals, rho, bound);
    std::vector<IntVec> chosen;
    search_face_basis(candidates, rho, face_basis, d, 0, IntVec(r, 0), chosen, w);
  }
  if (w.empty())
    throw Error("subdivide_avoiding_ray: no surrounding standard cone found for " +
                vec_str(rho));

  // complete to a full-dimensional standard cone inside C
  std::vector<IntVec> crho_gens = w;
  if (d < r) {
    IntMat rows(w.begin(), w.end());
    std::vector<IntVec> extra;
    Int bound = 2;
    bool found = false;
    while (bound <= 8 && !found) {
      extra.clear();
      found = search_completion(completion_candidates(c, bound), rows, r - d, 0, extra);
      bound += 2;
    }
    if (!found)
      throw Error("subdivide_avoiding_ray: no unimodular completion inside the cone for " +
                  vec_str(rho));
    for (auto& y : extra) crho_gens.push_back(std::move(y));
  }

  // C_rho facet normals: rows of the inverse of the generator matrix
  IntMat cols(r, IntVec(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) cols[i][j] = crho_gens[j][i];
  IntMat crho_normals = inverse_unimodular(cols);

  // cut C by the facet hyperplanes of C_rho
  std::vector<Cone> cells{c};
  for (int j = 0; j < r; ++j) {
    IntVec u = primitive(crho_normals[j]);
    std::vector<Cone> next;
    for (const Cone& cell : cells) {
      CutSides sides = cut_rays(cell, u);
      for (auto* rays : {&sides.pos, &sides.neg}) {
        IntMat rows(rays->begin(), rays->end());
        if (rays->empty() || rank(rows) < r) continue;
        Cone piece = make_cone(*rays);
        // drop duplicates (cell untouched by the hyperplane appears twice)
        bool dup = false;
        for (const Cone& p : next)
          if (p.generators() == piece.generators()) { dup = true; break; }
        if (!dup) next.push_back(std::move(piece));
      }
    }
    cells = std::move(next);
  }

  // triangulate all cells with the global pulling rule and reduce
  std::vector<SimplicialCone> complex_;
  for (const Cone& cell : cells)
    for (auto& s : pull_triangulate(cell)) complex_.push_back(std::move(s));
  reduce_to_unimodular(complex_);

  for (const auto& s : complex_)
    for (const auto& g : s.generators)
      if (g == rho)
        throw Error("subdivide_avoiding_ray: internal error, ray survived");
  return complex_;
}

SignedComplex inclusion_exclusion_complex(const Cone& c,
                                          const std::vector<SimplicialCone>& pieces) {
  const int r = c.dim();
  if (pieces.empty()) throw InvalidSubdivision("inclusion_exclusion_complex: no pieces");
  for (const auto& p : pieces) {
    if (p.dim() != r)
      throw InvalidSubdivision("inclusion_exclusion_complex: piece of wrong dimension");
    if (p.mult() != 1)
      throw InvalidSubdivision("inclusion_exclusion_complex: non-standard piece");
  }

  auto in_boundary = [&](const std::vector<IntVec>& gens) {
    for (const auto& v : c.normals()) {
      bool vanish = true;
      for (const auto& g : gens)
        if (dot(v, g) != 0) { vanish = false; break; }
      if (vanish) return true;
    }
    return false;
  };

  std::map<std::vector<std::vector<std::string>>, std::vector<IntVec>> faces_by_key;
  auto key_of = [](const std::vector<IntVec>& gens) {
    std::vector<std::vector<std::string>> key;
    for (const auto& g : gens) {
      std::vector<std::string> kg;
      for (const auto& x : g) kg.push_back(x.str());
      key.push_back(kg);
    }
    return key;
  };

  for (const auto& p : pieces) {
    const int n = p.dim();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<IntVec> sub;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) sub.push_back(p.generators[i]);
      sub = sorted_gens(std::move(sub));
      if (in_boundary(sub)) continue;
      faces_by_key.emplace(key_of(sub), sub);
    }
  }

  SignedComplex sc;
  sc.source = c;
  for (auto& [key, gens] : faces_by_key) {
    SignedTerm t;
    t.dim = static_cast<int>(gens.size());
    t.sign = ((r - t.dim) % 2 == 0) ? 1 : -1;
    IntMat rows(gens.begin(), gens.end());
    auto completion = complete_to_unimodular(rows);
    if (!completion)
      throw InvalidSubdivision("inclusion_exclusion_complex: face is not standard");
    IntMat a = transpose(inverse_unimodular(*completion));
    t.generators = std::move(gens);
    t.to_standard = std::move(a);
    for (const auto& g : t.generators) t.gens_i64.push_back(to_i64(g));
    for (const auto& row : t.to_standard) t.to_standard_i64.push_back(to_i64(row));
    sc.terms.push_back(std::move(t));
  }
  std::sort(sc.terms.begin(), sc.terms.end(), [](const SignedTerm& a, const SignedTerm& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return lex_less_vecs(a.generators, b.generators);
  });

  // sampled validation box
  const std::int64_t box = r <= 3 ? 5 : 3;
  std::vector<std::int64_t> lo(r, 0), hi(r, 0);
  for (int j = 0; j < r; ++j) {
    std::int64_t mn = 0, mx = 0;
    for (const auto& g : c.generators_i64()) {
      mn = std::min(mn, g[j]);
      mx = std::max(mx, g[j]);
    }
    lo[j] = mn * box;
    hi[j] = mx * box;
  }
  std::vector<std::int64_t> p(r, 0);
  std::vector<std::int64_t> cur(lo);
  while (true) {
    for (int j = 0; j < r; ++j) p[j] = cur[j];
    int expect = sc.source.contains(p, false) ? 1 : 0;
    if (sc.signed_count(p) != expect)
      throw InvalidSubdivision("inclusion_exclusion_complex: signed count failed validation");
    int j = 0;
    for (; j < r; ++j) {
      if (cur[j] < hi[j]) { ++cur[j]; break; }
      cur[j] = lo[j];
    }
    if (j == r) break;
  }
  return sc;
}

SignedComplex default_signed_complex(const Cone& c) {
  return inclusion_exclusion_complex(c, unimodular_subdivide(c));
}

}  // namespace conefun
