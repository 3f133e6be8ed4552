#include "conefun/cone.hpp"

#include "conefun/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace conefun {

namespace {

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

// Enumerates the facets of the cone spanned by `gens` (full-dimensional,
// dim r): subsets of generators spanning a hyperplane whose primitive normal
// has every generator on one side.  Subset rank tests; no convex-hull
// library is needed at the sizes this library targets.
std::vector<IntVec> enumerate_facets(const std::vector<IntVec>& gens, int r) {
  std::set<std::vector<std::string>> seen;
  std::vector<IntVec> normals;
  const int n = static_cast<int>(gens.size());
  // Candidate hyperplanes: spans of (r-1)-subsets of generators.  For r = 1
  // the only facet is the apex with normal equal to the generator direction.
  if (r == 1) {
    normals.push_back(primitive(gens[0]));
    return normals;
  }
  if (n < r - 1) return normals;
  std::vector<int> subset;
  std::vector<bool> select(n, false);
  std::fill(select.begin(), select.begin() + (r - 1), true);
  do {
    subset.clear();
    for (int i = 0; i < n; ++i)
      if (select[i]) subset.push_back(i);
    std::vector<IntVec> vs;
    for (int i : subset) vs.push_back(gens[i]);
    IntMat rows(vs.begin(), vs.end());
    if (rank(rows) != r - 1) continue;
    IntVec normal = cross_product(vs);
    if (is_zero(normal)) continue;
    normal = primitive(normal);
    // orient inward and verify supporting
    int pos = 0, neg = 0;
    for (const auto& g : gens) {
      Int d = dot(normal, g);
      if (d > 0) ++pos;
      if (d < 0) ++neg;
    }
    if (pos > 0 && neg > 0) continue;  // not supporting
    if (neg > 0) normal = negate(normal);
    if (pos == 0 && neg == 0) continue;  // all generators on the hyperplane
    auto key_of = [&](const IntVec& v) {
      std::vector<std::string> key;
      for (const auto& x : v) key.push_back(x.str());
      return key;
    };
    if (seen.insert(key_of(normal)).second) normals.push_back(normal);
  } while (std::prev_permutation(select.begin(), select.end()));
  return normals;
}

std::vector<std::string> canon_key(const IntVec& v) {
  std::vector<std::string> key;
  for (const auto& x : v) key.push_back(x.str());
  return key;
}

}  // namespace

bool Cone::contains(const IntVec& point, bool strict) const {
  for (const auto& v : normals_) {
    Int d = dot(v, point);
    if (strict ? d <= 0 : d < 0) return false;
  }
  return true;
}

bool Cone::contains(const std::vector<std::int64_t>& point, bool strict) const {
  for (const auto& v : normals_i64_) {
    std::int64_t d = 0;
    for (std::size_t i = 0; i < v.size(); ++i) d += v[i] * point[i];
    if (strict ? d <= 0 : d < 0) return false;
  }
  return true;
}

Cone make_cone(const std::vector<IntVec>& generators) {
  if (generators.empty()) throw Error("make_cone: no generators");
  const int r = static_cast<int>(generators[0].size());
  for (const auto& g : generators)
    if (static_cast<int>(g.size()) != r) throw Error("make_cone: mixed dimensions");

  // primitivize and dedupe
  std::vector<IntVec> gens;
  std::set<std::vector<std::string>> seen;
  for (const auto& g : generators) {
    if (is_zero(g)) continue;
    IntVec p = primitive(g);
    if (seen.insert(canon_key(p)).second) gens.push_back(p);
  }
  if (gens.empty()) throw Error("make_cone: all generators are zero");

  IntMat as_rows(gens.begin(), gens.end());
  if (rank(as_rows) < r) {
    // distinguish "contains a line inside its span" from merely being
    // lower-dimensional: restrict to span coordinates and test for a
    // separating functional there
    const int s = rank(as_rows);
    IntMat basis = saturation_basis(as_rows);
    IntMat gram(s, IntVec(s, 0));
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) gram[i][j] = dot(basis[i], basis[j]);
    std::vector<IntVec> coords;
    for (const auto& g : gens) {
      IntVec rhs(s);
      for (int i = 0; i < s; ++i) rhs[i] = dot(basis[i], g);
      std::vector<Rat> sol = solve_rational(gram, rhs);
      IntVec cg(s);
      for (int i = 0; i < s; ++i) cg[i] = boost::multiprecision::numerator(sol[i]);
      coords.push_back(std::move(cg));
    }
    std::vector<IntVec> span_normals = enumerate_facets(coords, s);
    IntMat nrows(span_normals.begin(), span_normals.end());
    bool line = span_normals.empty() || rank(nrows) < s;
    if (!line) {
      for (const auto& cg : coords)
        for (const auto& v : span_normals)
          if (dot(v, cg) < 0) line = true;
    }
    if (line) throw NotStronglyConvex("make_cone: C ∩ (−C) ≠ {0}");
    throw NotFullDimensional("make_cone: generators span a proper subspace");
  }

  std::vector<IntVec> normals = enumerate_facets(gens, r);
  if (normals.empty())
    throw NotStronglyConvex("make_cone: cone has no supporting facets (contains a line)");

  // strong convexity: normals must span rank r, otherwise C contains the
  // lineality space orthogonal to them
  IntMat nrows(normals.begin(), normals.end());
  if (rank(nrows) < r)
    throw NotStronglyConvex("make_cone: C ∩ (−C) ≠ {0}");

  // drop redundant generators: keep exactly the rays that are 1-dimensional
  // faces (lie on r-1 independent facets) — for a strongly convex cone these
  // are the extreme rays.
  std::vector<IntVec> extreme;
  for (const auto& g : gens) {
    IntMat vanish;
    for (const auto& v : normals)
      if (dot(v, g) == 0) vanish.push_back(v);
    if (!vanish.empty() && rank(vanish) == r - 1) extreme.push_back(g);
  }
  if (extreme.empty())
    throw Error("make_cone: no extreme rays found");

  // all generators must be nonneg against every normal; a violation means a
  // generator escaped the facet description, i.e. the input contained a line
  for (const auto& g : gens)
    for (const auto& v : normals)
      if (dot(v, g) < 0)
        throw NotStronglyConvex("make_cone: generator " + vec_str(g) +
                                " violates facet " + vec_str(v));

  // deterministic ordering
  auto lex = [](const IntVec& a, const IntVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  };
  std::sort(extreme.begin(), extreme.end(), lex);
  std::sort(normals.begin(), normals.end(), lex);

  Cone c;
  c.dim_ = r;
  c.generators_ = std::move(extreme);
  c.normals_ = std::move(normals);
  for (const auto& g : c.generators_) c.gens_i64_.push_back(to_i64(g));
  for (const auto& v : c.normals_) c.normals_i64_.push_back(to_i64(v));
  return c;
}

Cone dual_cone(const Cone& c) {
  return make_cone(c.normals());
}

std::vector<Face> all_proper_faces(const Cone& c) {
  const int r = c.dim();
  const auto& gens = c.generators();
  const auto& normals = c.normals();

  // Every proper face is an intersection of facets.  Close the facet set
  // under pairwise intersection of generator sets.
  std::map<std::vector<int>, std::vector<int>> by_genset;  // gen idx -> normal idx
  auto genset_of_normals = [&](const std::vector<int>& ns) {
    std::vector<int> gs;
    for (int gi = 0; gi < static_cast<int>(gens.size()); ++gi) {
      bool on = true;
      for (int ni : ns)
        if (dot(normals[ni], gens[gi]) != 0) { on = false; break; }
      if (on) gs.push_back(gi);
    }
    return gs;
  };
  auto normals_of_genset = [&](const std::vector<int>& gs) {
    std::vector<int> ns;
    for (int ni = 0; ni < static_cast<int>(normals.size()); ++ni) {
      bool vanish = true;
      for (int gi : gs)
        if (dot(normals[ni], gens[gi]) != 0) { vanish = false; break; }
      if (vanish) ns.push_back(ni);
    }
    return ns;
  };

  std::set<std::vector<int>> gensets;
  std::vector<std::vector<int>> frontier;
  for (int ni = 0; ni < static_cast<int>(normals.size()); ++ni) {
    std::vector<int> gs = genset_of_normals({ni});
    if (gs.empty()) continue;
    if (gensets.insert(gs).second) frontier.push_back(gs);
  }
  // close under intersection
  std::vector<std::vector<int>> all(frontier);
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& a : frontier) {
      for (const auto& b : all) {
        std::vector<int> inter;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(inter));
        if (inter.empty()) continue;
        if (gensets.insert(inter).second) next.push_back(inter);
      }
    }
    for (const auto& s : next) all.push_back(s);
    frontier = std::move(next);
  }

  std::vector<Face> out;
  for (const auto& gs : gensets) {
    IntMat rows;
    for (int gi : gs) rows.push_back(gens[gi]);
    int d = rank(rows);
    if (d == 0 || d == r) continue;
    Face f;
    f.codim = r - d;
    f.incident_normals = normals_of_genset(gs);
    for (int gi : gs) f.generators.push_back(gens[gi]);
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    if (a.codim != b.codim) return a.codim < b.codim;
    return a.incident_normals < b.incident_normals;
  });
  return out;
}

std::vector<Face> faces(const Cone& c, int codim) {
  if (codim < 1 || codim > c.dim() - 1)
    throw Error("faces: codim out of range");
  std::vector<Face> out;
  for (auto& f : all_proper_faces(c))
    if (f.codim == codim) out.push_back(std::move(f));
  return out;
}

GoodnessResult is_good(const Cone& c) {
  const int r = c.dim();
  GoodnessResult res;
  res.good = true;

  auto check_normal_set = [&](const std::vector<int>& normal_idx, const Face& face,
                              const std::string& label) {
    IntMat rows;
    for (int ni : normal_idx) rows.push_back(c.normals()[ni]);
    int rk = rank(rows);
    if (!rows_saturated(rows)) {
      res.good = false;
      res.violating_face = label;
      return;
    }
    // certificate: a Z-basis of the span completed to SL_r(Z)
    IntMat basis = (static_cast<int>(rows.size()) == rk) ? rows : saturation_basis(rows);
    auto comp = complete_to_unimodular(basis);
    if (!comp) {
      res.good = false;
      res.violating_face = label;
      return;
    }
    GoodnessResult::Certificate cert;
    cert.face = face;
    cert.completion = *comp;
    res.certificates.push_back(std::move(cert));
  };

  for (const Face& f : all_proper_faces(c)) {
    std::ostringstream label;
    label << "codim-" << f.codim << " face with normals {";
    for (std::size_t i = 0; i < f.incident_normals.size(); ++i) {
      if (i) label << ", ";
      label << vec_str(c.normals()[f.incident_normals[i]]);
    }
    label << "}";
    check_normal_set(f.incident_normals, f, label.str());
    if (!res.good) return res;
  }

  // The apex carries all normals; the span condition there is meaningful
  // only for simplicial cones, where exactly r facets meet.
  if (static_cast<int>(c.normals().size()) == r) {
    std::vector<int> all_idx(r);
    for (int i = 0; i < r; ++i) all_idx[i] = i;
    Face apex;
    apex.codim = r;
    apex.incident_normals = all_idx;
    check_normal_set(all_idx, apex, "apex (all " + std::to_string(r) + " normals)");
  }
  return res;
}

Int multiplicity(const std::vector<IntVec>& generators) {
  IntMat rows(generators.begin(), generators.end());
  Int d = det(rows);
  if (d == 0) throw Degenerate("multiplicity: generators are linearly dependent");
  return boost::multiprecision::abs(d);
}

bool contains(const Cone& c, const IntVec& point, bool strict) {
  return c.contains(point, strict);
}

}  // namespace conefun
