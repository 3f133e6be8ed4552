#include "conefun/cone.hpp"
#include "conefun/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace conefun;

namespace {

IntVec iv(std::vector<long long> v) {
  IntVec out;
  for (auto x : v) out.push_back(x);
  return out;
}

Cone standard_cone(int r) {
  std::vector<IntVec> gens;
  for (int i = 0; i < r; ++i) {
    IntVec e(r, 0);
    e[i] = 1;
    gens.push_back(e);
  }
  return make_cone(gens);
}

Cone conifold_cone() {
  return make_cone({iv({0, 0, 1}), iv({1, 0, 1}), iv({0, 1, 1}), iv({1, 1, 1})});
}

// Brute-force facet oracle for 3d cones: every generator pair spanning a
// supporting hyperplane with all generators on one side.
std::set<std::vector<std::int64_t>> facet_oracle_3d(const std::vector<IntVec>& gens) {
  std::set<std::vector<std::int64_t>> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      IntVec n = cross_product({gens[i], gens[j]});
      if (is_zero(n)) continue;
      n = primitive(n);
      int pos = 0, neg = 0;
      for (const auto& g : gens) {
        Int d = dot(n, g);
        if (d > 0) ++pos;
        if (d < 0) ++neg;
      }
      if (pos && neg) continue;
      if (!pos && !neg) continue;
      if (neg) n = negate(n);
      out.insert(to_i64(n));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("standard 2d cone is self-dual") {
  Cone c = standard_cone(2);
  CHECK(c.generators().size() == 2);
  CHECK(c.normals().size() == 2);
  CHECK(c.generators() == c.normals());
}

TEST_CASE("conifold cone facets match the brute-force oracle") {
  Cone c = conifold_cone();
  CHECK(c.dim() == 3);
  CHECK(c.generators().size() == 4);
  auto oracle = facet_oracle_3d(c.generators());
  std::set<std::vector<std::int64_t>> got;
  for (const auto& v : c.normals()) got.insert(to_i64(v));
  CHECK(got == oracle);
  CHECK(got.size() == 4);
  CHECK(got.count({1, 0, 0}) == 1);
  CHECK(got.count({0, 1, 0}) == 1);
  CHECK(got.count({-1, 0, 1}) == 1);
  CHECK(got.count({0, -1, 1}) == 1);
}

TEST_CASE("a cone containing a line is rejected") {
  CHECK_THROWS_AS(make_cone({iv({1, 0}), iv({-1, 0})}), NotStronglyConvex);
  CHECK_THROWS_AS(make_cone({iv({1, 0}), iv({-1, 0}), iv({0, 1})}), NotStronglyConvex);
}

TEST_CASE("lower-dimensional input is rejected") {
  CHECK_THROWS_AS(make_cone({iv({1, 0, 0}), iv({0, 1, 0})}), NotFullDimensional);
}

TEST_CASE("redundant generators are dropped and inputs primitivized") {
  Cone c = make_cone({iv({2, 0}), iv({0, 3}), iv({1, 1})});
  CHECK(c.generators() == std::vector<IntVec>{iv({0, 1}), iv({1, 0})});
}

TEST_CASE("dual cone") {
  Cone c = conifold_cone();
  Cone d = dual_cone(c);
  // definition-level oracle: pairing nonnegative on sampled rays of each
  for (const auto& u : d.generators())
    for (const auto& v : c.generators()) CHECK(dot(u, v) >= 0);
  // the dual's generators are the normals of C, its normals the generators
  CHECK(d.generators() == c.normals());
  CHECK(d.normals() == c.generators());

  SUBCASE("duality involution on the corpus") {
    for (const Cone& k : {standard_cone(2), standard_cone(3), conifold_cone()}) {
      Cone dd = dual_cone(dual_cone(k));
      CHECK(dd.generators() == k.generators());
    }
  }
}

TEST_CASE("faces enumeration") {
  SUBCASE("standard r=3, codim 1") {
    auto fs = faces(standard_cone(3), 1);
    CHECK(fs.size() == 3);
    for (const auto& f : fs) CHECK(f.incident_normals.size() == 1);
  }
  SUBCASE("conifold codim 2: four rays with two incident normals each") {
    Cone c = conifold_cone();
    auto fs = faces(c, 2);
    CHECK(fs.size() == 4);
    for (const auto& f : fs) {
      CHECK(f.generators.size() == 1);
      // oracle: count normals vanishing on the ray directly
      int vanish = 0;
      for (const auto& v : c.normals())
        if (dot(v, f.generators[0]) == 0) ++vanish;
      CHECK(vanish == 2);
      CHECK(static_cast<int>(f.incident_normals.size()) == vanish);
    }
  }
  SUBCASE("standard r=2, codim 1") {
    auto fs = faces(standard_cone(2), 1);
    CHECK(fs.size() == 2);
  }
  SUBCASE("every face generator lies exactly on its incident facets") {
    Cone c = conifold_cone();
    for (int codim = 1; codim <= 2; ++codim) {
      for (const auto& f : faces(c, codim)) {
        for (const auto& g : f.generators) {
          for (int ni : f.incident_normals) CHECK(dot(c.normals()[ni], g) == 0);
        }
      }
    }
  }
}

TEST_CASE("goodness") {
  SUBCASE("standard cones r=2..6") {
    for (int r = 2; r <= 6; ++r) {
      auto res = is_good(standard_cone(r));
      CHECK(res.good);
    }
  }
  SUBCASE("conifold is good; oracle gcd of 2x2 minors at the (1,1,1) ray") {
    Cone c = conifold_cone();
    auto res = is_good(c);
    CHECK(res.good);
    // the ray (1,1,1) has incident normals (-1,0,1) and (0,-1,1)
    IntMat m = {iv({-1, 0, 1}), iv({0, -1, 1})};
    Int g = 0;
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        g = gcd(g, m[0][a] * m[1][b] - m[0][b] * m[1][a]);
    CHECK(boost::multiprecision::abs(g) == 1);
  }
  SUBCASE("2d cone {(1,0),(1,2)} is not good; determinant oracle") {
    Cone c = make_cone({iv({1, 0}), iv({1, 2})});
    // normals are (0,1) and (2,-1)
    std::set<std::vector<std::int64_t>> ns;
    for (const auto& v : c.normals()) ns.insert(to_i64(v));
    CHECK(ns.count({0, 1}) == 1);
    CHECK(ns.count({2, -1}) == 1);
    IntMat nm(c.normals().begin(), c.normals().end());
    CHECK(boost::multiprecision::abs(det(nm)) == 2);
    auto res = is_good(c);
    CHECK_FALSE(res.good);
    CHECK(res.violating_face.find("apex") != std::string::npos);
  }
  SUBCASE("certificates complete the incident normals into SL_r(Z)") {
    Cone c = conifold_cone();
    auto res = is_good(c);
    REQUIRE(res.good);
    for (const auto& cert : res.certificates) {
      CHECK(det(cert.completion) == 1);
    }
  }
  SUBCASE("a simplicial cone is good iff its generator matrix is unimodular") {
    auto simplicial_good = [](std::vector<IntVec> gens) {
      Cone c = make_cone(gens);
      return is_good(c).good;
    };
    CHECK(simplicial_good({iv({1, 0}), iv({0, 1})}));
    CHECK(simplicial_good({iv({2, 1}), iv({1, 1})}));  // det 1
    CHECK_FALSE(simplicial_good({iv({1, 0}), iv({1, 2})}));
    CHECK(simplicial_good({iv({0, 0, 1}), iv({1, 0, 1}), iv({1, 1, 1})}));
    CHECK_FALSE(simplicial_good({iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 1, 2})}));
    for (auto& gens : {std::vector<IntVec>{iv({3, 1}), iv({2, 1})},
                       std::vector<IntVec>{iv({5, 2}), iv({2, 1})}}) {
      Int m = multiplicity(gens);
      CHECK(simplicial_good(gens) == (m == 1));
    }
  }
}

TEST_CASE("multiplicity") {
  CHECK(multiplicity({iv({1, 0}), iv({0, 1})}) == 1);
  CHECK(multiplicity({iv({1, 0}), iv({1, 2})}) == 2);
  CHECK(multiplicity({iv({0, 0, 1}), iv({1, 0, 1}), iv({1, 1, 1})}) == 1);
  CHECK_THROWS_AS(multiplicity({iv({1, 0}), iv({2, 0})}), Degenerate);
}

TEST_CASE("contains") {
  Cone c2 = standard_cone(2);
  CHECK(contains(c2, iv({0, 0}), false));
  CHECK_FALSE(contains(c2, iv({0, 0}), true));
  Cone c = conifold_cone();
  CHECK(contains(c, iv({1, 1, 2}), true));

  SUBCASE("boundary = closed minus interior on a lattice box") {
    for (long long x = -2; x <= 6; ++x) {
      for (long long y = -2; y <= 6; ++y) {
        for (long long z = -2; z <= 6; ++z) {
          IntVec p = iv({x, y, z});
          bool closed = contains(c, p, false);
          bool open = contains(c, p, true);
          bool tight = false;
          for (const auto& v : c.normals())
            if (dot(v, p) == 0) tight = true;
          CHECK((closed && !open) == (closed && tight));
        }
      }
    }
  }
}
