#include "doctest.h"
#include "support.hpp"
#include "tdpair/irreducibility.hpp"

using namespace tdpair;
using namespace tdpair::testing;

namespace {

const FieldDescriptor Q = FieldDescriptor::rationals();

FieldElement q(const char* s) { return parse_element(s, Q); }

ParameterArray p0() { return {{q("1"), q("0"), q("-1")}, {q("1"), q("0"), q("-1")}, q("2"), q("1")}; }

std::vector<FieldElement> rev(std::vector<FieldElement> xs) {
  std::reverse(xs.begin(), xs.end());
  return xs;
}

}  // namespace

TEST_CASE("canonical pair at P0 is a TD system of shape (1,2,1)") {
  const auto [a, as] = canonical_matrices(p0());
  const auto r = verify_td_system(a, as, p0().theta, p0().thetastar);
  CHECK(r.diagonalizable_A.ok);
  CHECK(r.diagonalizable_Astar.ok);
  CHECK(r.orderings.ok);
  CHECK(r.tridiagonal_AstarE.ok);
  CHECK(r.tridiagonal_AEstar.ok);
  CHECK(r.irreducible.ok);
  CHECK(r.overall);
  CHECK(r.shape == std::vector<std::size_t>{1, 2, 1});
  CHECK_FALSE(r.witness);

  const auto d = eigen_data(a);
  CHECK(d.eigenvalues == std::vector<FieldElement>{q("-1"), q("0"), q("1")});
  CHECK(d.multiplicities == std::vector<std::size_t>{1, 2, 1});
}

TEST_CASE("four distinct eigenvalues fail axiom (i)") {
  const auto m = Matrix::from_ints(Q, {{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 3}});
  const auto r = verify_td_system(m, m, {q("0"), q("1"), q("2")}, {q("0"), q("1"), q("2")});
  CHECK_FALSE(r.diagonalizable_A.ok);
  CHECK_FALSE(r.overall);
  CHECK(r.orderings.reason == "skipped");
  CHECK(r.irreducible.reason == "skipped");
  CHECK(r.shape.empty());
}

TEST_CASE("eigenvalue list that does not match the spectrum fails axiom (i)") {
  const auto [a, as] = canonical_matrices(p0());
  const auto r = verify_td_system(a, as, {q("1"), q("0"), q("5")}, p0().thetastar);
  CHECK_FALSE(r.diagonalizable_A.ok);
  CHECK(r.diagonalizable_Astar.ok);
  const auto short_list = verify_td_system(a, as, {q("1"), q("0")}, p0().thetastar);
  CHECK_FALSE(short_list.diagonalizable_A.ok);
}

TEST_CASE("wrong ordering fails the tridiagonal axioms") {
  const auto [a, as] = canonical_matrices(p0());
  const auto r = verify_td_system(a, as, {q("1"), q("-1"), q("0")}, p0().thetastar);
  CHECK(r.orderings.ok);
  CHECK_FALSE(r.tridiagonal_AstarE.ok);
  CHECK(r.irreducible.reason == "skipped");
}

TEST_CASE("malformed input throws") {
  const auto [a, as] = canonical_matrices(p0());
  CHECK_THROWS_AS(verify_td_system(Matrix(Q, 3, 3), as, p0().theta, p0().thetastar), LinalgError);
  const auto gf5 = FieldDescriptor::prime(5);
  CHECK_THROWS_AS(verify_td_system(a, Matrix::identity(gf5, 4), p0().theta, p0().thetastar), LinalgError);
}

TEST_CASE("boundary array fails exactly axiom (vi) with a line witness") {
  std::mt19937_64 rng(21);
  for (const auto& fd : {Q, FieldDescriptor::prime(101), FieldDescriptor::prime(7)}) {
    for (int trial = 0; trial < 10; ++trial) {
      const ParameterArray pa = random_boundary(fd, rng);
      CHECK(admissible(pa).failed == std::vector<std::string>{"(iii)"});
      const auto [a, as] = canonical_matrices(pa);
      const auto r = verify_td_system(a, as, pa.theta, pa.thetastar);
      CHECK(r.diagonalizable_A.ok);
      CHECK(r.diagonalizable_Astar.ok);
      CHECK(r.orderings.ok);
      CHECK(r.tridiagonal_AstarE.ok);
      CHECK(r.tridiagonal_AEstar.ok);
      CHECK_FALSE(r.irreducible.ok);
      REQUIRE(r.witness);
      CHECK(r.witness->dim() == 1);
      const Matrix w = Matrix::column_vector(fd, {FieldElement::zero(fd), derived_params(pa).varphi2,
                                                  -FieldElement::one(fd), FieldElement::zero(fd)});
      CHECK(r.witness->contains(w));
    }
  }
}

TEST_CASE("find_td_orderings at P0") {
  const auto [a, as] = canonical_matrices(p0());
  const auto found = find_td_orderings(a, as);
  const auto t = p0().theta, s = p0().thetastar;
  REQUIRE(found.size() == 4);
  const std::vector<Ordering> expected{{t, s}, {t, rev(s)}, {rev(t), s}, {rev(t), rev(s)}};
  for (const auto& o : expected) CHECK(std::find(found.begin(), found.end(), o) != found.end());

  auto swapped = find_td_orderings(as, a);
  REQUIRE(swapped.size() == found.size());
  for (const auto& [x, y] : swapped) CHECK(std::find(found.begin(), found.end(), Ordering{y, x}) != found.end());
}

TEST_CASE("find_td_orderings with a dense partner is empty") {
  std::mt19937_64 rng(4);
  const auto a = Matrix::diagonal(Q, {q("0"), q("1"), q("1"), q("2")});
  const Matrix s = Matrix::from_ints(Q, {{1, 1, 1, 1}, {1, 2, 3, 4}, {1, 3, 6, 10}, {1, 4, 10, 21}});
  const Matrix as = s * a * invert(s);
  CHECK(find_td_orderings(a, as).empty());
  CHECK_THROWS_AS(find_td_orderings(Matrix::identity(Q, 4), Matrix::identity(Q, 4)), LinalgError);
}

TEST_CASE("orderings are closed under the reversals") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const auto pa = random_admissible(FieldDescriptor::prime(101), rng);
    const auto [a, as] = canonical_matrices(pa);
    const auto found = find_td_orderings(a, as);
    CHECK_FALSE(found.empty());
    for (const auto& [x, y] : found) {
      CHECK(std::find(found.begin(), found.end(), Ordering{rev(x), y}) != found.end());
      CHECK(std::find(found.begin(), found.end(), Ordering{x, rev(y)}) != found.end());
    }
  }
}

TEST_CASE("split decompositions at P0") {
  const TDSystem tds = construct(p0());
  const auto zd = split_decomposition(tds, SplitDecompositionId::ZD);
  const auto zsds = split_decomposition(tds, SplitDecompositionId::ZstarDstar);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(zd[i] == Subspace::span(tds.E[i]));
    CHECK(zsds[i] == Subspace::span(tds.Estar[i]));
  }
  const auto u = split_decomposition(tds, SplitDecompositionId::ZstarD);
  CHECK(u[0].dim() == 1);
  CHECK(u[1].dim() == 2);
  CHECK(u[2].dim() == 1);
  CHECK(u[0] == Subspace::span(tds.Estar[0]));
  CHECK(intersect(Subspace::span(tds.Estar[0]),
                  subspace_combine({Subspace::span(tds.E[0]), Subspace::span(tds.E[1]), Subspace::span(tds.E[2])},
                                   SubspaceOp::Sum)) == Subspace::span(tds.Estar[0]));
  CHECK(shape(tds) == std::array<std::size_t, 3>{1, 2, 1});
  for (auto id : kAllDecompositions) {
    const auto parts = split_decomposition(tds, id);
    CHECK(independent(parts));
    CHECK(parts[0].dim() == parts[2].dim());
  }
}

TEST_CASE("split actions hold and detect corruption") {
  TDSystem tds = construct(p0());
  CHECK(verify_split_actions(tds));
  tds.Astar(1, 3) = q("1");
  CHECK_FALSE(verify_split_actions(tds));
}

TEST_CASE("invariant subspace search agrees with brute force") {
  CHECK(subspace_count(2) == 15 + 35 + 15);
  CHECK(subspace_count(3) == 40 + 130 + 40);
  std::mt19937_64 rng(99);
  for (long p : {2L, 3L, 5L}) {
    const auto fd = FieldDescriptor::prime(static_cast<std::uint64_t>(p));
    for (int trial = 0; trial < (p == 5 ? 10 : 40); ++trial) {
      const auto [a, b] = random_pair(fd, rng);
      const auto search = find_common_invariant_subspace(a, b);
      const auto brute = brute_force_invariant_dim(a, b);
      CHECK(search.irreducible == !brute.has_value());
      if (brute) {
        REQUIRE(search.witness);
        CHECK(search.witness->dim() == *brute);
        CHECK(search.witness->is_invariant_under(a));
        CHECK(search.witness->is_invariant_under(b));
      }
    }
  }
}

TEST_CASE("invariant subspace search over the rationals") {
  const auto a = Matrix::diagonal(Q, {q("1"), q("2"), q("2"), q("3")});
  // On span(e1, e2) B has the eigenvectors e1 + e2 and e1 - e2.
  const auto b = Matrix::from_ints(Q, {{1, 0, 0, 1}, {1, 1, 2, 0}, {0, 2, 1, 1}, {1, 0, 0, 1}});
  const auto found = find_common_invariant_subspace(a, b);
  REQUIRE(found.witness);
  const auto plus = Subspace::span(Matrix::from_ints(Q, {{0}, {1}, {1}, {0}}));
  const auto minus = Subspace::span(Matrix::from_ints(Q, {{0}, {1}, {-1}, {0}}));
  CHECK((*found.witness == plus || *found.witness == minus));
}

TEST_CASE("irrational lines are not invariant subspaces over the rationals") {
  // B swaps e1, e2 up to the factor 2, so its lines there need sqrt(2).
  const std::initializer_list<std::initializer_list<long>> rows{
      {0, 0, 0, 1}, {0, 0, 2, 1}, {0, 1, 0, 0}, {1, 0, 0, 0}};
  const auto a = Matrix::diagonal(Q, {q("1"), q("2"), q("2"), q("3")});
  const auto found = find_common_invariant_subspace(a, Matrix::from_ints(Q, rows));
  REQUIRE(found.witness);
  CHECK(*found.witness == Subspace::span(Matrix::from_ints(Q, {{0, 0}, {1, 0}, {0, 1}, {0, 0}})));

  // Over GF(7), 2 = 3^2 and a line appears.
  const auto gf7 = FieldDescriptor::prime(7);
  const auto a7 = Matrix::from_ints(gf7, {{1, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 3}});
  const auto b7 = Matrix::from_ints(gf7, rows);
  const auto found7 = find_common_invariant_subspace(a7, b7);
  REQUIRE(found7.witness);
  CHECK(found7.witness->dim() == 1);
  CHECK(brute_force_invariant_dim(a7, b7) == std::optional<std::size_t>(1));
}
