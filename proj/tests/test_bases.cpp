#include "doctest.h"
#include "support.hpp"

using namespace tdpair;
using namespace tdpair::testing;

namespace {

const FieldDescriptor Q = FieldDescriptor::rationals();

FieldElement q(const char* s) { return parse_element(s, Q); }

ParameterArray p0() { return {{q("1"), q("0"), q("-1")}, {q("1"), q("0"), q("-1")}, q("2"), q("1")}; }

Matrix vec(std::initializer_list<long> xs) {
  std::vector<FieldElement> v;
  for (long x : xs) v.emplace_back(Q, x);
  return Matrix::column_vector(Q, v);
}

}  // namespace

TEST_CASE("eta vectors at P0") {
  const TDSystem tds = construct(p0());
  const EtaVectors eta = eta_vectors(tds);
  CHECK(eta.eta0star == vec({1, 0, 0, 0}));
  CHECK(eta.eta2 == vec({0, 0, 0, 1}));
  CHECK(eta.eta2 == shift(tds.A, q("0")) * shift(tds.A, q("1")) * vec({1, 0, 0, 0}));
  CHECK(eta.eta0 == vec({2, 2, 0, 1}));
  CHECK(eta.eta2star == vec({2, 0, -2, 2}));
  CHECK(tds.Estar[2] * eta.eta2star == eta.eta2star);
  CHECK(tds.E[0] * eta.eta0 == eta.eta0);
  CHECK_THROWS_AS(eta_vectors(tds, vec({0, 0, 0, 0})), LinalgError);
  CHECK_THROWS_AS(eta_vectors(tds, vec({0, 1, 0, 0})), LinalgError);
}

TEST_CASE("eta vectors scale with the seed and transitions do not") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 5; ++trial) {
    const ParameterArray pa = random_admissible(Q, rng);
    const TDSystem tds = construct(pa);
    const FieldElement c = random_nonzero(Q, rng);
    const EtaVectors base = eta_vectors(tds);
    const EtaVectors scaled = eta_vectors(tds, c * canonical_seed(tds));
    CHECK(scaled.eta0 == c * base.eta0);
    CHECK(scaled.eta2 == c * base.eta2);
    CHECK(scaled.eta2star == c * base.eta2star);
    for (BasisId from : kAllBases)
      for (BasisId to : kAllBases)
        CHECK(transition_numeric(tds, from, to, scaled) == transition_numeric(tds, from, to, base));
  }
}

TEST_CASE("basis matrices at P0") {
  const TDSystem tds = construct(p0());
  const EtaVectors eta = eta_vectors(tds);
  const Matrix zd = basis_matrix(tds, BasisId::SplitZD, eta);
  CHECK(zd.column(0) == vec({1, 0, 0, 0}));
  CHECK_FALSE(determinant(zd).is_zero());
  const auto& t = p0().theta;
  const Matrix ea = basis_matrix(tds, BasisId::EigA, eta);
  CHECK(ea.column(1) == ((t[1] - t[0]) * (t[1] - t[2])).inverse() *
                            (eta.eta2 + (t[1] - t[2]) * (shift(tds.A, t[0]) * eta.eta0star)));
}

TEST_CASE("split basis columns span the decomposition components") {
  std::mt19937_64 rng(13);
  const std::pair<BasisId, SplitDecompositionId> pairs[] = {
      {BasisId::SplitZD, SplitDecompositionId::ZstarD},
      {BasisId::SplitZZ, SplitDecompositionId::ZstarZ},
      {BasisId::SplitDZ, SplitDecompositionId::DstarZ},
      {BasisId::SplitDD, SplitDecompositionId::DstarD},
      {BasisId::EigA, SplitDecompositionId::ZD},
      {BasisId::EigAstar, SplitDecompositionId::ZstarDstar},
  };
  for (const auto& fd : {Q, FieldDescriptor::prime(101)}) {
    for (int trial = 0; trial < 5; ++trial) {
      const TDSystem tds = construct(random_admissible(fd, rng));
      const EtaVectors eta = eta_vectors(tds);
      for (const auto& [basis, decomposition] : pairs) {
        const Matrix b = basis_matrix(tds, basis, eta);
        const auto u = split_decomposition(tds, decomposition);
        CHECK(u[0] == Subspace::span(b.column(0)));
        CHECK(u[1] == Subspace::span(hcat(b.column(1), b.column(2))));
        CHECK(u[2] == Subspace::span(b.column(3)));
      }
    }
  }
}

TEST_CASE("closure identity on the first split basis") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const ParameterArray pa = random_admissible(Q, rng);
    const TDSystem tds = construct(pa);
    const EtaVectors eta = eta_vectors(tds);
    const Matrix v1 = shift(tds.A, pa.theta[0]) * eta.eta0star;
    CHECK(tds.Astar * v1 == derived_params(pa).varphi1 * eta.eta0star + pa.thetastar[1] * v1);
    for (BasisId id : kAllBases) {
      const Matrix b = basis_matrix(tds, id, eta);
      const Subspace all = Subspace::span(b);
      CHECK(all.dim() == 4);
    }
  }
}

TEST_CASE("representation matrices at P0") {
  const TDSystem tds = construct(p0());
  const EtaVectors eta = eta_vectors(tds);
  CHECK(represent(tds, Operator::A, BasisId::SplitZD, eta) ==
        Matrix::from_rows(Q, {{q("1"), q("0"), q("0"), q("0")},
                              {q("1"), q("0"), q("0"), q("0")},
                              {q("0"), q("0"), q("0"), q("0")},
                              {q("0"), q("1"), q("-5/4"), q("-1")}}));
  CHECK(represent(tds, Operator::A, BasisId::EigA, eta) == Matrix::diagonal(Q, {q("1"), q("0"), q("0"), q("-1")}));
  CHECK(represent(tds, Operator::Astar, BasisId::EigAstar, eta) ==
        Matrix::diagonal(Q, {q("1"), q("0"), q("0"), q("-1")}));
}

TEST_CASE("transition formulas at P0") {
  const ParameterArray pa = p0();
  CHECK(transition_formula(pa, BasisId::SplitZD, BasisId::SplitZZ)(0, 1) == q("2"));
  CHECK(transition_formula(pa, BasisId::SplitZZ, BasisId::SplitDZ)(0, 0) == q("1"));
  CHECK(transition_formula(pa, BasisId::EigA, BasisId::EigA) == Matrix::identity(Q, 4));
  const TDSystem tds = construct(pa);
  const EtaVectors eta = eta_vectors(tds);
  CHECK(transition_numeric(tds, BasisId::EigA, BasisId::EigAstar, eta) ==
        transition_formula(pa, BasisId::EigA, BasisId::EigAstar));
  CHECK(transition_numeric(tds, BasisId::SplitZD, BasisId::SplitZZ, eta) *
            transition_numeric(tds, BasisId::SplitZZ, BasisId::SplitZD, eta) ==
        Matrix::identity(Q, 4));
  CHECK(invert(transition_formula(pa, BasisId::SplitZD, BasisId::SplitZZ)) ==
        transition_formula(pa, BasisId::SplitZZ, BasisId::SplitZD));
  ParameterArray bad = pa;
  bad.phi = q("0");
  CHECK_THROWS_AS(transition_formula(bad, BasisId::EigA, BasisId::SplitZD), ParameterError);
  CHECK_THROWS_AS(represent_formula(bad, Operator::A, BasisId::SplitZD), ParameterError);
}

TEST_CASE("closed forms match numeric matrices on random arrays") {
  std::mt19937_64 rng(15);
  for (const auto& fd : {Q, FieldDescriptor::prime(101), FieldDescriptor::prime(13)}) {
    for (int trial = 0; trial < 8; ++trial) {
      const ParameterArray pa = random_admissible(fd, rng);
      const TDSystem tds = construct(pa);
      const EtaVectors eta = eta_vectors(tds);
      for (BasisId from : kAllBases) {
        for (Operator op : {Operator::A, Operator::Astar})
          CHECK(represent(tds, op, from, eta) == represent_formula(pa, op, from));
        for (BasisId to : kAllBases) {
          INFO(to_string(from) << " -> " << to_string(to));
          CHECK(transition_numeric(tds, from, to, eta) == transition_formula(pa, from, to));
        }
      }
    }
  }
}

TEST_CASE("representations are conjugate through transitions") {
  std::mt19937_64 rng(16);
  const ParameterArray pa = random_admissible(Q, rng);
  for (BasisId id : kAllBases) {
    const Matrix t = transition_formula(pa, BasisId::SplitZD, id);
    for (Operator op : {Operator::A, Operator::Astar})
      CHECK(represent_formula(pa, op, id) == invert(t) * represent_formula(pa, op, BasisId::SplitZD) * t);
  }
}

TEST_CASE("basis names roundtrip") {
  for (BasisId id : kAllBases) CHECK(basis_from_string(to_string(id)) == id);
  CHECK_FALSE(basis_from_string("Split"));
}
