#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tdpair/eigen.hpp"

namespace tdpair {

/// A pair of operators on F^4 with chosen orderings of their eigenvalues and
/// the matching primitive idempotents.
struct TDSystem {
  Matrix A;
  Matrix Astar;
  std::vector<FieldElement> theta;
  std::vector<FieldElement> thetastar;
  std::vector<Matrix> E;
  std::vector<Matrix> Estar;
};

struct AxiomCheck {
  bool ok = false;
  std::string reason;  // empty when ok
};

struct VerificationReport {
  AxiomCheck diagonalizable_A;      // (i), with the listed spectrum
  AxiomCheck diagonalizable_Astar;  // (i)
  AxiomCheck orderings;             // (ii)-(iii)
  AxiomCheck tridiagonal_AstarE;    // (iv)
  AxiomCheck tridiagonal_AEstar;    // (v)
  AxiomCheck irreducible;           // (vi)
  bool overall = false;
  std::vector<std::size_t> shape;   // filled only when overall holds
  std::optional<Subspace> witness;  // common invariant subspace when (vi) fails
  std::optional<TDSystem> system;   // filled once (i)-(iii) hold
};

/// Checks the six axioms in order; once one fails the rest are reported as
/// "skipped". Axiom failures never throw. Throws LinalgError for matrices
/// that are not 4x4 over one field.
VerificationReport verify_td_system(const Matrix& A, const Matrix& Astar, const std::vector<FieldElement>& theta,
                                    const std::vector<FieldElement>& thetastar);

/// verify_td_system that returns the system or throws LinalgError.
TDSystem make_td_system(const Matrix& A, const Matrix& Astar, const std::vector<FieldElement>& theta,
                        const std::vector<FieldElement>& thetastar);

using Ordering = std::pair<std::vector<FieldElement>, std::vector<FieldElement>>;

/// Every pair of eigenvalue orderings satisfying (iv) and (v). Throws
/// LinalgError unless both matrices are diagonalizable with 3 eigenvalues.
std::vector<Ordering> find_td_orderings(const Matrix& A, const Matrix& Astar);

enum class SplitDecompositionId { ZstarD, ZstarZ, DstarZ, DstarD, ZD, ZstarDstar };

inline constexpr std::array<SplitDecompositionId, 6> kAllDecompositions{
    SplitDecompositionId::ZstarD, SplitDecompositionId::ZstarZ, SplitDecompositionId::DstarZ,
    SplitDecompositionId::DstarD, SplitDecompositionId::ZD,     SplitDecompositionId::ZstarDstar};

std::string to_string(SplitDecompositionId id);

/// Components U_0, U_1, U_2. Throws LinalgError when they do not form a
/// decomposition of V (the system was not verified).
std::vector<Subspace> split_decomposition(const TDSystem& tds, SplitDecompositionId id);

/// Component dimensions, computed for all six decompositions. Throws
/// std::logic_error if they disagree.
std::array<std::size_t, 3> shape(const TDSystem& tds);

/// Checks the action of A and A* on the components of every decomposition.
bool verify_split_actions(const TDSystem& tds);

}  // namespace tdpair
