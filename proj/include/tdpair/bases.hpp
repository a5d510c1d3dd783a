#pragma once

#include <array>
#include <optional>
#include <string>

#include "tdpair/shape121.hpp"

namespace tdpair {

/// eta*_0 in E*_0 V and its images eta_0, eta_2 (in E_0 V, E_2 V) and eta*_2 (in E*_2 V).
struct EtaVectors {
  Matrix eta0star;
  Matrix eta0;
  Matrix eta2;
  Matrix eta2star;
};

enum class BasisId { SplitZD, SplitZZ, SplitDZ, SplitDD, EigA, EigAstar };

inline constexpr std::array<BasisId, 6> kAllBases{BasisId::SplitZD, BasisId::SplitZZ, BasisId::SplitDZ,
                                                  BasisId::SplitDD, BasisId::EigA,    BasisId::EigAstar};

std::string to_string(BasisId id);
std::optional<BasisId> basis_from_string(const std::string& name);

enum class Operator { A, Astar };

std::string to_string(Operator op);

/// E*_0 applied to the first standard vector with a nonzero image, scaled so
/// its first nonzero coordinate is 1.
Matrix canonical_seed(const TDSystem& tds);

/// Throws LinalgError if the seed is zero, lies outside E*_0 V, or one of
/// the resulting vectors vanishes.
EtaVectors eta_vectors(const TDSystem& tds, const Matrix& seed);
EtaVectors eta_vectors(const TDSystem& tds);

/// Basis vectors as columns. Throws LinalgError when they are dependent.
Matrix basis_matrix(const TDSystem& tds, BasisId id, const EtaVectors& eta);

/// The matrix B with X v_j = sum_i B_ij v_i on the chosen basis.
Matrix represent(const TDSystem& tds, Operator which, BasisId id, const EtaVectors& eta);

/// T with (to-basis column j) = sum_i T_ij (from-basis column i).
Matrix transition_numeric(const TDSystem& tds, BasisId from, BasisId to, const EtaVectors& eta);

/// Closed forms in the parameter array. Both throw ParameterError for
/// inadmissible arrays.
Matrix transition_formula(const ParameterArray& pa, BasisId from, BasisId to);
Matrix represent_formula(const ParameterArray& pa, Operator which, BasisId id);

}  // namespace tdpair
