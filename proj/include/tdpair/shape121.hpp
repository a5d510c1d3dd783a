#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tdpair/td_system.hpp"

namespace tdpair {

class ParameterError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (theta_0..2; theta*_0..2; varphi; phi). Any values may be stored;
/// admissibility is a separate predicate.
struct ParameterArray {
  std::vector<FieldElement> theta;
  std::vector<FieldElement> thetastar;
  FieldElement varphi;
  FieldElement phi;

  const FieldDescriptor& field() const { return varphi.field(); }
  friend bool operator==(const ParameterArray&, const ParameterArray&) = default;
};

/// Checks that all entries share one field and both sequences have length 3.
void validate(const ParameterArray& pa);

struct DerivedParams {
  FieldElement varphi1;
  FieldElement varphi2;
  FieldElement phi1;
  FieldElement phi2;

  friend bool operator==(const DerivedParams&, const DerivedParams&) = default;
};

/// Needs theta_0 != theta_2 and theta*_0 != theta*_2, else ParameterError.
DerivedParams derived_params(const ParameterArray& pa);

struct AdmissibilityReport {
  bool ok = false;
  std::vector<std::string> failed;  // subset of "(i)", "(ii)", "(iii)"
};

/// (i) distinct eigenvalues in each sequence, (ii) varphi, phi nonzero,
/// (iii) varphi != varphi1 varphi2. (iii) is not evaluated when its
/// denominators vanish; (i) has failed in that case.
AdmissibilityReport admissible(const ParameterArray& pa);

/// The lower triangular A and upper triangular A* built from the array,
/// without any admissibility check.
std::pair<Matrix, Matrix> canonical_matrices(const ParameterArray& pa);

/// The canonical system of an admissible array; ParameterError otherwise.
TDSystem construct(const ParameterArray& pa);

/// Reads varphi and phi off the quartic products acting on E*_0 V and
/// cross-checks them on E_0 V. Throws ParameterError if the products do not
/// act as nonzero scalars there.
ParameterArray extract_parameter_array(const TDSystem& tds);

enum class D4Letter { Star, Down, DoubleDown };

using D4Word = std::vector<D4Letter>;

/// Reduced form down^a doubledown^b star^c of a word, read left to right.
struct D4Element {
  bool down = false;
  bool double_down = false;
  bool star = false;

  static D4Element reduce(const D4Word& word);
  D4Word word() const;
  friend bool operator==(const D4Element&, const D4Element&) = default;
};

/// All eight group elements in a fixed order.
std::array<D4Element, 8> d4_elements();

std::string to_string(const D4Word& word);

ParameterArray apply_letter(const ParameterArray& pa, D4Letter letter);
/// Applies the reduced form of the word.
ParameterArray relative(const ParameterArray& pa, const D4Word& word);
ParameterArray relative(const ParameterArray& pa, const D4Element& g);

/// Derived parameters predicted for relative(pa, g) by permuting those of pa.
DerivedParams permute_derived(const DerivedParams& dp, const D4Element& g);

/// For all eight elements g: derived_params(relative(pa, g)) equals
/// permute_derived(derived_params(pa), g).
bool derived_of_relative_consistency(const ParameterArray& pa);

}  // namespace tdpair
