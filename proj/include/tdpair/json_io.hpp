#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "tdpair/bases.hpp"

namespace tdpair {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::json;

Json to_json(const FieldDescriptor& fd);
FieldDescriptor field_from_json(const Json& j);

Json to_json(const FieldElement& x);
/// Accepts canonical strings and plain integers.
FieldElement element_from_json(const Json& j, const FieldDescriptor& fd);

Json to_json(const std::vector<FieldElement>& xs);
std::vector<FieldElement> elements_from_json(const Json& j, const FieldDescriptor& fd);

/// Array of rows.
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const FieldDescriptor& fd);

Json to_json(const ParameterArray& pa);
ParameterArray parameter_array_from_json(const Json& j);

Json to_json(const DerivedParams& dp);
Json to_json(const AdmissibilityReport& r);
Json to_json(const VerificationReport& r);

/// Reads and parses a JSON file; FormatError on I/O or syntax problems.
Json read_json_file(const std::string& path);

/// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

}  // namespace tdpair
