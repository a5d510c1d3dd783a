#include "tdpair/json_io.hpp"

#include <fstream>

namespace tdpair {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Json to_json(const FieldDescriptor& fd) {
  if (fd.is_rationals()) return Json{{"kind", "Q"}};
  return Json{{"kind", "Fp"}, {"p", fd.characteristic()}};
}

FieldDescriptor field_from_json(const Json& j) {
  const Json& kind = member(j, "kind");
  if (kind == "Q") return FieldDescriptor::rationals();
  if (kind == "Fp") {
    const Json& p = member(j, "p");
    if (!p.is_number_unsigned()) throw FormatError("field \"p\" must be a positive integer");
    try {
      return FieldDescriptor::prime(p.get<std::uint64_t>());
    } catch (const FieldError& e) {
      throw FormatError(e.what());
    }
  }
  throw FormatError("unknown field kind " + kind.dump());
}

Json to_json(const FieldElement& x) { return x.to_string(); }

FieldElement element_from_json(const Json& j, const FieldDescriptor& fd) {
  try {
    if (j.is_string()) return parse_element(j.get<std::string>(), fd);
    if (j.is_number_integer()) return parse_element(std::to_string(j.get<long long>()), fd);
  } catch (const FieldError& e) {
    throw FormatError(e.what());
  }
  throw FormatError("field element must be a string or an integer, got " + j.dump());
}

Json to_json(const std::vector<FieldElement>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

std::vector<FieldElement> elements_from_json(const Json& j, const FieldDescriptor& fd) {
  if (!j.is_array()) throw FormatError("expected an array of field elements");
  std::vector<FieldElement> out;
  for (const auto& x : j) out.push_back(element_from_json(x, fd));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    out.push_back(std::move(row));
  }
  return out;
}

Matrix matrix_from_json(const Json& j, const FieldDescriptor& fd) {
  if (!j.is_array() || j.empty()) throw FormatError("matrix must be a nonempty array of rows");
  std::vector<std::vector<FieldElement>> rows;
  for (const auto& r : j) {
    rows.push_back(elements_from_json(r, fd));
    if (rows.back().size() != rows.front().size()) throw FormatError("matrix rows differ in length");
  }
  return Matrix::from_rows(fd, rows);
}

Json to_json(const ParameterArray& pa) {
  return Json{{"field", to_json(pa.field())},
              {"theta", to_json(pa.theta)},
              {"thetastar", to_json(pa.thetastar)},
              {"varphi", to_json(pa.varphi)},
              {"phi", to_json(pa.phi)}};
}

ParameterArray parameter_array_from_json(const Json& j) {
  const FieldDescriptor fd = field_from_json(member(j, "field"));
  ParameterArray pa{elements_from_json(member(j, "theta"), fd), elements_from_json(member(j, "thetastar"), fd),
                    element_from_json(member(j, "varphi"), fd), element_from_json(member(j, "phi"), fd)};
  if (pa.theta.size() != 3 || pa.thetastar.size() != 3) throw FormatError("theta and thetastar need three entries");
  return pa;
}

Json to_json(const DerivedParams& dp) {
  return Json{{"varphi1", to_json(dp.varphi1)},
              {"varphi2", to_json(dp.varphi2)},
              {"phi1", to_json(dp.phi1)},
              {"phi2", to_json(dp.phi2)}};
}

Json to_json(const AdmissibilityReport& r) { return Json{{"ok", r.ok}, {"failed", r.failed}}; }

Json to_json(const VerificationReport& r) {
  Json out{{"overall", r.overall}, {"shape", r.shape}};
  Json reasons = Json::object();
  const std::pair<const char*, const AxiomCheck*> flags[] = {
      {"diagonalizable_A", &r.diagonalizable_A},     {"diagonalizable_Astar", &r.diagonalizable_Astar},
      {"orderings", &r.orderings},                   {"tridiagonal_AstarE", &r.tridiagonal_AstarE},
      {"tridiagonal_AEstar", &r.tridiagonal_AEstar}, {"irreducible", &r.irreducible},
  };
  for (const auto& [name, check] : flags) {
    out[name] = check->ok;
    if (!check->ok) reasons[name] = check->reason;
  }
  out["reasons"] = reasons;
  if (r.witness) {
    Json basis = Json::array();
    for (std::size_t k = 0; k < r.witness->dim(); ++k) {
      const Matrix v = r.witness->basis().column(k);
      std::vector<FieldElement> entries;
      for (std::size_t i = 0; i < v.rows(); ++i) entries.push_back(v(i, 0));
      basis.push_back(to_json(entries));
    }
    out["witness"] = basis;
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace tdpair
