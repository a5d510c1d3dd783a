#include "tdpair/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <ostream>
#include <set>
#include <thread>

namespace tdpair {

namespace {

void add_check(Json& checks, bool& all, const std::string& name, bool ok) {
  checks[name] = ok;
  all = all && ok;
}

std::vector<FieldElement> sorted_spectrum(const Matrix& m) { return eigen_data(m).eigenvalues; }

int emit(const Json& doc, const std::string& out_path, std::ostream& out, std::ostream& err) {
  if (out_path.empty()) {
    out << dump(doc);
    return kExitOk;
  }
  std::ofstream file(out_path);
  if (!file || !(file << dump(doc))) {
    err << "error: cannot write " << out_path << "\n";
    return kExitInput;
  }
  return kExitOk;
}

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const FieldError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const LinalgError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitInput;
}

}  // namespace

CommandResult report_document(const ParameterArray& pa, bool full) {
  validate(pa);
  CommandResult r;
  Json& doc = r.document;
  doc["parameter_array"] = to_json(pa);
  const AdmissibilityReport adm = admissible(pa);
  doc["admissibility"] = to_json(adm);
  const bool denominators = !(pa.theta[0] == pa.theta[2]) && !(pa.thetastar[0] == pa.thetastar[2]);
  doc["derived_params"] = denominators ? to_json(derived_params(pa)) : Json(nullptr);
  if (!adm.ok) {
    doc["cross_check"] = false;
    r.exit_code = kExitInadmissible;
    return r;
  }

  const DerivedParams dp = derived_params(pa);
  const TDSystem tds = construct(pa);
  const VerificationReport vr = verify_td_system(tds.A, tds.Astar, pa.theta, pa.thetastar);
  doc["verification"] = to_json(vr);

  Json checks = Json::object();
  bool all = true;
  add_check(checks, all, "verified_shape_121", vr.overall && vr.shape == std::vector<std::size_t>{1, 2, 1});
  add_check(checks, all, "extract_roundtrip", extract_parameter_array(tds) == pa);
  add_check(checks, all, "derived_identity", pa.varphi - dp.varphi1 * dp.varphi2 == pa.phi - dp.phi1 * dp.phi2);
  add_check(checks, all, "relatives_consistent", derived_of_relative_consistency(pa));
  add_check(checks, all, "split_actions", verify_split_actions(tds));

  const EtaVectors eta = eta_vectors(tds);
  Json bases = Json::array(), transitions = Json::array(), representations = Json::array();
  bool reps_ok = true, trans_ok = true;
  for (BasisId id : kAllBases) {
    bases.push_back(Json{{"id", to_string(id)}, {"matrix", to_json(basis_matrix(tds, id, eta))}});
    for (Operator op : {Operator::A, Operator::Astar}) {
      const Matrix numeric = represent(tds, op, id, eta);
      const bool same = numeric == represent_formula(pa, op, id);
      reps_ok = reps_ok && same;
      representations.push_back(
          Json{{"operator", to_string(op)}, {"basis", to_string(id)}, {"matrix", to_json(numeric)}, {"matches_formula", same}});
    }
  }
  for (BasisId from : kAllBases) {
    for (BasisId to : kAllBases) {
      if (from == to) continue;
      const Matrix numeric = transition_numeric(tds, from, to, eta);
      const bool same = numeric == transition_formula(pa, from, to);
      trans_ok = trans_ok && same;
      transitions.push_back(Json{{"from", to_string(from)},
                                 {"to", to_string(to)},
                                 {"matrix", to_json(numeric)},
                                 {"matches_formula", same}});
    }
  }
  add_check(checks, all, "representations_match_formulas", reps_ok);
  add_check(checks, all, "transitions_match_formulas", trans_ok);
  doc["checks"] = checks;
  doc["cross_check"] = all;
  if (full) {
    doc["bases"] = bases;
    doc["transitions"] = transitions;
    doc["representations"] = representations;
  }
  r.exit_code = all ? kExitOk : kExitVerification;
  return r;
}

CommandResult verify_document(const Json& input) {
  if (!input.is_object()) throw FormatError("system file must be a JSON object");
  const FieldDescriptor fd = field_from_json(input.contains("field") ? input.at("field") : Json());
  if (!input.contains("A") || !input.contains("Astar")) throw FormatError("system file needs \"A\" and \"Astar\"");
  const Matrix a = matrix_from_json(input.at("A"), fd);
  const Matrix as = matrix_from_json(input.at("Astar"), fd);
  if (a.rows() != 4 || a.cols() != 4 || as.rows() != 4 || as.cols() != 4)
    throw FormatError("A and Astar must be 4x4");

  CommandResult r;
  std::vector<FieldElement> theta, thetastar;
  if (input.contains("theta") || input.contains("thetastar")) {
    if (!input.contains("theta") || !input.contains("thetastar"))
      throw FormatError("give both \"theta\" and \"thetastar\" or neither");
    theta = elements_from_json(input.at("theta"), fd);
    thetastar = elements_from_json(input.at("thetastar"), fd);
    r.document["orderings_source"] = "input";
  } else {
    std::vector<Ordering> found;
    try {
      found = find_td_orderings(a, as);
    } catch (const LinalgError&) {
    }
    r.document["orderings_found"] = found.size();
    if (!found.empty()) {
      theta = found.front().first;
      thetastar = found.front().second;
      r.document["orderings_source"] = "search";
    } else {
      theta = sorted_spectrum(a);
      thetastar = sorted_spectrum(as);
      r.document["orderings_source"] = "spectrum";
    }
  }
  r.document["theta"] = to_json(theta);
  r.document["thetastar"] = to_json(thetastar);
  const VerificationReport vr = verify_td_system(a, as, theta, thetastar);
  r.document["report"] = to_json(vr);
  const bool certified = vr.overall && vr.shape == std::vector<std::size_t>{1, 2, 1};
  r.document["certified"] = certified;
  if (certified) r.document["parameter_array"] = to_json(extract_parameter_array(*vr.system));
  r.exit_code = certified ? kExitOk : kExitVerification;
  return r;
}

CommandResult construct_document(const ParameterArray& pa, bool unchecked) {
  validate(pa);
  CommandResult r;
  const AdmissibilityReport adm = admissible(pa);
  const bool denominators = !(pa.theta[0] == pa.theta[2]) && !(pa.thetastar[0] == pa.thetastar[2]);
  if ((!adm.ok && !unchecked) || !denominators) {
    r.document = Json{{"admissibility", to_json(adm)}};
    r.exit_code = kExitInadmissible;
    return r;
  }
  const auto [a, as] = canonical_matrices(pa);
  r.document = Json{{"field", to_json(pa.field())},
                    {"A", to_json(a)},
                    {"Astar", to_json(as)},
                    {"theta", to_json(pa.theta)},
                    {"thetastar", to_json(pa.thetastar)}};
  return r;
}

std::optional<std::uint64_t> grid_size(std::uint64_t p) {
  std::uint64_t g = 1;
  for (int k = 0; k < 8; ++k) {
    if (p != 0 && g > UINT64_MAX / p) return std::nullopt;
    g *= p;
  }
  return g;
}

std::uint64_t enumeration_limit() {
  if (const char* env = std::getenv("TDP_MAX_GRID")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
    }
  }
  return *grid_size(7);
}

EnumerationSummary enumerate_arrays(std::uint64_t p, bool orbits) {
  const FieldDescriptor fd = FieldDescriptor::prime(p);
  const auto grid = grid_size(p);
  if (!grid) throw FieldError("grid too large");
  std::vector<FieldElement> values;
  for (std::uint64_t v = 0; v < p; ++v) values.emplace_back(fd, static_cast<long>(v));

  auto code = [p](const ParameterArray& pa) {
    std::uint64_t c = 0;
    for (const auto* seq : {&pa.theta, &pa.thetastar})
      for (const auto& x : *seq) c = c * p + x.residue();
    c = c * p + pa.varphi.residue();
    return c * p + pa.phi.residue();
  };

  auto shard = [&](std::uint64_t t0) {
    EnumerationSummary s;
    std::vector<std::uint64_t> idx(5);
    const std::uint64_t inner = *grid / p / (p * p);
    for (std::uint64_t k = 0; k < inner; ++k) {
      std::uint64_t rest = k;
      for (auto& i : idx) {
        i = rest % p;
        rest /= p;
      }
      const std::vector<FieldElement> theta{values[t0], values[idx[4]], values[idx[3]]};
      const std::vector<FieldElement> thetastar{values[idx[2]], values[idx[1]], values[idx[0]]};
      const bool distinct = !(theta[0] == theta[1]) && !(theta[0] == theta[2]) && !(theta[1] == theta[2]) &&
                            !(thetastar[0] == thetastar[1]) && !(thetastar[0] == thetastar[2]) &&
                            !(thetastar[1] == thetastar[2]);
      if (!distinct) continue;
      s.condition_i += p * p;
      for (std::uint64_t vp = 1; vp < p; ++vp) {
        for (std::uint64_t ph = 1; ph < p; ++ph) {
          ++s.conditions_i_ii;
          const ParameterArray pa{theta, thetastar, values[vp], values[ph]};
          if (!admissible(pa).ok) continue;
          ++s.admissible;
          if (!orbits) continue;
          const std::uint64_t own = code(pa);
          std::set<std::uint64_t> orbit;
          for (const auto& g : d4_elements()) orbit.insert(code(relative(pa, g)));
          if (*orbit.begin() == own) ++s.orbit_sizes[orbit.size()];
        }
      }
    }
    return s;
  };

  std::vector<std::future<EnumerationSummary>> parts;
  for (std::uint64_t t0 = 0; t0 < p; ++t0) parts.push_back(std::async(std::launch::async, shard, t0));
  EnumerationSummary total;
  total.p = p;
  total.grid = *grid;
  for (auto& f : parts) {
    const EnumerationSummary s = f.get();
    total.condition_i += s.condition_i;
    total.conditions_i_ii += s.conditions_i_ii;
    total.admissible += s.admissible;
    for (const auto& [size, n] : s.orbit_sizes) total.orbit_sizes[size] += n;
  }
  if (orbits) {
    total.orbits = 0;
    for (const auto& [size, n] : total.orbit_sizes) *total.orbits += n;
  }
  return total;
}

Json to_json(const EnumerationSummary& s) {
  Json out{{"p", s.p},
           {"grid", s.grid},
           {"condition_i", s.condition_i},
           {"conditions_i_ii", s.conditions_i_ii},
           {"admissible", s.admissible}};
  if (s.orbits) {
    Json sizes = Json::object();
    std::uint64_t covered = 0;
    for (const auto& [size, n] : s.orbit_sizes) {
      sizes[std::to_string(size)] = n;
      covered += size * n;
    }
    out["orbits"] = Json{{"count", *s.orbits}, {"sizes", sizes}, {"arrays_covered", covered}};
  }
  return out;
}

int run_report(const std::string& path, bool full, const std::string& out_path, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    const CommandResult r = report_document(parameter_array_from_json(read_json_file(path)), full);
    if (r.exit_code == kExitInadmissible) {
      err << "inadmissible: failed";
      for (const auto& id : r.document["admissibility"]["failed"]) err << " " << id.get<std::string>();
      err << "\n";
    }
    const int written = emit(r.document, out_path, out, err);
    return written != kExitOk ? written : r.exit_code;
  });
}

int run_verify(const std::string& path, const std::string& out_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const CommandResult r = verify_document(read_json_file(path));
    const int written = emit(r.document, out_path, out, err);
    return written != kExitOk ? written : r.exit_code;
  });
}

int run_construct(const std::string& path, bool unchecked, const std::string& out_path, std::ostream& out,
                  std::ostream& err) {
  return guarded(err, [&] {
    const CommandResult r = construct_document(parameter_array_from_json(read_json_file(path)), unchecked);
    if (r.exit_code != kExitOk) {
      err << "inadmissible parameter array\n";
      out << dump(r.document);
      return r.exit_code;
    }
    const int written = emit(r.document, out_path, out, err);
    return written != kExitOk ? written : r.exit_code;
  });
}

int run_enumerate(std::uint64_t p, bool orbits, bool force, std::ostream& out, std::ostream& err) {
  if (!is_prime(p)) {
    err << "error: " << p << " is not prime\n";
    return kExitInput;
  }
  const auto grid = grid_size(p);
  if (!grid || (!force && *grid > enumeration_limit())) {
    err << "error: grid of " << p << "^8 arrays exceeds the limit " << enumeration_limit()
        << " (set TDP_MAX_GRID or pass --force)\n";
    return kExitInput;
  }
  out << dump(to_json(enumerate_arrays(p, orbits)));
  return kExitOk;
}

}  // namespace tdpair
