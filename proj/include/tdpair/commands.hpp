#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "tdpair/json_io.hpp"

namespace tdpair {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitInadmissible = 2;
inline constexpr int kExitVerification = 3;

struct CommandResult {
  Json document;
  int exit_code = kExitOk;
};

/// Derived parameters, admissibility, verification of the canonical system
/// and every formula-versus-numeric comparison. With `full`, also the six
/// basis matrices, 30 transition matrices and 12 representation matrices.
CommandResult report_document(const ParameterArray& pa, bool full);

/// Input: {"field", "A", "Astar"} with optional "theta", "thetastar".
/// Exit 0 only for a certified TD system of shape (1,2,1).
CommandResult verify_document(const Json& input);

/// {"field", "A", "Astar", "theta", "thetastar"} for the canonical pair.
/// Unless `unchecked`, inadmissible arrays give exit 2 and no matrices.
CommandResult construct_document(const ParameterArray& pa, bool unchecked);

struct EnumerationSummary {
  std::uint64_t p = 0;
  std::uint64_t grid = 0;
  std::uint64_t condition_i = 0;
  std::uint64_t conditions_i_ii = 0;
  std::uint64_t admissible = 0;
  std::optional<std::uint64_t> orbits;
  std::map<std::uint64_t, std::uint64_t> orbit_sizes;  // size -> number of orbits
};

/// Walks all p^8 parameter arrays over GF(p), sharded by theta_0 across
/// threads. Orbits are counted at their least element in the grid order.
EnumerationSummary enumerate_arrays(std::uint64_t p, bool orbits);

Json to_json(const EnumerationSummary& s);

/// Largest grid enumerated without --force: TDP_MAX_GRID if set, else 7^8.
std::uint64_t enumeration_limit();

/// p^8, or nullopt when it does not fit in 64 bits.
std::optional<std::uint64_t> grid_size(std::uint64_t p);

// File-level entry points used by the command-line tool. They print the
// document to `out` (or write it to `out_path`), diagnostics to `err`, and
// return the exit code.
int run_report(const std::string& path, bool full, const std::string& out_path, std::ostream& out,
               std::ostream& err);
int run_verify(const std::string& path, const std::string& out_path, std::ostream& out, std::ostream& err);
int run_construct(const std::string& path, bool unchecked, const std::string& out_path, std::ostream& out,
                  std::ostream& err);
int run_enumerate(std::uint64_t p, bool orbits, bool force, std::ostream& out, std::ostream& err);

}  // namespace tdpair
