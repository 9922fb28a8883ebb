#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rq/ncpoly.hpp"

namespace rq {

using Params = std::map<std::string, long>;

struct ParamSpec {
  std::string name;
  long lo = 0;
  long hi = 0;     // default sweep bound
  long limit = 0;  // largest value verify_identity accepts
};

struct IdentitySides {
  NcPoly lhs, rhs;
};

/// One way of reading an identity.  The first reading of every entry is the
/// identity as stated; later ones are corrected or alternative readings.
struct IdentityReading {
  std::string name;
  std::string note;
  std::function<IdentitySides(const Params&)> build;
};

struct IdentityEntry {
  std::string id;
  std::string statement;
  std::vector<ParamSpec> params;
  /// Extra constraint on parameters (e.g. m < l); empty means none.
  std::function<bool(const Params&)> admissible;
  std::vector<IdentityReading> readings;
  /// Uses only A, B, gamma: also checked under S.
  bool check_s = false;
};

const std::vector<IdentityEntry>& identity_catalog();
/// Throws std::invalid_argument for an unknown id.
const IdentityEntry& find_identity(std::string_view id);

struct ReadingResult {
  std::string name;
  bool holds = false;
  NcPoly lhs_normal, rhs_normal;
};

struct IdentityVerdict {
  std::string id;
  Params params;
  /// Some reading holds.
  bool holds = false;
  /// The identity as stated holds.
  bool stated_holds = false;
  /// First reading that holds, empty if none.
  std::string reading;
  std::vector<ReadingResult> readings;
  /// Largest word weight over both raw sides of every reading.
  unsigned weight = 0;
};

/// Throws std::invalid_argument for an unknown id or missing, out-of-range or
/// inadmissible parameters.
IdentityVerdict verify_identity(std::string_view id, const Params& params);

/// Raw sides of every reading, without normalizing.
std::vector<IdentitySides> identity_sides(const IdentityEntry& entry, const Params& params);

/// Every admissible parameter tuple with each bound hi scaled by `scale`
/// (rounded down, clamped to [lo, limit]).
std::vector<Params> parameter_sweep(const IdentityEntry& entry, double scale = 1.0);

std::string params_to_string(const IdentityEntry& entry, const Params& params);

}  // namespace rq
