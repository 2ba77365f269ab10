#pragma once

// Machine-readable serializations shared by the CLI and the tests.
//
// JSON objects use sorted keys, and everything that varies between runs
// (wall time, worker count) lives under "meta", so two runs with the same
// inputs have byte-identical payloads once "meta" is dropped.

#include <string>
#include <vector>

#include <json.hpp>

#include "cuboid/cuboid_search.hpp"
#include "cuboid/sweep.hpp"

namespace cuboid {

inline constexpr int kSchemaVersion = 1;

/// Integer as a JSON number when it fits in 64 bits, as a decimal string
/// otherwise.
nlohmann::json to_json(const BigInt& n);
/// Coefficient list, lowest power first.
nlohmann::json to_json(const IntPoly& p);

/// {schema, family, range, verdicts: [{params, verdict, factors?, primes,
///  special?}], meta: {walltime_ms, workers}}
nlohmann::json sweep_to_json(const SweepReport& report, unsigned workers);
/// Columns: params,verdict,special,factors,primes
std::string sweep_to_csv(const SweepReport& report);

/// {schema, max_edge, bricks: [{x, y, z, dxy, dyz, dzx, body, perfect}]}
nlohmann::json bricks_to_json(const std::vector<Brick>& bricks, unsigned max_edge);
/// Columns: x,y,z,dxy,dyz,dzx,body (body empty when not an integer)
std::string bricks_to_csv(const std::vector<Brick>& bricks);

/// The report with its "meta" member removed.
nlohmann::json payload(nlohmann::json report);

}  // namespace cuboid
