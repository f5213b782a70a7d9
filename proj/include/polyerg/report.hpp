#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

#include "polyerg/affine.hpp"
#include "polyerg/symbolic.hpp"

namespace polyerg {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr unsigned long kDefaultSeed = 0x5EED;
inline constexpr long kDefaultSamples = 1'000'000;

/// Flat key-value run configuration. Echoed into every report; equal
/// configs hash equally, and reports are deterministic functions of them.
struct RunConfig {
    std::map<std::string, std::string> kv;

    void set(const std::string& k, const std::string& v) { kv[k] = v; }
    std::string canonical() const;
    std::uint64_t hash() const;  // FNV-1a over the canonical form
    nlohmann::json to_json() const;
};

/// Structured result plus provenance block.
struct Report {
    std::string subcommand;
    RunConfig config;
    nlohmann::json result;
    double wall_ms = 0.0;

    nlohmann::json to_json() const;
};

/// Numeric wrapped with its provenance: "exact", "analytic", or
/// "empirical(N=..., seed=...)".
nlohmann::json prov_value(double v, const std::string& provenance);
nlohmann::json prov_exact(const Rat& v);
std::string empirical_tag(long N, unsigned long seed);

/// Fixed 12-significant-digit float formatting for CSV output.
std::string format_sig12(double v);

/// Seed resolution: flag value if given, else POLYERG_SEED, else default.
unsigned long resolve_seed(const std::string& flag_value);

/// "a/b [+|-] [c/d*]name ..." over the standard basis, e.g. "1/2 + sqrt2".
SymbolicReal parse_symbolic(const std::string& text);

/// Structured map description: a [map] section with dim, strictly
/// lower-triangular integer rows N.i, and symbolic translation entries b.i.
UnipotentAffineMap parse_map_config(const std::string& text);
UnipotentAffineMap map_from_preset(const std::string& preset);

}  // namespace polyerg
