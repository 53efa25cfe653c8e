#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coolsim/building.hpp"
#include "coolsim/metrics.hpp"

namespace coolsim {

inline constexpr const char* kVersion = "coolsim 0.1.0";

enum class Scheme : int {
    Uncontrolled = 0,
    ControlA = 1,
    ControlB = 2,
    MarketA = 3,
    MarketA_NoMoney = 4,
    MarketA_NoTemperature = 5,
    MarketA_NoAuction = 6,
    MarketB_Unbounded = 7,
    MarketB_Bounded = 8,
};

const char* scheme_name(Scheme s);
std::optional<Scheme> scheme_from_name(std::string_view name);

struct ScenarioConfig {
    Scheme scheme = Scheme::ControlA;
    BuildingParams building = BuildingParams::defaults();
    double beta = 10.0;
    /// Double-auction strength; when unset each market-a variant falls back
    /// to its tuned default (64 / 66 / 65 / 17).
    std::optional<double> alpha;
    std::int64_t start_minute = 900;  // 15:00
    std::int64_t duration_minutes = 240;
    /// Size 1 (uniform) or one entry per office.
    std::vector<double> initial_temps{20.0};
    std::vector<double> setpoints{20.0};
    std::uint64_t seed = 0;
    double eps = 1e-9;  // equilibrium clearing tolerance

    double effective_alpha() const;
    /// Throws std::invalid_argument naming the offending field.
    void validate() const;

    bool operator==(const ScenarioConfig&) const = default;
};

struct TraceRecord {
    std::int64_t step = 0;    // 0-based within the run
    std::int64_t minute = 0;  // absolute interval index, minutes since midnight
    std::vector<double> temps;
    std::vector<double> control;
    std::vector<double> consumed;
    std::vector<double> virtual_temp;  // weather diagnostic, not written to CSV
    std::vector<double> heat_in;       // (T_virt - T)/R diagnostic, not written to CSV
    double price = 0.0;                // NaN when no clearing price exists this step
    StepMeasure measure;
};

struct SimTrace {
    ScenarioConfig config;  // echo, with alpha resolved for HC schemes
    std::string version;
    std::vector<TraceRecord> records;

    std::vector<StepMeasure> measures() const;
    /// Mean stddev over records [from, to); the full run by default.
    double window_stddev_mean(std::size_t from = 0, std::size_t to = SIZE_MAX) const;
    /// Per-office view of one recorded step.
    OfficeState office_at(std::size_t step, std::size_t office) const;
};

/// Runs one scenario: per interval, sample weather, let the scheme update the
/// control vector from the latest temperatures, push the requests through the
/// pipe, advance every office's temperature, record the measure. Identical
/// configs and seeds give bit-identical traces. Scheme failures are rethrown
/// with the failing interval index prefixed.
SimTrace run_scenario(const ScenarioConfig& config);

/// Runs several scenarios that share building, seed and timing, differing
/// only in scheme and scheme parameters; weather draws are identical across
/// members. Throws std::invalid_argument on mismatched buildings.
std::vector<SimTrace> run_comparison(std::span<const ScenarioConfig> configs);

/// Expands a size-1-or-n per-office vector to exactly n entries.
std::vector<double> expand_per_office(const std::vector<double>& values, int n_offices);

} // namespace coolsim
