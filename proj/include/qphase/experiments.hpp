#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qphase/rng.hpp"

namespace qphase {

// Flat experiment configuration: a JSON object of dotted-path keys to scalar
// values, e.g. {"experiment": "grover", "n_qubits": 3, "walk.s": 0.02}.
// Every getter reports problems as ConfigError carrying the field path.
class ExperimentConfig {
public:
    static ExperimentConfig from_json_text(const std::string& text);
    static ExperimentConfig from_json_file(const std::string& path);

    bool has(const std::string& key) const { return values_.count(key) != 0; }
    void set(const std::string& key, nlohmann::json value);

    std::string experiment() const { return get_string("experiment"); }
    std::uint64_t seed() const;
    int trials() const;

    std::string get_string(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    std::int64_t get_int(const std::string& key) const;
    std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;

    // Sorted-key echo of the raw configuration, as written into summary.json.
    nlohmann::ordered_json echo() const;
    std::vector<std::string> keys() const;

private:
    std::map<std::string, nlohmann::json> values_;
};

struct MetricSummary {
    double mean = 0.0;
    double stddev = 0.0; // sample standard deviation, 0 for a single trial
    double min = 0.0;
    double max = 0.0;
    double ci95_lo = 0.0;
    double ci95_hi = 0.0;
};

MetricSummary summarize_metric(const std::vector<double>& values);

struct RunSummary {
    nlohmann::ordered_json config_echo;
    std::string rng_family;
    int trials = 0;
    std::vector<std::pair<std::string, MetricSummary>> metrics;
    std::string csv_text;                        // trials.csv content
    std::optional<std::string> final_state_dump; // state.dump content, when the
                                                 // experiment has a final state
    double wall_time_s = 0.0; // reported to the console, never serialized, so
                              // reruns stay byte-identical

    nlohmann::ordered_json summary_json() const;
};

// Dispatches on config.experiment():
//   grover, grover-sensitivity, init-noise, qec-shor, qec-steane, stats,
//   decoherence, phase-walk
// Deterministic: every output is a pure function of (config, seed); trial k
// always draws from derive_trial_stream(seed, k).
RunSummary run_experiment(const ExperimentConfig& config);

// Writes trials.csv and summary.json (and state.dump when dump_final is set)
// under out_dir, creating it if needed.
void write_outputs(const RunSummary& summary, const std::string& out_dir, bool dump_final);

inline RngStream derive_trial_stream(std::uint64_t seed, std::uint64_t trial_index) {
    return RngStream::derive(seed, trial_index);
}

} // namespace qphase
