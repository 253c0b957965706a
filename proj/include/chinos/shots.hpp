#pragma once

// Finite-shot estimation of |G|^2 entries with an optional depolarizing
// channel, plus ingestion of experimentally measured matrices and error
// reporting against theory.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "chinos/metric.hpp"

namespace chinos::shots {

enum class NoiseKind { None, Depolarizing };

struct NoiseModel {
    NoiseKind kind = NoiseKind::None;
    double p = 0.0;  // per-layer depolarizing probability

    static NoiseModel none() { return {NoiseKind::None, 0.0}; }
    static NoiseModel depolarizing(double p);
};

// Single-parameter depolarizing strength that reproduces the reference
// device run: a unit entry after four noisy layers lands at
// 1/4 + 3/4 (1-p)^4 = 0.964.
double calibrated_depolarizing_p();

struct ShotConfig {
    std::int64_t shots = 8192;
    std::uint64_t seed = 0;
    NoiseModel noise = NoiseModel::none();
};

struct ShotEstimate {
    double estimate = 0.0;   // frequency of |00>
    double stderr_est = 0.0; // binomial standard error
    double expected = 0.0;   // exact |00> population of the noisy circuit
    std::int64_t shots = 0;
};

// Runs the four-layer circuit Oin_j2, O_i2, O_i1^dag, Oin_j1^dag on |00>,
// depolarizing after each layer, and samples `shots` measurements of |00>.
// With no noise the expected value is |G[row, col]|^2. Deterministic under a
// fixed seed; the per-entry generator is split as seed xor (16*row + col).
ShotEstimate estimate_overlap(metric::PairIndex row, metric::PairIndex col, double theta,
                              const ShotConfig& config);

// Exact |00> population of the noisy four-layer circuit (no sampling).
double noisy_population(metric::PairIndex row, metric::PairIndex col, double theta,
                        const NoiseModel& noise);

struct ExperimentalMatrix {
    std::array<double, 256> entries{};  // canonical lexicographic order, signed
    std::string source_label;

    double at(int row_lex, int col_lex) const { return entries[static_cast<size_t>(row_lex) * 16 + col_lex]; }
    double& at(int row_lex, int col_lex) { return entries[static_cast<size_t>(row_lex) * 16 + col_lex]; }
};

// Parses a 16x16 table of signed decimals in the documented row/column order.
// Fields split on ';' (or ',' when unambiguous); decimal commas accepted.
// Throws ParseError with the offending location or ShapeError on wrong
// dimensions.
ExperimentalMatrix ingest_experimental(std::istream& in, const std::string& source_label = "");
ExperimentalMatrix ingest_experimental_file(const std::string& path);

struct ErrorReport {
    double avg_err_on_units = 0.0;
    double avg_err_on_zeros = 0.0;
    double max_err = 0.0;
    std::array<double, 256> deltas{};  // |experimental| - |theory|, canonical order
};

// Partitions entries by theoretical modulus (1 vs 0) and averages
// ||experimental| - |theory|| per class.
ErrorReport error_report(const metric::MetricMatrix& theory, const ExperimentalMatrix& exp);

std::string error_report_json(const ErrorReport& report);

// All off-diagonal (guess, guess) pairs whose experimental |entry| is within
// the relaxed orthogonality threshold.
std::vector<std::pair<metric::PairIndex, metric::PairIndex>> admissible_pairs(
    const ExperimentalMatrix& exp, double threshold = 0.25);

}  // namespace chinos::shots
