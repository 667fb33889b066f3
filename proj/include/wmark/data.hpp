#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "wmark/matrix.hpp"

namespace wmark {

/// A labelled tabular dataset. Features are dense doubles, labels are class
/// indices in [0, num_classes).
struct Dataset {
    Matrix features;                        // n x d
    std::vector<int> labels;                // n
    std::vector<std::string> feature_names; // d
    int num_classes = 0;

    std::size_t size() const { return features.rows(); }
    std::size_t dim() const { return features.cols(); }

    /// Enforce the type invariants: n >= 1, d >= 1, finite features,
    /// labels in range, names matching d. Throws ValidationError.
    void validate() const;
};

/// Per-feature column extrema, fit on the training split only.
struct NormalizationParams {
    std::vector<double> min;
    std::vector<double> max;
};

/// How to partition a dataset: positive fractions summing to 1, plus the
/// permutation seed.
struct SplitSpec {
    std::vector<double> fractions;
    std::uint64_t seed = 0;

    void validate() const;
};

struct CsvOptions {
    /// Repair missing cells (empty or "NA") by column-mean imputation.
    /// When false, any missing cell is an error.
    bool impute_missing = true;
};

/// Load a CSV with a header row. `label_column` is removed from the features
/// and parsed as integer class labels in [0, num_classes). Missing feature
/// cells are imputed with the column mean of the observed entries.
Dataset load_csv(const std::filesystem::path& path, const std::string& label_column,
                 int num_classes, const CsvOptions& options = {});

/// Scan only the label column and return max(label) + 1 (at least 2).
int infer_num_classes_csv(const std::filesystem::path& path, const std::string& label_column);

/// Write `data` as a CSV loadable by load_csv. The label column is appended
/// last under `label_column`.
void save_csv(const Dataset& data, const std::filesystem::path& path,
              const std::string& label_column = "label");

NormalizationParams fit_minmax(const Dataset& train);

/// x' = (x - min) / (max - min), clamped to [0, 1]. Constant columns
/// (max == min) map to 0.5.
Dataset apply_minmax(const Dataset& data, const NormalizationParams& params);

/// Seeded permutation followed by a contiguous partition. Part boundaries are
/// round(cumulative_fraction * n), so parts are disjoint and cover the input.
/// Any empty part is a ValidationError.
std::vector<Dataset> split(const Dataset& data, const SplitSpec& spec);

enum class SyntheticKind { WaterLike, Bus14Like };

SyntheticKind synthetic_kind_from_string(const std::string& name);
std::string to_string(SyntheticKind kind);

/// Deterministic synthetic generators for the two bundled applications.
///
/// water_like: 9 water-chemistry-shaped features from per-feature Gaussians;
/// the binary label follows a fixed noisy linear rule (coefficients in data.cpp)
/// whose noise level is tuned so a small MLP tops out in the mid-60s test
/// accuracy, matching the difficulty of the public water-potability data.
///
/// bus14_like: 16 features (8 positive magnitudes, 8 angles in [-pi, pi]);
/// 10% of rows are anomalies (label 1) made by perturbing 1-3 features by at
/// least 3 sigma.
Dataset generate_synthetic(SyntheticKind kind, std::size_t n, std::uint64_t seed);

} // namespace wmark
