#ifndef KICKCAST_DATASET_HPP
#define KICKCAST_DATASET_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kickcast/features.hpp"
#include "kickcast/labels.hpp"
#include "kickcast/synth_generator.hpp"

namespace kickcast {

/// Feature/label rows assembled for one ordering method.
struct Dataset {
    std::string schema_version;  // FeatureSchema::standard().version
    OrderingMethod method = OrderingMethod::kUnum;
    Flavor feature_flavor = Flavor::kNoisy;
    std::string source;  // generator seed or external source id
    std::vector<std::pair<FeatureRow, LabelRow>> rows;

    std::size_t size() const { return rows.size(); }
};

/// Extracts one row per event: features from the chosen flavor's state, labels from
/// the FULL-state action using the teammate ordering of the feature state.
Dataset build_dataset(const std::vector<KickEvent>& events, OrderingMethod method,
                      Flavor feature_flavor);

/// Writes <path> (CSV: header + rows, shortest round-trip decimals) and the sidecar
/// <path stem>.meta.json. Rows must be non-empty.
void write_csv(const Dataset& ds, const std::string& path);

/// The sidecar path for a dataset CSV path ("d.csv" -> "d.meta.json").
std::string sidecar_path(const std::string& csv_path);

/// Reads a dataset written by write_csv; the round trip is bit-exact.
/// Distinct failures: IoError (missing csv or sidecar), SchemaError (width or
/// schema-version mismatch), ParseError (unparseable number).
Dataset read_csv(const std::string& path);

/// Seeded shuffle then split; disjoint and exhaustive. Throws std::invalid_argument
/// when either side would be empty or the fraction is not in (0, 1).
std::pair<Dataset, Dataset> split(const Dataset& ds, double train_fraction,
                                  std::uint64_t seed);

}  // namespace kickcast

#endif  // KICKCAST_DATASET_HPP
