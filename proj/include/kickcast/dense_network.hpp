#ifndef KICKCAST_DENSE_NETWORK_HPP
#define KICKCAST_DENSE_NETWORK_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kickcast {

enum class Activation { kRelu, kLinear, kSoftmax };

std::string to_string(Activation a);
Activation activation_from_string(const std::string& s);

struct DenseLayer {
    int in = 0;
    int out = 0;
    std::vector<double> weights;  // out x in, row-major; row i feeds output unit i
    std::vector<double> biases;   // out
    Activation activation = Activation::kLinear;
};

struct Task {
    enum Kind { kClassification, kRegression } kind = kClassification;
    int output_width = 0;  // classes or regression outputs
};

/// Per-column input scaling fitted on the training split and stored in the model file.
struct Standardizer {
    std::vector<double> mean;
    std::vector<double> stddev;

    /// (x - mean) / stddev, with near-zero stddev treated as 1 (constant columns).
    std::vector<double> apply(std::span<const double> x) const;
};

struct DenseNetwork {
    int input_width = 0;
    Task task;
    std::optional<Standardizer> standardizer;
    std::vector<DenseLayer> layers;
};

using Matrix = std::vector<std::vector<double>>;

/// Affine-then-activation composition over the layer stack. Standardization is NOT
/// applied here; use predict() for schema-level inputs.
/// Throws SchemaError on input width mismatch.
std::vector<double> forward(const DenseNetwork& net, std::span<const double> input);

enum class Loss { kCrossEntropy, kSquaredError };

struct LayerGrad {
    std::vector<double> weights;
    std::vector<double> biases;
};

/// Exact backpropagation gradients of the mean batch loss. Classification targets are
/// one-hot (or soft) rows; regression targets are raw rows. Cross-entropy requires a
/// softmax output layer. Throws NumericError naming the sample index when a sample's
/// loss is non-finite; SchemaError on width mismatches.
std::vector<LayerGrad> gradients(const DenseNetwork& net, const Matrix& inputs,
                                 const Matrix& targets, Loss loss,
                                 double* loss_out = nullptr);

struct TrainConfig {
    std::vector<int> hidden_sizes = {128, 128};
    double learning_rate = 0.01;
    double momentum = 0.9;
    int batch_size = 64;
    int epochs = 30;
    std::uint64_t seed = 1;
    bool standardize_features = true;
};

struct TrainReport {
    std::vector<double> epoch_loss;  // mean loss per epoch
    double initial_loss = 0.0;       // before the first update
    int n_train = 0;
};

/// Mini-batch SGD with momentum, seeded shuffling, He initialization. Deterministic
/// given the config. Classification labels are class ids in [0, n_classes).
DenseNetwork train_classifier(const Matrix& inputs, const std::vector<int>& labels,
                              int n_classes, const TrainConfig& cfg,
                              TrainReport* report = nullptr);
DenseNetwork train_regressor(const Matrix& inputs, const Matrix& targets,
                             const TrainConfig& cfg, TrainReport* report = nullptr);

/// Portable text weight format, version "KICKCAST-DNN v1". Lines:
///   KICKCAST-DNN v1
///   task <classification|regression> <n>
///   standardize <width>         (only when standardization is stored)
///   <width means> / <width stds>
///   layer <in> <out> <relu|linear|softmax>
///   <out> weight rows of <in> values, then one line of <out> biases
/// Values are whitespace-delimited shortest-round-trip decimals. Lines starting with
/// '#' are comments and ignored by the loader; save_text appends `comment` (if any)
/// as trailing '#' lines.
void save_text(const DenseNetwork& net, const std::string& path,
               const std::string& comment = "");

/// Loads a model saved by save_text. Distinct failures: IoError (unreadable file),
/// SchemaError (bad magic/version or dimension mismatch), ParseError (bad number),
/// each naming the offending line.
DenseNetwork load_text(const std::string& path);

/// Applies the stored standardization, then forward(). Width mismatch raises
/// SchemaError naming both widths.
std::vector<double> predict(const DenseNetwork& net, std::span<const double> row);

/// Argmax of predict(); ties resolve to the lowest class index.
int predict_class(const DenseNetwork& net, std::span<const double> row);

}  // namespace kickcast

#endif  // KICKCAST_DENSE_NETWORK_HPP
