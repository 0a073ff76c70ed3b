#include "kickcast/dense_network.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "kickcast/errors.hpp"
#include "kickcast/rng.hpp"
#include "kickcast/textio.hpp"

namespace kickcast {

std::string to_string(Activation a) {
    switch (a) {
        case Activation::kRelu: return "relu";
        case Activation::kLinear: return "linear";
        case Activation::kSoftmax: return "softmax";
    }
    return "?";
}

Activation activation_from_string(const std::string& s) {
    if (s == "relu") return Activation::kRelu;
    if (s == "linear") return Activation::kLinear;
    if (s == "softmax") return Activation::kSoftmax;
    throw std::invalid_argument("unknown activation '" + s + "'");
}

std::vector<double> Standardizer::apply(std::span<const double> x) const {
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        double s = stddev[i] > 1e-12 ? stddev[i] : 1.0;
        out[i] = (x[i] - mean[i]) / s;
    }
    return out;
}

namespace {

void apply_activation(Activation act, std::vector<double>& v) {
    switch (act) {
        case Activation::kLinear:
            break;
        case Activation::kRelu:
            for (double& x : v) x = x > 0.0 ? x : 0.0;
            break;
        case Activation::kSoftmax: {
            double mx = *std::max_element(v.begin(), v.end());
            double sum = 0.0;
            for (double& x : v) {
                x = std::exp(x - mx);
                sum += x;
            }
            for (double& x : v) x /= sum;
            break;
        }
    }
}

void affine(const DenseLayer& layer, const double* x, std::vector<double>& z) {
    z.assign(layer.biases.begin(), layer.biases.end());
    for (int o = 0; o < layer.out; ++o) {
        const double* w = layer.weights.data() + static_cast<std::size_t>(o) * layer.in;
        double acc = 0.0;
        for (int i = 0; i < layer.in; ++i) acc += w[i] * x[i];
        z[o] += acc;
    }
}

}  // namespace

std::vector<double> forward(const DenseNetwork& net, std::span<const double> input) {
    if (net.layers.empty()) throw SchemaError("forward: network has no layers");
    if (static_cast<int>(input.size()) != net.layers.front().in)
        throw SchemaError("forward: input width " + std::to_string(input.size()) +
                          " does not match layer width " +
                          std::to_string(net.layers.front().in));
    std::vector<double> a(input.begin(), input.end());
    std::vector<double> z;
    for (const auto& layer : net.layers) {
        affine(layer, a.data(), z);
        apply_activation(layer.activation, z);
        a = z;
    }
    return a;
}

namespace {

// Backprop over a batch of row pointers; returns the mean batch loss and adds the
// gradients of the mean loss into `grads`.
double backprop(const DenseNetwork& net, const std::vector<const std::vector<double>*>& xs,
                const std::vector<const std::vector<double>*>& ts, Loss loss,
                std::vector<LayerGrad>& grads) {
    const std::size_t batch = xs.size();
    const std::size_t n_layers = net.layers.size();
    const double inv_b = 1.0 / static_cast<double>(batch);

    std::vector<std::vector<double>> acts(n_layers + 1);  // acts[0] = input
    std::vector<std::vector<double>> preacts(n_layers);
    std::vector<double> delta, next_delta;

    double total_loss = 0.0;
    for (std::size_t s = 0; s < batch; ++s) {
        const std::vector<double>& x = *xs[s];
        const std::vector<double>& t = *ts[s];

        acts[0] = x;
        for (std::size_t l = 0; l < n_layers; ++l) {
            affine(net.layers[l], acts[l].data(), preacts[l]);
            acts[l + 1] = preacts[l];
            apply_activation(net.layers[l].activation, acts[l + 1]);
        }
        const std::vector<double>& out = acts[n_layers];
        const DenseLayer& last = net.layers.back();

        double sample_loss = 0.0;
        delta.assign(out.size(), 0.0);
        if (loss == Loss::kCrossEntropy) {
            if (last.activation != Activation::kSoftmax)
                throw std::invalid_argument(
                    "cross-entropy loss requires a softmax output layer");
            for (std::size_t k = 0; k < out.size(); ++k) {
                if (t[k] != 0.0) sample_loss -= t[k] * std::log(std::max(out[k], 1e-300));
                delta[k] = (out[k] - t[k]) * inv_b;
            }
        } else {
            std::vector<double> dout(out.size());
            for (std::size_t k = 0; k < out.size(); ++k) {
                double e = out[k] - t[k];
                sample_loss += 0.5 * e * e;
                dout[k] = e * inv_b;
            }
            switch (last.activation) {
                case Activation::kLinear:
                    delta = dout;
                    break;
                case Activation::kRelu:
                    for (std::size_t k = 0; k < out.size(); ++k)
                        delta[k] = preacts.back()[k] > 0.0 ? dout[k] : 0.0;
                    break;
                case Activation::kSoftmax: {
                    double dot = 0.0;
                    for (std::size_t k = 0; k < out.size(); ++k) dot += dout[k] * out[k];
                    for (std::size_t k = 0; k < out.size(); ++k)
                        delta[k] = out[k] * (dout[k] - dot);
                    break;
                }
            }
        }
        if (!std::isfinite(sample_loss))
            throw NumericError("non-finite loss at sample " + std::to_string(s));
        total_loss += sample_loss;

        for (std::size_t l = n_layers; l-- > 0;) {
            const DenseLayer& layer = net.layers[l];
            LayerGrad& g = grads[l];
            const std::vector<double>& a_prev = acts[l];
            for (int o = 0; o < layer.out; ++o) {
                double d = delta[o];
                if (d == 0.0) continue;
                double* gw = g.weights.data() + static_cast<std::size_t>(o) * layer.in;
                for (int i = 0; i < layer.in; ++i) gw[i] += d * a_prev[i];
                g.biases[o] += d;
            }
            if (l == 0) break;
            next_delta.assign(layer.in, 0.0);
            for (int o = 0; o < layer.out; ++o) {
                double d = delta[o];
                if (d == 0.0) continue;
                const double* w =
                    layer.weights.data() + static_cast<std::size_t>(o) * layer.in;
                for (int i = 0; i < layer.in; ++i) next_delta[i] += w[i] * d;
            }
            // Hidden activations are relu or linear.
            if (net.layers[l - 1].activation == Activation::kRelu)
                for (int i = 0; i < layer.in; ++i)
                    if (preacts[l - 1][i] <= 0.0) next_delta[i] = 0.0;
            delta = next_delta;
        }
    }
    return total_loss * inv_b;
}

std::vector<LayerGrad> make_grads(const DenseNetwork& net) {
    std::vector<LayerGrad> grads(net.layers.size());
    for (std::size_t l = 0; l < net.layers.size(); ++l) {
        grads[l].weights.assign(net.layers[l].weights.size(), 0.0);
        grads[l].biases.assign(net.layers[l].biases.size(), 0.0);
    }
    return grads;
}

}  // namespace

std::vector<LayerGrad> gradients(const DenseNetwork& net, const Matrix& inputs,
                                 const Matrix& targets, Loss loss, double* loss_out) {
    if (inputs.empty()) throw std::invalid_argument("gradients: empty batch");
    if (inputs.size() != targets.size())
        throw SchemaError("gradients: " + std::to_string(inputs.size()) + " inputs vs " +
                          std::to_string(targets.size()) + " targets");
    for (const auto& x : inputs)
        if (static_cast<int>(x.size()) != net.layers.front().in)
            throw SchemaError("gradients: input width " + std::to_string(x.size()) +
                              " does not match layer width " +
                              std::to_string(net.layers.front().in));
    for (const auto& t : targets)
        if (static_cast<int>(t.size()) != net.layers.back().out)
            throw SchemaError("gradients: target width " + std::to_string(t.size()) +
                              " does not match output width " +
                              std::to_string(net.layers.back().out));

    std::vector<const std::vector<double>*> xs, ts;
    xs.reserve(inputs.size());
    ts.reserve(targets.size());
    for (const auto& x : inputs) xs.push_back(&x);
    for (const auto& t : targets) ts.push_back(&t);

    auto grads = make_grads(net);
    double loss_value = backprop(net, xs, ts, loss, grads);
    if (loss_out) *loss_out = loss_value;
    return grads;
}

namespace {

DenseNetwork init_network(int input_width, const Task& task, const TrainConfig& cfg) {
    DenseNetwork net;
    net.input_width = input_width;
    net.task = task;

    std::vector<int> sizes;
    sizes.push_back(input_width);
    for (int h : cfg.hidden_sizes) {
        if (h <= 0) throw std::invalid_argument("hidden layer sizes must be positive");
        sizes.push_back(h);
    }
    sizes.push_back(task.output_width);

    Rng rng(mix_seed(cfg.seed, 0x1817));
    for (std::size_t l = 0; l + 1 < sizes.size(); ++l) {
        DenseLayer layer;
        layer.in = sizes[l];
        layer.out = sizes[l + 1];
        bool is_last = l + 2 == sizes.size();
        layer.activation = is_last ? (task.kind == Task::kClassification
                                          ? Activation::kSoftmax
                                          : Activation::kLinear)
                                   : Activation::kRelu;
        double sigma = std::sqrt(2.0 / static_cast<double>(layer.in));
        layer.weights.resize(static_cast<std::size_t>(layer.in) * layer.out);
        for (double& w : layer.weights) w = rng.gaussian(0.0, sigma);
        layer.biases.assign(layer.out, 0.0);
        net.layers.push_back(std::move(layer));
    }
    return net;
}

Standardizer fit_standardizer(const Matrix& inputs) {
    const std::size_t width = inputs[0].size();
    const double n = static_cast<double>(inputs.size());
    Standardizer st;
    st.mean.assign(width, 0.0);
    st.stddev.assign(width, 0.0);
    for (const auto& row : inputs)
        for (std::size_t i = 0; i < width; ++i) st.mean[i] += row[i];
    for (std::size_t i = 0; i < width; ++i) st.mean[i] /= n;
    for (const auto& row : inputs)
        for (std::size_t i = 0; i < width; ++i) {
            double d = row[i] - st.mean[i];
            st.stddev[i] += d * d;
        }
    for (std::size_t i = 0; i < width; ++i) st.stddev[i] = std::sqrt(st.stddev[i] / n);
    return st;
}

DenseNetwork train_impl(const Matrix& inputs, const Matrix& targets, const Task& task,
                        Loss loss, const TrainConfig& cfg, TrainReport* report) {
    if (inputs.empty()) throw std::invalid_argument("train: empty training set");
    const int width = static_cast<int>(inputs[0].size());
    for (const auto& row : inputs)
        if (static_cast<int>(row.size()) != width)
            throw SchemaError("train: ragged input rows");
    if (cfg.learning_rate < 0.0 || cfg.batch_size <= 0 || cfg.epochs < 0)
        throw std::invalid_argument("train: invalid config");

    std::optional<Standardizer> st;
    Matrix xs;
    const Matrix* data = &inputs;
    if (cfg.standardize_features) {
        st = fit_standardizer(inputs);
        xs.reserve(inputs.size());
        for (const auto& row : inputs) xs.push_back(st->apply(row));
        data = &xs;
    }

    DenseNetwork net = init_network(width, task, cfg);

    std::vector<LayerGrad> velocity = make_grads(net);
    std::vector<LayerGrad> grads = make_grads(net);

    std::vector<std::size_t> order(inputs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    Rng shuffle_rng(mix_seed(cfg.seed, 0x0D0E));

    if (report) {
        report->epoch_loss.clear();
        report->n_train = static_cast<int>(inputs.size());
        std::vector<const std::vector<double>*> xp, tp;
        for (std::size_t i = 0; i < data->size(); ++i) {
            xp.push_back(&(*data)[i]);
            tp.push_back(&targets[i]);
        }
        auto scratch = make_grads(net);
        report->initial_loss = backprop(net, xp, tp, loss, scratch);
    }

    std::vector<const std::vector<double>*> bx, bt;
    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        shuffle_rng.shuffle(order);
        double epoch_loss = 0.0;
        std::size_t covered = 0;
        for (std::size_t begin = 0; begin < order.size(); begin += cfg.batch_size) {
            std::size_t end = std::min(order.size(), begin + cfg.batch_size);
            bx.clear();
            bt.clear();
            for (std::size_t i = begin; i < end; ++i) {
                bx.push_back(&(*data)[order[i]]);
                bt.push_back(&targets[order[i]]);
            }
            for (auto& g : grads) {
                std::fill(g.weights.begin(), g.weights.end(), 0.0);
                std::fill(g.biases.begin(), g.biases.end(), 0.0);
            }
            double batch_loss;
            try {
                batch_loss = backprop(net, bx, bt, loss, grads);
            } catch (const NumericError& e) {
                throw NumericError(std::string(e.what()) + " (epoch " +
                                   std::to_string(epoch) + ", batch " +
                                   std::to_string(begin / cfg.batch_size) + ")");
            }
            epoch_loss += batch_loss * static_cast<double>(end - begin);
            covered += end - begin;

            for (std::size_t l = 0; l < net.layers.size(); ++l) {
                auto& layer = net.layers[l];
                auto& v = velocity[l];
                const auto& g = grads[l];
                for (std::size_t i = 0; i < layer.weights.size(); ++i) {
                    v.weights[i] = cfg.momentum * v.weights[i] -
                                   cfg.learning_rate * g.weights[i];
                    layer.weights[i] += v.weights[i];
                }
                for (std::size_t i = 0; i < layer.biases.size(); ++i) {
                    v.biases[i] = cfg.momentum * v.biases[i] -
                                  cfg.learning_rate * g.biases[i];
                    layer.biases[i] += v.biases[i];
                }
            }
        }
        if (report)
            report->epoch_loss.push_back(epoch_loss / static_cast<double>(covered));
    }

    net.standardizer = std::move(st);
    return net;
}

}  // namespace

DenseNetwork train_classifier(const Matrix& inputs, const std::vector<int>& labels,
                              int n_classes, const TrainConfig& cfg, TrainReport* report) {
    if (inputs.size() != labels.size())
        throw SchemaError("train_classifier: " + std::to_string(inputs.size()) +
                          " inputs vs " + std::to_string(labels.size()) + " labels");
    if (n_classes < 2)
        throw std::invalid_argument("train_classifier: need at least 2 classes");
    std::vector<bool> present(n_classes, false);
    for (int y : labels) {
        if (y < 0 || y >= n_classes)
            throw std::invalid_argument("train_classifier: label " + std::to_string(y) +
                                        " outside [0, " + std::to_string(n_classes) + ")");
        present[y] = true;
    }
    int distinct = 0;
    for (bool b : present) distinct += b ? 1 : 0;
    if (distinct < 2)
        throw std::invalid_argument(
            "train_classifier: fewer than 2 classes present in training data");

    Matrix targets(labels.size(), std::vector<double>(n_classes, 0.0));
    for (std::size_t i = 0; i < labels.size(); ++i) targets[i][labels[i]] = 1.0;
    return train_impl(inputs, targets, Task{Task::kClassification, n_classes},
                      Loss::kCrossEntropy, cfg, report);
}

DenseNetwork train_regressor(const Matrix& inputs, const Matrix& targets,
                             const TrainConfig& cfg, TrainReport* report) {
    if (inputs.size() != targets.size())
        throw SchemaError("train_regressor: " + std::to_string(inputs.size()) +
                          " inputs vs " + std::to_string(targets.size()) + " targets");
    if (targets.empty() || targets[0].empty())
        throw std::invalid_argument("train_regressor: empty targets");
    int out = static_cast<int>(targets[0].size());
    return train_impl(inputs, targets, Task{Task::kRegression, out}, Loss::kSquaredError,
                      cfg, report);
}

namespace {

constexpr const char* kMagic = "KICKCAST-DNN v1";
constexpr const char* kMagicPrefix = "KICKCAST-DNN";

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    /// Next non-comment line; false at EOF.
    bool next(std::string& out) {
        while (std::getline(in_, out)) {
            ++line_no_;
            if (!out.empty() && out[0] == '#') continue;
            if (!out.empty() && out.back() == '\r') out.pop_back();
            return true;
        }
        return false;
    }

    int line_no() const { return line_no_; }

private:
    std::istream& in_;
    int line_no_ = 0;
};

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

std::vector<double> parse_value_line(LineReader& reader, std::size_t expected,
                                     const char* what) {
    std::string line;
    if (!reader.next(line))
        throw ParseError(std::string("unexpected end of file while reading ") + what,
                         reader.line_no() + 1);
    auto tokens = split_ws(line);
    if (tokens.size() != expected)
        throw ParseError(std::string(what) + ": expected " + std::to_string(expected) +
                             " values, got " + std::to_string(tokens.size()),
                         reader.line_no());
    std::vector<double> vals(expected);
    for (std::size_t i = 0; i < expected; ++i)
        vals[i] = parse_double(tokens[i], reader.line_no());
    return vals;
}

}  // namespace

void save_text(const DenseNetwork& net, const std::string& path,
               const std::string& comment) {
    std::string out = kMagic;
    out += '\n';
    out += "task ";
    out += net.task.kind == Task::kClassification ? "classification" : "regression";
    out += ' ';
    out += std::to_string(net.task.output_width);
    out += '\n';
    if (net.standardizer) {
        out += "standardize " + std::to_string(net.standardizer->mean.size()) + "\n";
        for (std::size_t i = 0; i < net.standardizer->mean.size(); ++i) {
            if (i) out += ' ';
            append_double(out, net.standardizer->mean[i]);
        }
        out += '\n';
        for (std::size_t i = 0; i < net.standardizer->stddev.size(); ++i) {
            if (i) out += ' ';
            append_double(out, net.standardizer->stddev[i]);
        }
        out += '\n';
    }
    for (const auto& layer : net.layers) {
        out += "layer " + std::to_string(layer.in) + " " + std::to_string(layer.out) +
               " " + to_string(layer.activation) + "\n";
        for (int o = 0; o < layer.out; ++o) {
            const double* w = layer.weights.data() + static_cast<std::size_t>(o) * layer.in;
            for (int i = 0; i < layer.in; ++i) {
                if (i) out += ' ';
                append_double(out, w[i]);
            }
            out += '\n';
        }
        for (int o = 0; o < layer.out; ++o) {
            if (o) out += ' ';
            append_double(out, layer.biases[o]);
        }
        out += '\n';
    }
    if (!comment.empty()) {
        std::istringstream lines(comment);
        std::string line;
        while (std::getline(lines, line)) out += "# " + line + "\n";
    }

    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path + " for writing");
    f << out;
    if (!f) throw IoError("failed writing " + path);
}

DenseNetwork load_text(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path);
    LineReader reader(f);

    std::string line;
    if (!reader.next(line)) throw ParseError("empty model file " + path, 1);
    if (line != kMagic) {
        if (line.rfind(kMagicPrefix, 0) == 0)
            throw SchemaError("unsupported model version '" + line +
                              "' (this loader reads '" + kMagic + "')");
        throw SchemaError("bad magic line '" + line + "' in " + path);
    }

    if (!reader.next(line))
        throw ParseError("unexpected end of file before task line", reader.line_no() + 1);
    auto task_tokens = split_ws(line);
    if (task_tokens.size() != 3 || task_tokens[0] != "task" ||
        (task_tokens[1] != "classification" && task_tokens[1] != "regression"))
        throw ParseError("malformed task line '" + line + "'", reader.line_no());
    DenseNetwork net;
    net.task.kind = task_tokens[1] == "classification" ? Task::kClassification
                                                       : Task::kRegression;
    net.task.output_width = static_cast<int>(parse_double(task_tokens[2], reader.line_no()));

    if (!reader.next(line))
        throw ParseError("unexpected end of file after task line", reader.line_no() + 1);

    if (line.rfind("standardize", 0) == 0) {
        auto tokens = split_ws(line);
        if (tokens.size() != 2)
            throw ParseError("malformed standardize line '" + line + "'", reader.line_no());
        auto width = static_cast<std::size_t>(parse_double(tokens[1], reader.line_no()));
        Standardizer st;
        st.mean = parse_value_line(reader, width, "standardize means");
        st.stddev = parse_value_line(reader, width, "standardize stds");
        net.standardizer = std::move(st);
        if (!reader.next(line))
            throw ParseError("unexpected end of file before first layer",
                             reader.line_no() + 1);
    }

    while (true) {
        auto tokens = split_ws(line);
        if (tokens.size() != 4 || tokens[0] != "layer")
            throw ParseError("expected a layer line, got '" + line + "'", reader.line_no());
        DenseLayer layer;
        layer.in = static_cast<int>(parse_double(tokens[1], reader.line_no()));
        layer.out = static_cast<int>(parse_double(tokens[2], reader.line_no()));
        if (layer.in <= 0 || layer.out <= 0)
            throw SchemaError("invalid layer dimensions at line " +
                              std::to_string(reader.line_no()));
        try {
            layer.activation = activation_from_string(tokens[3]);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), reader.line_no());
        }
        if (!net.layers.empty() && net.layers.back().out != layer.in)
            throw SchemaError("layer width " + std::to_string(layer.in) +
                              " does not chain from previous width " +
                              std::to_string(net.layers.back().out) + " at line " +
                              std::to_string(reader.line_no()));
        if (!net.layers.empty() && net.layers.back().activation == Activation::kSoftmax)
            throw SchemaError("softmax before a non-final layer at line " +
                              std::to_string(reader.line_no()));

        layer.weights.reserve(static_cast<std::size_t>(layer.in) * layer.out);
        for (int o = 0; o < layer.out; ++o) {
            auto row = parse_value_line(reader, layer.in, "weight row");
            layer.weights.insert(layer.weights.end(), row.begin(), row.end());
        }
        layer.biases = parse_value_line(reader, layer.out, "bias row");
        net.layers.push_back(std::move(layer));

        if (!reader.next(line)) break;  // clean EOF after a completed layer
    }

    net.input_width = net.layers.front().in;
    if (net.layers.back().out != net.task.output_width)
        throw SchemaError("task width " + std::to_string(net.task.output_width) +
                          " does not match final layer width " +
                          std::to_string(net.layers.back().out));
    if (net.task.kind == Task::kClassification &&
        net.layers.back().activation != Activation::kSoftmax)
        throw SchemaError("classification model must end in a softmax layer");
    if (net.standardizer &&
        static_cast<int>(net.standardizer->mean.size()) != net.input_width)
        throw SchemaError("standardize width " +
                          std::to_string(net.standardizer->mean.size()) +
                          " does not match input width " + std::to_string(net.input_width));
    for (const auto& layer : net.layers) {
        for (double w : layer.weights)
            if (!std::isfinite(w)) throw NumericError("non-finite weight in " + path);
        for (double b : layer.biases)
            if (!std::isfinite(b)) throw NumericError("non-finite bias in " + path);
    }
    return net;
}

std::vector<double> predict(const DenseNetwork& net, std::span<const double> row) {
    if (static_cast<int>(row.size()) != net.input_width)
        throw SchemaError("predict: row width " + std::to_string(row.size()) +
                          " does not match model input width " +
                          std::to_string(net.input_width));
    if (net.standardizer) {
        auto scaled = net.standardizer->apply(row);
        return forward(net, scaled);
    }
    return forward(net, row);
}

int predict_class(const DenseNetwork& net, std::span<const double> row) {
    auto probs = predict(net, row);
    int best = 0;
    for (std::size_t k = 1; k < probs.size(); ++k)
        if (probs[k] > probs[best]) best = static_cast<int>(k);
    return best;
}

}  // namespace kickcast
