#include "kickcast/dataset.hpp"

#include <filesystem>
#include <fstream>
#include <numeric>

#include "json.hpp"
#include "kickcast/rng.hpp"
#include "kickcast/textio.hpp"

namespace kickcast {

Dataset build_dataset(const std::vector<KickEvent>& events, OrderingMethod method,
                      Flavor feature_flavor) {
    if (events.empty()) throw std::invalid_argument("build_dataset: no events");
    Dataset ds;
    ds.schema_version = FeatureSchema::standard().version;
    ds.method = method;
    ds.feature_flavor = feature_flavor;
    ds.rows.reserve(events.size());
    for (const auto& ev : events) {
        const WorldState& feature_state =
            feature_flavor == Flavor::kFull ? ev.fws : ev.ws;
        FeatureRow features = extract_row(feature_state, method, ev.event_id);
        Ordering ordering = teammate_ordering(feature_state, method);
        LabelRow labels = generate_labels(ev.action, ordering, ev.fws);
        ds.rows.emplace_back(std::move(features), std::move(labels));
    }
    return ds;
}

std::string sidecar_path(const std::string& csv_path) {
    std::filesystem::path p(csv_path);
    p.replace_extension(".meta.json");
    return p.string();
}

namespace {

std::string flavor_name(Flavor f) { return f == Flavor::kFull ? "full" : "noisy"; }

Flavor flavor_from_name(const std::string& s) {
    if (s == "full") return Flavor::kFull;
    if (s == "noisy") return Flavor::kNoisy;
    throw std::invalid_argument("unknown flavor '" + s + "' (valid: full, noisy)");
}

}  // namespace

void write_csv(const Dataset& ds, const std::string& path) {
    if (ds.rows.empty()) throw std::invalid_argument("write_csv: empty dataset");
    const FeatureSchema& schema = FeatureSchema::standard();

    std::string out;
    for (int i = 0; i < schema.width(); ++i) {
        if (i) out += ',';
        out += schema.column_names[i];
    }
    for (const auto& name : LabelRow::column_names()) {
        out += ',';
        out += name;
    }
    out += '\n';

    for (const auto& [features, labels] : ds.rows) {
        for (std::size_t i = 0; i < features.values.size(); ++i) {
            if (i) out += ',';
            append_double(out, features.values[i]);
        }
        for (double v : labels.to_values()) {
            out += ',';
            append_double(out, v);
        }
        out += '\n';
    }

    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path + " for writing");
    f << out;
    if (!f) throw IoError("failed writing " + path);

    nlohmann::ordered_json meta;
    meta["format"] = "kickcast-dataset";
    meta["schema_version"] = ds.schema_version;
    meta["method"] = to_string(ds.method);
    meta["flavor"] = flavor_name(ds.feature_flavor);
    meta["source"] = ds.source;
    meta["rows"] = ds.rows.size();
    meta["feature_width"] = schema.width();
    meta["label_width"] = LabelRow::column_names().size();
    std::string mp = sidecar_path(path);
    std::ofstream mf(mp, std::ios::binary);
    if (!mf) throw IoError("cannot open " + mp + " for writing");
    mf << meta.dump(2) << '\n';
}

Dataset read_csv(const std::string& path) {
    const FeatureSchema& schema = FeatureSchema::standard();

    std::string mp = sidecar_path(path);
    std::ifstream mf(mp, std::ios::binary);
    if (!mf) throw IoError("missing dataset sidecar " + mp);
    nlohmann::ordered_json meta;
    try {
        meta = nlohmann::ordered_json::parse(mf);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("invalid JSON in " + mp + ": " + e.what());
    }
    std::string version = meta.value("schema_version", "");
    if (version != schema.version)
        throw SchemaError("dataset schema version '" + version +
                          "' does not match current '" + schema.version + "'");

    Dataset ds;
    ds.schema_version = version;
    ds.method = ordering_method_from_string(meta.value("method", ""));
    ds.feature_flavor = flavor_from_name(meta.value("flavor", ""));
    ds.source = meta.value("source", "");

    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("missing dataset file " + path);

    const std::size_t total_width =
        static_cast<std::size_t>(schema.width()) + LabelRow::column_names().size();

    std::string header;
    if (!std::getline(f, header)) throw ParseError("empty dataset file " + path, 1);
    {
        std::size_t n = header.empty() ? 0 : 1;
        for (char c : header)
            if (c == ',') ++n;
        if (n != total_width)
            throw SchemaError("dataset header has " + std::to_string(n) +
                              " columns, schema requires " + std::to_string(total_width));
    }

    std::string line;
    int line_no = 1;
    while (std::getline(f, line)) {
        ++line_no;
        if (line.empty()) continue;
        FeatureRow features;
        features.method = ds.method;
        features.event_id = static_cast<std::int64_t>(ds.rows.size());
        features.values.reserve(schema.width());
        std::array<double, 8> label_vals{};
        std::size_t idx = 0, start = 0;
        while (true) {
            std::size_t comma = line.find(',', start);
            std::string_view tok(line.data() + start,
                                 (comma == std::string::npos ? line.size() : comma) - start);
            double v = parse_double(tok, line_no);
            if (idx < static_cast<std::size_t>(schema.width()))
                features.values.push_back(v);
            else if (idx < total_width)
                label_vals[idx - schema.width()] = v;
            ++idx;
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (idx != total_width)
            throw SchemaError("dataset row at line " + std::to_string(line_no) + " has " +
                              std::to_string(idx) + " values, header requires " +
                              std::to_string(total_width));
        ds.rows.emplace_back(std::move(features), LabelRow::from_values(label_vals));
    }
    if (ds.rows.empty()) throw ParseError("dataset file " + path + " has no rows", 1);
    return ds;
}

std::pair<Dataset, Dataset> split(const Dataset& ds, double train_fraction,
                                  std::uint64_t seed) {
    if (!(train_fraction > 0.0 && train_fraction < 1.0))
        throw std::invalid_argument("split: train_fraction must be in (0, 1)");
    std::size_t n = ds.rows.size();
    std::size_t n_train = static_cast<std::size_t>(train_fraction * static_cast<double>(n));
    if (n_train == 0 || n_train == n)
        throw std::invalid_argument("split: degenerate split sizes (" +
                                    std::to_string(n_train) + "/" + std::to_string(n) + ")");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    Rng rng(mix_seed(seed, 0x5B117));
    rng.shuffle(order);

    Dataset train = ds, test = ds;
    train.rows.clear();
    test.rows.clear();
    for (std::size_t i = 0; i < n; ++i)
        (i < n_train ? train : test).rows.push_back(ds.rows[order[i]]);
    return {std::move(train), std::move(test)};
}

}  // namespace kickcast
