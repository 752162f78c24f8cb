#include "cstar/io.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "cstar/error.hpp"

namespace cstar {

namespace {

std::string line_anchor(std::string_view text, std::size_t byte) {
    byte = std::min(byte, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < byte; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return std::to_string(line) + ":" + std::to_string(column);
}

Json parse_document(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        std::string what = e.what();
        // Drop nlohmann's "[json.exception.parse_error.101] parse error at ...: " prefix noise.
        if (const auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
        throw InputError(line_anchor(text, e.byte), what);
    }
}

const Json& field(const Json& object, const std::string& key, const std::string& path) {
    if (!object.is_object()) throw InputError(path.empty() ? "/" : path, "expected an object");
    const auto it = object.find(key);
    if (it == object.end()) throw InputError(path + "/" + key, "missing required field");
    return *it;
}

double number(const Json& value, const std::string& path) {
    if (!value.is_number()) throw InputError(path, "expected a number");
    const double x = value.get<double>();
    if (!std::isfinite(x)) throw InputError(path, "expected a finite number");
    return x;
}

std::size_t positive_int(const Json& value, const std::string& path) {
    if (!value.is_number_integer() || value.get<long long>() <= 0) {
        throw InputError(path, "expected a positive integer");
    }
    return static_cast<std::size_t>(value.get<long long>());
}

Complex complex_entry(const Json& value, const std::string& path) {
    if (value.is_number()) return {number(value, path), 0.0};
    if (!value.is_array() || value.size() != 2) throw InputError(path, "expected [re, im]");
    return {number(value[0], path + "/0"), number(value[1], path + "/1")};
}

bool is_complex_entry(const Json& value) {
    return value.is_number() || (value.is_array() && value.size() == 2 && value[0].is_number());
}

Matrix parse_matrix(const Json& value, std::size_t n, std::size_t k, const std::string& path) {
    if (!value.is_array()) throw InputError(path, "expected an array of complex entries");
    std::vector<Complex> entries;
    entries.reserve(n * k);
    const bool nested = !value.empty() && value[0].is_array() && !is_complex_entry(value[0]);
    if (nested) {
        if (value.size() != n) {
            throw InputError(path, "expected " + std::to_string(n) + " rows, got " +
                                       std::to_string(value.size()));
        }
        for (std::size_t i = 0; i < n; ++i) {
            const std::string row_path = path + "/" + std::to_string(i);
            if (!value[i].is_array() || value[i].size() != k) {
                throw InputError(row_path, "expected a row of " + std::to_string(k) + " entries");
            }
            for (std::size_t j = 0; j < k; ++j) {
                entries.push_back(complex_entry(value[i][j], row_path + "/" + std::to_string(j)));
            }
        }
    } else {
        if (value.size() != n * k) {
            throw InputError(path, "expected " + std::to_string(n * k) + " entries, got " +
                                       std::to_string(value.size()));
        }
        for (std::size_t i = 0; i < value.size(); ++i) {
            entries.push_back(complex_entry(value[i], path + "/" + std::to_string(i)));
        }
    }
    return Matrix(n, k, std::move(entries));
}

std::vector<double> number_list(const Json& value, const std::string& path) {
    if (!value.is_array() || value.empty()) throw InputError(path, "expected a non-empty array");
    std::vector<double> out;
    out.reserve(value.size());
    for (std::size_t i = 0; i < value.size(); ++i) {
        out.push_back(number(value[i], path + "/" + std::to_string(i)));
    }
    return out;
}

std::vector<Matrix> matrix_list(const Json& value, std::size_t n, std::size_t k,
                                const std::string& path) {
    if (!value.is_array()) throw InputError(path, "expected an array of matrices");
    std::vector<Matrix> out;
    out.reserve(value.size());
    for (std::size_t i = 0; i < value.size(); ++i) {
        out.push_back(parse_matrix(value[i], n, k, path + "/" + std::to_string(i)));
    }
    return out;
}

}  // namespace

GrussInstance parse_instance(std::string_view text) {
    const Json doc = parse_document(text);
    const Json& dims = field(doc, "dims", "");
    const std::size_t n = positive_int(field(dims, "n", "/dims"), "/dims/n");
    const std::size_t k = positive_int(field(dims, "k", "/dims"), "/dims/k");

    std::vector<double> nodes = number_list(field(doc, "nodes", ""), "/nodes");
    std::vector<double> weights = number_list(field(doc, "weights", ""), "/weights");
    MeasurePtr measure;
    try {
        measure = make_measure(std::move(nodes), std::move(weights));
    } catch (const InvalidMeasure& e) {
        throw InputError("/weights", e.what());
    }

    auto values = [&](const char* key) {
        std::vector<Matrix> list = matrix_list(field(doc, key, ""), n, k, std::string("/") + key);
        if (list.size() != measure->size()) {
            throw InputError(std::string("/") + key, "expected " + std::to_string(measure->size()) +
                                                         " values (one per node), got " +
                                                         std::to_string(list.size()));
        }
        return SampledFunction(measure, std::move(list));
    };
    auto element = [&](const char* key) {
        return parse_matrix(field(doc, key, ""), n, k, std::string("/") + key);
    };

    SampledFunction f = values("f_values");
    SampledFunction g = values("g_values");
    BoundingPair pf{element("x"), element("x_prime")};
    BoundingPair pg{element("y"), element("y_prime")};
    return {std::move(f), std::move(g), std::move(pf), std::move(pg)};
}

Json matrix_to_json(const Matrix& m) {
    Json out = Json::array();
    for (const Complex& z : m.entries()) out.push_back({z.real(), z.imag()});
    return out;
}

Json instance_to_json(const GrussInstance& instance) {
    Json doc;
    doc["dims"] = {{"n", instance.f.rows()}, {"k", instance.f.cols()}};
    doc["nodes"] = instance.f.measure().nodes();
    doc["weights"] = instance.f.measure().weights();
    Json f_values = Json::array();
    Json g_values = Json::array();
    for (const Matrix& v : instance.f.values()) f_values.push_back(matrix_to_json(v));
    for (const Matrix& v : instance.g.values()) g_values.push_back(matrix_to_json(v));
    doc["f_values"] = std::move(f_values);
    doc["g_values"] = std::move(g_values);
    doc["x"] = matrix_to_json(instance.pf.lower);
    doc["x_prime"] = matrix_to_json(instance.pf.upper);
    doc["y"] = matrix_to_json(instance.pg.lower);
    doc["y_prime"] = matrix_to_json(instance.pg.upper);
    return doc;
}

Json report_to_json(const InequalityReport& r, const InstanceMeta& meta) {
    Json out;
    out["L0"] = r.L0;
    out["L1"] = r.L1;
    out["L2"] = r.L2;
    out["L3"] = r.L3;
    out["slack01"] = r.slack01;
    out["slack12"] = r.slack12;
    out["slack23"] = r.slack23;
    out["premise_margin_f"] = r.premise_margin_f;
    out["premise_margin_g"] = r.premise_margin_g;
    out["identity_residual_f"] = r.identity_residual_f;
    out["identity_residual_g"] = r.identity_residual_g;
    out["premise_holds"] = r.premise_holds;
    out["chain_holds"] = r.chain_holds;
    out["identities_hold"] = r.identities_hold;
    out["pass"] = r.pass;
    out["tolerance_inequality"] = r.tolerance_inequality;
    out["tolerance_identity"] = r.tolerance_identity;
    Json instance{{"n", meta.n}, {"k", meta.k}, {"nodes", meta.nodes}};
    instance["seed"] = meta.seed ? Json(*meta.seed) : Json(nullptr);
    out["instance"] = std::move(instance);
    return out;
}

CampaignConfig parse_config(std::string_view text, CampaignConfig base) {
    const Json doc = parse_document(text);
    if (!doc.is_object()) throw InputError("/", "expected an object");
    for (const auto& [key, value] : doc.items()) {
        const std::string path = "/" + key;
        auto integer = [&]() {
            if (!value.is_number_integer()) throw InputError(path, "expected an integer");
            return value.get<long long>();
        };
        if (key == "seed") {
            if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<long long>() >= 0)) {
                throw InputError(path, "expected a non-negative integer");
            }
            base.seed = value.get<std::uint64_t>();
        } else if (key == "instances") {
            base.instances = static_cast<int>(std::clamp(integer(), -1LL, 1LL << 30));
        } else if (key == "max_n") {
            base.max_n = static_cast<int>(std::clamp(integer(), -1LL, 1000LL));
        } else if (key == "max_k") {
            base.max_k = static_cast<int>(std::clamp(integer(), -1LL, 1000LL));
        } else if (key == "max_nodes") {
            base.max_nodes = static_cast<int>(std::clamp(integer(), -1LL, 100000LL));
        } else if (key == "jobs") {
            base.jobs = static_cast<int>(std::clamp(integer(), -1LL, 4096LL));
        } else if (key == "tol_id") {
            base.tolerance_identity = number(value, path);
        } else if (key == "tol_ineq") {
            base.tolerance_inequality = number(value, path);
        } else if (key == "out") {
            if (!value.is_string()) throw InputError(path, "expected a string");
            base.output_dir = value.get<std::string>();
        } else {
            throw InputError(path, "unknown config key");
        }
    }
    return base;
}

Json summary_to_json(const CampaignSummary& s, const CampaignConfig& config) {
    Json out;
    out["instances"] = s.instances;
    out["violations"] = s.violations;
    out["identity_failures"] = s.identity_failures;
    out["worst_relative_slack01"] = s.worst_slack01;
    out["worst_relative_slack12"] = s.worst_slack12;
    out["worst_relative_slack23"] = s.worst_slack23;
    out["worst_relative_premise_margin"] = s.worst_premise_margin;
    out["worst_relative_identity_residual"] = s.worst_identity_residual;
    out["runtime_seconds"] = s.runtime_seconds;
    out["config"] = {{"seed", config.seed},
                     {"instances", config.instances},
                     {"max_n", config.max_n},
                     {"max_k", config.max_k},
                     {"max_nodes", config.max_nodes},
                     {"tol_id", config.tolerance_identity},
                     {"tol_ineq", config.tolerance_inequality},
                     {"jobs", config.jobs}};
    return out;
}

Json exp_report_to_json(const ExpAppReport& r) {
    Json out;
    out["gram_integral"] = matrix_to_json(r.gram_integral);
    out["mean_abs_sq"] = matrix_to_json(r.mean_abs_sq);
    out["closed_form"] = matrix_to_json(r.closed_form);
    out["exp_abs_sq"] = matrix_to_json(r.exp_abs_sq);
    out["margin_i"] = r.margin_variance;
    out["margin_ii"] = r.margin_bound;
    out["margin_iii"] = r.margin_combined;
    out["premise_margin"] = r.premise_margin;
    out["quadrature_error"] = r.quadrature_error;
    return out;
}

}  // namespace cstar
