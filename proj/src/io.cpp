#include "mixorder/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <system_error>

#include "mixorder/errors.hpp"

namespace mixorder {

namespace {

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

void reject_unknown_keys(const Json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) {
        throw FormatError("'" + (path.empty() ? std::string("<root>") : path) + "' must be a JSON object");
    }
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed) known = known || item.key() == key;
        if (!known) {
            throw FormatError("unknown key '" + join(path, item.key()) + "'");
        }
    }
}

const Json& require(const Json& obj, const char* key, const std::string& path) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        throw FormatError("missing key '" + join(path, key) + "'");
    }
    return *it;
}

double as_number(const Json& v, const std::string& where) {
    if (!v.is_number()) {
        throw FormatError("'" + where + "' must be a number");
    }
    return v.get<double>();
}

std::vector<double> as_numbers(const Json& v, const std::string& where) {
    if (!v.is_array()) {
        throw FormatError("'" + where + "' must be an array of numbers");
    }
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out.push_back(as_number(v[i], where + "[" + std::to_string(i) + "]"));
    }
    return out;
}

std::string as_string(const Json& v, const std::string& where) {
    if (!v.is_string()) {
        throw FormatError("'" + where + "' must be a string");
    }
    return v.get<std::string>();
}

template <class F>
auto rethrow_as_format(const std::string& where, F&& build) {
    try {
        return build();
    } catch (const FormatError&) {
        throw;
    } catch (const Error& e) {
        throw FormatError("'" + where + "': " + e.what());
    }
}

ParameterMatrix matrix_from_json(const Json& v, const std::string& path) {
    reject_unknown_keys(v, path, {"p", "theta"});
    auto top = as_numbers(require(v, "p", path), join(path, "p"));
    auto bottom = as_numbers(require(v, "theta", path), join(path, "theta"));
    return rethrow_as_format(path, [&] { return ParameterMatrix(std::move(top), std::move(bottom)); });
}

Json nullable(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace

std::size_t default_grid_points() {
    const char* raw = std::getenv("MIXORDER_GRID_POINTS");
    if (raw == nullptr || *raw == '\0') {
        return EvaluationGrid::kDefaultPoints;
    }
    const std::string text(raw);
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size() || value == 0) {
        throw FormatError("MIXORDER_GRID_POINTS must be a positive integer, got '" + text + "'");
    }
    return value;
}

Scenario scenario_from_json(const Json& doc) {
    reject_unknown_keys(doc, "",
                        {"baseline", "model_variant", "common", "matrix_a", "chain", "matrix_b", "grid", "theorem_id"});

    const Json& base = require(doc, "baseline", "");
    reject_unknown_keys(base, "baseline", {"kind", "params"});
    const std::string kind_name = as_string(require(base, "kind", "baseline"), "baseline.kind");
    const auto params = as_numbers(require(base, "params", "baseline"), "baseline.params");
    Baseline baseline = rethrow_as_format("baseline", [&] { return Baseline::make(parse_baseline_kind(kind_name), params); });

    const std::string variant_name = as_string(require(doc, "model_variant", ""), "model_variant");
    const MixtureVariant variant = rethrow_as_format("model_variant", [&] { return parse_mixture_variant(variant_name); });
    const double common = as_number(require(doc, "common", ""), "common");

    ParameterMatrix a = matrix_from_json(require(doc, "matrix_a", ""), "matrix_a");

    Chain chain;
    if (const auto it = doc.find("chain"); it != doc.end()) {
        if (!it->is_array()) throw FormatError("'chain' must be an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string path = "chain[" + std::to_string(i) + "]";
            const Json& step = (*it)[i];
            reject_unknown_keys(step, path, {"omega", "permutation"});
            const double omega = as_number(require(step, "omega", path), path + ".omega");
            const auto perm_raw = as_numbers(require(step, "permutation", path), path + ".permutation");
            std::vector<std::size_t> perm;
            for (double e : perm_raw) {
                if (e < 1.0 || e != std::floor(e)) {
                    throw FormatError("'" + path + ".permutation' entries must be integers >= 1");
                }
                perm.push_back(static_cast<std::size_t>(e) - 1);
            }
            chain.push_back(rethrow_as_format(path, [&] { return TTransform(omega, perm); }));
        }
    }

    std::optional<ParameterMatrix> b;
    if (const auto it = doc.find("matrix_b"); it != doc.end()) {
        b = matrix_from_json(*it, "matrix_b");
    }

    GridSpec grid;
    grid.points = default_grid_points();
    if (const auto it = doc.find("grid"); it != doc.end()) {
        reject_unknown_keys(*it, "grid", {"points", "t_min", "t_max"});
        if (const auto p = it->find("points"); p != it->end()) {
            if (!p->is_number_integer() || p->get<long long>() <= 0) {
                throw FormatError("'grid.points' must be a positive integer");
            }
            grid.points = p->get<std::size_t>();
        }
        if (const auto p = it->find("t_min"); p != it->end()) grid.t_min = as_number(*p, "grid.t_min");
        if (const auto p = it->find("t_max"); p != it->end()) grid.t_max = as_number(*p, "grid.t_max");
        rethrow_as_format("grid", [&] { return grid.build(); });
    }

    std::optional<TheoremId> theorem;
    if (const auto it = doc.find("theorem_id"); it != doc.end()) {
        const std::string name = as_string(*it, "theorem_id");
        theorem = rethrow_as_format("theorem_id", [&] { return parse_theorem_id(name); });
    }

    Scenario s{std::move(baseline), variant, common, std::move(a), std::move(chain), std::move(b), grid, theorem};
    rethrow_as_format("common", [&] { return s.model_a(); });
    rethrow_as_format("chain", [&] { return s.matrix_b(); });
    return s;
}

Json matrix_to_json(const ParameterMatrix& m) { return Json{{"p", m.top()}, {"theta", m.bottom()}}; }

Json scenario_to_json(const Scenario& s) {
    Json doc;
    doc["baseline"] = Json{{"kind", to_string(s.baseline.kind())}, {"params", s.baseline.params()}};
    doc["model_variant"] = to_string(s.variant);
    doc["common"] = s.common;
    doc["matrix_a"] = matrix_to_json(s.a);
    Json chain = Json::array();
    for (const auto& t : s.chain) {
        Json perm = Json::array();
        for (std::size_t target : t.permutation()) perm.push_back(target + 1);
        chain.push_back(Json{{"omega", t.omega()}, {"permutation", perm}});
    }
    doc["chain"] = chain;
    if (s.b) doc["matrix_b"] = matrix_to_json(*s.b);
    doc["grid"] = Json{{"points", s.grid.points}, {"t_min", s.grid.t_min}, {"t_max", s.grid.t_max}};
    if (s.theorem) doc["theorem_id"] = to_string(*s.theorem);
    return doc;
}

Scenario parse_scenario(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw FormatError(std::string("malformed JSON: ") + e.what());
    }
    return scenario_from_json(doc);
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot read scenario file '" + path.string() + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str());
}

Json verdict_to_json(const OrderVerdict& v) {
    Json doc;
    doc["order"] = to_string(v.order);
    doc["relation"] = v.relation();
    doc["holds_leq"] = v.holds_leq;
    doc["holds_geq"] = v.holds_geq;
    doc["max_violation_leq"] = v.max_violation_leq;
    doc["max_violation_geq"] = v.max_violation_geq;
    doc["witness_t"] = nullable(v.witness_t);
    doc["witness_t_leq"] = nullable(v.witness_t_leq);
    doc["witness_t_geq"] = nullable(v.witness_t_geq);
    doc["slack"] = v.slack;
    doc["points_used"] = v.points_used;
    doc["truncated"] = v.truncated;
    doc["inconclusive"] = v.inconclusive;
    doc["reason"] = v.reason;
    if (v.hazard_check) {
        const auto& h = *v.hazard_check;
        doc["hazard_check"] = Json{{"holds_leq", h.holds_leq},
                                   {"holds_geq", h.holds_geq},
                                   {"max_violation_leq", h.max_violation_leq},
                                   {"max_violation_geq", h.max_violation_geq},
                                   {"disagrees", h.disagrees}};
    } else {
        doc["hazard_check"] = nullptr;
    }
    return doc;
}

Json report_to_json(const TheoremReport& r) {
    Json doc;
    doc["theorem_id"] = to_string(r.id);
    doc["order"] = to_string(r.order);
    doc["asserted"] = r.asserted_relation();
    doc["asserted_direction"] = r.asserted_leq ? "leq" : "geq";
    Json hyps = Json::array();
    for (const auto& h : r.hypotheses) {
        hyps.push_back(
            Json{{"name", h.name}, {"satisfied", h.satisfied}, {"waived", h.waived}, {"detail", h.detail}});
    }
    doc["hypotheses"] = hyps;
    doc["conclusion"] = verdict_to_json(r.conclusion);
    doc["conclusion_holds"] = r.conclusion_holds;
    doc["applicable"] = r.applicable;
    doc["inconclusive"] = r.inconclusive;
    doc["consistent"] = r.consistent;
    doc["notes"] = r.notes;
    doc["scenario"] = scenario_to_json(r.scenario);
    doc["matrix_b"] = matrix_to_json(r.matrix_b);
    return doc;
}

Json findings_to_json(const std::vector<TheoremReport>& reports) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    return arr;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw FormatError("cannot open '" + tmp.string() + "' for writing");
        }
        out << contents;
        out.flush();
        if (!out) {
            throw FormatError("failed writing '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw FormatError("cannot move output into '" + path.string() + "': " + ec.message());
    }
}

std::string format_number(double v, int significant) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, significant);
    return std::string(buf, res.ptr);
}

}  // namespace mixorder
