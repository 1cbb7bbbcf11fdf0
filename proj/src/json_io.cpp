#include "p1codes/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace p1codes {

json field_to_json(const Field& f) {
    return json{{"p", f.p()}, {"k", f.k()}, {"modulus", f.modulus()}};
}

FieldPtr field_from_json(const json& j, std::uint64_t order_budget) {
    return Field::with_modulus(j.at("p").get<std::uint64_t>(), j.at("k").get<unsigned>(),
                               j.at("modulus").get<std::vector<std::uint32_t>>(), order_budget);
}

json element_to_json(const FieldElement& e) { return json(e.coeffs()); }

FieldElement element_from_json(const Field& f, const json& j) {
    return FieldElement(f, f.index_of(j.get<std::vector<std::uint32_t>>()));
}

json point_to_json(const P1Point& p) {
    if (p.is_infinity()) return json("inf");
    return element_to_json(p.value());
}

P1Point point_from_json(const Field& f, const json& j) {
    if (j.is_string() && j.get<std::string>() == "inf") return P1Point::infinity(f);
    return P1Point::affine(element_from_json(f, j));
}

json divisor_to_json(const Divisor& d) {
    json out = json::array();
    for (const auto& [p, c] : d.terms()) out.push_back(json::array({point_to_json(p), c}));
    return out;
}

Divisor divisor_from_json(const Field& f, const json& j) {
    Divisor d(f);
    for (const auto& term : j) d.add_term(point_from_json(f, term.at(0)), term.at(1).get<std::int64_t>());
    return d;
}

json poly_to_json(const Poly& p) {
    json out = json::array();
    for (auto idx : p.coeffs()) out.push_back(element_to_json(FieldElement(p.field(), idx)));
    return out;
}

json ratfun_to_json(const RationalFunction& f) {
    return json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

json matrix_to_json(const Mat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(element_to_json(FieldElement(m.field(), m.at(i, j))));
        rows.push_back(std::move(row));
    }
    return rows;
}

json matrix_rows_to_json(const Field& f, std::size_t n, const std::vector<std::uint32_t>& rows) {
    Mat m(f, rows.size() / n, n);
    m.data() = rows;
    return matrix_to_json(m);
}

json spectrum_to_json(const Spectrum& s) {
    json out = json::array();
    for (const auto& c : s.counts) out.push_back(c.get_str());
    return out;
}

json permutation_to_json(const CoordinatePermutation& p) {
    json out = json::array();
    for (auto v : p.images()) out.push_back(v + 1);
    return out;
}

json moebius_to_json(const MoebiusMap& g) {
    return json::array(
        {element_to_json(g.a()), element_to_json(g.b()), element_to_json(g.c()), element_to_json(g.d())});
}

MoebiusMap moebius_from_json(const Field& f, const json& j) {
    return MoebiusMap(element_from_json(f, j.at(0)), element_from_json(f, j.at(1)),
                      element_from_json(f, j.at(2)), element_from_json(f, j.at(3)));
}

json config_to_json(const RunConfig& cfg) {
    return json{{"seed", cfg.seed},
                {"exec", cfg.exec == ExecMode::Parallel ? "parallel" : "serial"},
                {"budgets",
                 {{"closure_bound", cfg.budgets.closure_bound},
                  {"enumeration_budget", cfg.budgets.enumeration_budget},
                  {"sample_trials", cfg.budgets.sample_trials},
                  {"sn_scan_max_n", cfg.budgets.sn_scan_max_n},
                  {"pgl_scan_max_q", cfg.budgets.pgl_scan_max_q},
                  {"field_order_budget", cfg.budgets.field_order_budget}}}};
}

json code_artifact_to_json(const LinearCode& c, const RunConfig& cfg, const std::string& scenario,
                           const std::vector<std::string>& notes) {
    json j{{"type", "code"},
           {"tool", {{"name", kToolName}, {"version", kToolVersion}}},
           {"config", config_to_json(cfg)},
           {"field", field_to_json(*c.field)},
           {"n", c.n},
           {"k", c.k},
           {"generator", matrix_rows_to_json(*c.field, c.n, c.gen)}};
    if (!c.eval_points.empty()) {
        json pts = json::array();
        for (const auto& p : c.eval_points) pts.push_back(point_to_json(p));
        j["eval_points"] = std::move(pts);
    }
    if (c.source) {
        j["D"] = divisor_to_json(c.source->first);
        j["E"] = divisor_to_json(c.source->second);
    }
    json prov;
    prov["scenario"] = scenario;
    prov["notes"] = notes;
    j["provenance"] = std::move(prov);
    return j;
}

LoadedCode code_artifact_from_json(const json& j) {
    FieldPtr f = field_from_json(j.at("field"));
    std::size_t n = j.at("n").get<std::size_t>();
    std::vector<std::uint32_t> rows;
    for (const auto& row : j.at("generator"))
        for (const auto& e : row) rows.push_back(f->index_of(e.get<std::vector<std::uint32_t>>()));
    LinearCode c = make_code(*f, n, std::move(rows));
    if (j.contains("eval_points"))
        for (const auto& p : j.at("eval_points")) c.eval_points.push_back(point_from_json(*f, p));
    if (j.contains("D") && j.contains("E"))
        c.source = std::make_pair(divisor_from_json(*f, j.at("D")), divisor_from_json(*f, j.at("E")));
    if (j.at("k").get<std::size_t>() != c.k)
        throw std::invalid_argument("artifact: recorded k disagrees with the generator rank");
    return LoadedCode{std::move(f), std::move(c)};
}

void write_output(const json& j, const std::string& path) {
    std::string text = j.dump(2);
    text.push_back('\n');
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp);
        out << text;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) throw std::runtime_error("cannot move output into " + path);
}

}  // namespace p1codes
