#include "th/spec_io.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace th {

using nlohmann::json;

namespace {

cplx parse_complex_pair(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw SpecParseError(where + ": expected [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

json complex_pair(cplx v) { return json::array({v.real(), v.imag()}); }

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* a : allowed)
            if (it.key() == a) ok = true;
        if (!ok)
            throw SpecParseError(where + ": unknown field \"" + it.key() +
                                 "\" (angles are radians; degree fields are not accepted)");
    }
}

}  // namespace

SymbolSpec parse_spec(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SpecParseError(std::string("spec parse error: ") + e.what());
    }
    if (!j.is_object()) throw SpecParseError("spec: top level must be an object");
    reject_unknown_keys(j, {"p", "smooth", "jumps"}, "spec");

    SymbolSpec spec;
    if (!j.contains("p") || !j["p"].is_number())
        throw SpecParseError("spec.p: required number with 1 < p");
    spec.p = j["p"].get<double>();
    if (!(spec.p > 1.0) || !std::isfinite(spec.p))
        throw SpecParseError("spec.p: must satisfy 1 < p < infinity");

    if (j.contains("smooth")) {
        const json& s = j["smooth"];
        if (!s.is_object()) throw SpecParseError("spec.smooth: expected object");
        reject_unknown_keys(s, {"winding", "log_coeffs"}, "spec.smooth");
        if (s.contains("winding")) {
            if (!s["winding"].is_number_integer())
                throw SpecParseError("spec.smooth.winding: expected integer");
            spec.winding = s["winding"].get<int>();
        }
        if (s.contains("log_coeffs")) {
            if (!s["log_coeffs"].is_object())
                throw SpecParseError("spec.smooth.log_coeffs: expected map degree -> [re, im]");
            for (auto it = s["log_coeffs"].begin(); it != s["log_coeffs"].end(); ++it) {
                int degree = 0;
                try {
                    size_t pos = 0;
                    degree = std::stoi(it.key(), &pos);
                    if (pos != it.key().size()) throw std::invalid_argument("trailing");
                } catch (const std::exception&) {
                    throw SpecParseError("spec.smooth.log_coeffs: key \"" + it.key() +
                                         "\" is not an integer degree");
                }
                spec.log_coeffs[degree] =
                    parse_complex_pair(it.value(), "spec.smooth.log_coeffs[" + it.key() + "]");
            }
        }
    }

    if (j.contains("jumps")) {
        if (!j["jumps"].is_array()) throw SpecParseError("spec.jumps: expected array");
        int idx = 0;
        for (const json& je : j["jumps"]) {
            std::string where = "spec.jumps[" + std::to_string(idx++) + "]";
            if (!je.is_object()) throw SpecParseError(where + ": expected object");
            reject_unknown_keys(je, {"theta", "beta"}, where);
            if (!je.contains("theta") || !je["theta"].is_number())
                throw SpecParseError(where + ".theta: required number (radians)");
            double theta = je["theta"].get<double>();
            if (!(theta >= 0.0) || !(theta < kTwoPi))
                throw SpecParseError(where + ".theta: must lie in [0, 2*pi) radians" +
                                     " (degree values are rejected)");
            if (!je.contains("beta"))
                throw SpecParseError(where + ".beta: required [re, im]");
            spec.jumps.emplace_back(theta, parse_complex_pair(je["beta"], where + ".beta"));
        }
    }

    // Mirror the PCSymbol invariants with parse-level diagnostics.
    for (size_t i = 0; i < spec.jumps.size(); ++i)
        for (size_t k = i + 1; k < spec.jumps.size(); ++k)
            if (canonical_angle(spec.jumps[i].first) == canonical_angle(spec.jumps[k].first))
                throw SpecParseError("spec.jumps: locations must be pairwise distinct");
    return spec;
}

SymbolSpec spec_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecParseError("cannot open spec file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_spec(ss.str());
}

std::string serialize_spec(const SymbolSpec& spec) {
    json j;
    j["p"] = spec.p;
    json smooth;
    smooth["winding"] = spec.winding;
    json lc = json::object();
    for (const auto& [n, v] : spec.log_coeffs) lc[std::to_string(n)] = complex_pair(v);
    smooth["log_coeffs"] = lc;
    j["smooth"] = smooth;
    json jumps = json::array();
    for (const auto& [theta, beta] : spec.jumps) {
        json je;
        je["theta"] = theta;
        je["beta"] = complex_pair(beta);
        jumps.push_back(je);
    }
    j["jumps"] = jumps;
    return j.dump(2) + "\n";
}

PCSymbol to_symbol(const SymbolSpec& spec) {
    PCSymbol sym;
    sym.p = spec.p;
    sym.smooth.winding = spec.winding;
    sym.smooth.log_part = LaurentPolynomial(spec.log_coeffs);
    for (const auto& [theta, beta] : spec.jumps) sym.jumps.push_back({theta, beta});
    sym.validate();
    return sym;
}

SymbolSpec from_symbol(const PCSymbol& sym) {
    SymbolSpec spec;
    spec.p = sym.p;
    spec.winding = sym.smooth.winding;
    spec.log_coeffs = sym.smooth.log_part.coeff_map();
    for (const auto& j : sym.jumps) spec.jumps.emplace_back(canonical_angle(j.theta), j.beta);
    return spec;
}

namespace {

json spec_json(const SymbolSpec& spec) { return json::parse(serialize_spec(spec)); }

const char* point_name(ConditionEvaluation::Point p) {
    switch (p) {
        case ConditionEvaluation::Point::One: return "tau=+1";
        case ConditionEvaluation::Point::MinusOne: return "tau=-1";
        case ConditionEvaluation::Point::Pair: return "pair";
    }
    return "?";
}

json conditions_json(const std::vector<ConditionEvaluation>& conds) {
    json arr = json::array();
    for (const auto& c : conds) {
        json e;
        e["point"] = point_name(c.point);
        e["theta"] = c.theta;
        e["ratio"] = complex_pair(c.ratio);
        e["normalized_arg"] = c.normalized_arg;
        e["forbidden_class"] = c.forbidden_class;
        e["distance_to_forbidden"] = c.distance_to_forbidden;
        e["passes"] = c.passes;
        e["boundary"] = c.boundary;
        arr.push_back(e);
    }
    return arr;
}

json selection_json(const ParameterSelection& sel) {
    json s;
    s["beta_plus"] = complex_pair(sel.beta_plus);
    s["beta_minus"] = complex_pair(sel.beta_minus);
    json pairs = json::array();
    for (const auto& ps : sel.pairs) {
        json p;
        p["theta"] = ps.theta;
        p["beta_plus"] = complex_pair(ps.beta_p);
        p["beta_minus"] = complex_pair(ps.beta_m);
        pairs.push_back(p);
    }
    s["pairs"] = pairs;
    return s;
}

const char* base_name(FactorTerm::Base b) {
    switch (b) {
        case FactorTerm::Base::OneMinusTrInvT: return "(1 - t_r/t)";
        case FactorTerm::Base::OneMinusInvTInvTr: return "(1 - 1/(t t_r))";
        case FactorTerm::Base::OneMinusTInvTr: return "(1 - t/t_r)";
        case FactorTerm::Base::OneMinusTTr: return "(1 - t t_r)";
        case FactorTerm::Base::AbsOneMinusT: return "|1 - t|";
        case FactorTerm::Base::AbsOnePlusT: return "|1 + t|";
    }
    return "?";
}

json terms_json(const std::vector<FactorTerm>& terms) {
    json arr = json::array();
    for (const auto& t : terms) {
        json e;
        e["base"] = base_name(t.base);
        e["theta_r"] = t.theta_r;
        e["exponent"] = complex_pair(t.exponent);
        arr.push_back(e);
    }
    return arr;
}

json smooth_json(const std::optional<SmoothPart>& s) {
    if (!s) return nullptr;
    json e;
    e["winding"] = s->winding;
    json lc = json::object();
    for (const auto& [n, v] : s->log_part.coeff_map()) lc[std::to_string(n)] = complex_pair(v);
    e["log_coeffs"] = lc;
    return e;
}

}  // namespace

std::string analyze_report_json(const SymbolSpec& spec, const FredholmReport& rep) {
    json j;
    j["schema_version"] = kReportSchemaVersion;
    j["command"] = "analyze";
    j["symbol"] = spec_json(spec);
    j["conditions"] = conditions_json(rep.conditions);
    j["is_fredholm"] = rep.is_fredholm;
    j["boundary_case"] = rep.boundary_case;
    if (rep.selection) j["selection"] = selection_json(*rep.selection);
    j["winding_b"] = rep.winding_b;
    j["kappa"] = rep.kappa;
    j["index"] = rep.index;
    j["dim_ker"] = rep.dim_ker;
    j["dim_coker"] = rep.dim_coker;
    j["is_invertible"] = rep.is_invertible;
    return j.dump(2) + "\n";
}

std::string factorize_report_json(const SymbolSpec& spec, const AsymmetricFactorization& fact,
                                  const ValidationReport& val) {
    json j;
    j["schema_version"] = kReportSchemaVersion;
    j["command"] = "factorize";
    j["symbol"] = spec_json(spec);
    j["kappa"] = fact.kappa;
    j["gamma"] = complex_pair(fact.gamma);
    j["minus_terms"] = terms_json(fact.minus_terms);
    j["zero_terms"] = terms_json(fact.zero_terms);
    j["smooth_minus"] = smooth_json(fact.smooth_minus);
    j["smooth_zero"] = smooth_json(fact.smooth_zero);
    json defects;
    defects["max_residual"] = val.max_residual;
    defects["evenness_defect"] = val.evenness_defect;
    defects["support_defect_minus"] = val.support_defect_minus;
    defects["support_defect_minus_inv"] = val.support_defect_minus_inv;
    defects["quadrature_defect"] = val.quadrature_defect;
    defects["grid"] = val.grid;
    defects["truncation"] = val.truncation;
    j["defects"] = defects;
    return j.dump(2) + "\n";
}

void write_matrix_file(std::ostream& os, const OperatorSection& section) {
    if (section.rows != section.cols)
        throw SpecParseError("write_matrix_file: only square sections are serialized");
    os << section.rows << "\n";
    os.precision(17);
    for (int j = 0; j < section.rows; ++j) {
        for (int k = 0; k < section.cols; ++k) {
            const cplx v = section.entries(j, k);
            if (k) os << ",";
            os << v.real() << ":" << v.imag();
        }
        os << "\n";
    }
}

void write_sweep_csv(std::ostream& os, const SweepReport& rep) {
    os << "z,re,im,modulus\n";
    os.precision(17);
    for (const auto& s : rep.samples)
        os << s.z << "," << s.value.real() << "," << s.value.imag() << "," << s.modulus << "\n";
    os << "+inf," << rep.pos_inf.value.real() << "," << rep.pos_inf.value.imag() << ","
       << rep.pos_inf.modulus << "\n";
    os << "-inf," << rep.neg_inf.value.real() << "," << rep.neg_inf.value.imag() << ","
       << rep.neg_inf.modulus << "\n";
}

}  // namespace th
