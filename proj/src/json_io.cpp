#include "springer/json_io.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <fstream>

#include "springer/errors.hpp"

namespace springer {

Json rat_to_json(const Rat& r) { return rat_to_string(r); }

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    fail(ErrorCode::MalformedSpec, "expected a rational as integer or \"p/q\" string");
}

Json series_to_json(const LaurentSeries& s) {
    Json j;
    j["lead"] = s.lead_exponent();
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(rat_to_json(c));
    j["coeffs"] = coeffs;
    if (!s.is_exact()) j["trunc"] = s.trunc();
    return j;
}

LaurentSeries series_from_json(const Json& j) {
    if (!j.is_object()) fail(ErrorCode::MalformedSpec, "series must be a JSON object");
    long lead = 0;
    if (j.contains("lead")) {
        if (!j["lead"].is_number_integer())
            fail(ErrorCode::MalformedSpec, "series lead must be an integer");
        lead = j["lead"].get<long>();
    }
    RatVec coeffs;
    if (j.contains("coeffs")) {
        if (!j["coeffs"].is_array())
            fail(ErrorCode::MalformedSpec, "series coeffs must be an array");
        for (const auto& c : j["coeffs"]) coeffs.push_back(rat_from_json(c));
    }
    long trunc = kTruncInf;
    if (j.contains("trunc") && !j["trunc"].is_null()) {
        if (!j["trunc"].is_number_integer())
            fail(ErrorCode::MalformedSpec, "series trunc must be an integer");
        trunc = j["trunc"].get<long>();
    }
    return LaurentSeries(lead, std::move(coeffs), trunc);
}

Json coweight_to_json(const RootDatum& d, const CoweightQ& c) {
    Json arr = Json::array();
    for (const auto& q : d.lattice_coords(c)) arr.push_back(rat_to_json(q));
    return arr;
}

CoweightQ coweight_from_json(const RootDatum& d, const Json& j) {
    if (!j.is_array()) fail(ErrorCode::MalformedSpec, "coweight must be a JSON array");
    RatVec u;
    for (const auto& q : j) u.push_back(rat_from_json(q));
    return d.coweight_from_lattice(u);
}

WeylElement weyl_word_from_string(const RootDatum& d, const std::string& s) {
    std::vector<int> word;
    size_t i = 0;
    auto skip_sep = [&] {
        while (i < s.size() && (s[i] == ' ' || s[i] == '*' || s[i] == ',')) ++i;
    };
    skip_sep();
    if (i < s.size() && (s.compare(i, 2, "id") == 0 || s[i] == 'e' || s[i] == '1')) {
        return d.identity_element();
    }
    while (i < s.size()) {
        if (s[i] != 's' && s[i] != 'S')
            fail(ErrorCode::MalformedSpec, "bad Weyl word '" + s + "'");
        ++i;
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) fail(ErrorCode::MalformedSpec, "bad Weyl word '" + s + "'");
        int idx = std::stoi(s.substr(start, i - start));
        if (idx < 1 || static_cast<size_t>(idx) > d.semisimple_rank())
            fail(ErrorCode::MalformedSpec,
                 "reflection s" + std::to_string(idx) + " out of range");
        word.push_back(idx - 1);
        skip_sep();
    }
    return d.element_from_word(word);
}

Json gamma_to_json(const RootDatum& d, const TorusElement& g) {
    Json j;
    if (g.is_concrete()) {
        const auto& data = g.concrete_data();
        j["model"] = "concrete";
        j["mu"] = coweight_to_json(d, data.mu);
        Json units = Json::array();
        for (const auto& u : data.units) units.push_back(series_to_json(u));
        j["units"] = units;
    } else {
        const auto& data = g.abstract_data();
        j["model"] = "abstract";
        j["e"] = data.e;
        j["w"] = data.twist.word_string();
        j["nu"] = coweight_to_json(d, data.nu);
        Json prof = Json::object();
        for (const auto& [idx, v] : data.profile) prof[std::to_string(idx)] = rat_to_json(v);
        j["profile"] = prof;
    }
    return j;
}

TorusElement gamma_from_json(const RootDatum& d, const Json& j) {
    if (!j.is_object() || !j.contains("model"))
        fail(ErrorCode::MalformedSpec, "gamma must be an object with a \"model\" field");
    std::string model = j["model"].get<std::string>();
    if (model == "concrete") {
        if (!j.contains("mu") || !j.contains("units"))
            fail(ErrorCode::MalformedSpec, "concrete gamma needs \"mu\" and \"units\"");
        CoweightQ mu = coweight_from_json(d, j["mu"]);
        std::vector<LaurentSeries> units;
        for (const auto& u : j["units"]) units.push_back(series_from_json(u));
        return TorusElement::concrete(d, mu, std::move(units));
    }
    if (model == "abstract") {
        if (!j.contains("e") || !j.contains("nu"))
            fail(ErrorCode::MalformedSpec, "abstract gamma needs \"e\" and \"nu\"");
        long e = j["e"].get<long>();
        WeylElement twist = j.contains("w") ? weyl_word_from_string(d, j["w"].get<std::string>())
                                            : d.identity_element();
        CoweightQ nu = coweight_from_json(d, j["nu"]);
        std::map<size_t, Rat> profile;
        if (j.contains("profile")) {
            for (const auto& [key, val] : j["profile"].items())
                profile[static_cast<size_t>(std::stoul(key))] = rat_from_json(val);
        }
        bool allow = j.value("allow_ultrametric_violation", false);
        return TorusElement::abstract_element(d, e, twist, nu, profile, allow);
    }
    fail(ErrorCode::MalformedSpec, "gamma model must be \"concrete\" or \"abstract\"");
}

RootDatum datum_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("cartan"))
        fail(ErrorCode::MalformedSpec, "datum JSON needs a \"cartan\" field");
    IMat cartan;
    for (const auto& row : j["cartan"]) {
        IVec r;
        for (const auto& x : row) {
            if (!x.is_number_integer())
                fail(ErrorCode::MalformedSpec, "cartan entries must be integers");
            r.push_back(x.get<long>());
        }
        cartan.push_back(r);
    }
    size_t central = j.value("central_rank", 0);
    std::optional<RatMat> basis;
    if (j.contains("basis")) {
        // list of basis vectors; stored column-wise internally
        std::vector<RatVec> rows;
        for (const auto& vec : j["basis"]) {
            RatVec v;
            for (const auto& x : vec) v.push_back(rat_from_json(x));
            rows.push_back(v);
        }
        size_t n = rows.size();
        RatMat cols(n, RatVec(n, Rat(0)));
        for (size_t k = 0; k < n; ++k) {
            if (rows[k].size() != n)
                fail(ErrorCode::MalformedSpec, "basis vectors must have length rank");
            for (size_t i = 0; i < n; ++i) cols[i][k] = rows[k][i];
        }
        basis = cols;
    }
    return RootDatum::from_cartan(cartan, central, basis, j.value("name", "custom"));
}

RootDatum datum_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::MalformedSpec, "cannot open datum file " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail(ErrorCode::MalformedSpec, std::string("bad JSON in datum file: ") + e.what());
    }
    return datum_from_json(j);
}

RootDatum datum_from_spec_or_file(const std::string& spec) {
    if (spec.size() > 5 && spec.compare(spec.size() - 5, 5, ".json") == 0)
        return datum_from_json_file(spec);
    return RootDatum::from_spec(spec);
}

Json report_to_json(const RootDatum& d, const FiberReport& rep) {
    Json j;
    j["nonempty"] = rep.nonempty;
    j["newton"] = coweight_to_json(d, rep.newton);
    j["certified"] = rep.certified;
    j["warnings"] = rep.warnings;
    if (rep.mu_star) j["mu_star"] = coweight_to_json(d, *rep.mu_star);
    if (rep.d) j["d"] = rat_to_json(*rep.d);
    if (rep.r) j["r"] = rat_to_json(*rep.r);
    if (rep.c) j["c"] = *rep.c;
    if (rep.d_lambda) j["d_lambda"] = rat_to_json(*rep.d_lambda);
    if (rep.dim_regular) j["dim_regular"] = rat_to_json(*rep.dim_regular);
    if (rep.dim_total) j["dim_total"] = rat_to_json(*rep.dim_total);
    if (rep.dim_total_tag) j["dim_total_status"] = tag_name(*rep.dim_total_tag);
    if (rep.orbit_count) j["orbit_count"] = *rep.orbit_count;
    if (rep.orbit_tag) j["orbit_count_status"] = tag_name(*rep.orbit_tag);
    if (rep.regular_orbit_bound) j["regular_orbit_bound"] = *rep.regular_orbit_bound;
    if (rep.regular_bound_exact) j["regular_bound_exact"] = *rep.regular_bound_exact;
    if (rep.zero_dimensional) j["zero_dimensional"] = *rep.zero_dimensional;
    return j;
}

namespace {

ProvenanceTag tag_from_string(const std::string& s) {
    if (s == "THEOREM") return ProvenanceTag::THEOREM;
    if (s == "CONJECTURAL") return ProvenanceTag::CONJECTURAL;
    if (s == "COMPANION") return ProvenanceTag::COMPANION;
    fail(ErrorCode::MalformedSpec, "unknown provenance tag " + s);
}

}  // namespace

FiberReport report_from_json(const RootDatum& d, const Json& j) {
    FiberReport rep;
    rep.nonempty = j.at("nonempty").get<bool>();
    rep.newton = coweight_from_json(d, j.at("newton"));
    rep.certified = j.at("certified").get<bool>();
    rep.warnings = j.at("warnings").get<std::vector<std::string>>();
    if (j.contains("mu_star")) rep.mu_star = coweight_from_json(d, j["mu_star"]);
    if (j.contains("d")) rep.d = rat_from_json(j["d"]);
    if (j.contains("r")) rep.r = rat_from_json(j["r"]);
    if (j.contains("c")) rep.c = j["c"].get<long>();
    if (j.contains("d_lambda")) rep.d_lambda = rat_from_json(j["d_lambda"]);
    if (j.contains("dim_regular")) rep.dim_regular = rat_from_json(j["dim_regular"]);
    if (j.contains("dim_total")) rep.dim_total = rat_from_json(j["dim_total"]);
    if (j.contains("dim_total_status"))
        rep.dim_total_tag = tag_from_string(j["dim_total_status"].get<std::string>());
    if (j.contains("orbit_count")) rep.orbit_count = j["orbit_count"].get<long>();
    if (j.contains("orbit_count_status"))
        rep.orbit_tag = tag_from_string(j["orbit_count_status"].get<std::string>());
    if (j.contains("regular_orbit_bound"))
        rep.regular_orbit_bound = j["regular_orbit_bound"].get<long>();
    if (j.contains("regular_bound_exact"))
        rep.regular_bound_exact = j["regular_bound_exact"].get<bool>();
    if (j.contains("zero_dimensional")) rep.zero_dimensional = j["zero_dimensional"].get<bool>();
    return rep;
}

CoweightQ coweight_from_cli(const RootDatum& d, const std::string& s) {
    RatVec u;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == ',') {
            u.push_back(rat_from_string(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    return d.coweight_from_lattice(u);
}

}  // namespace springer
