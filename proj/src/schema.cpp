#include "pwsb/schema.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pwsb/zoo.hpp"

namespace pwsb {

namespace {

using nlohmann::json;

Poly parse_poly(const json& j, const std::string& where) {
    if (!j.is_array()) throw SchemaError(where + ": expected an array of monomials");
    Poly p;
    for (const auto& m : j) {
        if (!m.is_object()) throw SchemaError(where + ": monomial must be an object");
        const int i = m.value("i", 0);
        const int jj = m.value("j", 0);
        const int k = m.value("k", 0);
        if (i < 0 || jj < 0 || k < 0)
            throw SchemaError(where + ": negative monomial exponent");
        if (!m.contains("c") && !m.contains("c_mu"))
            throw SchemaError(where + ": monomial needs 'c' or 'c_mu'");
        p.add_z(i, jj, k, m.value("c", 0.0), m.value("c_mu", 0.0));
    }
    return p;
}

SmoothPiece parse_piece(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("f") || !j.contains("g"))
        throw SchemaError(where + ": piece needs 'f' and 'g' monomial lists");
    return SmoothPiece::polynomial(parse_poly(j["f"], where + ".f"),
                                   parse_poly(j["g"], where + ".g"));
}

ScalarMap parse_scalar_poly(const json& j, const std::string& where) {
    if (!j.is_array()) throw SchemaError(where + ": expected an array of {k,c,c_mu}");
    struct Term {
        int k;
        double c, c_mu;
    };
    std::vector<Term> terms;
    for (const auto& m : j) {
        terms.push_back({m.value("k", 0), m.value("c", 0.0), m.value("c_mu", 0.0)});
        if (terms.back().k < 0) throw SchemaError(where + ": negative power");
    }
    return ScalarMap([terms](double y, double mu) {
        double s = 0.0;
        for (const auto& t : terms) {
            double yk = 1.0;
            for (int q = 0; q < t.k; ++q) yk *= y;
            s += (t.c + t.c_mu * mu) * yk;
        }
        return s;
    });
}

}  // namespace

PWSystem load_model(const std::string& document) {
    json j;
    try {
        j = json::parse(document);
    } catch (const std::exception& e) {
        throw SchemaError(std::string("model document is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw SchemaError("model document must be a JSON object");

    std::map<std::string, double> params;
    if (j.contains("params")) {
        if (!j["params"].is_object()) throw SchemaError("'params' must be an object");
        for (auto it = j["params"].begin(); it != j["params"].end(); ++it) {
            if (it.key() == "mechanism") continue;
            if (!it.value().is_number())
                throw SchemaError("parameter '" + it.key() + "' must be a number");
            params[it.key()] = it.value().get<double>();
        }
    }

    if (j.contains("zoo")) {
        const std::string name = j["zoo"].get<std::string>();
        const std::string mech = j.value("mechanism", std::string{});
        double mu_override = params.count("mu") ? params["mu"] : 0.0;
        const bool has_mu = params.count("mu") > 0;
        params.erase("mu");
        PWSystem s = zoo_build_mech(name, mech, params);
        if (has_mu) s.mu = mu_override;
        return s;
    }

    if (!j.contains("mechanism")) throw SchemaError("missing 'mechanism'");
    const std::string mech = j["mechanism"].get<std::string>();
    const double mu = params.count("mu") ? params["mu"] : 0.0;

    PWSystem s;
    s.name = j.value("name", std::string("model"));
    s.mu = mu;

    const json pieces = j.value("pieces", json::object());
    auto need = [&](const char* key) -> const json& {
        if (!pieces.contains(key))
            throw SchemaError(std::string("pieces.") + key + " is required for mechanism " +
                              mech);
        return pieces.at(key);
    };

    if (mech == "filippov") {
        s.mech = FilippovMech{parse_piece(need("left"), "pieces.left"),
                              parse_piece(need("right"), "pieces.right")};
    } else if (mech == "hysteretic") {
        s.mech = HystereticMech{parse_piece(need("left"), "pieces.left"),
                                parse_piece(need("right"), "pieces.right")};
    } else if (mech == "delayed") {
        s.mech = DelayedMech{parse_piece(need("left"), "pieces.left"),
                             parse_piece(need("right"), "pieces.right")};
    } else if (mech == "impact") {
        ImpactMech m;
        m.field = parse_piece(need("field"), "pieces.field");
        if (!j.contains("reset")) throw SchemaError("impact mechanism needs 'reset'");
        m.reset = parse_scalar_poly(j["reset"], "reset");
        s.mech = std::move(m);
    } else if (mech == "impulse") {
        ImpulseMech m;
        m.field = parse_piece(need("field"), "pieces.field");
        if (!j.contains("impulse_radius") || !j.contains("impulse_angle"))
            throw SchemaError("impulse mechanism needs 'impulse_radius' and 'impulse_angle'");
        m.radius = parse_scalar_poly(j["impulse_radius"], "impulse_radius");
        m.angle = parse_scalar_poly(j["impulse_angle"], "impulse_angle");
        s.mech = std::move(m);
    } else if (mech == "four_quadrant") {
        FourQuadrantMech m;
        const char* keys[4] = {"q1", "q2", "q3", "q4"};
        for (int q = 0; q < 4; ++q)
            m.quadrant[q] = parse_piece(need(keys[q]), std::string("pieces.") + keys[q]);
        s.mech = std::move(m);
    } else if (mech == "sqrt_continuous") {
        SqrtField field;
        const json& fj = need("field");
        if (!fj.contains("f") || !fj.contains("g"))
            throw SchemaError("pieces.field needs 'f' and 'g'");
        field.f = parse_poly(fj["f"], "pieces.field.f");
        field.g = parse_poly(fj["g"], "pieces.field.g");
        s.mech = SqrtMech{std::move(field)};
    } else {
        throw SchemaError("unknown mechanism tag '" + mech + "'");
    }
    return s;
}

PWSystem load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open model file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_model(ss.str());
}

}  // namespace pwsb
