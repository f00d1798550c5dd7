#include "shx/serialization.hpp"

#include <nlohmann/json.hpp>

namespace shx {

namespace {

Point4 point_from(const Json& j, const char* what) {
    if (!j.is_array() || j.size() != 4) throw ParseError(std::string(what) + ": expected 4 reals");
    Point4 p;
    for (int l = 0; l < 4; ++l) {
        if (!j[l].is_number()) throw ParseError(std::string(what) + ": expected 4 reals");
        p[static_cast<std::size_t>(l)] = j[l].get<double>();
    }
    return p;
}

double real_field(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number())
        throw ParseError(std::string("missing real field \"") + key + "\"");
    return j.at(key).get<double>();
}

}  // namespace

Json to_json(const Hypercomplex& h) {
    return Json{{"t", h.scale().t()}, {"x", h.coords()}};
}

Hypercomplex hypercomplex_from_json(const Json& j) {
    return Hypercomplex(Scale(real_field(j, "t")), point_from(j.at("x"), "x"));
}

Json to_json(const Realization& m) {
    Json out = Json::array();
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) out.push_back({m(r, c).real(), m(r, c).imag()});
    return out;
}

Realization realization_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 4) throw ParseError("realization: expected 4 [re, im] pairs");
    Realization m;
    for (int k = 0; k < 4; ++k) {
        const Json& e = j[k];
        if (!e.is_array() || e.size() != 2) throw ParseError("realization: bad [re, im] pair");
        m(k / 2, k % 2) = Complex(e[0].get<double>(), e[1].get<double>());
    }
    return m;
}

Json to_json(const HyperbolicNumber& d) {
    return Json{{"t", d.scale.t()}, {"x", d.x}, {"u", d.u}};
}

HyperbolicNumber hyperbolic_from_json(const Json& j) {
    return {Scale(real_field(j, "t")), real_field(j, "x"), real_field(j, "u")};
}

Json to_json(const PolarDecomposition& p) {
    return Json{{"r", p.r},
                {"theta", p.theta},
                {"sign", p.sign},
                {"residual", p.residual},
                {"arg", p.euclidean_arg}};
}

Json to_json(const RegionSpec& r) {
    return Json{{"kind", r.kind == RegionSpec::Kind::Box ? "box" : "ball"},
                {"center", r.center},
                {"radius", r.radius}};
}

RegionSpec region_from_json(const Json& j) {
    RegionSpec r;
    const std::string kind = j.value("kind", "box");
    if (kind == "box") {
        r.kind = RegionSpec::Kind::Box;
    } else if (kind == "ball") {
        r.kind = RegionSpec::Kind::Ball;
    } else {
        throw ParseError("region: kind must be \"box\" or \"ball\"");
    }
    if (j.contains("center")) r.center = point_from(j.at("center"), "center");
    r.radius = j.value("radius", 1.0);
    if (!(r.radius > 0.0)) throw ParseError("region: radius must be > 0");
    return r;
}

Json to_json(const Verdict& v) {
    return Json{{"pass", v.pass}, {"worst_point", v.worst_point}, {"residual", v.residual}};
}

Json to_json(const RegularSeries& s) {
    Json coeffs = Json::array();
    for (const auto& [n, c] : s.coefficients) {
        coeffs.push_back(Json{{"n", {n.n1, n.n2, n.n3}}, {"coef", c.coords()}});
    }
    return Json{{"t", s.scale.t()}, {"constant", s.constant.coords()}, {"coefficients", coeffs}};
}

RegularSeries series_from_json(const Json& j) {
    const Scale scale(real_field(j, "t"));
    RegularSeries s{scale, Hypercomplex(scale, point_from(j.at("constant"), "constant")), {}};
    if (j.contains("coefficients")) {
        for (const Json& e : j.at("coefficients")) {
            const Json& nj = e.at("n");
            if (!nj.is_array() || nj.size() != 3) throw ParseError("series: bad multi-index");
            MultiIndex n{nj[0].get<int>(), nj[1].get<int>(), nj[2].get<int>()};
            if (n.n1 < 0 || n.n2 < 0 || n.n3 < 0) throw ParseError("series: bad multi-index");
            s.coefficients.emplace(n, Hypercomplex(scale, point_from(e.at("coef"), "coef")));
        }
    }
    return s;
}

HFunction polynomial_from_json(const Json& j) {
    const Scale scale(real_field(j, "t"));
    if (!j.contains("terms") || !j.at("terms").is_array())
        throw ParseError("polynomial spec: missing \"terms\" array");
    HFunction f = HFunction::constant(Hypercomplex::zero(scale));
    for (const Json& term : j.at("terms")) {
        const Json& ej = term.at("exp");
        if (!ej.is_array() || ej.size() != 4)
            throw ParseError("polynomial spec: \"exp\" must hold 4 integers");
        Exponent e;
        for (int l = 0; l < 4; ++l) {
            if (!ej[l].is_number_integer())
                throw ParseError("polynomial spec: exponents must be integers (polynomials only)");
            e[static_cast<std::size_t>(l)] = ej[l].get<int>();
            if (e[static_cast<std::size_t>(l)] < 0)
                throw ParseError("polynomial spec: exponents must be nonnegative");
        }
        const Hypercomplex coef(scale, point_from(term.at("coef"), "coef"));
        f = f + HFunction::monomial(scale, e, coef);
    }
    return f;
}

Json polynomial_spec_json(Scale scale,
                          const std::vector<std::pair<Exponent, Hypercomplex>>& terms) {
    Json arr = Json::array();
    for (const auto& [e, c] : terms) arr.push_back(Json{{"exp", e}, {"coef", c.coords()}});
    return Json{{"t", scale.t()}, {"terms", arr}};
}

}  // namespace shx
