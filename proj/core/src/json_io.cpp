#include "rknot/json_io.hpp"

#include "rknot/verify.hpp"

namespace rknot {

using nlohmann::json;

std::string rational_to_string(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rational_from_string(const std::string& s) {
    Fraction f = Fraction::parse(s);
    if (f.is_infinite()) throw std::invalid_argument("coefficient denominator is zero");
    return Rat(f.num(), f.den());
}

json parametrization_to_json(const Parametrization& p) {
    json coeffs = json::array();
    for (const Rat& c : p.z.coeffs()) coeffs.push_back(rational_to_string(c));
    return json{
        {"a", p.a},
        {"b", p.b},
        {"z_coefficients", coeffs},
        {"degree_triple", {p.a, p.b, p.z.degree()}},
    };
}

Parametrization parametrization_from_json(const json& j) {
    Parametrization p;
    p.a = j.at("a").get<int>();
    p.b = j.at("b").get<int>();
    std::vector<Rat> coeffs;
    for (const auto& c : j.at("z_coefficients"))
        coeffs.push_back(rational_from_string(c.get<std::string>()));
    p.z = Polynomial(std::move(coeffs));
    return p;
}

json knot_to_json(const TwoBridgeKnot& k) {
    TwoBridgeKnot m = mirror(k);
    return json{
        {"alpha", k.alpha.get_str()},
        {"beta", k.beta.get_str()},
        {"mirror", k.beta > m.beta},
        {"crossing_number", crossing_number(k).get_str()},
    };
}

json identification_report(const Parametrization& p) {
    ConwayForm form = conway_from_curve(p);
    Fraction f = form.value();
    TwoBridgeKnot k = (f.num() == 1 || f.num() == -1) ? unknot() : canonicalize(f);
    json j = knot_to_json(k);
    j["conway_form"] = form.entries;
    j["schubert_fraction"] = f.str();
    return j;
}

} // namespace rknot
