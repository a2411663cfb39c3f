#include "orthops/serialization.hpp"

namespace orthops {

void to_json(nlohmann::json& j, const Rational& r) { j = r.str(); }

void from_json(const nlohmann::json& j, Rational& r) {
    r = Rational::from_string(j.get<std::string>());
}

void to_json(nlohmann::json& j, const GaussianRational& g) { j = g.str(); }

void from_json(const nlohmann::json& j, GaussianRational& g) {
    g = GaussianRational::from_string(j.get<std::string>());
}

void to_json(nlohmann::json& j, const RootReport& r) {
    j = nlohmann::json{{"degree", r.degree},
                       {"distinct_real_roots", r.distinct_real_roots},
                       {"all_roots_real", r.all_roots_real},
                       {"isolating_intervals", r.isolating_intervals}};
}

}  // namespace orthops
