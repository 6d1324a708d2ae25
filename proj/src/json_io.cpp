#include "mzv/json_io.hpp"

namespace mzv {

using nlohmann::ordered_json;

ordered_json to_json(const FormalSum& s) {
    ordered_json terms = ordered_json::array();
    for (const auto& [k, c] : s.terms()) {
        ordered_json t;
        t["coef"] = c;
        t["index"] = k.parts();
        terms.push_back(std::move(t));
    }
    return ordered_json{{"terms", std::move(terms)}};
}

static ordered_json params_json(const std::vector<std::pair<std::string, std::string>>& params) {
    ordered_json out = ordered_json::object();
    for (const auto& [key, value] : params) out[key] = value;
    return out;
}

ordered_json to_json(const Relation& rel) {
    ordered_json out;
    out["name"] = rel.name;
    out["params"] = params_json(rel.params);
    out["lhs"] = to_json(rel.lhs);
    out["rhs"] = to_json(rel.rhs);
    return out;
}

ordered_json to_json(const EvalReport& rep) {
    ordered_json out;
    out["name"] = rep.name;
    out["params"] = params_json(rep.params);
    out["lhs"] = rep.lhs_value;
    out["rhs"] = rep.rhs_value;
    out["abs_diff"] = rep.abs_diff;
    out["tolerance"] = rep.tolerance;
    out["verdict"] = rep.pass ? "pass" : "fail";
    return out;
}

ordered_json to_json(const ResidueVector& rv) {
    ordered_json out = ordered_json::object();
    for (const auto& [p, res] : rv.residues) out[std::to_string(p)] = res;
    return out;
}

ordered_json to_json(const FiniteReport& rep) {
    ordered_json out;
    out["name"] = rep.name;
    out["params"] = params_json(rep.params);
    out["lhs"] = to_json(rep.lhs);
    out["rhs"] = to_json(rep.rhs);
    out["failing_primes"] = rep.failing_primes;
    out["small_prime_exceptions"] = rep.small_prime_exceptions;
    out["verdict"] = rep.pass ? "pass" : "fail";
    return out;
}

}  // namespace mzv
