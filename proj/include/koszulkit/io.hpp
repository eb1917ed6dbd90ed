#pragma once

// JSON formats for presentations, actions and matrices. Rationals are
// strings "p/q" or "p".

#include "koszulkit/action.hpp"
#include "koszulkit/quadratic.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

namespace koszulkit {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

nlohmann::json mat_to_json(const Mat& m);
Mat mat_from_json(const nlohmann::json& j, std::size_t rows, std::size_t cols);
nlohmann::json vec_to_json(const Vec& v);
Vec vec_from_json(const nlohmann::json& j, std::size_t len);

/// {"generators":[...],"relations":[{"terms":[{"c":"1","m":["x","y"]}]}]}
nlohmann::json presentation_to_json(const QuadraticPresentation& p);
QuadraticPresentation presentation_from_json(const nlohmann::json& j);

/// {"bialgebra":{dim, mult, unit, comult, counit, action}, "modules":{...}}
/// or {"lie":{"basis":[...], "brackets":{"e,f":[{"c":"1","b":"h"}]},
/// "action":{"e":matrix,...}}, "modules":{...}}. Module actions are a list
/// of matrices for bialgebras and an object keyed by basis name for Lie.
nlohmann::json action_to_json(const ActionProvider& p);
/// `v_dim` is the number of generators of the presentation it acts on.
ActionProvider action_from_json(const nlohmann::json& j, std::size_t v_dim);

nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

/// Hex SHA-256 of the compact serialization.
std::string digest(const nlohmann::json& j);

} // namespace koszulkit
