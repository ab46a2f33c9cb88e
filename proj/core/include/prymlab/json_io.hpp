#pragma once

#include <nlohmann/json.hpp>

#include "prymlab/morphism.hpp"
#include "prymlab/mumford.hpp"
#include "prymlab/painleve.hpp"
#include "prymlab/toda.hpp"

namespace prymlab {

using json = nlohmann::json;

// {"n": 5, "a": ["2", "1/2", ...], "b": [...]}; a missing "b" means a KM point.
// Numbers may also be given as JSON integers.
TodaPointQ toda_from_json(const json& j);
json to_json(const TodaPointQ& p);

// {"flavor": "odd-mumford", "u": "...", "v": "...", "w": "..."}; g (or n for
// Prym flavors) is read from "g"/"n" if present, otherwise from deg u.
Triple triple_from_json(const json& j);
json to_json(const Triple& t);

json to_json(const PhiImage<Rational>& img);
json to_json(const Balance& b);
json to_json(const KowalevskiReport& r);

// Parses text that is either inline JSON or the path of a JSON file.
json load_json_arg(const std::string& text);

std::vector<json> to_json_list(const std::vector<Rational>& v);

}  // namespace prymlab
