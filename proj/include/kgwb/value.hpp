#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

namespace kgwb {

using Json = nlohmann::json;

// Attribute values are flat scalars; nested data belongs in the corpus.
using Scalar = std::variant<bool, std::int64_t, double, std::string>;
using AttrMap = std::map<std::string, Scalar>;

Json scalar_to_json(const Scalar& value);

// Throws Error(InvalidArgument) for null, arrays, and objects.
Scalar scalar_from_json(const Json& value);

Json attrs_to_json(const AttrMap& attrs);
AttrMap attrs_from_json(const Json& object);

}  // namespace kgwb
