#include "kgwb/value.hpp"

#include "kgwb/error.hpp"

namespace kgwb {

Json scalar_to_json(const Scalar& value) {
    return std::visit([](const auto& v) { return Json(v); }, value);
}

Scalar scalar_from_json(const Json& value) {
    switch (value.type()) {
        case Json::value_t::boolean: return value.get<bool>();
        case Json::value_t::number_integer: return value.get<std::int64_t>();
        case Json::value_t::number_unsigned: {
            auto u = value.get<std::uint64_t>();
            if (u > static_cast<std::uint64_t>(INT64_MAX)) return static_cast<double>(u);
            return static_cast<std::int64_t>(u);
        }
        case Json::value_t::number_float: return value.get<double>();
        case Json::value_t::string: return value.get<std::string>();
        default:
            throw Error(ErrorCode::InvalidArgument,
                        "attribute values must be string, number or boolean");
    }
}

Json attrs_to_json(const AttrMap& attrs) {
    Json out = Json::object();
    for (const auto& [key, value] : attrs) out[key] = scalar_to_json(value);
    return out;
}

AttrMap attrs_from_json(const Json& object) {
    if (object.is_null()) return {};
    if (!object.is_object()) throw Error(ErrorCode::InvalidArgument, "attrs must be an object");
    AttrMap attrs;
    for (const auto& [key, value] : object.items()) {
        try {
            attrs.emplace(key, scalar_from_json(value));
        } catch (const Error&) {
            throw Error(ErrorCode::InvalidArgument, "attribute '" + key + "' is not a scalar");
        }
    }
    return attrs;
}

}  // namespace kgwb
