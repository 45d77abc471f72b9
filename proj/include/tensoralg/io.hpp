#pragma once

// JSON documents:
//   tensor   {"dim": 3, "slots": ["up","down"], "weight": 0,
//             "components": [[...],[...],[...]]}
//            nesting depth equals the rank, outermost array is slot 0,
//            every row has exactly `dim` entries; rank 0 is a bare number.
//   frame    {"dim": 3, "c": [[...],[...],[...]]}, c[r][s] = c^r_s
//   basis    {"dim": 3, "vectors": [[...],[...],[...]]}
//   bindings {"a": <tensor>, "x": <tensor>} or a single tensor document
//            carrying a "name" field.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tensoralg/core.hpp"
#include "tensoralg/einsum.hpp"
#include "tensoralg/frames.hpp"
#include "tensoralg/metric.hpp"

namespace tensoralg::io {

using nlohmann::json;

/// Throws DocumentError on malformed input.
TensorObject tensor_from_json(const json& doc);
Frame frame_from_json(const json& doc);
std::vector<TensorObject> basis_from_json(const json& doc);
/// A tensor document with slots ["down","down"].
Metric metric_from_json(const json& doc);
einsum::Bindings bindings_from_json(const json& doc);

/// Tensor document text with 17 significant digits per component.
std::string write_tensor(const TensorObject& t);

json parse_json(std::string_view text);
json read_json_file(const std::filesystem::path& path);

}  // namespace tensoralg::io
