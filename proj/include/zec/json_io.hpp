#pragma once

#include "zec/certificate.hpp"
#include "zec/channels.hpp"
#include "zec/qmat.hpp"

#include <json.hpp>
#include <string>

// All entries serialize as [re, im] pairs in row-major order.

namespace zec {

using Json = nlohmann::json;

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j);

Json subspace_to_json(const StateSubspace& s);
StateSubspace subspace_from_json(const Json& j);

Json channel_to_json(const Channel& e);
Channel channel_from_json(const Json& j);

Json choi_to_json(const ChoiMatrix& s);
ChoiMatrix choi_from_json(const Json& j);

Json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

void write_json_file(const std::string& path, const Json& j);
Json read_json_file(const std::string& path);

}  // namespace zec
