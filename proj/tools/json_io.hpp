#pragma once

#include "bfc/bf.hpp"
#include "bfc/fock.hpp"
#include "bfc/heisenberg.hpp"
#include "bfc/quiver.hpp"
#include "bfc/verify.hpp"

#include <json.hpp>

namespace bfc::json_io {

using nlohmann::json;

json to_json(const Q& x);  // "p/q" string
json to_json(const Partition& p);
json to_json(const ChargedSequence& s);
json to_json(const FockVector& v);
json to_json(const SchurVector& v);
json to_json(const Matrix& m);
json to_json(const Resolution& r);
json to_json(const Check& c);
json to_json(const SuiteReport& r);
json to_json(const BfReport& r);

}  // namespace bfc::json_io
