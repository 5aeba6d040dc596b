#pragma once

#include <json.hpp>

#include "menger/harness.hpp"

namespace menger {

using Json = nlohmann::ordered_json;

Json system_to_json(const FunctionSystem& sys);
FunctionSystem system_from_json(const Json& j);

Json algebra_to_json(const MengerAlgebra& alg);
MengerAlgebra algebra_from_json(const Json& j);

Json verdict_to_json(const Verdict& v);

/// {"kind":"representation","point":a,"system":...,"images":{label:name}}
/// with duplicate image functions emitted once and shared by name.
Json representation_to_json(const Representation& rep, int point,
                            const std::vector<std::string>& labels);

/// Either instance file format; concrete inputs are also abstractified.
struct Instance {
  bool concrete = false;
  FunctionSystem sys;  // meaningful when concrete
  MengerAlgebra alg;
};

Instance load_instance(const std::string& path);

Json crosscheck_to_json(const CrosscheckReport& rep);

}  // namespace menger
