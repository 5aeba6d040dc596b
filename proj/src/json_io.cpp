#include "menger/json_io.hpp"

#include <fstream>
#include <sstream>

namespace menger {

namespace {

std::string tuple_key(const Tuple& t) {
  std::string out;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(t[k]);
  }
  return out;
}

Tuple parse_tuple_key(const std::string& key, std::size_t expect, int bound) {
  std::vector<int> vals;
  try {
    vals = parse_index_set_raw(key);  // keeps order, no dedupe
  } catch (const InputError&) {
    throw InputError("bad tuple key \"" + key + "\"");
  }
  if (vals.size() != expect)
    throw InputError("tuple key \"" + key + "\" has wrong length");
  for (int v : vals)
    if (v < 0 || v >= bound)
      throw InputError("tuple key \"" + key + "\" out of range");
  return vals;
}

int require_int(const Json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_integer())
    throw InputError(std::string("missing or non-integer field \"") + field +
                     "\"");
  return j[field].get<int>();
}

}  // namespace

Json system_to_json(const FunctionSystem& sys) {
  Json j;
  j["kind"] = "function_system";
  j["carrier"] = sys.carrier;
  j["arity"] = sys.arity;
  j["with_meet"] = sys.with_meet;
  Json fns = Json::array();
  for (std::size_t i = 0; i < sys.functions.size(); ++i) {
    Json f;
    f["name"] = i < sys.names.size() ? sys.names[i] : "f" + std::to_string(i);
    Json graph = Json::object();
    for (const auto& [args, v] : sys.functions[i].graph)
      graph[tuple_key(args)] = v;
    f["graph"] = std::move(graph);
    fns.push_back(std::move(f));
  }
  j["functions"] = std::move(fns);
  return j;
}

FunctionSystem system_from_json(const Json& j) {
  FunctionSystem sys;
  sys.carrier = require_int(j, "carrier");
  sys.arity = require_int(j, "arity");
  if (sys.carrier < 1 || sys.arity < 1)
    throw InputError("carrier and arity must be >= 1");
  sys.with_meet = j.value("with_meet", false);
  if (!j.contains("functions") || !j["functions"].is_array())
    throw InputError("missing field \"functions\"");
  for (const Json& f : j["functions"]) {
    if (!f.contains("graph") || !f["graph"].is_object())
      throw InputError("function entry without \"graph\"");
    NPlaceFunction fn{sys.carrier, sys.arity, {}};
    for (const auto& [key, val] : f["graph"].items()) {
      if (!val.is_number_integer())
        throw InputError("non-integer value at graph key \"" + key + "\"");
      int v = val.get<int>();
      if (v < 0 || v >= sys.carrier)
        throw InputError("value out of range at graph key \"" + key + "\"");
      fn.graph[parse_tuple_key(key, sys.arity, sys.carrier)] = v;
    }
    sys.functions.push_back(std::move(fn));
    sys.names.push_back(f.value("name", "f" + std::to_string(sys.names.size())));
  }
  for (std::size_t i = 0; i < sys.functions.size(); ++i)
    for (std::size_t k = i + 1; k < sys.functions.size(); ++k)
      if (sys.functions[i] == sys.functions[k])
        throw InputError("duplicate function graphs at entries " +
                         std::to_string(i) + " and " + std::to_string(k));
  return sys;
}

Json algebra_to_json(const MengerAlgebra& alg) {
  Json j;
  j["kind"] = "abstract";
  j["size"] = alg.size;
  j["arity"] = alg.arity;
  Json op = Json::object();
  Tuple key(alg.arity + 1, 0);
  std::size_t flat = 0;
  do op[tuple_key(key)] = alg.op[flat++];
  while (next_tuple(key, alg.size));
  j["op"] = std::move(op);
  j["proj"] = alg.proj;
  if (alg.meet) {
    Json meet = Json::object();
    Tuple mk(2, 0);
    flat = 0;
    do meet[tuple_key(mk)] = (*alg.meet)[flat++];
    while (next_tuple(mk, alg.size));
    j["meet"] = std::move(meet);
  }
  if (!alg.labels.empty()) j["labels"] = alg.labels;
  return j;
}

MengerAlgebra algebra_from_json(const Json& j) {
  MengerAlgebra alg;
  alg.size = require_int(j, "size");
  alg.arity = require_int(j, "arity");
  if (alg.size < 1 || alg.arity < 1)
    throw InputError("size and arity must be >= 1");

  if (!j.contains("op") || !j["op"].is_object())
    throw InputError("missing field \"op\"");
  std::uint64_t cells = pow_sat(alg.size, alg.arity + 1);
  if (cells > 100000000) throw InputError("op table too large");
  alg.op.assign(cells, -1);
  for (const auto& [key, val] : j["op"].items()) {
    Tuple t = parse_tuple_key(key, alg.arity + 1, alg.size);
    std::size_t flat = 0;
    for (int c : t) flat = flat * alg.size + c;
    if (!val.is_number_integer() || val.get<int>() < 0 ||
        val.get<int>() >= alg.size)
      throw InputError("bad op value at key \"" + key + "\"");
    alg.op[flat] = val.get<int>();
  }
  {
    Tuple t(alg.arity + 1, 0);
    std::size_t flat = 0;
    do {
      if (alg.op[flat++] < 0)
        throw InputError("op table not total: missing key \"" + tuple_key(t) +
                         "\"");
    } while (next_tuple(t, alg.size));
  }

  if (!j.contains("proj") || !j["proj"].is_array() ||
      int(j["proj"].size()) != alg.arity)
    throw InputError("field \"proj\" must list one table per coordinate");
  for (const Json& row : j["proj"]) {
    if (!row.is_array() || int(row.size()) != alg.size)
      throw InputError("projection table has wrong length");
    std::vector<int> table;
    for (const Json& v : row) {
      if (!v.is_number_integer() || v.get<int>() < 0 || v.get<int>() >= alg.size)
        throw InputError("bad projection value");
      table.push_back(v.get<int>());
    }
    alg.proj.push_back(std::move(table));
  }

  if (j.contains("meet")) {
    if (!j["meet"].is_object()) throw InputError("field \"meet\" must be a map");
    std::vector<int> meet(std::size_t(alg.size) * alg.size, -1);
    for (const auto& [key, val] : j["meet"].items()) {
      Tuple t = parse_tuple_key(key, 2, alg.size);
      if (!val.is_number_integer() || val.get<int>() < 0 ||
          val.get<int>() >= alg.size)
        throw InputError("bad meet value at key \"" + key + "\"");
      meet[std::size_t(t[0]) * alg.size + t[1]] = val.get<int>();
    }
    for (int x = 0; x < alg.size; ++x)
      for (int y = 0; y < alg.size; ++y)
        if (meet[std::size_t(x) * alg.size + y] < 0)
          throw InputError("meet table not total: missing key \"" +
                           std::to_string(x) + "," + std::to_string(y) + "\"");
    alg.meet = std::move(meet);
  }

  if (j.contains("labels")) {
    if (!j["labels"].is_array() || int(j["labels"].size()) != alg.size)
      throw InputError("field \"labels\" must list one name per element");
    for (const Json& v : j["labels"]) alg.labels.push_back(v.get<std::string>());
  }
  alg.validate();
  return alg;
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  j["pass"] = v.pass;
  j["failed"] = v.pass ? Json(nullptr) : Json(v.failed_condition);
  Json witness = Json::object();
  for (const auto& [name, val] : v.witness) witness[name] = val;
  j["witness"] = std::move(witness);
  Json artifacts = Json::object();
  if (v.U) artifacts["U"] = *v.U;
  if (v.stages) artifacts["stages"] = *v.stages;
  if (v.U0) artifacts["U0"] = *v.U0;
  if (v.point) artifacts["point"] = *v.point;
  j["artifacts"] = std::move(artifacts);
  if (!v.all_failures.empty() &&
      (v.all_failures.size() > 1 || v.all_failures[0] != v.failed_condition))
    j["all_failures"] = v.all_failures;
  return j;
}

Json representation_to_json(const Representation& rep, int point,
                            const std::vector<std::string>& labels) {
  FunctionSystem sys;
  sys.carrier = rep.carrier;
  sys.arity = rep.arity;
  std::vector<std::string> image_name(rep.images.size());
  for (int g = 0; g < rep.source_size; ++g) {
    std::string label = g < int(labels.size()) ? labels[g] : std::to_string(g);
    int existing = sys.index_of(rep.images[g]);
    if (existing >= 0) {
      image_name[g] = sys.names[existing];
      continue;
    }
    sys.functions.push_back(rep.images[g]);
    sys.names.push_back("P(" + label + ")");
    image_name[g] = sys.names.back();
  }
  Json j;
  j["kind"] = "representation";
  j["point"] = point;
  j["system"] = system_to_json(sys);
  Json images = Json::object();
  for (int g = 0; g < rep.source_size; ++g) {
    std::string label = g < int(labels.size()) ? labels[g] : std::to_string(g);
    images[label] = image_name[g];
  }
  j["images"] = std::move(images);
  return j;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
  std::string kind = j.value("kind", "");
  Instance inst;
  if (kind == "function_system") {
    inst.concrete = true;
    inst.sys = system_from_json(j);
    std::string missing;
    if (!system_is_closed(inst.sys, &missing))
      throw InputError("system not closed: missing " + missing);
    inst.alg = abstractify(inst.sys);
  } else if (kind == "abstract") {
    inst.alg = algebra_from_json(j);
  } else {
    throw InputError("field \"kind\" must be \"function_system\" or "
                     "\"abstract\"");
  }
  return inst;
}

Json crosscheck_to_json(const CrosscheckReport& rep) {
  Json j;
  j["ok"] = rep.ok;
  j["issues"] = rep.issues;
  j["subsets_checked"] = rep.subsets_checked;
  j["passing_theorem2"] = rep.passing_theorem2;
  j["passing_theorem5"] = rep.passing_theorem5;
  Json bundles = Json::array();
  for (const auto& b : rep.bundles) {
    Json e;
    e["what"] = b.what;
    e["H"] = b.H;
    e["instance"] = system_to_json(b.system);
    bundles.push_back(std::move(e));
  }
  j["bundles"] = std::move(bundles);
  return j;
}

}  // namespace menger
