#include "menger/nplace.hpp"

#include <algorithm>
#include <set>

namespace menger {

std::optional<int> NPlaceFunction::eval(const Tuple& args) const {
  auto it = graph.find(args);
  if (it == graph.end()) return std::nullopt;
  return it->second;
}

void NPlaceFunction::validate() const {
  if (carrier < 1) throw InputError("carrier size must be >= 1");
  if (arity < 1) throw InputError("arity must be >= 1");
  for (const auto& [key, value] : graph) {
    if (static_cast<int>(key.size()) != arity)
      throw InputError("graph key of length " + std::to_string(key.size()) +
                       " in a function of arity " + std::to_string(arity));
    for (int a : key)
      if (a < 0 || a >= carrier)
        throw InputError("graph key entry " + std::to_string(a) +
                         " out of carrier range");
    if (value < 0 || value >= carrier)
      throw InputError("graph value " + std::to_string(value) +
                       " out of carrier range");
  }
}

static void require_compatible(const NPlaceFunction& f,
                               const NPlaceFunction& g) {
  if (f.carrier != g.carrier || f.arity != g.arity)
    throw InputError("mismatched carrier or arity");
}

NPlaceFunction compose_menger(const NPlaceFunction& f,
                              std::span<const NPlaceFunction> gs) {
  if (static_cast<int>(gs.size()) != f.arity)
    throw InputError("composition needs exactly n inner functions");
  for (const auto& g : gs) require_compatible(f, g);

  NPlaceFunction out{f.carrier, f.arity, {}};
  // Candidate arguments are the domain of g_1; the rest must agree.
  for (const auto& [args, v0] : gs[0].graph) {
    Tuple inner(f.arity);
    inner[0] = v0;
    bool all_defined = true;
    for (int i = 1; i < f.arity && all_defined; ++i) {
      auto vi = gs[i].eval(args);
      if (!vi)
        all_defined = false;
      else
        inner[i] = *vi;
    }
    if (!all_defined) continue;
    auto fv = f.eval(inner);
    if (fv) out.graph.emplace(args, *fv);
  }
  return out;
}

NPlaceFunction project(const NPlaceFunction& f, int i) {
  if (i < 1 || i > f.arity) throw InputError("projection index out of range");
  NPlaceFunction out{f.carrier, f.arity, {}};
  for (const auto& [args, value] : f.graph) out.graph.emplace(args, args[i - 1]);
  return out;
}

NPlaceFunction meet(const NPlaceFunction& f, const NPlaceFunction& g) {
  require_compatible(f, g);
  NPlaceFunction out{f.carrier, f.arity, {}};
  for (const auto& [args, value] : f.graph) {
    auto gv = g.eval(args);
    if (gv && *gv == value) out.graph.emplace(args, value);
  }
  return out;
}

int FunctionSystem::index_of(const NPlaceFunction& f) const {
  for (std::size_t k = 0; k < functions.size(); ++k)
    if (functions[k] == f) return static_cast<int>(k);
  return -1;
}

int FunctionSystem::index_of_name(const std::string& name) const {
  for (std::size_t k = 0; k < names.size(); ++k)
    if (names[k] == name) return static_cast<int>(k);
  return -1;
}

FunctionSystem close_system(int carrier, int arity,
                            std::vector<NPlaceFunction> generators,
                            bool with_meet, std::size_t cap,
                            std::vector<std::string> names) {
  if (generators.empty()) throw InputError("empty generator set");
  if (!names.empty() && names.size() != generators.size())
    throw InputError("generator/name count mismatch");
  for (auto& g : generators) {
    g.validate();
    if (g.carrier != carrier || g.arity != arity)
      throw InputError("generator carrier/arity mismatch");
  }

  // Seed: generators sorted lexicographically on graphs, names attached.
  std::vector<std::size_t> order(generators.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return generators[a].graph < generators[b].graph;
  });

  FunctionSystem sys{carrier, arity, with_meet, {}, {}};
  std::set<std::map<Tuple, int>> seen;
  auto add = [&](const NPlaceFunction& f, const std::string& name) {
    if (!seen.insert(f.graph).second) return;
    if (sys.functions.size() >= cap)
      throw CapExceeded("closure exceeded cap of " + std::to_string(cap));
    sys.functions.push_back(f);
    std::string nm = name;
    if (nm.empty()) nm = "f" + std::to_string(sys.functions.size() - 1);
    while (sys.index_of_name(nm) != -1) nm += "'";
    sys.names.push_back(nm);
  };
  for (std::size_t k : order)
    add(generators[k], names.empty() ? "" : names[k]);

  // Full sweeps until stable; element count is bounded by the finite
  // function space, so this terminates.
  bool changed = true;
  while (changed) {
    std::size_t before = sys.functions.size();
    std::size_t count = before;
    for (std::size_t k = 0; k < count; ++k)
      for (int i = 1; i <= arity; ++i) add(project(sys.functions[k], i), "");
    count = sys.functions.size();
    for (std::size_t k = 0; k < count; ++k) {
      Tuple idx(arity, 0);
      do {
        std::vector<NPlaceFunction> gs;
        gs.reserve(arity);
        for (int j : idx) gs.push_back(sys.functions[j]);
        add(compose_menger(sys.functions[k], gs), "");
      } while (next_tuple(idx, static_cast<int>(count)));
    }
    if (with_meet) {
      count = sys.functions.size();
      for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = a + 1; b < count; ++b)
          add(meet(sys.functions[a], sys.functions[b]), "");
    }
    changed = sys.functions.size() != before;
  }
  return sys;
}

bool system_is_closed(const FunctionSystem& sys, std::string* missing) {
  auto report = [&](const std::string& what) {
    if (missing) *missing = what;
    return false;
  };
  const int count = static_cast<int>(sys.functions.size());
  for (int k = 0; k < count; ++k)
    for (int i = 1; i <= sys.arity; ++i)
      if (sys.index_of(project(sys.functions[k], i)) < 0)
        return report("R_" + std::to_string(i) + "(" + sys.names[k] + ")");
  for (int k = 0; k < count; ++k) {
    Tuple idx(sys.arity, 0);
    do {
      std::vector<NPlaceFunction> gs;
      for (int j : idx) gs.push_back(sys.functions[j]);
      if (sys.index_of(compose_menger(sys.functions[k], gs)) < 0)
        return report(sys.names[k] + "[" + format_set(idx) + "]");
    } while (next_tuple(idx, count));
  }
  if (sys.with_meet) {
    for (int a = 0; a < count; ++a)
      for (int b = 0; b < count; ++b)
        if (sys.index_of(meet(sys.functions[a], sys.functions[b])) < 0)
          return report(sys.names[a] + " meet " + sys.names[b]);
  }
  return true;
}

std::vector<int> semantic_stabilizer(const FunctionSystem& sys, int a) {
  if (a < 0 || a >= sys.carrier) throw InputError("point out of range");
  Tuple diag(sys.arity, a);
  std::vector<int> out;
  for (std::size_t k = 0; k < sys.functions.size(); ++k) {
    auto v = sys.functions[k].eval(diag);
    if (v && *v == a) out.push_back(static_cast<int>(k));
  }
  return out;
}

std::vector<int> semantic_domain_class(const FunctionSystem& sys, int a) {
  if (a < 0 || a >= sys.carrier) throw InputError("point out of range");
  Tuple diag(sys.arity, a);
  std::vector<int> out;
  for (std::size_t k = 0; k < sys.functions.size(); ++k)
    if (sys.functions[k].defined_at(diag)) out.push_back(static_cast<int>(k));
  return out;
}

}  // namespace menger
