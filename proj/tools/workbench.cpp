#include <CLI11.hpp>
#include <iostream>

#include "menger/json_io.hpp"

using namespace menger;

namespace {

std::vector<int> resolve_set(const std::string& csv, const MengerAlgebra& alg,
                             bool by_labels) {
  if (!by_labels) {
    std::vector<int> set = parse_index_set(csv);
    for (int x : set)
      if (x < 0 || x >= alg.size)
        throw InputError("element " + std::to_string(x) + " out of range");
    return set;
  }
  std::vector<int> set;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int idx = alg.label_index(item);
    if (idx < 0) throw InputError("unknown label '" + item + "'");
    set.push_back(idx);
  }
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json check_to_json(const RepCheck& c) {
  Json j;
  j["status"] = c.status == CheckStatus::pass     ? "pass"
                : c.status == CheckStatus::fail   ? "fail"
                                                  : "n/a";
  Json w = Json::object();
  for (const auto& [k, v] : c.witness) w[k] = v;
  j["witness"] = std::move(w);
  return j;
}

Json prop_to_json(const PropResult& p) {
  Json j;
  j["holds"] = p.holds;
  Json w = Json::object();
  for (const auto& [k, v] : p.witness) w[k] = v;
  j["witness"] = std::move(w);
  return j;
}

int run_check(const Instance& inst) {
  AxiomReport report = check_axioms(inst.alg);
  Json j;
  Json rows = Json::array();
  for (const AxiomResult& a : report.axioms) {
    Json row;
    row["name"] = a.name;
    row["status"] = a.status == CheckStatus::pass     ? "pass"
                    : a.status == CheckStatus::fail   ? "fail"
                                                      : "n/a";
    Json w = Json::object();
    for (const auto& [k, v] : a.witness) w[k] = v;
    row["witness"] = std::move(w);
    rows.push_back(std::move(row));
  }
  j["pass"] = report.all_pass();
  j["axioms"] = std::move(rows);
  emit(j);
  std::cerr << (report.all_pass() ? "all axioms hold\n" : "axiom failure\n");
  return report.all_pass() ? 0 : 1;
}

int run_props(const Instance& inst, const std::vector<int>& set,
              std::size_t cap) {
  SubsetReport sr = subset_props(inst.alg, set);
  TransformSet T = tn_closure(inst.alg, cap);
  WitnessVars nw;
  bool normal = is_normal_v_complex(inst.alg, T, set, &nw);

  Json j;
  j["set"] = set;
  j["quasi-stable"] = prop_to_json(sr.quasi_stable);
  j["stable"] = prop_to_json(sr.stable);
  j["l-unitary"] = prop_to_json(sr.l_unitary);
  j["v-unitary"] = prop_to_json(sr.v_unitary);
  j["l-ideal"] = prop_to_json(sr.l_ideal);
  if (sr.meet_checked) {
    j["meet-quasi-stable"] = prop_to_json(sr.meet_quasi_stable);
    j["meet-stable"] = prop_to_json(sr.meet_stable);
  }
  j["normal-v-complex"] = prop_to_json({normal, nw});
  emit(j);
  return 0;
}

Json relation_to_json(const MengerAlgebra& alg, const BinaryRelation& rel) {
  RelationProps props = relation_props(alg, rel);
  Json j;
  Json pairs = Json::array();
  for (auto [x, y] : rel.pairs()) pairs.push_back(Json::array({x, y}));
  j["pairs"] = std::move(pairs);
  j["stable"] = props.stable;
  j["l-regular"] = props.l_regular;
  j["v-regular"] = props.v_regular;
  j["v-negative"] = props.v_negative;
  j["reflexive"] = props.reflexive;
  j["antisymmetric"] = props.antisymmetric;
  j["transitive"] = props.transitive;
  Json ireg = Json::array();
  for (int i = 1; i <= alg.arity; ++i) ireg.push_back(bool(props.i_regular[i]));
  j["i-regular"] = std::move(ireg);
  return j;
}

int run_relations(const Instance& inst) {
  BinaryRelation le = zeta(inst.alg);
  BinaryRelation sq = chi(inst.alg);
  Json j;
  j["zeta"] = relation_to_json(inst.alg, le);
  j["chi"] = relation_to_json(inst.alg, sq);
  j["chi_contains_zeta"] = sq.contains(le);
  j["order_laws"] = prop_to_json(check_order_laws(inst.alg));
  emit(j);
  return 0;
}

int run_tn(const Instance& inst, bool dump, std::size_t cap) {
  TransformSet T = tn_closure(inst.alg, cap);
  Json j;
  j["size"] = T.maps.size();
  if (dump) {
    Json maps = Json::array();
    for (const auto& m : T.maps) maps.push_back(m);
    j["maps"] = std::move(maps);
  }
  emit(j);
  return 0;
}

int run_closure(const Instance& inst, const std::vector<int>& H,
                const std::vector<int>& X, std::size_t cap) {
  TransformSet T = tn_closure(inst.alg, cap);
  ChClosure c = ch_closure(inst.alg, T, H, X);
  Json j;
  j["H"] = H;
  j["X"] = X;
  j["stages"] = c.stages;
  j["closure"] = c.closure;
  emit(j);
  return 0;
}

int run_theorem(const Instance& inst, int which, const std::vector<int>& H,
                const std::vector<int>& U, bool have_u, int m, bool audit,
                bool search_u, std::size_t cap) {
  Verdict v;
  if (which == 1) {
    TransformSet T = tn_closure(inst.alg, cap);
    if (search_u) {
      auto found = find_theorem1_domain(inst.alg, T, H);
      if (!found) {
        Json j;
        j["pass"] = false;
        j["failed"] = "no-admissible-U";
        j["witness"] = Json::object();
        j["artifacts"] = Json::object();
        emit(j);
        std::cerr << "no U works for this H\n";
        return 1;
      }
      v = check_theorem1(inst.alg, T, H, *found, audit);
      v.U = *found;
    } else {
      if (!have_u) throw InputError("theorem 1 needs --U (or --search-U)");
      v = check_theorem1(inst.alg, T, H, U, audit);
    }
  } else if (which == 2) {
    TransformSet T = tn_closure(inst.alg, cap);
    v = check_theorem2(inst.alg, T, H, audit);
  } else if (which == 3) {
    TransformSet T = tn_closure(inst.alg, cap);
    v = check_theorem3(inst.alg, T, H, m, audit);
  } else if (which == 4) {
    if (!have_u) throw InputError("theorem 4 needs --U");
    v = check_theorem4(inst.alg, H, U, audit);
  } else if (which == 5) {
    v = check_theorem5(inst.alg, H, audit);
  } else {
    throw InputError("theorem number must be 1..5");
  }
  emit(verdict_to_json(v));
  if (v.pass)
    std::cerr << "pass\n";
  else
    std::cerr << "fail at " << v.failed_condition << "\n";
  return v.pass ? 0 : 1;
}

int run_witness(const Instance& inst, const std::vector<int>& H,
                const std::string& mode, std::size_t cap) {
  WitnessMode wm;
  if (mode == "theorem2")
    wm = WitnessMode::theorem2;
  else if (mode == "theorem4")
    wm = WitnessMode::theorem4;
  else
    throw InputError("--mode must be theorem2 or theorem4");
  TransformSet T = tn_closure(inst.alg, cap);
  StabilizerWitness w = build_witness(inst.alg, T, H, wm);
  std::vector<std::string> labels;
  for (int g = 0; g < inst.alg.size; ++g) labels.push_back(inst.alg.label(g));
  Json j = representation_to_json(w.rep, w.point, labels);
  j["classes"] = w.classes.classes();
  j["W"] = w.w_set;
  emit(j);
  std::cerr << "H realized at point " << w.point << "\n";
  return 0;
}

int run_stabilizers(const Instance& inst) {
  if (!inst.concrete)
    throw InputError("stabilizers needs a concrete function_system input");
  Json j = Json::object();
  for (int a = 0; a < inst.sys.carrier; ++a) {
    std::vector<int> H = semantic_stabilizer(inst.sys, a);
    Json entry;
    entry["elements"] = H;
    Json names = Json::array();
    for (int x : H) names.push_back(inst.sys.names[x]);
    entry["names"] = std::move(names);
    j[std::to_string(a)] = std::move(entry);
  }
  emit(j);
  return 0;
}

int run_harness(const GenParams& p, std::size_t count) {
  bool all_ok = true;
  std::size_t instances = 0;
  if (p.mode == GenMode::exhaustive) {
    for (const FunctionSystem& sys : enumerate_systems(p)) {
      CrosscheckReport rep = crosscheck_instance(sys);
      all_ok = all_ok && rep.ok;
      ++instances;
      Json line = crosscheck_to_json(rep);
      line["instance"] = system_to_json(sys);
      std::cout << line.dump() << "\n";
    }
  } else {
    for (std::size_t k = 0; k < count; ++k) {
      GenParams q = p;
      q.seed = p.seed + k;
      int resamples = 0;
      FunctionSystem sys = random_system(q, &resamples);
      CrosscheckReport rep = crosscheck_instance(sys);
      all_ok = all_ok && rep.ok;
      ++instances;
      Json line = crosscheck_to_json(rep);
      line["seed"] = q.seed;
      line["resamples"] = resamples;
      std::cout << line.dump() << "\n";
    }
  }
  Json summary;
  summary["summary"] = true;
  summary["instances"] = instances;
  summary["ok"] = all_ok;
  std::cout << summary.dump() << "\n";
  return all_ok ? 0 : 1;
}

int run_convert(const std::string& path) {
  Instance inst = load_instance(path);
  if (!inst.concrete)
    throw InputError(
        "abstract-to-concrete conversion is not supported (needs a faithful "
        "representation, which is out of scope)");
  emit(algebra_to_json(inst.alg));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-model workbench for Menger function systems"};
  app.require_subcommand(1);

  std::string file, set_csv, h_csv, u_csv, x_csv, mode = "theorem2";
  bool labels = false, dump = false, audit = false, search_u = false;
  bool meet = false;
  int theorem_no = 0, m = 1;
  std::size_t cap = 100000, count = 1;
  GenParams gp;

  auto add_file = [&](CLI::App* c) {
    c->add_option("file", file, "instance JSON")->required();
    c->add_flag("--labels", labels, "address sets by element labels");
    c->add_option("--cap", cap, "closure size guard");
  };

  CLI::App* c_check = app.add_subcommand("check", "verify the axioms");
  add_file(c_check);
  CLI::App* c_props = app.add_subcommand("props", "subset properties");
  add_file(c_props);
  c_props->add_option("--set", set_csv, "subset, comma separated")->required();
  CLI::App* c_rel = app.add_subcommand("relations", "zeta/chi and their laws");
  add_file(c_rel);
  CLI::App* c_tn = app.add_subcommand("tn", "polynomial transformations");
  add_file(c_tn);
  c_tn->add_flag("--dump", dump, "print the maps");
  CLI::App* c_clo = app.add_subcommand("closure", "C_H closure stages");
  add_file(c_clo);
  c_clo->add_option("--H", h_csv)->required();
  c_clo->add_option("--X", x_csv)->required();
  CLI::App* c_thm = app.add_subcommand("theorem", "stabilizer checkers");
  c_thm->add_option("number", theorem_no, "1..5")->required();
  add_file(c_thm);
  c_thm->add_option("--H", h_csv)->required();
  c_thm->add_option("--U", u_csv);
  c_thm->add_option("--m", m, "stage bound for theorem 3");
  c_thm->add_flag("--audit", audit, "list every failed condition");
  c_thm->add_flag("--search-U", search_u, "exhaustive U search (theorem 1)");
  CLI::App* c_wit = app.add_subcommand("witness", "build the representation");
  add_file(c_wit);
  c_wit->add_option("--H", h_csv)->required();
  c_wit->add_option("--mode", mode, "theorem2 | theorem4");
  CLI::App* c_stab = app.add_subcommand("stabilizers", "semantic H^a");
  add_file(c_stab);
  CLI::App* c_har = app.add_subcommand("harness", "generate and cross-check");
  c_har->add_option("--carrier", gp.carrier_size)->required();
  c_har->add_option("--arity", gp.arity)->required();
  c_har->add_option("--generators", gp.max_generators);
  c_har->add_flag("--meet", meet);
  c_har->add_option("--mode", mode, "exhaustive | random")->required();
  c_har->add_option("--seed", gp.seed);
  c_har->add_option("--count", count, "random instances");
  c_har->add_option("--cap", gp.instance_cap);
  CLI::App* c_conv = app.add_subcommand("convert", "concrete to abstract");
  c_conv->add_option("file", file, "instance JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_check->parsed() || c_props->parsed() || c_rel->parsed() ||
        c_tn->parsed() || c_clo->parsed() || c_thm->parsed() ||
        c_wit->parsed() || c_stab->parsed()) {
      Instance inst = load_instance(file);
      if (c_check->parsed()) return run_check(inst);
      if (c_props->parsed())
        return run_props(inst, resolve_set(set_csv, inst.alg, labels), cap);
      if (c_rel->parsed()) return run_relations(inst);
      if (c_tn->parsed()) return run_tn(inst, dump, cap);
      if (c_clo->parsed())
        return run_closure(inst, resolve_set(h_csv, inst.alg, labels),
                           resolve_set(x_csv, inst.alg, labels), cap);
      if (c_thm->parsed())
        return run_theorem(inst, theorem_no,
                           resolve_set(h_csv, inst.alg, labels),
                           u_csv.empty() ? std::vector<int>{}
                                         : resolve_set(u_csv, inst.alg, labels),
                           !u_csv.empty(), m, audit, search_u, cap);
      if (c_wit->parsed())
        return run_witness(inst, resolve_set(h_csv, inst.alg, labels), mode,
                           cap);
      return run_stabilizers(inst);
    }
    if (c_har->parsed()) {
      gp.with_meet = meet;
      if (mode == "exhaustive")
        gp.mode = GenMode::exhaustive;
      else if (mode == "random")
        gp.mode = GenMode::random_mode;
      else
        throw InputError("--mode must be exhaustive or random");
      return run_harness(gp, count);
    }
    return run_convert(file);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IntegrityError& e) {
    std::cerr << "integrity error: " << e.what() << "\n";
    return 2;
  }
}
