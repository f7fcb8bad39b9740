#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "princong/json_io.hpp"

namespace {

using namespace princong;

constexpr int kExitOk = 0;        // verified / computed
constexpr int kExitNegative = 1;  // checked and negative
constexpr int kExitInput = 2;     // input error
constexpr int kExitBudget = 3;    // budget exceeded
constexpr int kExitInternal = 70; // invariant violation

struct CommonOptions {
  std::string format = "json";
  std::optional<long long> seed;
};

void emit(const json& payload, const CommonOptions& common) {
  json out = payload;
  if (common.seed) out["seed"] = *common.seed;
  std::cout << out.dump(2) << "\n";
}

// PRINC_CONG_BUDGET: either a single integer applied to both size caps, or
// a comma list of carrier=N, lattice=N, time=SECONDS.
OracleBudget budget_from_env() {
  OracleBudget budget;
  const char* raw = std::getenv("PRINC_CONG_BUDGET");
  if (!raw) return budget;
  const std::string value(raw);
  if (value.find('=') == std::string::npos) {
    try {
      const int n = std::stoi(value);
      budget.max_carrier_size = n;
      budget.max_lattice_size = n;
    } catch (const std::exception&) {
      throw InputError("PRINC_CONG_BUDGET must be an integer or key=value pairs");
    }
    return budget;
  }
  std::stringstream stream(value);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("malformed PRINC_CONG_BUDGET entry '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::string val = item.substr(eq + 1);
    try {
      if (key == "carrier") {
        budget.max_carrier_size = std::stoi(val);
      } else if (key == "lattice") {
        budget.max_lattice_size = std::stoi(val);
      } else if (key == "time") {
        budget.time_limit_seconds = std::stod(val);
      } else {
        throw InputError("unknown PRINC_CONG_BUDGET key '" + key + "'");
      }
    } catch (const InputError&) {
      throw;
    } catch (const std::exception&) {
      throw InputError("malformed PRINC_CONG_BUDGET entry '" + item + "'");
    }
  }
  return budget;
}

FiniteLattice load_lattice(const std::string& path) {
  return lattice_from_json(load_json_file(path));
}

std::vector<std::string> split_labels(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream stream(csv);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int run_princ(const std::string& lattice_path, const CommonOptions& common) {
  FiniteLattice l = load_lattice(lattice_path);
  PrincPoset pp = princ_poset(l);
  if (common.format == "dot") {
    std::cout << poset_to_dot(pp.order, "princ");
    return kExitOk;
  }
  emit(princ_to_json(l, pp), common);
  return kExitOk;
}

int run_con(const std::string& lattice_path, const CommonOptions& common) {
  FiniteLattice l = load_lattice(lattice_path);
  std::vector<Congruence> all = con_lattice(l);
  json j;
  j["count"] = all.size();
  json list = json::array();
  for (const Congruence& c : all) list.push_back(congruence_to_json(l, c));
  j["congruences"] = std::move(list);
  emit(j, common);
  return kExitOk;
}

int run_cg(const std::string& lattice_path, const std::vector<std::string>& pair,
           const CommonOptions& common) {
  FiniteLattice l = load_lattice(lattice_path);
  const int a = l.index_of(pair.at(0));
  const int b = l.index_of(pair.at(1));
  json j;
  j["pair"] = json::array({pair.at(0), pair.at(1)});
  j["congruence"] = congruence_to_json(l, principal_congruence(l, a, b));
  emit(j, common);
  return kExitOk;
}

int run_sublattices(const std::string& lattice_path, std::optional<int> max_count,
                    const CommonOptions& common) {
  FiniteLattice l = load_lattice(lattice_path);
  SublatticeList subs = enumerate_01_sublattices(l, max_count);
  json j;
  j["count"] = subs.items.size();
  j["truncated"] = subs.truncated;
  json list = json::array();
  for (const auto& emb : subs.items) {
    json set = json::array();
    for (int x : emb.injection) set.push_back(l.label(x));
    list.push_back(std::move(set));
  }
  j["sublattices"] = std::move(list);
  emit(j, common);
  return kExitOk;
}

int run_zeta(const std::string& lattice_path, const std::string& sub_csv,
             const CommonOptions& common) {
  FiniteLattice l = load_lattice(lattice_path);
  std::vector<int> subset;
  for (const std::string& s : split_labels(sub_csv)) subset.push_back(l.index_of(s));
  SublatticeEmbedding emb = sublattice_from_subset(l, subset);
  ZetaMap z = zeta_map(emb);

  json j;
  json sub = json::array();
  for (int x : emb.injection) sub.push_back(l.label(x));
  j["sublattice"] = std::move(sub);
  j["source"] = princ_to_json(emb.sub, z.source);
  j["target"] = princ_to_json(l, z.target);
  json table = json::object();
  for (int i = 0; i < z.map.source.size(); ++i) {
    table[z.map.source.label(i)] = z.map.target.label(z.map(i));
  }
  j["map"] = std::move(table);
  emit(j, common);
  return kExitOk;
}

int run_validate_functor(const std::string& functor_path, const CommonOptions& common) {
  PosetFunctor f = functor_from_json(load_json_file(functor_path));
  Report r = validate_functor(f);
  emit(report_to_json(r), common);
  return r.ok ? kExitOk : kExitNegative;
}

int run_normalize(const std::string& functor_path, const CommonOptions& common) {
  PosetFunctor f = functor_from_json(load_json_file(functor_path));
  NormalizedFunctor nf = normalize_functor(f);
  json j;
  j["trivial"] = nf.trivial;
  j["functor"] = functor_to_json(nf.functor);
  json alpha = json::object();
  for (int i = 0; i < f.base.size(); ++i) {
    const MonotoneMap& a = nf.alpha[static_cast<size_t>(i)];
    json m = json::object();
    for (int x = 0; x < a.source.size(); ++x) m[a.source.label(x)] = a.target.label(a(x));
    alpha[f.base.label(i)] = std::move(m);
  }
  j["alpha"] = std::move(alpha);
  emit(j, common);
  return kExitOk;
}

int run_kappa(const std::string& functor_path, const CommonOptions& common) {
  PosetFunctor f = functor_from_json(load_json_file(functor_path));
  NormalizedFunctor nf = normalize_functor(f);
  json j;
  j["auto_normalized"] = !is_normalized(f);
  j["trivial"] = nf.trivial;
  json per_index = json::array();
  if (!nf.trivial) {
    for (int idx = 0; idx < nf.functor.base.size(); ++idx) {
      ColimitData cd = colimit_quasiorder(nf.functor, idx);
      MonotoneMap kappa = kappa_map(nf.functor, cd);
      json entry;
      entry["j"] = nf.functor.base.label(idx);
      entry["carrier"] = cd.carrier.labels();
      json blocks = json::array();
      for (const auto& block : cd.quotient.blocks) {
        json jb = json::array();
        for (int x : block) jb.push_back(cd.carrier.label(x));
        blocks.push_back(std::move(jb));
      }
      entry["blocks"] = std::move(blocks);
      entry["quotient"] = poset_to_json(cd.quotient.poset);
      json table = json::object();
      for (int b = 0; b < kappa.source.size(); ++b) {
        table[kappa.source.label(b)] = kappa.target.label(kappa(b));
      }
      entry["kappa"] = std::move(table);
      entry["is_isomorphism"] = true;  // kappa_map would have aborted otherwise
      per_index.push_back(std::move(entry));
    }
  }
  j["colimits"] = std::move(per_index);
  emit(j, common);
  return kExitOk;
}

int run_check_rep(const std::string& functor_path, const std::string& embedding_path,
                  const std::optional<std::string>& lattice_path, const CommonOptions& common) {
  PosetFunctor f = functor_from_json(load_json_file(functor_path));
  std::optional<FiniteLattice> external;
  if (lattice_path) external = load_lattice(*lattice_path);
  EmbeddingFunctor e =
      embedding_from_json(load_json_file(embedding_path), external ? &*external : nullptr);

  RepresentationResult r = check_representation(f, e);
  json j;
  j["found"] = r.iso.has_value();
  if (r.iso) {
    j["xi"] = natural_iso_to_json(f, *r.iso);
  } else {
    j["reason"] = r.reason;
  }
  emit(j, common);
  return r.iso ? kExitOk : kExitNegative;
}

int run_search_rep(const std::string& functor_path, const OracleBudget& budget,
                   const CommonOptions& common) {
  PosetFunctor f = functor_from_json(load_json_file(functor_path));
  SearchOutcome outcome = search_representation(f, budget);

  json j;
  j["found"] = outcome.found();
  json candidates;
  candidates["lattices"] = outcome.lattices_examined;
  candidates["assignments"] = outcome.assignments_examined;
  candidates["max_size_reached"] = outcome.max_size_reached;
  j["candidates"] = std::move(candidates);
  j["elapsed_seconds"] = outcome.elapsed_seconds;
  if (outcome.found()) {
    j["lattice"] = lattice_to_json(*outcome.lattice);
    j["embedding"] = embedding_to_json(*outcome.embedding);
    j["xi"] = natural_iso_to_json(f, *outcome.iso);
    emit(j, common);
    return kExitOk;
  }
  j["timed_out"] = outcome.timed_out;
  j["note"] = "absence within the budget does not refute representability";
  emit(j, common);
  return outcome.timed_out ? kExitBudget : kExitNegative;
}

int run_oracle_check(int max_size, const OracleBudget& budget, const CommonOptions& common) {
  long long lattices = 0;
  long long pairs = 0;
  bool ok = true;
  json mismatches = json::array();
  for (int n = 1; n <= max_size && ok; ++n) {
    for (const FiniteLattice& l : enumerate_small_lattices(n)) {
      ++lattices;
      if (!(con_lattice(l) == oracle_congruences(l, budget))) {
        ok = false;
        mismatches.push_back({{"size", n}, {"kind", "con-lattice"}});
        break;
      }
      for (int a = 0; a < l.size() && ok; ++a) {
        for (int b = 0; b < l.size(); ++b) {
          ++pairs;
          if (!(principal_congruence(l, a, b) == oracle_principal(l, a, b, budget))) {
            ok = false;
            mismatches.push_back({{"size", n},
                                  {"kind", "principal"},
                                  {"a", l.label(a)},
                                  {"b", l.label(b)}});
            break;
          }
        }
      }
    }
  }
  json j;
  j["ok"] = ok;
  j["max_size"] = max_size;
  j["lattices_checked"] = lattices;
  j["pairs_checked"] = pairs;
  if (!ok) j["mismatches"] = std::move(mismatches);
  emit(j, common);
  return ok ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"principal lattice congruences: computation and verification"};
  app.require_subcommand(1);

  CommonOptions common;
  std::string lattice_path;
  std::string functor_path;
  std::string embedding_path;
  std::optional<std::string> optional_lattice;
  std::vector<std::string> pair;
  std::string sub_csv;
  std::optional<int> max_size;
  std::optional<double> time_limit;
  long long seed_value = 0;

  auto add_common = [&](CLI::App* cmd, bool with_format = true) {
    if (with_format) {
      cmd->add_option("--format", common.format, "output format")
          ->check(CLI::IsMember({"json", "dot"}))
          ->capture_default_str();
    }
    cmd->add_option("--seed", seed_value, "seed echoed into the report")
        ->each([&](const std::string& s) { common.seed = std::stoll(s); });
  };

  CLI::App* princ = app.add_subcommand("princ", "ordered set of principal congruences");
  princ->add_option("--lattice", lattice_path, "lattice JSON file")->required();
  add_common(princ);

  CLI::App* con = app.add_subcommand("con", "all congruences of a lattice");
  con->add_option("--lattice", lattice_path, "lattice JSON file")->required();
  add_common(con, false);

  CLI::App* cg = app.add_subcommand("cg", "principal congruence of a pair");
  cg->add_option("--lattice", lattice_path, "lattice JSON file")->required();
  cg->add_option("--pair", pair, "generating pair, two element labels")
      ->expected(2)
      ->required();
  add_common(cg, false);

  CLI::App* sublattices = app.add_subcommand("sublattices", "all {0,1}-sublattices");
  sublattices->add_option("--lattice", lattice_path, "lattice JSON file")->required();
  sublattices->add_option("--max-size", max_size, "cap on the number of sublattices listed");
  add_common(sublattices, false);

  CLI::App* zeta = app.add_subcommand("zeta", "congruence-generation map of a sublattice");
  zeta->add_option("--lattice", lattice_path, "ambient lattice JSON file")->required();
  zeta->add_option("--sub", sub_csv, "comma-separated sublattice elements")->required();
  add_common(zeta, false);

  CLI::App* validate = app.add_subcommand("validate-functor", "check functor laws");
  validate->add_option("--functor", functor_path, "functor JSON file")->required();
  add_common(validate, false);

  CLI::App* normalize = app.add_subcommand("normalize", "shared bounds, disjoint interiors");
  normalize->add_option("--functor", functor_path, "functor JSON file")->required();
  add_common(normalize, false);

  CLI::App* kappa = app.add_subcommand("kappa", "colimit quasiorders and kappa maps");
  kappa->add_option("--functor", functor_path, "functor JSON file")->required();
  add_common(kappa, false);

  CLI::App* check = app.add_subcommand("check-rep", "natural isomorphism onto Princ ∘ E");
  check->add_option("--functor", functor_path, "functor JSON file")->required();
  check->add_option("--embedding", embedding_path, "embedding functor JSON file")->required();
  check->add_option("--lattice", optional_lattice, "ambient lattice JSON file");
  add_common(check, false);

  CLI::App* search = app.add_subcommand("search-rep", "search small representing lattices");
  search->add_option("--functor", functor_path, "functor JSON file")->required();
  search->add_option("--max-size", max_size, "largest lattice size to try");
  search->add_option("--time-limit", time_limit, "seconds before giving up");
  add_common(search, false);

  CLI::App* oracle = app.add_subcommand("oracle-check", "brute-force oracle agreement");
  oracle->add_option("--max-size,--size", max_size, "largest lattice size to cross-check");
  add_common(oracle, false);

  CLI11_PARSE(app, argc, argv);

  try {
    OracleBudget budget = budget_from_env();
    if (time_limit) budget.time_limit_seconds = *time_limit;

    if (princ->parsed()) return run_princ(lattice_path, common);
    if (con->parsed()) return run_con(lattice_path, common);
    if (cg->parsed()) return run_cg(lattice_path, pair, common);
    if (sublattices->parsed()) return run_sublattices(lattice_path, max_size, common);
    if (zeta->parsed()) return run_zeta(lattice_path, sub_csv, common);
    if (validate->parsed()) return run_validate_functor(functor_path, common);
    if (normalize->parsed()) return run_normalize(functor_path, common);
    if (kappa->parsed()) return run_kappa(functor_path, common);
    if (check->parsed()) return run_check_rep(functor_path, embedding_path, optional_lattice, common);
    if (search->parsed()) {
      if (max_size) budget.max_lattice_size = *max_size;
      return run_search_rep(functor_path, budget, common);
    }
    if (oracle->parsed()) {
      int cap = max_size.value_or(5);
      budget.max_carrier_size = std::max(budget.max_carrier_size, cap);
      return run_oracle_check(cap, budget, common);
    }
  } catch (const InputError& err) {
    std::cerr << "input error: " << err.what() << "\n";
    return kExitInput;
  } catch (const BudgetError& err) {
    std::cerr << "budget exceeded: " << err.what() << "\n";
    return kExitBudget;
  } catch (const InternalError& err) {
    std::cerr << "invariant violation: " << err.what() << "\n";
    return kExitInternal;
  }
  return kExitInput;
}
