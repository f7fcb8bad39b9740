// Acceptance suite: one criterion per line, exact checks, no tolerances.
// Criterion 7 drives the CLI binary named by the PRINCONG_CLI environment
// variable.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "princong/colimit.hpp"
#include "princong/iso.hpp"
#include "princong/json_io.hpp"
#include "princong/randgen.hpp"

using namespace princong;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw Failure(message);
}

FiniteLattice n5() {
  return FiniteLattice::from_covers(
      {"0", "a", "b", "c", "1"},
      {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
}

FiniteLattice m3() {
  return FiniteLattice::from_covers(
      {"0", "p", "q", "r", "1"},
      {{"0", "p"}, {"0", "q"}, {"0", "r"}, {"p", "1"}, {"q", "1"}, {"r", "1"}});
}

std::string blocks_text(const FiniteLattice& l, const Congruence& c) {
  return congruence_to_json(l, c).dump();
}

// ---- criterion 1 ---------------------------------------------------------

std::string criterion_oracle_equivalence() {
  int lattices = 0;
  long long pairs = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const FiniteLattice& l : enumerate_small_lattices(n)) {
      ++lattices;
      require(con_lattice(l) == oracle_congruences(l),
              "con_lattice disagrees with the partition oracle at size " + std::to_string(n));
      for (int a = 0; a < l.size(); ++a) {
        for (int b = 0; b < l.size(); ++b) {
          ++pairs;
          require(principal_congruence(l, a, b) == oracle_principal(l, a, b),
                  "principal_congruence disagrees with the oracle at size " + std::to_string(n));
        }
      }
    }
  }
  return std::to_string(lattices) + " lattices, " + std::to_string(pairs) + " pairs";
}

// ---- criterion 2 ---------------------------------------------------------

std::string criterion_named_fixtures() {
  FiniteLattice pent = n5();
  auto con = con_lattice(pent);
  require(con.size() == 5, "|Con(N5)| != 5");
  require(con == oracle_congruences(pent), "Con(N5) differs from the oracle");

  std::vector<std::string> expected{
      R"([["0","a","b","c","1"]])",
      R"([["0","a","b"],["c","1"]])",
      R"([["0","c"],["a","b","1"]])",
      R"([["0"],["a","b"],["c"],["1"]])",
      R"([["0"],["a"],["b"],["c"],["1"]])",
  };
  for (size_t i = 0; i < con.size(); ++i) {
    require(blocks_text(pent, con[i]) == expected[i],
            "Con(N5) partition structure mismatch at index " + std::to_string(i));
  }

  require(con_lattice(m3()).size() == 2, "|Con(M3)| != 2");

  FiniteLattice chain3 = FiniteLattice::from_covers({"0", "m", "1"}, {{"0", "m"}, {"m", "1"}});
  PrincPoset pp3 = princ_poset(chain3);
  Poset square = Poset::from_le_pairs(Carrier({"0", "x", "y", "1"}),
                                      {{"0", "x"}, {"0", "y"}, {"x", "1"}, {"y", "1"}});
  require(pp3.elements.size() == 4 && order_isomorphic(pp3.order, square),
          "Princ(3-chain) is not the square");

  PrincPoset pp5 = princ_poset(pent);
  require(pp5.elements.size() == 5, "Princ(N5) does not have five elements");
  const int cg_0a = pp5.index_of(principal_congruence(pent, 0, 1));
  const int cg_b1 = pp5.index_of(principal_congruence(pent, 2, 4));
  const int cg_ab = pp5.index_of(principal_congruence(pent, 1, 2));
  require(!pp5.order.leq(cg_0a, cg_b1) && !pp5.order.leq(cg_b1, cg_0a),
          "cg(0,a) and cg(b,1) are not incomparable");
  require(pp5.order.lt(pp5.bottom, cg_ab) && pp5.order.lt(cg_ab, cg_0a) &&
              pp5.order.lt(cg_ab, cg_b1) && pp5.order.lt(cg_0a, pp5.top) &&
              pp5.order.lt(cg_b1, pp5.top),
          "Princ(N5) shape mismatch");
  return "Con(N5), Con(M3), Princ(3-chain), Princ(N5)";
}

// ---- criterion 3 ---------------------------------------------------------

std::string criterion_zeta_properties() {
  int catb_checked = 0;
  int chains_checked = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const FiniteLattice& l : enumerate_small_lattices(n)) {
      SublatticeList subs = enumerate_01_sublattices(l);
      PrincPoset princ_l = princ_poset(l);
      std::vector<PrincPoset> princs;
      std::vector<ZetaMap> to_ambient;
      for (const auto& emb : subs.items) {
        ZetaMap z = zeta_map(emb);
        require(is_catb_morphism(z.map).ok, "zeta fails the Cat_B check at size " +
                                                std::to_string(n));
        ++catb_checked;
        princs.push_back(z.source);
        to_ambient.push_back(std::move(z));
      }
      // Functoriality along every chain J ⊆ K ⊆ L of {0,1}-sublattices.
      for (size_t js = 0; js < subs.items.size(); ++js) {
        for (size_t ks = 0; ks < subs.items.size(); ++ks) {
          if (js == ks) continue;
          const auto& j_set = subs.items[js].injection;
          const auto& k_set = subs.items[ks].injection;
          if (!std::includes(k_set.begin(), k_set.end(), j_set.begin(), j_set.end())) continue;

          std::vector<int> j_in_k;
          for (int ambient : j_set) {
            j_in_k.push_back(static_cast<int>(
                std::find(k_set.begin(), k_set.end(), ambient) - k_set.begin()));
          }
          SublatticeEmbedding mid{subs.items[js].sub, subs.items[ks].sub, j_in_k};
          std::vector<int> zeta_jk = zeta_table(mid, princs[js], princs[ks]);

          for (size_t i = 0; i < princs[js].elements.size(); ++i) {
            const int via_k = to_ambient[ks].map(zeta_jk[i]);
            const int direct = to_ambient[js].map(static_cast<int>(i));
            require(via_k == direct, "zeta functoriality fails at size " + std::to_string(n));
          }
          ++chains_checked;
        }
      }
    }
  }
  return std::to_string(catb_checked) + " sublattice maps, " +
         std::to_string(chains_checked) + " inclusion chains";
}

// ---- criteria 4 and 5 ----------------------------------------------------

constexpr int kRandomFunctors = 200;
constexpr std::uint64_t kSuiteSeed = 20140904;  // any fixed seed works

std::string criterion_lemma_pipeline() {
  Rng rng(kSuiteSeed);
  int kappa_checked = 0;
  for (int round = 0; round < kRandomFunctors; ++round) {
    PosetFunctor raw = random_functor(rng, 4, 5);
    require(validate_functor(raw).ok, "generator produced an invalid functor");
    PosetFunctor f = normalize_functor(raw).functor;

    for (int j = 0; j < f.base.size(); ++j) {
      ColimitData cd = colimit_quasiorder(f, j);
      MonotoneMap kappa = kappa_map(f, cd);
      require(is_order_isomorphism(kappa), "kappa is not an order isomorphism");

      std::vector<int> image(static_cast<size_t>(cd.carrier.size()));
      for (int x = 0; x < cd.carrier.size(); ++x) {
        const auto to_j = f.morphism_table(cd.origin[static_cast<size_t>(x)], j);
        image[static_cast<size_t>(x)] =
            to_j[static_cast<size_t>(cd.origin_local[static_cast<size_t>(x)])];
      }
      const Poset& pj = f.object(j);
      for (int x = 0; x < cd.carrier.size(); ++x) {
        for (int y = 0; y < cd.carrier.size(); ++y) {
          if (cd.nu_hat.related(x, y)) {
            require(pj.leq(image[static_cast<size_t>(x)], image[static_cast<size_t>(y)]),
                    "monotonicity of kappa' fails on the closed relation");
          }
          if (pj.leq(image[static_cast<size_t>(x)], image[static_cast<size_t>(y)])) {
            require(cd.nu_hat.related(x, y), "order reflection of kappa fails");
          }
        }
      }
      ++kappa_checked;
    }
  }
  return std::to_string(kRandomFunctors) + " functors, " + std::to_string(kappa_checked) +
         " kappa maps";
}

std::string criterion_normalization() {
  Rng rng(kSuiteSeed);
  for (int round = 0; round < kRandomFunctors; ++round) {
    PosetFunctor raw = random_functor(rng, 4, 5);
    NormalizedFunctor nf = normalize_functor(raw);
    require(!nf.trivial, "generator produced a trivial functor");
    require(validate_functor(nf.functor).ok, "normalized functor is invalid");
    require(is_normalized(nf.functor), "normalization predicate fails");

    for (int i = 0; i < raw.base.size(); ++i) {
      require(is_order_isomorphism(nf.alpha[static_cast<size_t>(i)]),
              "alpha component is not an isomorphism");
      for (int j = 0; j < raw.base.size(); ++j) {
        if (!raw.base.lt(i, j)) continue;
        MonotoneMap left = compose(nf.functor.morphism(i, j), nf.alpha[static_cast<size_t>(i)]);
        MonotoneMap right = compose(nf.alpha[static_cast<size_t>(j)], raw.morphism(i, j));
        require(left.table == right.table, "alpha naturality square fails");
      }
    }
  }
  return std::to_string(kRandomFunctors) + " functors";
}

// ---- criterion 6 ---------------------------------------------------------

// Every embedding functor over an ambient lattice, up to base relabelling:
// bounded sub-collections of the {0,1}-sublattices ordered by inclusion,
// with the identity assignment.
std::vector<EmbeddingFunctor> embedding_functors_over(const FiniteLattice& l) {
  SublatticeList subs = enumerate_01_sublattices(l);
  const int count = static_cast<int>(subs.items.size());
  std::vector<EmbeddingFunctor> out;

  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << count); ++mask) {
    std::vector<int> members;
    for (int s = 0; s < count; ++s) {
      if (mask & (std::uint64_t{1} << s)) members.push_back(s);
    }
    auto included = [&](int small, int big) {
      const auto& a = subs.items[static_cast<size_t>(small)].injection;
      const auto& b = subs.items[static_cast<size_t>(big)].injection;
      return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    // The induced inclusion order must be bounded.
    int least = -1;
    int greatest = -1;
    for (int s : members) {
      bool below_all = true;
      bool above_all = true;
      for (int t : members) {
        if (!included(s, t)) below_all = false;
        if (!included(t, s)) above_all = false;
      }
      if (below_all) least = s;
      if (above_all) greatest = s;
    }
    if (least < 0 || greatest < 0) continue;

    EmbeddingFunctor e;
    std::vector<std::string> labels;
    for (size_t pos = 0; pos < members.size(); ++pos) {
      labels.push_back("t" + std::to_string(pos));
    }
    RelMatrix rel(static_cast<int>(members.size()));
    for (size_t a = 0; a < members.size(); ++a) {
      for (size_t b = 0; b < members.size(); ++b) {
        if (included(members[a], members[b])) {
          rel.set(static_cast<int>(a), static_cast<int>(b));
        }
      }
    }
    e.base = Poset(Carrier(std::move(labels)), std::move(rel));
    e.ambient = l;
    for (int s : members) e.assignment.push_back(subs.items[static_cast<size_t>(s)].injection);
    out.push_back(std::move(e));
  }
  return out;
}

std::string criterion_representation_roundtrips() {
  int self_checked = 0;
  int searches = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const FiniteLattice& l : enumerate_small_lattices(n)) {
      for (const EmbeddingFunctor& e : embedding_functors_over(l)) {
        PosetFunctor f = princ_functor(e);
        RepresentationResult self = check_representation(f, e);
        require(self.iso.has_value(), "self-representation fails at lattice size " +
                                          std::to_string(n));
        require(verify_representation(f, e, *self.iso), "self-representation certificate broken");
        ++self_checked;

        SearchOutcome found = search_representation(f);
        require(found.found(), "planted instance not rediscovered at size " + std::to_string(n));
        require(found.elapsed_seconds < 60.0, "planted search exceeded its 60 s budget");
        require(verify_representation(f, *found.embedding, *found.iso),
                "search certificate does not replay");
        ++searches;
      }
    }
  }

  // The single-morphism instance of the identity on the two-chain.
  FiniteLattice chain2 = FiniteLattice::from_covers({"0", "1"}, {{"0", "1"}});
  SublatticeEmbedding full = sublattice_from_subset(chain2, {0, 1});
  auto xi = check_single_morphism_representation(MonotoneMap::identity(chain2.poset()), full);
  require(xi.has_value(), "identity on the two-chain is not representable");
  require(xi->first.table == std::vector<int>{0, 1} &&
              xi->second.table == std::vector<int>{0, 1},
          "xi does not send 0 to delta and 1 to nabla");
  require(xi->first.target.label(0) == "cg(0,0)" && xi->first.target.label(1) == "cg(0,1)",
          "xi target labels are not delta and nabla");

  return std::to_string(self_checked) + " self-representations, " + std::to_string(searches) +
         " planted searches";
}

// ---- criterion 7 ---------------------------------------------------------

struct CliResult {
  int exit_code;
  std::string output;  // stdout and stderr combined
};

CliResult run_cli(const std::string& args) {
  const char* cli = std::getenv("PRINCONG_CLI");
  require(cli != nullptr, "PRINCONG_CLI is not set");
  const std::string command = std::string(cli) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  require(pipe != nullptr, "cannot spawn the CLI");
  std::string out;
  std::array<char, 4096> buffer{};
  size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    out.append(buffer.data(), got);
  }
  return CliResult{WEXITSTATUS(pclose(pipe)), std::move(out)};
}

std::string write_file(const std::string& name, const std::string& content) {
  const char* dir = std::getenv("TMPDIR");
  const std::string path = std::string(dir ? dir : "/tmp") + "/" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

std::string criterion_negative_controls() {
  const std::string functor = write_file("acc_perturbed.json", R"({
    "base": {"elements": ["s0","s1"], "le": [["s0","s1"]]},
    "objects": {
      "s0": {"elements": ["0","1"], "le": [["0","1"]]},
      "s1": {"elements": ["bot","e","u","v","top"],
             "le": [["bot","e"],["e","u"],["e","v"],["u","top"],["v","top"]]}},
    "morphisms": {"s0<=s1": {"0": "bot", "1": "u"}}})");
  const std::string embedding = write_file("acc_embedding.json", R"({
    "lattice": {"elements": ["0","a","b","c","1"],
                "covers": [["0","a"],["a","b"],["b","1"],["0","c"],["c","1"]]},
    "assignment": {"s0": ["0","1"], "s1": ["0","a","b","c","1"]}})");
  CliResult perturbed = run_cli("check-rep --functor " + functor + " --embedding " + embedding);
  require(perturbed.exit_code == 1,
          "perturbed psi exits with " + std::to_string(perturbed.exit_code) + ", expected 1");

  const std::string bad = write_file("acc_bad_lattice.json", R"({
    "elements": ["0","x","y","u","v","1"],
    "covers": [["0","x"],["0","y"],["x","u"],["x","v"],["y","u"],["y","v"],["u","1"],["v","1"]]})");
  CliResult nonlattice = run_cli("princ --lattice " + bad);
  require(nonlattice.exit_code == 2,
          "non-lattice input exits with " + std::to_string(nonlattice.exit_code) + ", expected 2");
  require(nonlattice.output.find("not a lattice") != std::string::npos,
          "non-lattice error does not name the failure");
  require(nonlattice.output.find("'x'") != std::string::npos &&
              nonlattice.output.find("'y'") != std::string::npos,
          "non-lattice error does not carry a witness pair");
  return "perturbed psi exit 1, non-lattice exit 2 with witness";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    std::function<std::string()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "congruence-generation oracle equivalence up to size 6", criterion_oracle_equivalence},
      {2, "named-lattice fixtures", criterion_named_fixtures},
      {3, "zeta maps: Cat_B membership and functoriality up to size 6", criterion_zeta_properties},
      {4, "colimit pipeline: kappa isomorphisms and both order properties",
       criterion_lemma_pipeline},
      {5, "normalization: shared bounds, disjoint interiors, natural alpha",
       criterion_normalization},
      {6, "representation round-trips, planted searches, two-chain instance",
       criterion_representation_roundtrips},
      {7, "negative controls through the CLI", criterion_negative_controls},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = criterion.run();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what();
    } catch (const std::exception& err) {
      ok = false;
      detail = std::string("unexpected error: ") + err.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion.id << ": "
         << criterion.title << " — " << detail << " (" << elapsed << " s)";
    std::cout << line.str() << std::endl;
    if (!ok) ++failures;
  }
  if (failures == 0) {
    std::cout << "acceptance: all " << criteria.size() << " criteria passed" << std::endl;
  } else {
    std::cout << "acceptance: " << failures << " criterion(s) failed" << std::endl;
  }
  return failures;
}
