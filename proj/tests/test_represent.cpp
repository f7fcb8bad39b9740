#include <doctest.h>

#include "princong/iso.hpp"
#include "princong/represent.hpp"

using namespace princong;

namespace {

FiniteLattice n5() {
  return FiniteLattice::from_covers(
      {"0", "a", "b", "c", "1"},
      {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
}

// The shape of Princ(N5): bottom, one atom, two incomparable above it, top.
Poset princ_n5_shape() {
  return Poset::from_le_pairs(
      Carrier({"bot", "e", "u", "v", "top"}),
      {{"bot", "e"}, {"e", "u"}, {"e", "v"}, {"u", "top"}, {"v", "top"}});
}

EmbeddingFunctor bounds_into_pentagon() {
  FiniteLattice l = n5();
  EmbeddingFunctor e;
  e.base = Poset::chain({"s0", "s1"});
  e.ambient = l;
  e.assignment = {{l.index_of("0"), l.index_of("1")}, {0, 1, 2, 3, 4}};
  return e;
}

}  // namespace

TEST_CASE("a princ functor represents itself through the identity family") {
  EmbeddingFunctor e = bounds_into_pentagon();
  PosetFunctor f = princ_functor(e);

  RepresentationResult r = check_representation(f, e);
  REQUIRE(r.iso.has_value());
  for (const MonotoneMap& comp : r.iso->components) {
    CHECK(comp.table == MonotoneMap::identity(comp.source).table);
  }
  CHECK(verify_representation(f, e, *r.iso));
}

TEST_CASE("the identity on the two-chain is representable inside itself") {
  FiniteLattice chain2 = FiniteLattice::from_covers({"0", "1"}, {{"0", "1"}});
  SublatticeEmbedding full = sublattice_from_subset(chain2, {0, 1});
  MonotoneMap psi = MonotoneMap::identity(chain2.poset());

  auto xi = check_single_morphism_representation(psi, full);
  REQUIRE(xi.has_value());
  // Princ of the two-chain: delta then nabla, so 0 -> Delta and 1 -> Nabla.
  CHECK(xi->first.table == std::vector<int>{0, 1});
  CHECK(xi->second.table == std::vector<int>{0, 1});
  CHECK(xi->first.target.label(0) == "cg(0,0)");
  CHECK(xi->first.target.label(1) == "cg(0,1)");
}

TEST_CASE("a cardinality mismatch is not representable") {
  FiniteLattice chain3 = FiniteLattice::from_covers({"0", "m", "1"}, {{"0", "m"}, {"m", "1"}});
  SublatticeEmbedding full = sublattice_from_subset(chain3, {0, 1, 2});
  // |Princ(chain3)| = 4 but the source poset has 3 elements.
  MonotoneMap psi = MonotoneMap::identity(chain3.poset());
  CHECK_FALSE(check_single_morphism_representation(psi, full).has_value());
}

TEST_CASE("a non-Cat_B psi is rejected as input") {
  FiniteLattice chain2 = FiniteLattice::from_covers({"0", "1"}, {{"0", "1"}});
  SublatticeEmbedding full = sublattice_from_subset(chain2, {0, 1});
  MonotoneMap bad(chain2.poset(), chain2.poset(), {1, 1});
  CHECK_THROWS_AS(check_single_morphism_representation(bad, full), InputError);
}

TEST_CASE("the bounds inclusion pattern into the pentagon is representable") {
  FiniteLattice l = n5();
  SublatticeEmbedding bounds = sublattice_from_subset(l, {l.index_of("0"), l.index_of("1")});
  Poset p1 = princ_n5_shape();
  MonotoneMap psi(Poset::chain({"0", "1"}), p1,
                  {p1.index_of("bot"), p1.index_of("top")});

  auto xi = check_single_morphism_representation(psi, bounds);
  REQUIRE(xi.has_value());
  CHECK(is_order_isomorphism(xi->second));
}

TEST_CASE("the pentagon instance fails when F(1) has the wrong shape") {
  FiniteLattice l = n5();
  EmbeddingFunctor e = bounds_into_pentagon();

  PosetFunctor f;
  f.base = e.base;
  Poset p1 = Poset::chain({"q0", "q1", "q2", "q3", "q4"});  // not the princ shape
  f.objects = {Poset::chain({"0", "1"}), p1};
  f.morphisms[{0, 1}] = {0, 4};
  REQUIRE(validate_functor(f).ok);

  RepresentationResult r = check_representation(f, e);
  CHECK_FALSE(r.iso.has_value());
  CHECK(r.reason.find("no isomorphism family") == 0);
}

TEST_CASE("a perturbed psi invalidates the functor and is not representable") {
  EmbeddingFunctor e = bounds_into_pentagon();
  Poset p1 = princ_n5_shape();

  PosetFunctor f;
  f.base = e.base;
  f.objects = {Poset::chain({"0", "1"}), p1};
  f.morphisms[{0, 1}] = {p1.index_of("bot"), p1.index_of("u")};  // 1 no longer hits the top
  REQUIRE_FALSE(validate_functor(f).ok);

  RepresentationResult r = check_representation(f, e);
  CHECK_FALSE(r.iso.has_value());
  CHECK(r.reason.find("functor invalid") == 0);
}

TEST_CASE("the positive pentagon instance finds a family and replays") {
  EmbeddingFunctor e = bounds_into_pentagon();
  Poset p1 = princ_n5_shape();

  PosetFunctor f;
  f.base = e.base;
  f.objects = {Poset::chain({"0", "1"}), p1};
  f.morphisms[{0, 1}] = {p1.index_of("bot"), p1.index_of("top")};
  REQUIRE(validate_functor(f).ok);

  RepresentationResult r = check_representation(f, e);
  REQUIRE(r.iso.has_value());
  CHECK(verify_representation(f, e, *r.iso));

  // Tampering with a component must break the replay.
  NaturalIso broken = *r.iso;
  std::swap(broken.components[1].table[p1.index_of("u")],
            broken.components[1].table[p1.index_of("v")]);
  std::string why;
  const bool ok = verify_representation(f, e, broken, &why);
  if (ok) {
    // Swapping u and v may land on the other automorphism; break it harder.
    std::swap(broken.components[1].table[p1.index_of("bot")],
              broken.components[1].table[p1.index_of("top")]);
    CHECK_FALSE(verify_representation(f, e, broken, &why));
  }
}

TEST_CASE("base mismatch is an input error") {
  EmbeddingFunctor e = bounds_into_pentagon();
  PosetFunctor f;
  f.base = Poset::chain({"t0", "t1"});
  f.objects = {Poset::chain({"0", "1"}), Poset::chain({"0", "1"})};
  f.morphisms[{0, 1}] = {0, 1};
  CHECK_THROWS_AS(check_representation(f, e), InputError);
}

TEST_CASE("reordered base labels are aligned before checking") {
  FiniteLattice l = n5();
  EmbeddingFunctor e;
  e.base = Poset::from_le_pairs(Carrier({"s1", "s0"}), {{"s0", "s1"}});
  e.ambient = l;
  e.assignment = {{0, 1, 2, 3, 4}, {l.index_of("0"), l.index_of("1")}};

  PosetFunctor f = princ_functor(e);
  // Present F over the same labels in the opposite carrier order.
  PosetFunctor g;
  g.base = Poset::from_le_pairs(Carrier({"s0", "s1"}), {{"s0", "s1"}});
  g.objects = {f.object(1), f.object(0)};
  g.morphisms[{0, 1}] = f.morphisms.at({1, 0});

  RepresentationResult r = check_representation(g, e);
  CHECK(r.iso.has_value());
}
