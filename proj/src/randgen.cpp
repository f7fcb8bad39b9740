#include "princong/randgen.hpp"

#include <string>

namespace princong {

Poset random_bounded_poset(Rng& rng, int interior) {
  std::vector<std::string> labels{"0"};
  for (int i = 0; i < interior; ++i) labels.push_back("m" + std::to_string(i));
  labels.push_back("1");

  Carrier carrier(std::move(labels));
  const int n = carrier.size();
  RelMatrix rel(n);
  rel.add_diagonal();
  for (int x = 0; x < n; ++x) {
    rel.set(0, x);
    rel.set(x, n - 1);
  }
  for (int i = 1; i + 1 < n; ++i) {
    for (int j = i + 1; j + 1 < n; ++j) {
      if (rng.coin(0.4)) rel.set(i, j);
    }
  }
  rel.transitive_close();
  return Poset(std::move(carrier), std::move(rel));
}

MonotoneMap random_catb_map(Rng& rng, const Poset& source, const Poset& target) {
  const int tgt0 = target.zero();
  const int tgt1 = target.one();
  std::vector<int> candidates;
  for (int y = 0; y < target.size(); ++y) {
    if (y != tgt0) candidates.push_back(y);
  }

  std::vector<int> table(static_cast<size_t>(source.size()));
  for (int attempt = 0; attempt < 64; ++attempt) {
    for (int x = 0; x < source.size(); ++x) {
      if (x == source.zero()) {
        table[static_cast<size_t>(x)] = tgt0;
      } else if (x == source.one()) {
        table[static_cast<size_t>(x)] = tgt1;
      } else {
        table[static_cast<size_t>(x)] = candidates[static_cast<size_t>(
            rng.below(static_cast<int>(candidates.size())))];
      }
    }
    MonotoneMap f(source, target, table);
    if (is_monotone(f)) return f;
  }
  // Fallback: collapse everything except the least element to the top.
  for (int x = 0; x < source.size(); ++x) {
    table[static_cast<size_t>(x)] = x == source.zero() ? tgt0 : tgt1;
  }
  return MonotoneMap(source, target, std::move(table));
}

namespace {

Poset tag_interiors(const Poset& p, const std::string& tag) {
  std::vector<std::string> labels(static_cast<size_t>(p.size()));
  for (int x = 0; x < p.size(); ++x) {
    if (x == p.zero() || x == p.one()) {
      labels[static_cast<size_t>(x)] = p.label(x);
    } else {
      labels[static_cast<size_t>(x)] = p.label(x) + "#" + tag;
    }
  }
  return Poset(Carrier(std::move(labels)), p.rel());
}

std::vector<int> compose_tables(const std::vector<int>& second, const std::vector<int>& first) {
  std::vector<int> out(first.size());
  for (size_t x = 0; x < first.size(); ++x) {
    out[x] = second[static_cast<size_t>(first[x])];
  }
  return out;
}

}  // namespace

PosetFunctor random_functor(Rng& rng, int max_base, int max_object)
{
  const int base_size = 1 + rng.below(max_base);
  const bool diamond = base_size == 4 && rng.coin();

  PosetFunctor f;
  std::vector<std::string> base_labels;
  for (int i = 0; i < base_size; ++i) base_labels.push_back("s" + std::to_string(i));
  if (diamond) {
    f.base = Poset::from_le_pairs(Carrier(base_labels),
                                  {{"s0", "s1"}, {"s0", "s2"}, {"s1", "s3"}, {"s2", "s3"}});
  } else {
    f.base = Poset::chain(base_labels);
  }

  const bool tagged = rng.coin();
  auto fresh_object = [&](int i) {
    Poset p = random_bounded_poset(rng, rng.below(max_object - 1));
    return tagged ? tag_interiors(p, f.base.label(i)) : p;
  };

  if (diamond) {
    // Left path free, right path planted as a factorization of its composite.
    const Poset p0 = fresh_object(0);
    const Poset p1 = fresh_object(1);
    const Poset p3 = fresh_object(3);
    MonotoneMap psi01 = random_catb_map(rng, p0, p1);
    MonotoneMap psi13 = random_catb_map(rng, p1, p3);
    const std::vector<int> through = compose_tables(psi13.table, psi01.table);

    f.objects = {p0, p1, Poset::chain({"placeholder"}), p3};
    std::vector<int> identity0(static_cast<size_t>(p0.size()));
    for (int x = 0; x < p0.size(); ++x) identity0[static_cast<size_t>(x)] = x;
    std::vector<int> identity3(static_cast<size_t>(p3.size()));
    for (int x = 0; x < p3.size(); ++x) identity3[static_cast<size_t>(x)] = x;

    if (rng.coin()) {
      f.objects[2] = p0;
      f.morphisms[{0, 2}] = identity0;
      f.morphisms[{2, 3}] = through;
    } else {
      f.objects[2] = p3;
      f.morphisms[{0, 2}] = through;
      f.morphisms[{2, 3}] = identity3;
    }
    f.morphisms[{0, 1}] = psi01.table;
    f.morphisms[{1, 3}] = psi13.table;
    f.morphisms[{0, 3}] = through;
    return f;
  }

  for (int i = 0; i < base_size; ++i) f.objects.push_back(fresh_object(i));
  for (int i = 0; i + 1 < base_size; ++i) {
    f.morphisms[{i, i + 1}] =
        random_catb_map(rng, f.object(i), f.object(i + 1)).table;
  }
  for (int i = 0; i < base_size; ++i) {
    for (int j = i + 2; j < base_size; ++j) {
      f.morphisms[{i, j}] =
          compose_tables(f.morphisms.at({j - 1, j}), f.morphisms.at({i, j - 1}));
    }
  }
  return f;
}

}  // namespace princong
