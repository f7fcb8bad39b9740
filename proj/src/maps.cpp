#include "princong/maps.hpp"

namespace princong {

MonotoneMap::MonotoneMap(Poset src, Poset tgt, std::vector<int> tbl)
    : source(std::move(src)), target(std::move(tgt)), table(std::move(tbl)) {
  if (static_cast<int>(table.size()) != source.size()) {
    throw InputError("map table does not cover the whole source");
  }
  for (int v : table) {
    if (v < 0 || v >= target.size()) {
      throw InputError("map table value out of target range");
    }
  }
}

MonotoneMap MonotoneMap::identity(const Poset& p) {
  std::vector<int> tbl(static_cast<size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) tbl[static_cast<size_t>(i)] = i;
  return MonotoneMap(p, p, std::move(tbl));
}

bool is_monotone(const MonotoneMap& f) {
  for (int x = 0; x < f.source.size(); ++x) {
    for (int y = 0; y < f.source.size(); ++y) {
      if (f.source.leq(x, y) && !f.target.leq(f(x), f(y))) return false;
    }
  }
  return true;
}

bool is_bijective(const MonotoneMap& f) {
  if (f.source.size() != f.target.size()) return false;
  std::vector<bool> hit(static_cast<size_t>(f.target.size()), false);
  for (int x = 0; x < f.source.size(); ++x) {
    if (hit[static_cast<size_t>(f(x))]) return false;
    hit[static_cast<size_t>(f(x))] = true;
  }
  return true;
}

bool is_order_isomorphism(const MonotoneMap& f) {
  if (!is_bijective(f)) return false;
  for (int x = 0; x < f.source.size(); ++x) {
    for (int y = 0; y < f.source.size(); ++y) {
      if (f.source.leq(x, y) != f.target.leq(f(x), f(y))) return false;
    }
  }
  return true;
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  if (!(f.target == g.source)) {
    throw InputError("cannot compose maps with mismatched endpoints");
  }
  std::vector<int> tbl(static_cast<size_t>(f.source.size()));
  for (int x = 0; x < f.source.size(); ++x) {
    tbl[static_cast<size_t>(x)] = g(f(x));
  }
  return MonotoneMap(f.source, g.target, std::move(tbl));
}

MonotoneMap inverse(const MonotoneMap& f) {
  if (!is_bijective(f)) throw InputError("cannot invert a non-bijective map");
  std::vector<int> tbl(static_cast<size_t>(f.target.size()));
  for (int x = 0; x < f.source.size(); ++x) {
    tbl[static_cast<size_t>(f(x))] = x;
  }
  return MonotoneMap(f.target, f.source, std::move(tbl));
}

Report is_catb_morphism(const MonotoneMap& f) {
  if (!f.source.bounded()) throw InputError("source poset is not bounded");
  if (!f.target.bounded()) throw InputError("target poset is not bounded");

  Report report;
  for (int x = 0; x < f.source.size() && report.violations.empty(); ++x) {
    for (int y = 0; y < f.source.size(); ++y) {
      if (f.source.leq(x, y) && !f.target.leq(f(x), f(y))) {
        report.add(Violation{
            "not-monotone",
            "map is not monotone at '" + f.source.label(x) + "' <= '" +
                f.source.label(y) + "'",
            {{"x", f.source.label(x)}, {"y", f.source.label(y)}}});
        break;
      }
    }
  }

  const int src0 = f.source.zero();
  const int src1 = f.source.one();
  const int tgt0 = f.target.zero();
  const int tgt1 = f.target.one();
  if (f(src0) != tgt0) {
    report.add(Violation{"zero-not-preserved",
                         "least element maps to '" + f.target.label(f(src0)) + "'",
                         {{"image", f.target.label(f(src0))}}});
  }
  if (f(src1) != tgt1) {
    report.add(Violation{"one-not-preserved",
                         "greatest element maps to '" + f.target.label(f(src1)) + "'",
                         {{"image", f.target.label(f(src1))}}});
  }
  for (int x = 0; x < f.source.size(); ++x) {
    if (x != src0 && f(x) == tgt0) {
      report.add(Violation{"not-zero-separating",
                           "element '" + f.source.label(x) +
                               "' also maps to the least element",
                           {{"x", f.source.label(x)}}});
      break;
    }
  }
  return report;
}

}  // namespace princong
