#include "princong/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace princong {

namespace {

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) throw InputError(std::string(what) + " entries must be strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> pair_list(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of pairs");
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string()) {
      throw InputError(std::string(what) + " entries must be [a, b] label pairs");
    }
    out.emplace_back(item[0].get<std::string>(), item[1].get<std::string>());
  }
  return out;
}

json cover_pairs(const Poset& p) {
  json out = json::array();
  for (const auto& [a, b] : p.covers()) {
    out.push_back(json::array({p.label(a), p.label(b)}));
  }
  return out;
}

}  // namespace

Poset poset_from_json(const json& j) {
  if (!j.is_object() || !j.contains("elements")) {
    throw InputError("poset JSON needs an \"elements\" array");
  }
  Carrier carrier(string_list(j.at("elements"), "elements"));
  std::vector<std::pair<std::string, std::string>> le;
  if (j.contains("le")) le = pair_list(j.at("le"), "le");
  return Poset::from_le_pairs(std::move(carrier), le);
}

json poset_to_json(const Poset& p) {
  json j;
  j["elements"] = p.carrier().labels();
  j["le"] = cover_pairs(p);
  return j;
}

FiniteLattice lattice_from_json(const json& j) {
  if (!j.is_object() || !j.contains("elements")) {
    throw InputError("lattice JSON needs an \"elements\" array");
  }
  std::vector<std::pair<std::string, std::string>> covers;
  if (j.contains("covers")) covers = pair_list(j.at("covers"), "covers");
  return FiniteLattice::from_covers(string_list(j.at("elements"), "elements"), covers);
}

json lattice_to_json(const FiniteLattice& l) {
  json j;
  j["elements"] = l.carrier().labels();
  j["covers"] = cover_pairs(l.poset());
  return j;
}

json congruence_to_json(const FiniteLattice& l, const Congruence& c) {
  json out = json::array();
  for (const auto& block : c.blocks()) {
    json jb = json::array();
    for (int x : block) jb.push_back(l.label(x));
    out.push_back(std::move(jb));
  }
  return out;
}

json princ_to_json(const FiniteLattice& l, const PrincPoset& pp) {
  json elements = json::array();
  for (size_t i = 0; i < pp.elements.size(); ++i) {
    json e;
    e["congruence"] = congruence_to_json(l, pp.elements[i]);
    e["witness"] = json::array(
        {l.label(pp.witnesses[i].first), l.label(pp.witnesses[i].second)});
    elements.push_back(std::move(e));
  }
  json hasse = json::array();
  for (const auto& [a, b] : pp.order.covers()) {
    hasse.push_back(json::array({a, b}));
  }
  json j;
  j["elements"] = std::move(elements);
  j["hasse"] = std::move(hasse);
  j["bottom"] = pp.bottom;
  j["top"] = pp.top;
  return j;
}

PosetFunctor functor_from_json(const json& j) {
  if (!j.is_object() || !j.contains("base") || !j.contains("objects")) {
    throw InputError("functor JSON needs \"base\" and \"objects\"");
  }
  PosetFunctor f;
  f.base = poset_from_json(j.at("base"));

  const json& objects = j.at("objects");
  if (!objects.is_object()) throw InputError("\"objects\" must map base labels to posets");
  f.objects.reserve(static_cast<size_t>(f.base.size()));
  for (int i = 0; i < f.base.size(); ++i) {
    const std::string& label = f.base.label(i);
    if (!objects.contains(label)) {
      throw InputError("no object for base element '" + label + "'");
    }
    f.objects.push_back(poset_from_json(objects.at(label)));
  }

  if (j.contains("morphisms")) {
    const json& morphisms = j.at("morphisms");
    if (!morphisms.is_object()) throw InputError("\"morphisms\" must be an object");
    for (const auto& [key, value] : morphisms.items()) {
      const auto sep = key.find("<=");
      if (sep == std::string::npos) {
        throw InputError("morphism key '" + key + "' is not of the form \"i<=j\"");
      }
      const int i = f.base.index_of(key.substr(0, sep));
      const int jdx = f.base.index_of(key.substr(sep + 2));
      if (!f.base.leq(i, jdx)) {
        throw InputError("morphism key '" + key + "' does not follow the base order");
      }
      if (i == jdx) continue;  // identities are implicit
      if (!value.is_object()) {
        throw InputError("morphism '" + key + "' must map source labels to target labels");
      }
      const Poset& src = f.object(i);
      const Poset& tgt = f.object(jdx);
      std::vector<int> table(static_cast<size_t>(src.size()), -1);
      for (const auto& [from, to] : value.items()) {
        if (!to.is_string()) throw InputError("morphism '" + key + "' images must be strings");
        table[static_cast<size_t>(src.index_of(from))] = tgt.index_of(to.get<std::string>());
      }
      for (int x = 0; x < src.size(); ++x) {
        if (table[static_cast<size_t>(x)] < 0) {
          throw InputError("morphism '" + key + "' misses source element '" + src.label(x) + "'");
        }
      }
      f.morphisms[{i, jdx}] = std::move(table);
    }
  }

  for (int i = 0; i < f.base.size(); ++i) {
    for (int k = 0; k < f.base.size(); ++k) {
      if (f.base.lt(i, k) && !f.morphisms.count({i, k})) {
        throw InputError("missing morphism \"" + f.base.label(i) + "<=" + f.base.label(k) + "\"");
      }
    }
  }
  return f;
}

json functor_to_json(const PosetFunctor& f) {
  json j;
  j["base"] = poset_to_json(f.base);
  json objects = json::object();
  for (int i = 0; i < f.base.size(); ++i) {
    objects[f.base.label(i)] = poset_to_json(f.object(i));
  }
  j["objects"] = std::move(objects);
  json morphisms = json::object();
  for (const auto& [key, table] : f.morphisms) {
    const auto& [i, jdx] = key;
    json m = json::object();
    for (int x = 0; x < f.object(i).size(); ++x) {
      m[f.object(i).label(x)] = f.object(jdx).label(table[static_cast<size_t>(x)]);
    }
    morphisms[f.base.label(i) + "<=" + f.base.label(jdx)] = std::move(m);
  }
  j["morphisms"] = std::move(morphisms);
  return j;
}

EmbeddingFunctor embedding_from_json(const json& j, const FiniteLattice* external_lattice) {
  if (!j.is_object() || !j.contains("assignment")) {
    throw InputError("embedding JSON needs an \"assignment\" object");
  }
  std::optional<FiniteLattice> own;
  if (j.contains("lattice")) own = lattice_from_json(j.at("lattice"));
  if (!own && !external_lattice) {
    throw InputError("embedding JSON has no lattice and none was supplied");
  }
  if (own && external_lattice && !(*own == *external_lattice)) {
    throw InputError("embedding lattice differs from the supplied lattice");
  }
  const FiniteLattice& lattice = own ? *own : *external_lattice;

  const json& assignment = j.at("assignment");
  if (!assignment.is_object()) {
    throw InputError("\"assignment\" must map base labels to element arrays");
  }
  std::vector<std::string> base_labels;
  std::vector<std::vector<int>> sets;
  for (const auto& [label, value] : assignment.items()) {
    base_labels.push_back(label);
    std::vector<int> set;
    for (const std::string& s : string_list(value, "assignment entry")) {
      set.push_back(lattice.index_of(s));
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    sets.push_back(std::move(set));
  }

  // Base order induced by inclusion of the assigned sets.
  Carrier carrier(base_labels);
  RelMatrix rel(carrier.size());
  for (size_t a = 0; a < sets.size(); ++a) {
    for (size_t b = 0; b < sets.size(); ++b) {
      if (std::includes(sets[b].begin(), sets[b].end(), sets[a].begin(), sets[a].end())) {
        rel.set(static_cast<int>(a), static_cast<int>(b));
      }
    }
  }
  if (auto viol = rel.antisymmetry_violation()) {
    throw InputError("assignments at '" + carrier.label(viol->first) + "' and '" +
                     carrier.label(viol->second) + "' are equal, so the base is not a poset");
  }

  EmbeddingFunctor e;
  e.base = Poset(std::move(carrier), std::move(rel));
  e.ambient = lattice;
  e.assignment = std::move(sets);
  return e;
}

json embedding_to_json(const EmbeddingFunctor& e) {
  json j;
  j["lattice"] = lattice_to_json(e.ambient);
  json assignment = json::object();
  for (int i = 0; i < e.base.size(); ++i) {
    json set = json::array();
    for (int x : e.assignment[static_cast<size_t>(i)]) set.push_back(e.ambient.label(x));
    assignment[e.base.label(i)] = std::move(set);
  }
  j["assignment"] = std::move(assignment);
  return j;
}

json report_to_json(const Report& r) {
  json j;
  j["ok"] = r.ok;
  json violations = json::array();
  for (const auto& v : r.violations) {
    json jv;
    jv["code"] = v.code;
    jv["message"] = v.message;
    json w = json::object();
    for (const auto& [key, value] : v.witness) w[key] = value;
    jv["witness"] = std::move(w);
    violations.push_back(std::move(jv));
  }
  j["violations"] = std::move(violations);
  return j;
}

json natural_iso_to_json(const PosetFunctor& f, const NaturalIso& xi) {
  json j = json::object();
  for (int i = 0; i < f.base.size(); ++i) {
    const MonotoneMap& comp = xi.components[static_cast<size_t>(i)];
    json m = json::object();
    for (int x = 0; x < comp.source.size(); ++x) {
      m[comp.source.label(x)] = comp.target.label(comp(x));
    }
    j[f.base.label(i)] = std::move(m);
  }
  return j;
}

std::string poset_to_dot(const Poset& p, const std::string& name) {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n";
  out << "  rankdir=BT;\n";
  for (int x = 0; x < p.size(); ++x) {
    out << "  n" << x << " [label=\"" << p.label(x) << "\"];\n";
  }
  for (const auto& [a, b] : p.covers()) {
    out << "  n" << a << " -> n" << b << ";\n";
  }
  out << "}\n";
  return out.str();
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& err) {
    throw InputError("cannot parse '" + path + "': " + err.what());
  }
  return j;
}

}  // namespace princong
