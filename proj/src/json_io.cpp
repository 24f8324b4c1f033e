#include "modorb/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "modorb/error.hpp"

namespace modorb::io {
namespace {

const json& member(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

std::string string_field(const json& obj, const char* key) {
  const auto& v = member(obj, key);
  if (!v.is_string()) throw InputError(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

Real real_from_json(const json& v) {
  if (v.is_string()) return parse_real(v.get<std::string>());
  if (v.is_number()) return v.get<double>();
  throw InputError("expected a decimal string");
}

std::int64_t int_from_json(const json& v, const char* what) {
  if (!v.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return v.get<std::int64_t>();
}

restricted::Element element_from_json(const json& v) {
  if (!v.is_array()) throw InputError("group elements are arrays of residues");
  restricted::Element x;
  for (const auto& c : v) x.push_back(int_from_json(c, "residue"));
  return x;
}

json element_to_json(const restricted::Element& x) { return json(x); }

}  // namespace

std::string format_real(Real x) {
  if (x == 0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.21Lg", x);
  return buf;
}

json complex_to_json(const Complex& z) {
  return json{{"re", format_real(z.real())}, {"im", format_real(z.imag())}};
}

Complex complex_from_json(const json& j) {
  if (j.is_object()) return {real_from_json(member(j, "re")), j.contains("im") ? real_from_json(j.at("im")) : 0};
  return {real_from_json(j), 0};
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ModularDatum datum_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("a modular datum must be a JSON object");
  const char* c_key = doc.contains("central_charge") ? "central_charge" : "c";
  const Rational c = parse_rational(string_field(doc, c_key));

  const auto& mods = member(doc, "modules");
  if (!mods.is_array()) throw InputError("\"modules\" must be an array");
  std::vector<ModuleInfo> modules;
  for (const auto& m : mods) modules.push_back({string_field(m, "label"), parse_rational(string_field(m, "h"))});

  const auto& rows = member(doc, "S");
  if (!rows.is_array()) throw InputError("\"S\" must be an array of rows");
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::Index cols = 0;
  for (const auto& row : rows) {
    if (!row.is_array()) throw InputError("rows of \"S\" must be arrays");
    if (row.size() != rows.front().size()) throw InputError("dimension mismatch: ragged S rows");
    cols = static_cast<Eigen::Index>(row.size());
  }
  ComplexMatrix s(n, cols);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) s(i, j) = complex_from_json(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
  return ModularDatum(c, std::move(modules), std::move(s));
}

ModularDatum parse_modular_datum(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return datum_from_json(doc);
}

restricted::RestrictedInput restricted_from_json(const json& doc) {
  std::vector<std::int64_t> factors;
  for (const auto& f : member(doc, "group")) factors.push_back(int_from_json(f, "invariant factor"));
  restricted::RestrictedInput in{restricted::FiniteAbelianGroup(factors), {}, {}, {}};

  for (const auto& o : member(doc, "orbits")) {
    restricted::OrbitSpec orbit;
    orbit.label = string_field(o, "label");
    orbit.twist = element_from_json(member(o, "twist"));
    in.group.require(orbit.twist, "twist");
    for (const auto& h : member(o, "stabilizer")) {
      orbit.characters.elements.push_back(element_from_json(h));
      in.group.require(orbit.characters.elements.back(), "stabilizer element");
    }
    for (const auto& ch : member(o, "characters")) {
      orbit.characters.dims.push_back(int_from_json(member(ch, "dim"), "dim"));
      std::vector<Complex> row;
      for (const auto& v : member(ch, "values")) row.push_back(complex_from_json(v));
      orbit.characters.rows.push_back(std::move(row));
    }
    in.orbits.push_back(std::move(orbit));
  }
  auto orbit_index = [&](const json& obj, const char* key) {
    const auto x = int_from_json(member(obj, key), key);
    if (x < 0 || static_cast<std::size_t>(x) >= in.orbits.size()) throw InputError("orbit index out of range");
    return static_cast<std::size_t>(x);
  };
  if (doc.contains("transversals")) {
    for (const auto& t : doc.at("transversals")) {
      auto& c = in.transversals[{orbit_index(t, "i"), orbit_index(t, "j")}];
      for (const auto& kappa : member(t, "C")) {
        c.push_back(element_from_json(kappa));
        in.group.require(c.back(), "transversal element");
      }
    }
  }
  if (doc.contains("blocks")) {
    for (const auto& b : doc.at("blocks")) {
      auto kappa = element_from_json(member(b, "kappa"));
      in.group.require(kappa, "kappa");
      in.blocks[{orbit_index(b, "i"), orbit_index(b, "j"), std::move(kappa)}] = complex_from_json(member(b, "S"));
    }
  }
  return in;
}

restricted::RestrictedInput parse_restricted_input(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return restricted_from_json(doc);
}

json to_json(const restricted::RestrictedInput& in) {
  json orbits = json::array();
  for (const auto& o : in.orbits) {
    json chars = json::array();
    for (std::size_t l = 0; l < o.characters.rows.size(); ++l) {
      json values = json::array();
      for (const auto& v : o.characters.rows[l]) values.push_back(complex_to_json(v));
      chars.push_back({{"dim", o.characters.dims[l]}, {"values", values}});
    }
    json stab = json::array();
    for (const auto& h : o.characters.elements) stab.push_back(element_to_json(h));
    orbits.push_back({{"label", o.label}, {"twist", element_to_json(o.twist)}, {"stabilizer", stab}, {"characters", chars}});
  }
  json transversals = json::array();
  for (const auto& [key, c] : in.transversals) {
    json elems = json::array();
    for (const auto& kappa : c) elems.push_back(element_to_json(kappa));
    transversals.push_back({{"i", key.first}, {"j", key.second}, {"C", elems}});
  }
  json blocks = json::array();
  for (const auto& [key, value] : in.blocks) {
    blocks.push_back({{"i", std::get<0>(key)}, {"j", std::get<1>(key)}, {"kappa", element_to_json(std::get<2>(key))},
                      {"S", complex_to_json(value)}});
  }
  return json{{"group", in.group.invariant_factors()},
              {"orbits", orbits},
              {"transversals", transversals},
              {"blocks", blocks}};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

json to_json(const ModularDatum& d) {
  json modules = json::array();
  for (const auto& m : d.modules()) modules.push_back({{"label", m.label}, {"h", to_string(m.h)}});
  return json{{"central_charge", to_string(d.central_charge())}, {"modules", modules}, {"S", matrix_to_json(d.s_matrix())}};
}

json to_json(const ValidationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks()) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"residual", format_real(c.residual)}, {"detail", c.detail}});
  }
  return json{{"passed", report.passed()}, {"checks", checks}};
}

json to_json(const perm::OrbifoldDatum& orbifold) {
  json doc = to_json(orbifold.datum);
  doc["k"] = orbifold.k;
  doc["source_rank"] = orbifold.source_rank;
  doc["convention"] = perm::to_string(orbifold.convention);
  auto& modules = doc["modules"];
  for (std::size_t x = 0; x < orbifold.labels.size(); ++x) {
    auto& m = modules[x];
    const auto& label = orbifold.labels[x];
    m["label_kind"] = perm::label_kind(label);
    if (const auto* o = std::get_if<perm::OffDiagonal>(&label)) {
      m["tuple"] = o->tuple;
    } else if (const auto* d = std::get_if<perm::Diagonal>(&label)) {
      m["i"] = d->i;
      m["a"] = d->a;
    } else {
      const auto& t = std::get<perm::Twisted>(label);
      m["r"] = t.r;
      m["i"] = t.i;
      m["a"] = t.a;
    }
  }
  return doc;
}

json to_json(const restricted::RestrictedSMatrix& result, const restricted::RestrictedInput& input) {
  json index = json::array();
  for (const auto& [orbit, row] : result.index) {
    index.push_back({{"orbit", orbit}, {"label", input.orbits[orbit].label}, {"character", row}});
  }
  return json{{"index", index}, {"S", matrix_to_json(result.s)}};
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace modorb::io
