#include "mp4io/scenario_json.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "mp4/error.hpp"

namespace mp4io {

using nlohmann::json;
using mp4::schema_error;

namespace {

std::string describe(const json& v) {
  switch (v.type()) {
    case json::value_t::null: return "null";
    case json::value_t::boolean: return "a boolean";
    case json::value_t::number_integer:
    case json::value_t::number_unsigned: return "an integer";
    case json::value_t::number_float: return "a float";
    case json::value_t::string: return "a string";
    case json::value_t::array: return "an array";
    case json::value_t::object: return "an object";
    default: return "an unsupported value";
  }
}

[[noreturn]] void expected(const std::string& path, const std::string& what, const json& got) {
  throw schema_error(path + ": expected " + what + ", got " + describe(got));
}

// Object reader that tracks which keys were consumed so that leftovers can
// be reported as unknown.
class Obj {
 public:
  Obj(const json& v, std::string path) : v_(v), path_(std::move(path)) {
    if (!v_.is_object()) expected(path_, "an object", v_);
  }

  const std::string& path() const { return path_; }
  std::string at(const std::string& key) const { return path_ + "." + key; }

  bool has(const std::string& key) const { return v_.contains(key); }

  const json& req(const std::string& key) {
    seen_.insert(key);
    if (!v_.contains(key)) throw schema_error(path_ + ": missing required key '" + key + "'");
    return v_.at(key);
  }

  const json* opt(const std::string& key) {
    seen_.insert(key);
    return v_.contains(key) ? &v_.at(key) : nullptr;
  }

  std::string str(const std::string& key) {
    const json& x = req(key);
    if (!x.is_string()) expected(at(key), "a string", x);
    return x.get<std::string>();
  }

  std::string str_or(const std::string& key, std::string fallback) {
    const json* x = opt(key);
    if (!x) return fallback;
    if (!x->is_string()) expected(at(key), "a string", *x);
    return x->get<std::string>();
  }

  int integer(const std::string& key) { return as_int(req(key), at(key)); }

  int integer_or(const std::string& key, int fallback) {
    const json* x = opt(key);
    return x ? as_int(*x, at(key)) : fallback;
  }

  bool boolean_or(const std::string& key, bool fallback) {
    const json* x = opt(key);
    if (!x) return fallback;
    if (!x->is_boolean()) expected(at(key), "a boolean", *x);
    return x->get<bool>();
  }

  void finish() const {
    for (const auto& [key, _] : v_.items()) {
      if (!seen_.count(key)) throw schema_error(at(key) + ": unknown key");
    }
  }

  static int as_int(const json& x, const std::string& path) {
    if (!x.is_number_integer()) expected(path, "an integer", x);
    return x.get<int>();
  }

 private:
  const json& v_;
  std::string path_;
  std::set<std::string> seen_;
};

const json& array_at(const json& v, const std::string& path) {
  if (!v.is_array()) expected(path, "an array", v);
  return v;
}

std::string idx(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

std::string string_at(const json& v, const std::string& path) {
  if (!v.is_string()) expected(path, "a string", v);
  return v.get<std::string>();
}

std::vector<std::string> string_list(const json& v, const std::string& path) {
  std::vector<std::string> out;
  const json& arr = array_at(v, path);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(string_at(arr[i], idx(path, i)));
  return out;
}

std::map<std::string, mp4::Sign> sign_map(const json& v, const std::string& path) {
  if (!v.is_object()) expected(path, "an object", v);
  std::map<std::string, mp4::Sign> out;
  for (const auto& [k, x] : v.items()) out[k] = parse_sign(x, path + "." + k);
  return out;
}

const mp4::Place& place_or_throw(const std::vector<mp4::Place>& places, const std::string& id,
                                 const std::string& path) {
  for (const auto& p : places) {
    if (p.id == id) return p;
  }
  throw mp4::validation_error("UnknownPlace", path + ": place '" + id + "' is not declared");
}

mp4::SquareClass class_at(const json& v, const mp4::Place& place, const std::string& path) {
  const std::string text = string_at(v, path);
  auto c = mp4::parse_class(place.kind, text);
  if (!c) {
    throw schema_error(path + ": '" + text + "' is not a square-class label for a " +
                       std::string(mp4::to_string(place.kind)) + " place");
  }
  return *c;
}

mp4::LocalRhoShape parse_shape(const json& v, const mp4::Place& place, const std::string& path) {
  Obj o(v, path);
  const std::string shape = o.str("shape");
  mp4::LocalRhoShape out;
  if (shape == "irreducible-symplectic") {
    mp4::IrreducibleSymplectic s;
    if (const json* x = o.opt("eps")) s.eps = parse_sign(*x, o.at("eps"));
    if (const json* x = o.opt("eps_twists")) s.eps_twists = sign_map(*x, o.at("eps_twists"));
    s.key = o.str_or("key", "");
    out = s;
  } else if (shape == "steinberg") {
    out = mp4::SteinbergTwist{class_at(o.req("b"), place, o.at("b"))};
  } else if (shape == "principal-series") {
    mp4::PrincipalSeries s;
    s.chi = o.str_or("chi", "1");
    if (const json* x = o.opt("s")) s.s = parse_rational(*x, o.at("s"));
    if (const json* x = o.opt("chi_minus_one")) s.chi_minus_one = parse_sign(*x, o.at("chi_minus_one"));
    out = s;
  } else if (shape == "quadratic-pair") {
    out = mp4::QuadraticPair{class_at(o.req("a"), place, o.at("a")),
                             class_at(o.req("b"), place, o.at("b"))};
  } else if (shape == "real-discrete") {
    out = mp4::RealDiscrete{o.integer("kappa")};
  } else if (shape == "irreducible-orthogonal-dihedral") {
    out = mp4::IrreducibleOrthogonalDihedral{o.str_or("tag", ""), o.integer_or("kappa", 0)};
  } else if (shape == "reducible-orthogonal") {
    out = mp4::ReducibleOrthogonal{o.str("chi")};
  } else if (shape == "constituents") {
    mp4::Constituents c;
    const std::string pp = o.at("pieces");
    const json& arr = array_at(o.req("pieces"), pp);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      Obj piece(arr[i], idx(pp, i));
      mp4::LocalConstituent lc;
      lc.key = piece.str("key");
      lc.symplectic = piece.boolean_or("symplectic", true);
      piece.finish();
      c.pieces.push_back(lc);
    }
    if (const json* x = o.opt("eps")) c.eps = parse_sign(*x, o.at("eps"));
    out = c;
  } else {
    throw schema_error(o.at("shape") + ": unknown shape '" + shape + "'");
  }
  o.finish();
  return out;
}

json shape_to_json(const mp4::LocalRhoShape& shape) {
  json j;
  j["shape"] = mp4::shape_name(shape);
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, mp4::IrreducibleSymplectic>) {
          j["eps"] = mp4::to_string(s.eps);
          if (!s.eps_twists.empty()) {
            json t = json::object();
            for (const auto& [k, e] : s.eps_twists) t[k] = mp4::to_string(e);
            j["eps_twists"] = t;
          }
          if (!s.key.empty()) j["key"] = s.key;
        } else if constexpr (std::is_same_v<T, mp4::SteinbergTwist>) {
          j["b"] = mp4::label(s.b);
        } else if constexpr (std::is_same_v<T, mp4::PrincipalSeries>) {
          j["chi"] = s.chi;
          j["s"] = rational_to_json(s.s);
          j["chi_minus_one"] = mp4::to_string(s.chi_minus_one);
        } else if constexpr (std::is_same_v<T, mp4::QuadraticPair>) {
          j["a"] = mp4::label(s.a);
          j["b"] = mp4::label(s.b);
        } else if constexpr (std::is_same_v<T, mp4::RealDiscrete>) {
          j["kappa"] = s.kappa;
        } else if constexpr (std::is_same_v<T, mp4::IrreducibleOrthogonalDihedral>) {
          if (!s.tag.empty()) j["tag"] = s.tag;
          if (s.kappa != 0) j["kappa"] = s.kappa;
        } else if constexpr (std::is_same_v<T, mp4::ReducibleOrthogonal>) {
          j["chi"] = s.chi;
        } else if constexpr (std::is_same_v<T, mp4::Constituents>) {
          json pieces = json::array();
          for (const auto& p : s.pieces) pieces.push_back({{"key", p.key}, {"symplectic", p.symplectic}});
          j["pieces"] = pieces;
          j["eps"] = mp4::to_string(s.eps);
        }
      },
      shape);
  return j;
}

}  // namespace

mp4::Sign parse_sign(const json& value, const std::string& path) {
  if (value.is_number_integer()) {
    const int v = value.get<int>();
    if (v == 1) return mp4::Sign::plus;
    if (v == -1) return mp4::Sign::minus;
  } else if (value.is_string()) {
    const std::string s = value.get<std::string>();
    if (s == "+" || s == "+1") return mp4::Sign::plus;
    if (s == "-" || s == "-1") return mp4::Sign::minus;
  }
  throw schema_error(path + ": expected a sign (\"+\", \"-\", 1 or -1), got " + value.dump());
}

mp4::Rational parse_rational(const json& value, const std::string& path) {
  if (value.is_number_integer()) return mp4::Rational(value.get<std::int64_t>());
  if (value.is_string()) {
    const std::string s = value.get<std::string>();
    std::istringstream in(s);
    std::int64_t num = 0;
    std::int64_t den = 1;
    char slash = 0;
    if (in >> num) {
      if (in.eof()) return mp4::Rational(num);
      if (in >> slash && slash == '/' && in >> den && in.eof() && den > 0) {
        return mp4::Rational(num, den);
      }
    }
  }
  throw schema_error(path + ": expected an integer or a \"p/q\" string, got " + value.dump());
}

json rational_to_json(const mp4::Rational& r) {
  if (r.denominator() == 1) return r.numerator();
  return mp4::to_string(r);
}

mp4::Scenario scenario_from_json(const json& doc) {
  Obj root(doc, "$");
  const int version = root.integer("schema_version");
  if (version != kSchemaVersion) {
    throw schema_error("$.schema_version: unsupported version " + std::to_string(version));
  }
  mp4::Scenario sc;
  sc.name = root.str_or("name", "");

  {
    const json& arr = array_at(root.req("places"), "$.places");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      Obj p(arr[i], idx("$.places", i));
      mp4::Place place;
      place.id = p.str("id");
      try {
        place.kind = mp4::parse_place_kind(p.str("kind"));
      } catch (const mp4::Error& e) {
        throw schema_error(p.at("kind") + ": " + e.what());
      }
      p.finish();
      sc.places.push_back(place);
    }
  }

  if (const json* v = root.opt("elements")) {
    const json& arr = array_at(*v, "$.elements");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      Obj e(arr[i], idx("$.elements", i));
      mp4::GlobalElement g;
      g.name = e.str("name");
      const std::string cp = e.at("classes");
      const json& classes = e.req("classes");
      if (!classes.is_object()) expected(cp, "an object", classes);
      for (const auto& [pid, label] : classes.items()) {
        const mp4::Place& place = place_or_throw(sc.places, pid, cp + "." + pid);
        g.classes[pid] = class_at(label, place, cp + "." + pid);
      }
      e.finish();
      sc.elements.push_back(std::move(g));
    }
  }

  if (const json* v = root.opt("cuspidal")) {
    const json& arr = array_at(*v, "$.cuspidal");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      Obj c(arr[i], idx("$.cuspidal", i));
      mp4::CuspidalDatum d;
      d.name = c.str("name");
      d.gl_rank = c.integer_or("gl_rank", 2);
      const std::string duality = c.str_or("duality", "symplectic");
      if (duality == "symplectic") {
        d.duality = mp4::Duality::symplectic;
      } else if (duality == "orthogonal") {
        d.duality = mp4::Duality::orthogonal;
      } else {
        throw schema_error(c.at("duality") + ": expected \"symplectic\" or \"orthogonal\"");
      }
      if (const json* x = c.opt("global_root")) d.global_root = parse_sign(*x, c.at("global_root"));
      if (const json* x = c.opt("twisted_roots")) d.twisted_roots = sign_map(*x, c.at("twisted_roots"));
      if (const json* x = c.opt("L_half_nonzero")) {
        if (!x->is_object()) expected(c.at("L_half_nonzero"), "an object", *x);
        for (const auto& [k, b] : x->items()) {
          if (!b.is_boolean()) expected(c.at("L_half_nonzero") + "." + k, "a boolean", b);
          d.L_half_nonzero[k] = b.get<bool>();
        }
      }
      d.dihedral = c.boolean_or("dihedral", false);
      d.central_char = c.str_or("central_char", "trivial");
      if (const json* x = c.opt("local")) {
        const std::string lp = c.at("local");
        if (!x->is_object()) expected(lp, "an object", *x);
        for (const auto& [pid, shape] : x->items()) {
          const mp4::Place& place = place_or_throw(sc.places, pid, lp + "." + pid);
          d.local[pid] = parse_shape(shape, place, lp + "." + pid);
        }
      }
      c.finish();
      sc.cuspidal.push_back(std::move(d));
    }
  }

  if (const json* v = root.opt("mp2_weil")) {
    const json& arr = array_at(*v, "$.mp2_weil");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      Obj w(arr[i], idx("$.mp2_weil", i));
      mp4::Mp2Weil m;
      m.name = w.str("name");
      m.chi = w.str("chi");
      if (const json* s = w.opt("S")) m.S = string_list(*s, w.at("S"));
      w.finish();
      sc.mp2_weil.push_back(std::move(m));
    }
  }

  if (const json* v = root.opt("mp2_cuspidal")) {
    const json& arr = array_at(*v, "$.mp2_cuspidal");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      Obj w(arr[i], idx("$.mp2_cuspidal", i));
      mp4::Mp2Cuspidal m;
      m.name = w.str("name");
      m.rho = w.str("rho");
      if (const json* s = w.opt("labels")) m.labels = sign_map(*s, w.at("labels"));
      w.finish();
      sc.mp2_cuspidal.push_back(std::move(m));
    }
  }

  if (const json* v = root.opt("parameter")) {
    const json& arr = array_at(*v, "$.parameter");
    mp4::AParameter phi;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      Obj s(arr[i], idx("$.parameter", i));
      phi.summands.push_back({s.str("summand"), s.integer("d")});
      s.finish();
    }
    sc.parameter = std::move(phi);
  }

  if (const json* v = root.opt("residual_characters")) {
    sc.residual_characters = string_list(*v, "$.residual_characters");
  }

  root.finish();
  return sc;
}

mp4::Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw schema_error(path.string() + ": cannot open file");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw schema_error(path.string() + ": " + e.what());
  }
  return scenario_from_json(doc);
}

json scenario_to_json(const mp4::Scenario& sc) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["name"] = sc.name;
  j["places"] = json::array();
  for (const auto& p : sc.places) {
    j["places"].push_back({{"id", p.id}, {"kind", std::string(mp4::to_string(p.kind))}});
  }
  j["elements"] = json::array();
  for (const auto& e : sc.elements) {
    json classes = json::object();
    for (const auto& [pid, c] : e.classes) classes[pid] = mp4::label(c);
    j["elements"].push_back({{"name", e.name}, {"classes", classes}});
  }
  j["cuspidal"] = json::array();
  for (const auto& d : sc.cuspidal) {
    json c;
    c["name"] = d.name;
    c["gl_rank"] = d.gl_rank;
    c["duality"] = std::string(mp4::to_string(d.duality));
    c["global_root"] = mp4::to_string(d.global_root);
    json roots = json::object();
    for (const auto& [k, s] : d.twisted_roots) roots[k] = mp4::to_string(s);
    c["twisted_roots"] = roots;
    json lhalf = json::object();
    for (const auto& [k, b] : d.L_half_nonzero) lhalf[k] = b;
    c["L_half_nonzero"] = lhalf;
    c["dihedral"] = d.dihedral;
    c["central_char"] = d.central_char;
    json local = json::object();
    for (const auto& [pid, shape] : d.local) local[pid] = shape_to_json(shape);
    c["local"] = local;
    j["cuspidal"].push_back(c);
  }
  j["mp2_weil"] = json::array();
  for (const auto& w : sc.mp2_weil) j["mp2_weil"].push_back({{"name", w.name}, {"chi", w.chi}, {"S", w.S}});
  j["mp2_cuspidal"] = json::array();
  for (const auto& w : sc.mp2_cuspidal) {
    json labels = json::object();
    for (const auto& [k, s] : w.labels) labels[k] = mp4::to_string(s);
    j["mp2_cuspidal"].push_back({{"name", w.name}, {"rho", w.rho}, {"labels", labels}});
  }
  if (sc.parameter) {
    j["parameter"] = json::array();
    for (const auto& s : sc.parameter->summands) {
      j["parameter"].push_back({{"summand", s.datum}, {"d", s.d}});
    }
  }
  if (sc.residual_characters) j["residual_characters"] = *sc.residual_characters;
  return j;
}

}  // namespace mp4io
