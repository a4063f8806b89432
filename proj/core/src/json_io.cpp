#include "rocoh/json_io.hpp"

#include "rocoh/errors.hpp"

namespace rocoh {

namespace {

/// Documents emitted by the CLI wrap their input; accept either form.
const Json& unwrap(const Json& j) {
  if (j.is_object() && j.contains("input") && j["input"].is_object()) return j["input"];
  return j;
}

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ValidationError(std::string("field \"") + key + "\" has the wrong type");
  }
}

template <class T>
T field_or(const Json& j, const char* key, T fallback) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  return field<T>(j, key);
}

const Json& array_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array()) {
    throw ValidationError(std::string("field \"") + key + "\" must be an array");
  }
  return j.at(key);
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

Json to_json(RODegree a) { return Json{{"m", a.m}, {"n", a.n}}; }

RODegree degree_from_json(const Json& j) { return RODegree{field<int>(j, "m"), field<int>(j, "n")}; }

Json to_json(Prime p, const RealRep& rep) {
  Json j{{"trivial", rep.trivial}};
  if (p.is_two()) {
    j["sigma"] = rep.sigma;
  } else {
    Json rot = Json::object();
    for (const auto& [i, k] : rep.rotations) rot[std::to_string(i)] = k;
    j["rotations"] = rot;
  }
  return j;
}

RealRep rep_from_json(Prime p, const Json& j) {
  if (j.is_string()) return parse_rep(p, j.get<std::string>());
  if (!j.is_object()) throw ValidationError("representation must be an object or a string");
  RealRep rep;
  rep.trivial = field_or<int>(j, "trivial", 0);
  rep.sigma = field_or<int>(j, "sigma", 0);
  if (j.contains("rotations")) {
    if (!j["rotations"].is_object()) throw ValidationError("\"rotations\" must be an object");
    for (const auto& [key, value] : j["rotations"].items()) {
      int index = 0;
      try {
        index = std::stoi(key);
      } catch (const std::exception&) {
        throw ValidationError("rotation index \"" + key + "\" is not an integer");
      }
      if (!value.is_number_integer()) throw ValidationError("rotation multiplicity must be an integer");
      if (value.get<int>() != 0) rep.rotations[index] = value.get<int>();
    }
  }
  validate(p, rep);
  return rep;
}

Json to_json(const ConeMonomial& mono) {
  return Json{{"cone", mono.is_top() ? "top" : "bottom"}, {"kappa", mono.kappa}, {"j", mono.j}, {"k", mono.k}};
}

ConeMonomial monomial_from_json(const Json& j) {
  const auto cone = field<std::string>(j, "cone");
  const int kappa = field_or<int>(j, "kappa", 0);
  const int a = field<int>(j, "j");
  const int b = field<int>(j, "k");
  if (cone == "top") return ConeMonomial::top(kappa, a, b);
  if (cone == "bottom") {
    if (kappa != 0 && kappa != 1) throw ValidationError("bottom monomial kappa must be 0 or 1");
    return kappa == 1 ? ConeMonomial::bottom_kappa(a, b) : ConeMonomial::bottom_plain(a, b);
  }
  throw ValidationError("cone must be \"top\" or \"bottom\"");
}

Json to_json(const RingElement& x) {
  if (x.is_zero()) return Json{{"zero", to_json(x.degree())}};
  Json j = to_json(*x.monomial());
  j["coeff"] = x.coeff();
  return j;
}

RingElement element_from_json(Prime p, const Json& j) {
  if (j.is_object() && j.contains("zero")) return RingElement(p, degree_from_json(j["zero"]));
  const ConeMonomial mono = monomial_from_json(j);
  validate(p, mono);
  return RingElement(p, mono, field_or<long long>(j, "coeff", 1));
}

Json to_json(const OrbitAlgebra& x) {
  Json basis = Json::array();
  for (const auto& b : x.basis()) basis.push_back(Json{{"name", b.name}, {"deg", b.degree}});
  Json mult = Json::array();
  for (const auto& e : x.mult_entries()) mult.push_back(Json::array({e.i, e.j, e.k, e.coeff}));
  Json beta = Json::array();
  for (const auto& e : x.beta_entries()) beta.push_back(Json::array({e.i, e.j, e.coeff}));
  Json j{{"p", x.prime().value()},
         {"basis", basis},
         {"mult", mult},
         {"tau", x.tau_index() < 0 ? Json(nullptr) : Json(x.basis()[x.tau_index()].name)},
         {"beta", beta}};
  if (!x.underlying_betti().empty()) j["underlying_betti"] = x.underlying_betti();
  return j;
}

OrbitAlgebra orbit_algebra_from_json(const Json& doc) {
  const Json& j = unwrap(doc);
  const Prime p(field<int>(j, "p"));
  std::vector<OrbitBasisElement> basis;
  for (const auto& b : array_field(j, "basis")) basis.push_back({field<std::string>(b, "name"), field<int>(b, "deg")});
  auto row = [](const Json& r, std::size_t len) {
    if (!r.is_array() || r.size() != len) {
      throw ValidationError("structure constant rows must have " + std::to_string(len) + " entries");
    }
    std::vector<long long> out;
    for (const auto& v : r) {
      if (!v.is_number_integer()) throw ValidationError("structure constants must be integers");
      out.push_back(v.get<long long>());
    }
    return out;
  };
  std::vector<MultEntry> mult;
  for (const auto& r : array_field(j, "mult")) {
    auto v = row(r, 4);
    mult.push_back({static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2]), v[3]});
  }
  std::vector<BetaEntry> beta;
  if (j.contains("beta")) {
    for (const auto& r : array_field(j, "beta")) {
      auto v = row(r, 3);
      beta.push_back({static_cast<int>(v[0]), static_cast<int>(v[1]), v[2]});
    }
  }
  return OrbitAlgebra(p, std::move(basis), mult, j.contains("tau") && !j.at("tau").is_null() ? field<std::string>(j, "tau") : std::string(), beta,
                      field_or<std::vector<int>>(j, "underlying_betti", {}));
}

Json to_json(const RepComplex& x) {
  Json cells = Json::array();
  for (const auto& c : x.cells) {
    Json boundary = Json::array();
    for (const auto& b : c.boundary) {
      Json entry{{"gen", b.gen}};
      if (b.value.is_zero()) {
        entry["coeff"] = 0;
        entry["zero"] = to_json(b.value.degree());
      } else {
        entry["coeff"] = b.value.coeff();
        entry["monomial"] = to_json(*b.value.monomial());
      }
      boundary.push_back(entry);
    }
    cells.push_back(Json{{"name", c.name}, {"rep", to_json(x.p, c.rep)}, {"boundary", boundary}});
  }
  Json j{{"p", x.p.value()}, {"cells", cells}};
  if (x.fixed_betti) j["fixed_betti"] = *x.fixed_betti;
  return j;
}

RepComplex rep_complex_from_json(const Json& doc) {
  const Json& j = unwrap(doc);
  RepComplex x;
  x.p = Prime(field<int>(j, "p"));
  for (const auto& c : array_field(j, "cells")) {
    RepCell cell;
    cell.name = field<std::string>(c, "name");
    if (!c.contains("rep")) throw ValidationError("cell \"" + cell.name + "\" has no \"rep\"");
    cell.rep = rep_from_json(x.p, c["rep"]);
    if (c.contains("boundary")) {
      for (const auto& b : array_field(c, "boundary")) {
        const auto gen = field<std::string>(b, "gen");
        const long long coeff = field_or<long long>(b, "coeff", 1);
        if (b.contains("monomial")) {
          const ConeMonomial mono = monomial_from_json(b["monomial"]);
          validate(x.p, mono);
          cell.boundary.push_back({gen, RingElement(x.p, mono, coeff)});
        } else if (b.contains("zero")) {
          cell.boundary.push_back({gen, RingElement(x.p, degree_from_json(b["zero"]))});
        } else {
          throw ValidationError("boundary entry for \"" + gen + "\" needs a \"monomial\"");
        }
      }
    }
    x.cells.push_back(std::move(cell));
  }
  if (j.contains("fixed_betti")) x.fixed_betti = field<std::vector<int>>(j, "fixed_betti");
  validate(x);
  return x;
}

Json to_json(const GCWComplex& x) {
  Json cells = Json::array();
  for (const auto& c : x.cells()) {
    cells.push_back(Json{{"name", c.name}, {"dim", c.dim}, {"free", c.orbit == OrbitType::Free}});
  }
  Json boundary = Json::array();
  for (const auto& t : x.boundary()) {
    Json e{{"from", x.cells()[t.from].name}, {"to", x.cells()[t.to].name}};
    if (!t.group_ring.empty()) {
      e["groupring"] = t.group_ring;
    } else {
      e["int"] = t.integer;
    }
    boundary.push_back(e);
  }
  Json j{{"p", x.prime().value()}, {"cells", cells}, {"boundary", boundary}};
  if (x.basepoint()) j["basepoint"] = x.cells()[*x.basepoint()].name;
  return j;
}

GCWComplex gcw_from_json(const Json& doc) {
  const Json& j = unwrap(doc);
  GCWComplex x(Prime(field<int>(j, "p")));
  for (const auto& c : array_field(j, "cells")) {
    x.add_cell(field<std::string>(c, "name"), field<int>(c, "dim"),
               field<bool>(c, "free") ? OrbitType::Free : OrbitType::Fixed);
  }
  if (j.contains("boundary")) {
    for (const auto& e : array_field(j, "boundary")) {
      const int from = x.find(field<std::string>(e, "from"));
      const int to = x.find(field<std::string>(e, "to"));
      if (e.contains("groupring")) {
        x.add_free_boundary(from, to, field<std::vector<std::int64_t>>(e, "groupring"));
      } else {
        x.add_int_boundary(from, to, field<std::int64_t>(e, "int"));
      }
    }
  }
  if (j.contains("basepoint")) x.set_basepoint(x.find(field<std::string>(j, "basepoint")));
  x.validate();
  return x;
}

Json to_json(const FreeBasis& b) {
  Json gens = Json::array();
  for (const auto& g : b.generators) gens.push_back(Json{{"name", g.name}, {"degree", to_json(g.degree)}});
  return Json{{"kind", "FreeBasis"}, {"generators", gens}, {"beta_closed", b.beta_closed}, {"notes", b.notes}};
}

Json to_json(const RankProfile& profile) {
  Json rows = Json::array();
  for (const auto& [alpha, r] : profile) {
    if (r != 0) rows.push_back(Json{{"m", alpha.m}, {"n", alpha.n}, {"rank", r}});
  }
  return rows;
}

Json to_json(const NonFreeCertificate& c) {
  Json j{{"kind", "NonFreeCertificate"},
         {"reason", to_string(c.reason)},
         {"stage", c.stage},
         {"message", c.message},
         {"window", c.window},
         {"profile", to_json(c.profile)}};
  if (c.candidate) {
    Json cand = Json::array();
    for (const auto& d : *c.candidate) cand.push_back(to_json(d));
    j["candidate"] = cand;
  } else {
    j["candidate"] = nullptr;
  }
  return j;
}

Json to_json(const EngineResult& r) {
  return std::visit([](const auto& v) { return to_json(v); }, r);
}

Json to_json(const ModuleData& m) {
  return Json{{"q", m.q}, {"rank", m.rank()}, {"length", m.length()}, {"exponents", m.exponents}};
}

Json to_json(const Fact& f) {
  static const char* names[] = {"DimensionGreater", "PointRankZero", "EulerIsomorphism", "ActionNonzero",
                                "IndexGreater"};
  Json j{{"kind", names[static_cast<int>(f.kind)]}, {"text", f.text}};
  switch (f.kind) {
    case FactKind::DimensionGreater:
    case FactKind::IndexGreater:
      j["lhs"] = f.lhs;
      j["rhs"] = f.rhs;
      break;
    case FactKind::PointRankZero:
      j["degree"] = to_json(f.degree);
      break;
    case FactKind::EulerIsomorphism:
      j["rep"] = to_json(f.p, f.rep);
      break;
    case FactKind::ActionNonzero:
      if (f.element) j["element"] = to_json(*f.element);
      break;
  }
  return j;
}

Json to_json(const Verdict& v) {
  Json ev = Json::array();
  for (const auto& f : v.evidence) ev.push_back(to_json(f));
  return Json{{"outcome", to_string(v.outcome)}, {"evidence", ev}, {"revalidated", revalidate(v)}};
}

}  // namespace rocoh
