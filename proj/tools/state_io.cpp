#include "state_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace slocc::cli {

namespace {

bool is_bit_string(const std::string& key) {
  return key.size() == 4 && std::all_of(key.begin(), key.end(), [](char c) { return c == '0' || c == '1'; });
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "null";
  return v.dump();
}

void render(const Json& v, int depth, std::string& out) {
  std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  for (auto it = v.begin(); it != v.end(); ++it) {
    const Json& item = it.value();
    std::string key = v.is_object() ? it.key() : "-";
    bool flat_array = item.is_array() && std::none_of(item.begin(), item.end(), [](const Json& e) { return e.is_structured(); });
    if (item.is_object() && item.empty()) {
      out += pad + key + ": {}\n";
    } else if (item.is_structured() && !flat_array) {
      out += pad + key + ":\n";
      render(item, depth + 1, out);
    } else if (flat_array) {
      std::string joined;
      for (const auto& e : item) joined += (joined.empty() ? "" : ", ") + scalar_text(e);
      out += pad + key + ": [" + joined + "]\n";
    } else {
      out += pad + key + ": " + scalar_text(item) + "\n";
    }
  }
}

Json nullable(int value) { return value == 0 ? Json(nullptr) : Json(value); }

}  // namespace

StateVector parse_state(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("malformed state document", e.what());
  }
  if (!doc.is_object()) throw ParseError("state document must be an object", doc.dump());
  StateVector x;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (!is_bit_string(it.key())) throw ParseError("state keys are 4-bit strings", it.key());
    if (!it.value().is_string()) throw ParseError("amplitudes are strings", it.value().dump());
    x.at(it.key()) = GaussianRational::parse(it.value().get<std::string>());
  }
  return x;
}

StateVector read_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read state file", path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_state(buf.str());
}

Json state_json(const StateVector& x) {
  Json out = Json::object();
  for (int k = kOddDim - 1; k >= 0; --k)
    if (!x[k].is_zero()) out[StateVector::bits_of(k)] = x[k].to_string();
  return out;
}

Json signature_json(const InvariantSignature& sig) {
  return Json{{"H", sig.H.to_string()}, {"L", sig.L.to_string()}, {"M", sig.M.to_string()}, {"D", sig.D.to_string()}};
}

Json params_json(const std::vector<GaussianRational>& params) {
  Json out = Json::array();
  for (const auto& p : params) out.push_back(p.to_string());
  return out;
}

Json quad_json(const SL2Quad& g) {
  Json out = Json::array();
  for (int k = 0; k < 4; ++k) {
    const Mat2& m = g[k];
    out.push_back(Json::array({Json::array({m.a.to_string(), m.b.to_string()}), Json::array({m.c.to_string(), m.d.to_string()})}));
  }
  return out;
}

Json report_json(const ClassificationReport& r) {
  Json doc;
  doc["input"] = state_json(r.input);
  doc["jordan"] = Json{{"semisimple", state_json(r.jordan.s)}, {"nilpotent", state_json(r.jordan.n)}};
  doc["invariants"] = signature_json(r.signature);
  doc["family"] = r.label.kind == ClassKind::nilpotent ? Json(nullptr) : Json(r.label.family);
  Json cls;
  cls["kind"] = to_string(r.label.kind);
  cls["name"] = r.label.kind == ClassKind::mixed && r.label.index == 0 ? Json(nullptr) : Json(r.label.name());
  cls["i"] = nullable(r.label.kind == ClassKind::nilpotent ? 0 : r.label.family);
  cls["j"] = nullable(r.label.kind == ClassKind::mixed ? r.label.index : 0);
  cls["orbit"] = nullable(r.label.kind == ClassKind::nilpotent ? r.label.index : 0);
  cls["parameters"] = params_json(r.label.parameters);
  cls["exactness"] = to_string(r.exactness);
  doc["class"] = cls;
  doc["s_class"] = r.label.s_class ? Json(*r.label.s_class) : Json(nullptr);
  if (r.s_form) {
    doc["s_normal_form"] = Json{{"family", nullable(r.s_form->family)},
                                {"parameters", params_json(r.s_form->parameters)},
                                {"d_family", r.s_form->d_family}};
  } else {
    doc["s_normal_form"] = nullptr;
  }
  if (r.stabilizer) {
    doc["stabilizer"] = Json{{"dim", r.stabilizer->identity_component_dim},
                             {"identity_component", r.stabilizer->identity_component},
                             {"generators", r.stabilizer->generator_text},
                             {"tabulated", r.stabilizer->tabulated},
                             {"anchor", r.stabilizer->anchor}};
  } else {
    doc["stabilizer"] = nullptr;
  }
  doc["normal_form"] = r.normal_form ? state_json(*r.normal_form) : Json(nullptr);
  doc["candidates"] = r.candidates;
  doc["symbolic_parameters"] = r.symbolic_parameters.empty() ? Json(nullptr) : Json(r.symbolic_parameters);
  doc["notes"] = r.notes;
  return doc;
}

Json verdict_json(const ConjugacyVerdict& v) {
  Json doc;
  doc["answer"] = to_string(v.answer);
  doc["route"] = to_string(v.route);
  doc["permutation"] = v.permutation ? Json(to_string(*v.permutation)) : Json(nullptr);
  doc["witness"] = v.witness ? quad_json(*v.witness) : Json(nullptr);
  if (v.route == Route::groebner) {
    doc["groebner"] = Json{{"pairs_processed", v.stats.pairs_processed},
                           {"basis_size", v.stats.basis_size},
                           {"max_degree", v.stats.max_degree_reached},
                           {"exhausted_by", v.stats.exhausted_by}};
  }
  return doc;
}

Json entry_json(const CatalogEntry& e, bool detailed) {
  Json doc;
  doc["name"] = e.name;
  doc["level"] = e.level == Level::G0 ? "g0" : "s";
  doc["kind"] = to_string(e.label.kind);
  doc["anchor"] = e.anchor;
  doc["description"] = e.description;
  doc["parameter_count"] = e.parameter_count;
  doc["constraint"] = e.constraint;
  doc["s_class"] = e.s_class;
  doc["d_family"] = e.d_family;
  if (!detailed) return doc;
  doc["g0_class"] = e.label.name();
  doc["default_parameters"] = params_json(e.default_parameters);
  doc["representative"] = state_json(representative(e.label, e.default_parameters));
  const StabilizerDescriptor& st = e.stabilizer;
  Json stab;
  stab["tabulated"] = st.tabulated;
  stab["anchor"] = st.anchor;
  stab["identity_component"] = st.identity_component;
  stab["identity_component_dim"] = st.identity_component_dim;
  stab["parameters"] = st.parameter_names;
  stab["generators"] = st.generator_text;
  doc["stabilizer"] = stab;
  return doc;
}

Json suite_json(const SuiteReport& r) {
  Json doc;
  doc["suite"] = r.suite;
  doc["outcome"] = to_string(r.outcome());
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(Json{{"name", c.name},
                          {"anchor", c.anchor},
                          {"criterion", c.criterion},
                          {"outcome", to_string(c.outcome)},
                          {"detail", c.detail}});
  doc["checks"] = checks;
  return doc;
}

std::string render_text(const Json& doc) {
  std::string out;
  if (!doc.is_structured()) return scalar_text(doc) + "\n";
  render(doc, 0, out);
  return out;
}

}  // namespace slocc::cli
