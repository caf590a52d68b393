#include "u11/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace u11::io {

using reps::IrrepLabel;

json tower_json(const FieldTower& t) {
  json j;
  j["p"] = t.p();
  j["f"] = t.f();
  j["k"] = t.k();
  j["generator_polynomial"] = t.modulus();
  return j;
}

json mult_char_json(const FieldTower& t, const chars::MultChar& c) {
  json j;
  j["n"] = c.n;
  j["lambda"] = t.format(c.lambda);
  j["r"] = c.r;
  return j;
}

json label_json(const FieldTower& t, const IrrepLabel& x) {
  json j;
  switch (x.kind) {
    case IrrepLabel::Kind::Character:
      j["type"] = "char";
      j["k"] = x.k;
      break;
    case IrrepLabel::Kind::Steinberg:
      j["type"] = "steinberg";
      j["k"] = x.k;
      break;
    case IrrepLabel::Kind::PrincipalSeries:
      j["type"] = "principal_series";
      j["r"] = x.r;
      j["lambda"] = t.format(x.lambda);
      break;
    case IrrepLabel::Kind::Supercuspidal:
      j["type"] = "supercuspidal";
      j["k"] = x.k;
      j["r"] = x.r;
      break;
  }
  return j;
}

json packet_json(const FieldTower& t, const reps::LPacket& pkt) {
  json arr = json::array();
  for (const auto& x : pkt) arr.push_back(label_json(t, x));
  return arr;
}

json module_json(const FieldTower& t, const hecke::Module1D& m) {
  (void)t;
  json j;
  j["module"] = "M_" + std::to_string(m.label);
  j["r"] = m.label;
  j["idempotent"] = m.idem_index;
  j["a_s"] = m.a_s;
  j["a_s_prime"] = m.a_s_prime;
  return j;
}

json param_json(const FieldTower& t, const langlands::LParam& a) {
  json j;
  switch (a.kind) {
    case langlands::LParam::Kind::U1:
      j["type"] = "u1";
      j["k"] = a.k;
      break;
    case langlands::LParam::Kind::JPair:
      j["type"] = "j";
      j["k"] = a.k;
      j["l"] = a.l;
      break;
    case langlands::LParam::Kind::Endo:
      j["type"] = "endo";
      j["k"] = a.k;
      j["l"] = a.l;
      break;
    case langlands::LParam::Kind::Torus:
      j["type"] = "torus";
      j["r"] = a.r;
      j["lambda"] = t.format(a.lambda);
      break;
  }
  return j;
}

json cparam_json(const FieldTower& t, const langlands::CParam& a) {
  json j;
  if (a.kind == langlands::CParam::Kind::Endo) {
    j["type"] = "c_endo";
    j["k"] = a.k;
    j["l"] = a.l;
  } else {
    j["type"] = "c_torus";
    j["r"] = a.r;
    j["lambda"] = t.format(a.lambda);
  }
  if (a.alt_root) j["alt_root"] = true;
  return j;
}

langlands::LParam parse_param(const FieldTower& t, const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "u1") return langlands::u1_param(t, j.at("k").get<int64_t>());
  if (type == "j") return langlands::j_param(t, j.at("k").get<int64_t>(), j.at("l").get<int64_t>());
  if (type == "endo")
    return langlands::endo_param(t, j.at("k").get<int64_t>(), j.at("l").get<int64_t>());
  if (type == "torus")
    return langlands::torus_param(t, j.at("r").get<int64_t>(),
                                  t.parse(j.at("lambda").get<std::string>()));
  throw std::invalid_argument("unknown parameter type: " + type);
}

json group_json(const finituni::GroupTable& table) {
  const FieldTower& t = *table.tower;
  json j;
  j["variant"] = finituni::variant_name(table.variant);
  j["q"] = t.q();
  j["order"] = table.size();
  j["field"] = tower_json(t);
  json elems = json::array();
  for (uint32_t i = 0; i < table.size(); ++i) {
    const auto& g = table.elements[i];
    json e;
    e["m"] = json::array({json::array({t.format(g.a), t.format(g.b)}),
                          json::array({t.format(g.c), t.format(g.d)})});
    e["borel"] = bool(table.in_borel[i]);
    e["unipotent"] = bool(table.in_unipotent[i]);
    e["torus"] = bool(table.in_torus[i]);
    e["center_norm_one"] = bool(table.in_center_u1[i]);
    e["det_one"] = bool(table.in_su[i]);
    elems.push_back(e);
  }
  j["elements"] = elems;
  return j;
}

json relation_report_json(const hecke::RelationReport& r) {
  json j;
  j["q"] = r.q;
  j["ok"] = r.ok;
  j["idempotent_checks"] = r.idempotent_checks;
  j["module_checks"] = r.module_checks;
  j["failures"] = r.failures;
  return j;
}

namespace {

void label_row(const FieldTower& t, const IrrepLabel& x, std::string& type, std::string& k,
               std::string& r, std::string& lambda) {
  switch (x.kind) {
    case IrrepLabel::Kind::Character:
      type = "char";
      k = std::to_string(x.k);
      r = lambda = "";
      break;
    case IrrepLabel::Kind::Steinberg:
      type = "steinberg";
      k = std::to_string(x.k);
      r = lambda = "";
      break;
    case IrrepLabel::Kind::PrincipalSeries:
      type = "principal_series";
      k = "";
      r = std::to_string(x.r);
      lambda = t.format(x.lambda);
      break;
    case IrrepLabel::Kind::Supercuspidal:
      type = "supercuspidal";
      k = std::to_string(x.k);
      r = std::to_string(x.r);
      lambda = "";
      break;
  }
}

}  // namespace

std::string render_labels_csv(const FieldTower& t, const std::vector<IrrepLabel>& labels) {
  std::ostringstream os;
  os << "type,k,r,lambda\n";
  for (const auto& x : labels) {
    std::string type, k, r, lambda;
    label_row(t, x, type, k, r, lambda);
    os << type << ',' << k << ',' << r << ',' << lambda << '\n';
  }
  return os.str();
}

std::string render_labels_markdown(const FieldTower& t, const std::vector<IrrepLabel>& labels) {
  std::ostringstream os;
  os << "| type | k | r | lambda |\n|---|---|---|---|\n";
  for (const auto& x : labels) {
    std::string type, k, r, lambda;
    label_row(t, x, type, k, r, lambda);
    os << "| " << type << " | " << k << " | " << r << " | " << lambda << " |\n";
  }
  return os.str();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace u11::io
