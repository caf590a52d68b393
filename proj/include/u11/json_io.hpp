#pragma once

#include <string>

#include "json.hpp"
#include "u11/chars.hpp"
#include "u11/finituni.hpp"
#include "u11/hecke.hpp"
#include "u11/langlands.hpp"
#include "u11/reps.hpp"

namespace u11::io {

using json = nlohmann::ordered_json;
using ffield::FieldTower;

json tower_json(const FieldTower& t);
json mult_char_json(const FieldTower& t, const chars::MultChar& c);
json label_json(const FieldTower& t, const reps::IrrepLabel& x);
json packet_json(const FieldTower& t, const reps::LPacket& pkt);
json module_json(const FieldTower& t, const hecke::Module1D& m);
json param_json(const FieldTower& t, const langlands::LParam& a);
json cparam_json(const FieldTower& t, const langlands::CParam& a);
json group_json(const finituni::GroupTable& table);
json relation_report_json(const hecke::RelationReport& r);

// inverse of param_json for the command-line front end
langlands::LParam parse_param(const FieldTower& t, const json& j);

// classification table renderers; all three orderings are identical
std::string render_labels_csv(const FieldTower& t, const std::vector<reps::IrrepLabel>& labels);
std::string render_labels_markdown(const FieldTower& t, const std::vector<reps::IrrepLabel>& labels);

std::string dump(const json& j);  // canonical two-space indent plus newline

}  // namespace u11::io
