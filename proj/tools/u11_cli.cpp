// Command-line front end.  Every subcommand prints a deterministic report
// (byte-identical across runs and worker counts) and exits with 0 on
// success, 1 when a verification fails, and 2 on usage errors.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "u11/json_io.hpp"

using namespace u11;
using ffield::FieldTower;
using ffield::FF;
using io::json;

namespace {

struct OutputSink {
  std::string path;  // empty: stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::string full = path;
    const char* dir = std::getenv("U11_OUTPUT_DIR");
    if (dir && !path.empty() && path[0] != '/') full = std::string(dir) + "/" + path;
    std::ofstream os(full, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file: " + full);
    os << text;
  }
};

// q must be an odd prime power; recover (p, f)
std::pair<int64_t, int> split_prime_power(int64_t q) {
  if (q < 3) throw CLI::ValidationError("--q must be an odd prime power >= 3");
  int64_t p = q;
  for (int64_t d = 3; d * d <= q; d += 2)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (q % 2 == 0) throw CLI::ValidationError("--q must be odd");
  int f = 0;
  int64_t m = q;
  while (m > 1) {
    if (m % p != 0) throw CLI::ValidationError("--q must be a prime power");
    m /= p;
    ++f;
  }
  return {p, f};
}

int run_classify(int64_t p, int lambda_ext, const std::string& format, const OutputSink& out) {
  FieldTower t(p, 1, lambda_ext);
  auto labels = reps::classify(t, lambda_ext);
  if (format == "csv") {
    out.write(io::render_labels_csv(t, labels));
  } else if (format == "md") {
    out.write(io::render_labels_markdown(t, labels));
  } else {
    json j;
    j["p"] = p;
    j["lambda_ext"] = lambda_ext;
    j["field"] = io::tower_json(t);
    j["count"] = labels.size();
    json arr = json::array();
    for (const auto& x : labels) arr.push_back(io::label_json(t, x));
    j["labels"] = arr;
    out.write(io::dump(j));
  }
  return 0;
}

int run_packets(int64_t p, int lambda_ext, const OutputSink& out) {
  FieldTower t(p, 1, lambda_ext);
  json packets = json::array();
  for (int64_t k = 0; k <= p; ++k)
    packets.push_back(io::packet_json(t, reps::packet_of(t, reps::character(t, k))));
  for (int64_t k = 0; k <= p; ++k)
    packets.push_back(io::packet_json(t, reps::packet_of(t, reps::steinberg(t, k))));
  std::set<std::string> seen;
  json cusp = json::array();
  for (int64_t k = 0; k <= p; ++k)
    for (int64_t r = 0; r <= p - 1; ++r) {
      auto pkt = reps::packet_of(t, reps::supercuspidal(t, k, r));
      auto jj = io::packet_json(t, pkt);
      if (seen.insert(jj.dump()).second) cusp.push_back(jj);
    }
  for (const auto& c : cusp) packets.push_back(c);
  json ps = json::array();
  for (const auto& x : reps::classify(t, lambda_ext))
    if (x.kind == reps::IrrepLabel::Kind::PrincipalSeries)
      ps.push_back(io::packet_json(t, reps::packet_of(t, x)));
  json j;
  j["p"] = p;
  j["packet_count"] = packets.size();
  j["packets"] = packets;
  j["principal_series_singletons"] = ps;
  out.write(io::dump(j));
  return 0;
}

int run_params(int64_t p, int lambda_ext, bool c_group, const OutputSink& out) {
  FieldTower t(p, 1, lambda_ext);
  const int64_t mod = p * p - 1;
  json j;
  j["p"] = p;
  j["lambda_ext"] = lambda_ext;

  json regular = json::array();
  for (int64_t k = 0; k <= p; ++k)
    for (int64_t l = k + 1; l <= p; ++l) {
      if (c_group)
        regular.push_back(io::cparam_json(t, langlands::c_endo(t, k, l)));
      else
        regular.push_back(io::param_json(t, langlands::endo_param(t, k, l)));
    }

  json torus = json::array();
  std::set<std::pair<int64_t, uint64_t>> taken;
  for (int64_t r = 0; r < mod; ++r)
    for (FF lambda : t.subfield_units(lambda_ext)) {
      // canonical class representative: minimum of the two equivalent
      // index pairs
      int64_t r2 = c_group ? (((-p * r - (p + 1)) % mod) + mod) % mod : (((-p * r) % mod) + mod) % mod;
      FF l2 = t.inv(lambda);
      auto key1 = std::make_pair(r, t.entry_key(lambda));
      auto key2 = std::make_pair(r2, t.entry_key(l2));
      if (key2 < key1) continue;  // the partner will be (or was) listed
      if (!taken.insert(key1).second) continue;
      if (c_group)
        torus.push_back(io::cparam_json(t, langlands::c_torus(t, r, lambda)));
      else
        torus.push_back(io::param_json(t, langlands::torus_param(t, r, lambda)));
    }

  json singular = json::array();
  for (int64_t k = 0; k <= p; ++k) {
    json e;
    if (c_group) {
      e["param"] = io::cparam_json(t, langlands::c_endo(t, k, k));
      e["equivalent_torus"] =
          io::cparam_json(t, langlands::c_torus(t, -1 + (1 - p) * k, t.neg(t.one())));
    } else {
      e["param"] = io::param_json(t, langlands::endo_param(t, k, k));
      e["equivalent_torus"] =
          io::param_json(t, langlands::torus_param(t, (1 - p) * k, t.neg(t.one())));
    }
    singular.push_back(e);
  }

  j["regular_endoscopic_classes"] = regular;
  j["torus_classes"] = torus;
  j["singular_endoscopic"] = singular;
  auto counts = c_group ? langlands::count_c_classes(t, lambda_ext)
                        : langlands::count_l_classes(t, lambda_ext);
  j["counts"] = {{"regular_endoscopic", counts.regular_endo}, {"torus", counts.torus}};
  out.write(io::dump(j));
  return 0;
}

int run_correspond(int64_t p, int lambda_ext, const std::string& param_text,
                   const OutputSink& out) {
  FieldTower t(p, 1, lambda_ext);
  auto param = io::parse_param(t, json::parse(param_text));
  auto pkt = langlands::correspond(t, param);
  json j;
  j["p"] = p;
  j["param"] = io::param_json(t, param);
  j["packet"] = io::packet_json(t, pkt);
  out.write(io::dump(j));
  return 0;
}

int run_transfer(int64_t p, int64_t k, int64_t l, const OutputSink& out) {
  FieldTower t(p, 1, 1);
  json j;
  j["p"] = p;
  j["source"] = io::param_json(t, langlands::j_param(t, k, l));
  j["packet"] = io::packet_json(t, langlands::transfer(t, k, l));
  out.write(io::dump(j));
  return 0;
}

int run_verify_hecke(int64_t q, const OutputSink& out) {
  auto [p, f] = split_prime_power(q);
  FieldTower t(p, f, 1);
  auto su = finituni::enumerate_group(t, finituni::Variant::SU);
  auto rep = hecke::validate_relations(t, su);
  json j = io::relation_report_json(rep);
  json mods = json::array();
  for (const auto& m : hecke::supersingular_table(t)) mods.push_back(io::module_json(t, m));
  j["modules"] = mods;
  out.write(io::dump(j));
  return rep.ok ? 0 : 1;
}

int run_verify_oracle(int64_t p, int lambda_ext, const OutputSink& out) {
  FieldTower t(p, 1, lambda_ext);
  auto res = langlands::sweep_oracle_agreement(t, lambda_ext);
  json j;
  j["p"] = p;
  j["lambda_ext"] = lambda_ext;
  j["pairs"] = res.pairs;
  j["disagreements"] = res.disagreements;
  if (res.disagreements > 0) j["first_disagreement"] = res.first_disagreement;
  j["ok"] = res.disagreements == 0;
  out.write(io::dump(j));
  return res.disagreements == 0 ? 0 : 1;
}

int run_dump_group(int64_t q, const std::string& variant, int64_t bound, const OutputSink& out) {
  auto [p, f] = split_prime_power(q);
  FieldTower t(p, f, 1);
  std::map<std::string, finituni::Variant> names{{"u11", finituni::Variant::U11},
                                                 {"su", finituni::Variant::SU},
                                                 {"gu", finituni::Variant::GU},
                                                 {"u1", finituni::Variant::U1}};
  auto it = names.find(variant);
  if (it == names.end()) throw CLI::ValidationError("unknown variant: " + variant);
  auto table = finituni::enumerate_group(t, it->second, bound);
  out.write(io::dump(io::group_json(table)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact classification tables for rank-one unitary groups"};
  app.require_subcommand(1);
  app.fallthrough(true);
  OutputSink out;
  app.add_option("--output", out.path, "write the report to a file instead of stdout");

  int64_t p = 3, q = 3, k = 0, l = 0, bound = 9;
  int lambda_ext = 1;
  std::string format = "json", param_text, variant = "u11";

  auto* classify = app.add_subcommand("classify", "list all irreducible labels");
  classify->add_option("--p", p, "odd prime")->required();
  classify->add_option("--lambda-ext", lambda_ext, "lambda layer degree (default 1)");
  classify->add_option("--format", format, "json|csv|md")
      ->check(CLI::IsMember({"json", "csv", "md"}));

  auto* packets = app.add_subcommand("packets", "group the labels into packets");
  packets->add_option("--p", p, "odd prime")->required();
  packets->add_option("--lambda-ext", lambda_ext, "lambda layer degree (default 1)");

  auto* params = app.add_subcommand("params", "list parameter classes");
  params->add_option("--p", p, "odd prime")->required();
  params->add_option("--lambda-ext", lambda_ext, "lambda layer degree (default 1)");
  bool c_group = false;
  params->add_flag("--c-group", c_group, "use the central-extension variant");

  auto* correspond = app.add_subcommand("correspond", "packet attached to a parameter");
  correspond->add_option("--p", p, "odd prime")->required();
  correspond->add_option("--lambda-ext", lambda_ext, "lambda layer degree (default 1)");
  correspond->add_option("--param", param_text, "parameter as JSON")->required();

  auto* transfer = app.add_subcommand("transfer", "endoscopic transfer of a character pair");
  transfer->add_option("--p", p, "odd prime")->required();
  transfer->add_option("--k", k, "first index")->required();
  transfer->add_option("--l", l, "second index")->required();

  auto* verify = app.add_subcommand("verify", "run a verification report");
  verify->require_subcommand(1);
  auto* verify_hecke = verify->add_subcommand("hecke", "idempotent and module relations");
  verify_hecke->add_option("--q", q, "odd prime power <= 9")->required();
  auto* verify_oracle = verify->add_subcommand("oracle", "conjugacy oracle versus closed form");
  verify_oracle->add_option("--p", p, "odd prime")->required();
  verify_oracle->add_option("--lambda-ext", lambda_ext, "lambda layer degree (default 2)");

  auto* dump = app.add_subcommand("dump-group", "emit a group table as JSON");
  dump->add_option("--q", q, "odd prime power")->required();
  dump->add_option("--variant", variant, "u11|su|gu|u1");
  dump->add_option("--bound", bound, "enumeration bound on q (default 9)");

  verify_oracle->parse_complete_callback([&] {
    if (verify_oracle->count("--lambda-ext") == 0) lambda_ext = 2;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*classify) return run_classify(p, lambda_ext, format, out);
    if (*packets) return run_packets(p, lambda_ext, out);
    if (*params) return run_params(p, lambda_ext, c_group, out);
    if (*correspond) return run_correspond(p, lambda_ext, param_text, out);
    if (*transfer) return run_transfer(p, k, l, out);
    if (*verify_hecke) return run_verify_hecke(q, out);
    if (*verify_oracle) return run_verify_oracle(p, lambda_ext, out);
    if (*dump) return run_dump_group(q, variant, bound, out);
  } catch (const io::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
