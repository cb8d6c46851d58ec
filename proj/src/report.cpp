#include "ffdigit/report.hpp"

#include <json.hpp>
#include <sstream>

namespace ffdigit {

namespace {

using json = nlohmann::ordered_json;

json row_json(const BoundCheckReport& rep) {
  json j;
  j["p"] = rep.p;
  j["r"] = rep.r;
  j["q"] = rep.q;
  j["modulus"] = rep.modulus;
  j["function"] = rep.function;
  j["shifts"] = rep.shifts_text;
  j["targets"] = rep.targets;
  j["seed"] = rep.seed;
  j["count"] = rep.count;
  j["main_term"] = rep.main_term;
  j["deviation"] = rep.deviation;
  j["bound"] = rep.bound;
  j["bound_k"] = rep.bound_k;
  j["bound_m"] = rep.bound_m;
  j["theorem_id"] = theorem_name(rep.theorem_id);
  j["applicable"] = rep.applicable;
  j["pass"] = rep.pass;
  return j;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

template <typename T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ';';
    os << v[i];
  }
  return os.str();
}

}  // namespace

std::string to_json(const BoundCheckReport& rep) { return row_json(rep).dump(); }

std::string to_json(const FieldContext& ctx, const CounterexampleCertificate& cert) {
  json j;
  j["construction_id"] = construction_name(cert.construction_id);
  j["p"] = ctx.p();
  j["r"] = ctx.r();
  j["q"] = ctx.q();
  j["modulus"] = modulus_to_string(ctx);
  j["function"] = cert.function;
  std::vector<std::string> shifts;
  for (Fq a : cert.shifts) shifts.push_back(ctx.to_string(a));
  j["shifts"] = shifts;
  j["targets"] = cert.targets;
  j["a_vector"] = cert.a_vector;
  j["attainable_sum"] = cert.attainable_sum;
  j["frobenius_j"] = cert.frobenius_j;
  j["verified"] = cert.verified;
  return j.dump();
}

void write_ndjson(std::ostream& os, const RunReport& rep) {
  json h;
  h["theorem"] = rep.theorem;
  h["prng"] = kPrngName;
  h["seed"] = rep.config.seed;
  h["p_set"] = rep.config.p_set;
  h["q_cap"] = rep.config.q_cap;
  h["d_min"] = rep.config.d_min;
  h["d_max"] = rep.config.d_max;
  h["s_list"] = rep.config.s_list;
  h["samples_per_cell"] = rep.config.samples_per_cell;
  h["exhaustive_a_cap"] = rep.config.exhaustive_a_cap;
  h["exhaustive_c_cap"] = rep.config.exhaustive_c_cap;
  h["polys_per_cell"] = rep.config.polys_per_cell;
  h["skip_trivial"] = rep.config.skip_trivial;
  h["cells_total"] = rep.cells_total;
  h["cells_trivial"] = rep.cells_trivial;
  h["checks"] = rep.checks;
  h["violations"] = rep.violations;
  h["violations_proved"] = rep.violations_proved;
  os << h.dump() << '\n';
  for (const auto& row : rep.rows) os << row_json(row).dump() << '\n';
}

const char* kCsvHeader =
    "p,r,q,modulus,function,shifts,targets,seed,count,main_term,deviation,"
    "bound,bound_k,bound_m,theorem_id,applicable,pass";

std::string to_csv_row(const BoundCheckReport& rep) {
  std::ostringstream os;
  os << rep.p << ',' << rep.r << ',' << rep.q << ',' << csv_escape(rep.modulus) << ','
     << csv_escape(rep.function) << ',' << csv_escape(join(rep.shifts_text)) << ','
     << join(rep.targets) << ',' << rep.seed << ',' << rep.count << ',' << rep.main_term
     << ',' << rep.deviation << ',' << rep.bound << ',' << rep.bound_k << ','
     << rep.bound_m << ',' << theorem_name(rep.theorem_id) << ','
     << (rep.applicable ? "true" : "false") << ',' << (rep.pass ? "true" : "false");
  return os.str();
}

void write_csv(std::ostream& os, const RunReport& rep) {
  os << kCsvHeader << '\n';
  for (const auto& row : rep.rows) os << to_csv_row(row) << '\n';
}

}  // namespace ffdigit
