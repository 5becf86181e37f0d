#include "qadsim/decision/report.hpp"

#include <cstdio>

#include "qadsim/error.hpp"

namespace qadsim {

using nlohmann::json;

namespace {

json complex_list(const std::vector<cplx>& values) {
  json out = json::array();
  for (cplx z : values) out.push_back(json::array({z.real(), z.imag()}));
  return out;
}

std::vector<cplx> complex_list_from(const json& j) {
  std::vector<cplx> out;
  for (const auto& v : j) {
    if (v.is_number()) {
      out.emplace_back(v.get<double>(), 0.0);
    } else if (v.is_array() && v.size() == 2) {
      out.emplace_back(v[0].get<double>(), v[1].get<double>());
    } else {
      throw ConfigError("alphas entries must be numbers or [re, im] pairs");
    }
  }
  return out;
}

// Exact integers beyond 2^53 would lose digits as JSON numbers.
json wide_json(wide_int v) {
  if (v >= -(wide_int{1} << 53) && v <= (wide_int{1} << 53)) {
    return static_cast<std::int64_t>(v);
  }
  return to_string(v);
}

json candidate_json(const Candidate& c) {
  return {{"index", c.top_index},
          {"occupation", c.top_occupation},
          {"probability", c.top_probability},
          {"hp_value", c.class_level},
          {"class_size", c.class_indices.size()},
          {"class_probability", c.class_probability}};
}

}  // namespace

json to_json(const DecisionConfig& c) {
  return {{"cutoff", c.cutoff},
          {"semantics", to_string(c.semantics)},
          {"alphas", complex_list(c.alphas)},
          {"schedule", to_string(c.schedule)},
          {"integrator", to_string(c.integrator)},
          {"step", c.step},
          {"T0", c.T0},
          {"jmax", c.j_max},
          {"criterion", to_string(c.criterion)},
          {"tie_tol", c.tie_tol},
          {"extrapolate", c.extrapolate},
          {"shots", c.shots},
          {"seed", c.seed},
          {"oracle_check", c.oracle_check},
          {"work_cap", c.limits.work_cap}};
}

DecisionConfig decision_config_from_json(const json& j, DecisionConfig c) {
  if (!j.is_object()) throw ConfigError("decision config must be a JSON object");
  const json known = to_json(DecisionConfig{});
  for (const auto& item : j.items()) {
    if (!known.contains(item.key())) {
      throw ConfigError("unknown decision config key '" + item.key() + "'");
    }
  }
  try {
    if (j.contains("cutoff")) c.cutoff = j["cutoff"].get<std::int64_t>();
    if (j.contains("semantics")) c.semantics = semantics_from_string(j["semantics"].get<std::string>());
    if (j.contains("alphas")) c.alphas = complex_list_from(j["alphas"]);
    if (j.contains("schedule")) c.schedule = schedule_from_string(j["schedule"].get<std::string>());
    if (j.contains("integrator")) c.integrator = integrator_from_string(j["integrator"].get<std::string>());
    if (j.contains("step")) c.step = j["step"].get<double>();
    if (j.contains("T0")) c.T0 = j["T0"].get<double>();
    if (j.contains("jmax")) c.j_max = j["jmax"].get<int>();
    if (j.contains("criterion")) c.criterion = criterion_from_string(j["criterion"].get<std::string>());
    if (j.contains("tie_tol")) c.tie_tol = j["tie_tol"].get<double>();
    if (j.contains("extrapolate")) c.extrapolate = j["extrapolate"].get<bool>();
    if (j.contains("shots")) c.shots = j["shots"].get<std::uint64_t>();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("oracle_check")) c.oracle_check = j["oracle_check"].get<bool>();
    if (j.contains("work_cap")) c.limits.work_cap = j["work_cap"].get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid decision config: ") + e.what());
  }
  return c;
}

json to_json(const DecisionReport& r) {
  json attempts = json::array();
  for (const auto& a : r.attempts) {
    json aj = {{"T", a.T},
               {"steps", a.steps},
               {"max_norm_error", a.max_norm_error},
               {"candidate", candidate_json(a.candidate)},
               {"criterion_probability", a.criterion_probability},
               {"identified", a.identified}};
    if (a.extrapolation) {
      aj["extrapolation"] = {{"value", a.extrapolation->value},
                             {"error_estimate", a.extrapolation->error_estimate},
                             {"order", a.extrapolation->order ? json(*a.extrapolation->order) : json()},
                             {"steps", a.extrapolation->steps},
                             {"samples", a.extrapolation->samples}};
    }
    attempts.push_back(std::move(aj));
  }

  json doc = {{"schema", kReportSchemaVersion},
              {"equation", r.equation},
              {"canonical", r.canonical},
              {"occupation_form", r.occupation_form},
              {"variables", r.variables},
              {"config", to_json(r.config)},
              {"dimension", r.dimension},
              {"schedule", attempts},
              {"verdict", to_string(r.verdict)},
              {"criterion",
               {{"mode", to_string(r.config.criterion)},
                {"interpretation", interpretation(r.config.criterion)}}},
              {"caveat",
               "NoSolutionWithinCutoff covers only the truncated box [0,cutoff]^k; it "
               "never certifies that no solution exists"},
              {"sidecar", {{"wall_clock_seconds", r.wall_clock_seconds}}}};

  doc["identified_T"] = r.identified_T ? json(*r.identified_T) : json();
  doc["candidate"] = r.candidate ? candidate_json(*r.candidate) : json();
  doc["candidate_value"] = r.candidate ? wide_json(r.candidate_value) : json();
  doc["witness"] = r.witness ? json(*r.witness) : json();
  doc["certificate_checked"] = r.certificate_checked;
  if (r.oracle) {
    doc["oracle"] = {{"min_square", wide_json(r.oracle->min_square)},
                     {"argmin", r.oracle->argmin},
                     {"multiplicity", r.oracle->multiplicity},
                     {"candidate_is_ground", r.oracle->candidate_is_ground},
                     {"verdict_agrees", r.oracle->verdict_agrees}};
  } else {
    doc["oracle"] = json();
  }
  return doc;
}

json to_json(const SweepResult& sweep) {
  json reports = json::array();
  double wall = 0.0;
  for (const auto& r : sweep.reports) {
    json rj = to_json(r);
    wall += r.wall_clock_seconds;
    rj.erase("sidecar");
    reports.push_back(std::move(rj));
  }
  std::vector<std::int64_t> cutoffs;
  for (const auto& r : sweep.reports) cutoffs.push_back(r.config.cutoff);
  return {{"schema", kReportSchemaVersion},
          {"cutoffs", cutoffs},
          {"reports", std::move(reports)},
          {"stable", sweep.stable},
          {"caveat",
           "agreement across cutoffs is a stopping heuristic; no finite cutoff "
           "certifies global nonexistence of solutions"},
          {"sidecar", {{"wall_clock_seconds", wall}}}};
}

std::string content_hash(const json& document) {
  json copy = document;
  if (copy.is_object()) {
    copy.erase("sidecar");
    copy.erase("content_hash");
  }
  const std::string text = copy.dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void stamp_hash(json& document) { document["content_hash"] = content_hash(document); }

}  // namespace qadsim
