#include "erconn/serialize.hpp"

#include "erconn/error.hpp"

namespace erconn {

using nlohmann::json;

namespace {

json interval_json(const Interval& i) { return json{{"lower", i.lower}, {"upper", i.upper}}; }

Interval interval_from(const json& j) {
  return {j.at("lower").get<double>(), j.at("upper").get<double>()};
}

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

BoundStatus status_from(const std::string& s) {
  for (auto st : {BoundStatus::certified, BoundStatus::below_n_min, BoundStatus::zero_lower_bound})
    if (to_string(st) == s) return st;
  throw DomainError("unknown bound status \"" + s + "\"");
}

template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed JSON record: ") + e.what());
  }
}

}  // namespace

json to_json(const McConfig& c) {
  return json{{"n", c.params.n()},
              {"p", c.params.p()},
              {"N", c.union_size},
              {"trials", c.trials},
              {"seed", c.master_seed}};
}

json to_json(const McEstimate& e) {
  return json{
      {"trials", e.trials},
      {"mean_lambda2", e.mean_lambda2},
      {"var_lambda2", e.var_lambda2},
      {"stderr_mean", e.stderr_mean},
      {"prob_connected", e.prob_connected},
      {"prob_ge_lambda_min", e.prob_ge_lambda_min},
      {"ci_halfwidths",
       {{"mean_lambda2", e.ci_mean_lambda2},
        {"var_lambda2", e.ci_var_lambda2},
        {"prob_connected", e.ci_prob_connected},
        {"prob_ge_lambda_min", e.ci_prob_ge_lambda_min}}},
      {"wilson",
       {{"prob_connected", interval_json(e.wilson_connected)},
        {"prob_ge_lambda_min", interval_json(e.wilson_ge_lambda_min)}}},
      {"ci_reliable", e.ci_reliable},
      {"connectivity_mismatches", e.connectivity_mismatches},
  };
}

json to_json(const NMin& v) { return json{{"exact", v.exact}, {"rounded_up", v.rounded_up}}; }

json to_json(const BoundReport& r) {
  return json{
      {"p_hat", r.p_hat},
      {"e_lambda2_lower", r.e_lambda2_lower},
      {"e_lambda2_upper", r.e_lambda2_upper},
      {"var_lambda2_lower", r.var_lambda2_lower},
      {"var_lambda2_upper", r.var_lambda2_upper},
      {"var_lower_clamped", r.var_lower_clamped},
      {"lambda_min", r.lambda_min},
      {"tau", r.tau},
      {"n_min", r.n_min ? to_json(*r.n_min) : json(nullptr)},
      {"theta", optional_json(r.theta)},
      {"prob_lower", optional_json(r.prob_lower)},
      {"prob_status", std::string(to_string(r.prob_status))},
  };
}

json to_json(const ExactReport& r) {
  json lk = json::array();
  for (const auto& m : r.expected_lk) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
      rows.push_back(std::move(row));
    }
    lk.push_back(std::move(rows));
  }
  return json{
      {"n", r.n},
      {"p", r.p},
      {"graphs", r.graphs},
      {"weight_sum", r.weight_sum},
      {"expected_trace_Lk", r.expected_trace_lk},
      {"expected_Lk", lk},
      {"eigenvalue_moments", r.eigenvalue_moments},
      {"expected_lambda2", r.expected_lambda2},
      {"second_moment_lambda2", r.second_moment_lambda2},
      {"prob_connected", r.prob_connected},
      {"prob_lambda2_ge_lambda_min", r.prob_lambda2_ge_lambda_min},
  };
}

json to_json(const SweepRow& row) {
  json j{{"config", to_json(row.config)}};
  j["estimate"] = row.estimate ? to_json(*row.estimate) : json(nullptr);
  j["bounds"] = row.bounds ? to_json(*row.bounds) : json(nullptr);
  j["error"] = row.error.empty() ? json(nullptr) : json(row.error);
  return j;
}

json sweep_to_json(const std::vector<SweepRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) arr.push_back(to_json(r));
  return json{{"rows", arr}};
}

McConfig mc_config_from_json(const json& j, int workers) {
  return guarded([&] {
    return McConfig{ModelParams(j.at("n").get<int>(), j.at("p").get<double>()),
                    j.at("N").get<int>(), j.at("trials").get<std::int64_t>(),
                    j.at("seed").get<std::uint64_t>(), workers};
  });
}

McEstimate mc_estimate_from_json(const json& j) {
  return guarded([&] {
    McEstimate e;
    e.trials = j.at("trials").get<std::int64_t>();
    e.mean_lambda2 = j.at("mean_lambda2").get<double>();
    e.var_lambda2 = j.at("var_lambda2").get<double>();
    e.stderr_mean = j.at("stderr_mean").get<double>();
    e.prob_connected = j.at("prob_connected").get<double>();
    e.prob_ge_lambda_min = j.at("prob_ge_lambda_min").get<double>();
    const json& ci = j.at("ci_halfwidths");
    e.ci_mean_lambda2 = ci.at("mean_lambda2").get<double>();
    e.ci_var_lambda2 = ci.at("var_lambda2").get<double>();
    e.ci_prob_connected = ci.at("prob_connected").get<double>();
    e.ci_prob_ge_lambda_min = ci.at("prob_ge_lambda_min").get<double>();
    e.wilson_connected = interval_from(j.at("wilson").at("prob_connected"));
    e.wilson_ge_lambda_min = interval_from(j.at("wilson").at("prob_ge_lambda_min"));
    e.ci_reliable = j.at("ci_reliable").get<bool>();
    e.connectivity_mismatches = j.at("connectivity_mismatches").get<std::int64_t>();
    return e;
  });
}

BoundReport bound_report_from_json(const json& j) {
  return guarded([&] {
    BoundReport r;
    r.p_hat = j.at("p_hat").get<double>();
    r.e_lambda2_lower = j.at("e_lambda2_lower").get<double>();
    r.e_lambda2_upper = j.at("e_lambda2_upper").get<double>();
    r.var_lambda2_lower = j.at("var_lambda2_lower").get<double>();
    r.var_lambda2_upper = j.at("var_lambda2_upper").get<double>();
    r.var_lower_clamped = j.at("var_lower_clamped").get<bool>();
    r.lambda_min = j.at("lambda_min").get<double>();
    r.tau = j.at("tau").get<double>();
    if (const json& nm = j.at("n_min"); !nm.is_null()) {
      r.n_min = NMin{nm.at("exact").get<double>(), nm.at("rounded_up").get<std::int64_t>()};
    }
    r.theta = optional_from<double>(j, "theta");
    r.prob_lower = optional_from<double>(j, "prob_lower");
    r.prob_status = status_from(j.at("prob_status").get<std::string>());
    return r;
  });
}

SweepRow sweep_row_from_json(const json& j, int workers) {
  return guarded([&] {
    SweepRow row{mc_config_from_json(j.at("config"), workers), std::nullopt, std::nullopt, {}};
    if (j.contains("estimate") && !j.at("estimate").is_null())
      row.estimate = mc_estimate_from_json(j.at("estimate"));
    if (j.contains("bounds") && !j.at("bounds").is_null())
      row.bounds = bound_report_from_json(j.at("bounds"));
    if (j.contains("error") && !j.at("error").is_null()) row.error = j.at("error").get<std::string>();
    return row;
  });
}

std::vector<SweepRow> read_sweep_json(const std::string& text, int workers) {
  const json doc = guarded([&] { return json::parse(text); });
  std::vector<SweepRow> rows;
  if (doc.is_object() && doc.contains("rows")) {
    for (const auto& r : doc.at("rows")) rows.push_back(sweep_row_from_json(r, workers));
  } else {
    rows.push_back(sweep_row_from_json(doc, workers));
  }
  return rows;
}

}  // namespace erconn
