#include "cli.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "erconn/analytic.hpp"
#include "erconn/bounds.hpp"
#include "erconn/error.hpp"
#include "erconn/montecarlo.hpp"
#include "erconn/oracle.hpp"
#include "erconn/serialize.hpp"
#include "erconn/spectral.hpp"
#include "erconn/tables.hpp"

namespace erconn::cli {
namespace {

using nlohmann::json;

enum class Format { text, json, csv };

struct FormatFlags {
  bool json = false;
  bool csv = false;
  int precision = 3;

  Format format() const { return json ? Format::json : csv ? Format::csv : Format::text; }
};

void add_format_flags(CLI::App* cmd, FormatFlags& f, bool csv_supported = true) {
  auto* j = cmd->add_flag("--json", f.json, "Emit JSON");
  if (csv_supported) cmd->add_flag("--csv", f.csv, "Emit CSV")->excludes(j);
  cmd->add_option("--precision", f.precision, "Decimals for probabilities in text/CSV output")
      ->check(CLI::Range(0, 17));
}

std::string fixed(double v, int precision) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(precision) << v;
  return s.str();
}

std::string shortest(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

// --- nmin ----------------------------------------------------------------

struct NMinArgs {
  int n = 0;
  double p = 0.0;
  std::string form = "tabulated";
  FormatFlags fmt;
};

int cmd_nmin(const NMinArgs& a, std::ostream& out) {
  const ModelParams params(a.n, a.p);
  const NMin v = a.form == "closed" ? n_min_closed_form(params) : n_min(params);
  const double asym = n_min_asymptotic(a.p);
  switch (a.fmt.format()) {
    case Format::json:
      out << json{{"n", a.n},
                  {"p", a.p},
                  {"form", a.form},
                  {"n_min", to_json(v)},
                  {"asymptote", asym},
                  {"asymptote_rounded", std::llround(asym)}}
                 .dump(2)
          << '\n';
      break;
    case Format::csv:
      out << "n,p,n_min_exact,n_min,asymptote\n"
          << a.n << ',' << shortest(a.p) << ',' << shortest(v.exact) << ',' << v.rounded_up << ','
          << shortest(asym) << '\n';
      break;
    case Format::text:
      out << "n: " << a.n << "\np: " << shortest(a.p) << "\nform: " << a.form
          << "\nn_min_exact: " << fixed(v.exact, 6) << "\nn_min: " << v.rounded_up
          << "\nasymptote: " << fixed(asym, 6) << "\nasymptote_rounded: " << std::llround(asym)
          << '\n';
      break;
  }
  return kOk;
}

// --- probbound -----------------------------------------------------------

struct ProbArgs {
  int n = 0;
  double p = 0.0;
  int union_size = 0;
  FormatFlags fmt;
};

int cmd_probbound(const ProbArgs& a, std::ostream& out, std::ostream& err) {
  const ModelParams params(a.n, a.p);
  const BoundReport r = bound_report(params, a.union_size);
  switch (a.fmt.format()) {
    case Format::json: {
      json j{{"n", a.n}, {"p", a.p}, {"N", a.union_size}, {"bounds", to_json(r)}};
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "n,p,N,p_hat,n_min,status,prob_lower\n"
          << a.n << ',' << shortest(a.p) << ',' << a.union_size << ',' << shortest(r.p_hat) << ','
          << (r.n_min ? std::to_string(r.n_min->rounded_up) : std::string()) << ','
          << to_string(r.prob_status) << ','
          << (r.prob_lower ? fixed(*r.prob_lower, a.fmt.precision) : std::string()) << '\n';
      break;
    case Format::text:
      out << "n: " << a.n << "\np: " << shortest(a.p) << "\nN: " << a.union_size
          << "\np_hat: " << shortest(r.p_hat) << "\nn_min: "
          << (r.n_min ? std::to_string(r.n_min->rounded_up) : std::string("infeasible"))
          << "\nstatus: " << to_string(r.prob_status) << "\nprob_lower: "
          << (r.prob_lower ? fixed(*r.prob_lower, a.fmt.precision) : std::string("none")) << '\n';
      break;
  }
  if (r.prob_status == BoundStatus::below_n_min) {
    err << "error: N=" << a.union_size << " is below N_min";
    if (r.n_min) err << "=" << r.n_min->rounded_up;
    err << "; the probability bound is not certified\n";
    return kDomainError;
  }
  return kOk;
}

// --- tables --------------------------------------------------------------

struct TablesArgs {
  int which = 0;
  FormatFlags fmt;
};

int cmd_tables(const TablesArgs& a, std::ostream& out) {
  if (!a.fmt.json) {
    write_table_csv(out, a.which, a.fmt.precision);
    return kOk;
  }
  json j{{"table", a.which}};
  if (a.which == 1) {
    const NMinTable t = table_n_min();
    j["ps"] = t.ps;
    j["ns"] = t.ns;
    j["cells"] = t.cells;
  } else {
    json rows = json::array();
    for (const auto& r :
         a.which == 2 ? table_probability_by_p() : table_probability_by_union_size()) {
      rows.push_back({{"n", r.n}, {"p", r.p}, {"N", r.union_size}, {"prob_lower", r.prob_lower}});
    }
    j["rows"] = rows;
  }
  out << j.dump(2) << '\n';
  return kOk;
}

// --- mc ------------------------------------------------------------------

struct McArgs {
  int n = 0;
  double p = 0.0;
  int union_size = 1;
  std::int64_t trials = 1000;
  std::uint64_t seed = 0;
  int workers = 1;
  std::string dump_dir;
  int dump_limit = 10;
  FormatFlags fmt;
};

void dump_graphs(const McArgs& a, const ModelParams& params) {
  namespace fs = std::filesystem;
  fs::create_directories(a.dump_dir);
  const std::int64_t count = std::min<std::int64_t>(a.trials, a.dump_limit);
  for (std::int64_t t = 0; t < count; ++t) {
    std::ofstream f(fs::path(a.dump_dir) / ("trial_" + std::to_string(t) + ".txt"));
    if (!f) throw DomainError("cannot write graph dump to " + a.dump_dir);
    write_edge_list(f, sample_union(params, a.union_size, a.seed, static_cast<std::uint64_t>(t)));
  }
}

int cmd_mc(const McArgs& a, std::ostream& out) {
  const McConfig config{ModelParams(a.n, a.p), a.union_size, a.trials, a.seed, a.workers};
  SweepRow row{config, std::nullopt, bound_report(config.params, config.union_size), {}};
  row.estimate = run_mc(config);
  if (!a.dump_dir.empty()) dump_graphs(a, config.params);
  out << to_json(row).dump(2) << '\n';
  return kOk;
}

// --- oracle --------------------------------------------------------------

struct OracleArgs {
  int n = 0;
  double p = 0.0;
  int union_size = 1;
  int workers = 1;
  FormatFlags fmt;
};

int cmd_oracle(const OracleArgs& a, std::ostream& out) {
  const ModelParams params(a.n, a.p);
  const ExactReport r = exact_union_report(params, a.union_size, a.workers);
  const UnionParams u(params, a.union_size);
  json moments = json::array();
  double max_rel = 0.0;
  for (int k = 1; k <= 4; ++k) {
    const double analytic = a.n * detail::moment_coefficient(a.n, u.p_hat(), k);
    const double exact = r.eigenvalue_moments[k - 1];
    const double rel = std::abs(exact - analytic) / std::max(std::abs(analytic), 1e-300);
    max_rel = std::max(max_rel, rel);
    moments.push_back({{"k", k}, {"enumerated", exact}, {"analytic", analytic}, {"rel_error", rel}});
  }
  const Interval e = expected_lambda2_bounds(u);
  json j{{"n", a.n},
         {"p", a.p},
         {"N", a.union_size},
         {"p_hat", u.p_hat()},
         {"exact", to_json(r)},
         {"moments", moments},
         {"max_moment_rel_error", max_rel},
         {"e_lambda2_bounds", {{"lower", e.lower}, {"upper", e.upper}}}};
  out << j.dump(2) << '\n';
  return kOk;
}

// --- sweep ---------------------------------------------------------------

struct SweepArgs {
  int table = 0;
  std::string config_file;
  std::int64_t trials = 20000;
  std::uint64_t seed = 1;
  int workers = 1;
  FormatFlags fmt;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  std::vector<McConfig> configs;
  if (!a.config_file.empty()) {
    std::ifstream f(a.config_file);
    if (!f) throw DomainError("cannot read " + a.config_file);
    std::stringstream buf;
    buf << f.rdbuf();
    for (auto& row : read_sweep_json(buf.str(), a.workers)) configs.push_back(row.config);
  } else {
    if (a.table != 2 && a.table != 3) throw DomainError("sweep needs --table 2|3 or --config");
    const auto rows = a.table == 2 ? table_probability_by_p() : table_probability_by_union_size();
    for (const auto& r : rows) {
      configs.push_back({ModelParams(r.n, r.p), r.union_size, a.trials, a.seed, a.workers});
    }
  }
  const auto rows = sweep(configs);
  if (a.fmt.csv) {
    out << "n,p,N,trials,mean_lambda2,e_lambda2_lower,e_lambda2_upper,prob_ge_lambda_min,"
           "prob_lower,error\n";
    for (const auto& r : rows) {
      out << r.config.params.n() << ',' << shortest(r.config.params.p()) << ','
          << r.config.union_size << ',' << r.config.trials << ',';
      if (r.estimate && r.bounds) {
        out << shortest(r.estimate->mean_lambda2) << ',' << shortest(r.bounds->e_lambda2_lower)
            << ',' << shortest(r.bounds->e_lambda2_upper) << ','
            << fixed(r.estimate->prob_ge_lambda_min, a.fmt.precision) << ','
            << (r.bounds->prob_lower ? fixed(*r.bounds->prob_lower, a.fmt.precision) : "");
      } else {
        out << ",,,,";
      }
      out << ',' << r.error << '\n';
    }
  } else {
    out << sweep_to_json(rows).dump(2) << '\n';
  }
  return kOk;
}

// --- sample / inspect ----------------------------------------------------

struct SampleArgs {
  int n = 0;
  double p = 0.0;
  int union_size = 1;
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
  std::string out_file;
  FormatFlags fmt;
};

int cmd_sample(const SampleArgs& a, std::ostream& out) {
  const GraphSample g = sample_union(ModelParams(a.n, a.p), a.union_size, a.seed, a.trial);
  if (a.out_file.empty()) {
    if (a.fmt.json) {
      json edges = json::array();
      for (const Edge& e : g.edges()) edges.push_back({e.first, e.second});
      out << json{{"n", g.n()}, {"edges", edges}}.dump(2) << '\n';
    } else {
      write_edge_list(out, g);
    }
    return kOk;
  }
  std::ofstream f(a.out_file);
  if (!f) throw DomainError("cannot write " + a.out_file);
  write_edge_list(f, g);
  if (a.fmt.json) {
    out << json{{"n", g.n()}, {"edges", g.edge_count()}, {"file", a.out_file}}.dump(2) << '\n';
  } else {
    out << "wrote " << g.edge_count() << " edges on " << g.n() << " nodes to " << a.out_file
        << '\n';
  }
  return kOk;
}

struct InspectArgs {
  std::string in_file;
  FormatFlags fmt;
};

int cmd_inspect(const InspectArgs& a, std::ostream& out) {
  std::ifstream f(a.in_file);
  if (!f) throw DomainError("cannot read " + a.in_file);
  const GraphSample g = read_edge_list(f);
  const double l2 = lambda2(laplacian(g));
  const double lmin = g.n() >= 2 ? line_graph_lambda_min(g.n()) : 0.0;
  const bool bfs = is_connected_bfs(g);
  if (a.fmt.json) {
    out << json{{"n", g.n()},
                {"edges", g.edge_count()},
                {"lambda2", l2},
                {"lambda_min", lmin},
                {"connected_spectral", is_connected_spectral(l2)},
                {"connected_bfs", bfs}}
               .dump(2)
        << '\n';
  } else {
    out << "n: " << g.n() << "\nedges: " << g.edge_count() << "\nlambda2: " << shortest(l2)
        << "\nlambda_min: " << shortest(lmin) << "\nconnected_spectral: "
        << (is_connected_spectral(l2) ? "true" : "false")
        << "\nconnected_bfs: " << (bfs ? "true" : "false") << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Connectivity bounds for unions of Erdos-Renyi random graphs", "erconn"};
  app.require_subcommand(1);
  const int env_workers = default_workers();

  NMinArgs nmin_args;
  auto* nmin = app.add_subcommand("nmin", "Union size needed for expected connectivity");
  nmin->add_option("--n", nmin_args.n, "Node count")->required();
  nmin->add_option("--p", nmin_args.p, "Edge probability")->required();
  nmin->add_option("--form", nmin_args.form, "tabulated (default) or closed")
      ->check(CLI::IsMember({"tabulated", "closed"}));
  add_format_flags(nmin, nmin_args.fmt);

  ProbArgs prob_args;
  auto* prob = app.add_subcommand("probbound", "Lower bound on P[lambda2 >= lambda_min]");
  prob->add_option("--n", prob_args.n, "Node count")->required();
  prob->add_option("--p", prob_args.p, "Edge probability")->required();
  prob->add_option("--N", prob_args.union_size, "Union size")->required();
  add_format_flags(prob, prob_args.fmt);

  TablesArgs tables_args;
  auto* tables = app.add_subcommand("tables", "Regenerate a result table as CSV");
  tables->add_option("which", tables_args.which, "Table number")
      ->required()
      ->check(CLI::IsMember({1, 2, 3}));
  add_format_flags(tables, tables_args.fmt, false);

  McArgs mc_args;
  mc_args.workers = env_workers;
  auto* mc = app.add_subcommand("mc", "Monte-Carlo estimate with analytic bounds (JSON)");
  mc->add_option("--n", mc_args.n, "Node count")->required();
  mc->add_option("--p", mc_args.p, "Edge probability")->required();
  mc->add_option("--N", mc_args.union_size, "Union size");
  mc->add_option("--trials", mc_args.trials, "Number of trials");
  mc->add_option("--seed", mc_args.seed, "Master seed");
  mc->add_option("--workers", mc_args.workers, "Worker threads (default $ERCONN_WORKERS)");
  mc->add_option("--dump-graphs", mc_args.dump_dir, "Write union graphs as edge lists here");
  mc->add_option("--dump-limit", mc_args.dump_limit, "Trials to dump");
  add_format_flags(mc, mc_args.fmt, false);

  OracleArgs oracle_args;
  oracle_args.workers = env_workers;
  auto* oracle = app.add_subcommand("oracle", "Exact enumeration for n <= 6 (JSON)");
  oracle->add_option("--n", oracle_args.n, "Node count")->required();
  oracle->add_option("--p", oracle_args.p, "Edge probability")->required();
  oracle->add_option("--N", oracle_args.union_size, "Union size");
  oracle->add_option("--workers", oracle_args.workers, "Worker threads");
  add_format_flags(oracle, oracle_args.fmt, false);

  SweepArgs sweep_args;
  sweep_args.workers = env_workers;
  auto* sweep_cmd = app.add_subcommand("sweep", "Monte-Carlo sweep over a table or config file");
  auto* table_opt = sweep_cmd->add_option("--table", sweep_args.table, "Table 2 or 3");
  sweep_cmd->add_option("--config", sweep_args.config_file, "JSON file of rows with \"config\"")
      ->excludes(table_opt);
  sweep_cmd->add_option("--trials", sweep_args.trials, "Trials per row (with --table)");
  sweep_cmd->add_option("--seed", sweep_args.seed, "Master seed (with --table)");
  sweep_cmd->add_option("--workers", sweep_args.workers, "Worker threads");
  add_format_flags(sweep_cmd, sweep_args.fmt);

  SampleArgs sample_args;
  auto* sample = app.add_subcommand("sample", "Export a sampled union graph as an edge list");
  sample->add_option("--n", sample_args.n, "Node count")->required();
  sample->add_option("--p", sample_args.p, "Edge probability")->required();
  sample->add_option("--N", sample_args.union_size, "Union size");
  sample->add_option("--seed", sample_args.seed, "Master seed");
  sample->add_option("--trial", sample_args.trial, "Trial index");
  sample->add_option("--out", sample_args.out_file, "Output file (default stdout)");
  add_format_flags(sample, sample_args.fmt, false);

  InspectArgs inspect_args;
  auto* inspect = app.add_subcommand("inspect", "Spectral and BFS connectivity of an edge list");
  inspect->add_option("--in", inspect_args.in_file, "Edge-list file")->required();
  add_format_flags(inspect, inspect_args.fmt, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }

  try {
    if (*nmin) return cmd_nmin(nmin_args, out);
    if (*prob) return cmd_probbound(prob_args, out, err);
    if (*tables) return cmd_tables(tables_args, out);
    if (*mc) return cmd_mc(mc_args, out);
    if (*oracle) return cmd_oracle(oracle_args, out);
    if (*sweep_cmd) return cmd_sweep(sweep_args, out);
    if (*sample) return cmd_sample(sample_args, out);
    if (*inspect) return cmd_inspect(inspect_args, out);
  } catch (const CapabilityError& e) {
    err << "error: " << e.what() << '\n';
    return kCapabilityError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kDomainError;
}

}  // namespace erconn::cli
