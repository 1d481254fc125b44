#include "ohno/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "ohno/errors.hpp"
#include "ohno/format.hpp"
#include "ohno/integral_oracle.hpp"
#include "ohno/report_io.hpp"

namespace ohno {

namespace {

struct Options {
  std::string index;
  std::string alpha = "1";
  std::string beta;
  int l = 0;
  int m = 0;
  int n = 0;
  int weight = 0;
  std::string relation;
  std::optional<long> max_terms;
  double tol = 0.0;
  std::string output = "human";
  std::string kind = "z";
  std::string method = "auto";

  std::string relations = "duality,ohno";
  int min_weight = 2;
  int max_weight = 4;
  int max_depth = 0;
  int max_order = 1;
  std::string alphas = "1";
  std::string betas;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    if (end > start) out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  return OutputFormat::Human;
}

Method parse_method(const std::string& s) {
  if (s == "sweep") return Method::Sweep;
  if (s == "split") return Method::Split;
  return Method::Auto;
}

long env_max_terms() {
  const char* text = std::getenv("OHNO_ZETA_MAX_TERMS");
  if (text == nullptr || *text == '\0') return EvalSettings{}.max_terms;
  long value = 0;
  const char* end = text + std::char_traits<char>::length(text);
  auto [ptr, ec] = std::from_chars(text, end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::ParseError, "OHNO_ZETA_MAX_TERMS is not an integer: '" + std::string(text) + "'");
  }
  return value;
}

VerifySettings make_settings(const Options& o) {
  VerifySettings s;
  s.eval.max_terms = o.max_terms ? *o.max_terms : env_max_terms();
  s.eval.method = parse_method(o.method);
  s.eval.validate();
  if (o.tol < 0.0) throw Error(ErrorCode::ParameterDomain, "tolerance must be non-negative");
  s.tol = o.tol;
  return s;
}

int exit_for(const VerificationReport& r) { return r.pass ? kExitPass : kExitFail; }

AdmissibleIndex need_index(const Options& o) {
  if (o.index.empty()) throw Error(ErrorCode::ParseError, "--index is required");
  return AdmissibleIndex::parse(o.index);
}

std::vector<cplx> parse_complex_list(const std::string& text) {
  std::vector<cplx> out;
  for (const auto& item : split_list(text)) out.push_back(parse_complex(item));
  return out;
}

int run_eval(const Options& o, std::ostream& out) {
  const VerifySettings s = make_settings(o);
  const cplx alpha = parse_complex(o.alpha);
  const cplx beta = o.beta.empty() ? alpha : parse_complex(o.beta);
  SeriesValue v;
  if (o.kind == "z") {
    const auto k = need_index(o);
    v = o.method == "naive" ? eval_Z_naive(k, alpha, beta, s.eval.max_terms) : eval_Z(k, alpha, beta, s.eval);
  } else if (o.kind == "s") {
    v = eval_S({need_index(o), o.l, alpha}, s.eval);
  } else if (o.kind == "hurwitz") {
    v = eval_hurwitz(o.n, alpha, s.eval);
  } else if (o.kind == "multiple_hurwitz") {
    v = eval_multiple_hurwitz(need_index(o), alpha, s.eval);
  } else if (o.kind == "two_param") {
    v = eval_two_param_sum(o.m, o.n, alpha, beta, s.eval);
  } else {
    v = eval_Z_integral(need_index(o), alpha, beta);
  }
  const auto format = parse_format(o.output);
  if (format == OutputFormat::Csv) out << series_value_csv_header() << "\n";
  out << render_series_value(v, format) << "\n";
  return v.converged ? kExitPass : kExitFail;
}

int run_dual(const Options& o, std::ostream& out) {
  const auto k = need_index(o);
  const auto d = dual(k);
  const auto format = parse_format(o.output);
  if (format == OutputFormat::Json) {
    nlohmann::ordered_json j;
    j["index"] = k.to_string();
    j["dual"] = d.to_string();
    j["weight"] = k.weight();
    j["depth"] = k.depth();
    j["dual_depth"] = d.depth();
    out << j.dump() << "\n";
  } else if (format == OutputFormat::Csv) {
    out << "index,dual,weight,depth,dual_depth\n";
    out << '"' << k.to_string() << "\",\"" << d.to_string() << "\"," << k.weight() << "," << k.depth() << ","
        << d.depth() << "\n";
  } else {
    out << d.to_string() << " (weight " << k.weight() << " = depth " << k.depth() << " + depth " << d.depth()
        << ")\n";
  }
  return kExitPass;
}

int run_verify(const Options& o, std::ostream& out) {
  const VerifySettings s = make_settings(o);
  RelationRequest q;
  q.relation = o.relation;
  if (!o.index.empty()) q.index = AdmissibleIndex::parse(o.index);
  q.alpha = parse_complex(o.alpha);
  q.beta = o.beta.empty() ? q.alpha : parse_complex(o.beta);
  q.l = o.l;
  q.m = o.m;
  q.n = o.n;
  q.weight = o.weight;
  const auto report = verify_relation(q, s);
  const auto format = parse_format(o.output);
  if (format == OutputFormat::Csv) out << report_csv_header() << "\n";
  out << render_report(report, format) << "\n";
  return exit_for(report);
}

int run_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  const VerifySettings s = make_settings(o);
  SweepGrid grid;
  grid.relations = split_list(o.relations);
  for (const auto& r : grid.relations) {
    const auto& names = relation_names();
    if (std::find(names.begin(), names.end(), r) == names.end()) {
      throw Error(ErrorCode::ParseError, "unknown relation '" + r + "'");
    }
  }
  grid.min_weight = o.min_weight;
  grid.max_weight = o.max_weight;
  grid.max_depth = o.max_depth;
  grid.max_order = o.max_order;
  grid.alphas = parse_complex_list(o.alphas);
  grid.betas = parse_complex_list(o.betas);
  const auto result = sweep(grid, s);
  const auto format = parse_format(o.output);
  if (format == OutputFormat::Csv) out << report_csv_header() << "\n";
  for (const auto& r : result.reports) out << render_report(r, format) << "\n";
  (format == OutputFormat::Csv ? err : out) << render_sweep_summary(result, format) << "\n";
  return result.failed == 0 ? kExitPass : kExitFail;
}

void add_common(CLI::App* app, Options& o) {
  app->add_option("--max-terms", o.max_terms, "Truncation length (overrides OHNO_ZETA_MAX_TERMS)");
  app->add_option("--tol", o.tol, "Tolerance override; 0 keeps the per-relation default");
  app->add_option("--output", o.output, "Output format")->check(CLI::IsMember({"human", "json", "csv"}));
  app->add_option("--method", o.method, "Evaluator for Z")->check(CLI::IsMember({"auto", "sweep", "split", "naive"}));
}

void add_point(CLI::App* app, Options& o) {
  app->add_option("--index", o.index, "Admissible index, e.g. 1,2,3");
  app->add_option("--alpha", o.alpha, "Complex literal a, a+bi or a-bi");
  app->add_option("--beta", o.beta, "Complex literal; defaults to alpha");
  app->add_option("--l", o.l, "Shift total l");
  app->add_option("--m", o.m, "Order or depth parameter m");
  app->add_option("--n", o.n, "Order or weight parameter n");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Two-parameter multiple zeta values and Ohno sums"};
  app.name("ohno_zeta");
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "Evaluate a single value");
  add_point(eval, o);
  add_common(eval, o);
  eval->add_option("--kind", o.kind, "What to evaluate")
      ->check(CLI::IsMember({"z", "s", "hurwitz", "multiple_hurwitz", "two_param", "integral"}));

  auto* dual_cmd = app.add_subcommand("dual", "Print the dual index");
  dual_cmd->add_option("--index", o.index, "Admissible index")->required();
  dual_cmd->add_option("--output", o.output, "Output format")->check(CLI::IsMember({"human", "json", "csv"}));

  auto* verify = app.add_subcommand("verify", "Check one relation instance");
  add_point(verify, o);
  add_common(verify, o);
  verify->add_option("--weight", o.weight, "Weight for hurwitz_sum_identity");
  verify->add_option("--relation", o.relation, "Relation name")->required()->check(CLI::IsMember(relation_names()));

  auto* sweep_cmd = app.add_subcommand("sweep", "Check relations over a grid");
  add_common(sweep_cmd, o);
  sweep_cmd->add_option("--relations", o.relations, "Comma-separated relation names");
  sweep_cmd->add_option("--min-weight", o.min_weight, "Smallest weight");
  sweep_cmd->add_option("--max-weight", o.max_weight, "Largest weight");
  sweep_cmd->add_option("--max-depth", o.max_depth, "Largest depth; 0 for any");
  sweep_cmd->add_option("--max-order", o.max_order, "Largest l or m");
  sweep_cmd->add_option("--alphas", o.alphas, "Comma-separated complex literals");
  sweep_cmd->add_option("--betas", o.betas, "Comma-separated complex literals; defaults to alphas");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (eval->parsed()) return run_eval(o, out);
    if (dual_cmd->parsed()) return run_dual(o, out);
    if (verify->parsed()) return run_verify(o, out);
    return run_sweep(o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::ParseError ? kExitParse : kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace ohno
