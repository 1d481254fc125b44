#include "ohno/report_io.hpp"

#include <cmath>
#include <limits>

#include <json.hpp>

#include "ohno/errors.hpp"
#include "ohno/format.hpp"

namespace ohno {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json number(double x) {
  if (std::isnan(x)) return nullptr;
  return x;
}

ordered_json complex_json(cplx z) { return ordered_json{{"re", number(z.real())}, {"im", number(z.imag())}}; }

double read_number(const ordered_json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  return j.get<double>();
}

cplx read_complex(const ordered_json& j) { return {read_number(j.at("re")), read_number(j.at("im"))}; }

std::string real_text(double x) { return std::isnan(x) ? "nan" : format_real(x); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string inputs_text(const VerificationReport& r, const char* sep) {
  std::string out;
  for (const auto& [key, value] : r.inputs) {
    if (!out.empty()) out += sep;
    out += key + "=" + value;
  }
  return out;
}

}  // namespace

std::string report_to_json(const VerificationReport& r) {
  ordered_json j;
  j["relation_id"] = r.relation_id;
  ordered_json inputs = ordered_json::object();
  for (const auto& [key, value] : r.inputs) inputs[key] = value;
  j["inputs"] = inputs;
  j["lhs"] = complex_json(r.lhs);
  j["rhs"] = complex_json(r.rhs);
  j["abs_err"] = number(r.abs_err);
  j["combined_tail"] = number(r.combined_tail);
  j["tol"] = number(r.tol);
  j["pass"] = r.pass;
  if (!r.error.empty()) j["error"] = r.error;
  return j.dump();
}

VerificationReport report_from_json(std::string_view text) {
  try {
    const auto j = ordered_json::parse(text);
    VerificationReport r;
    r.relation_id = j.at("relation_id").get<std::string>();
    for (const auto& [key, value] : j.at("inputs").items()) r.inputs.emplace_back(key, value.get<std::string>());
    r.lhs = read_complex(j.at("lhs"));
    r.rhs = read_complex(j.at("rhs"));
    r.abs_err = read_number(j.at("abs_err"));
    r.combined_tail = read_number(j.at("combined_tail"));
    r.tol = read_number(j.at("tol"));
    r.pass = j.at("pass").get<bool>();
    if (j.contains("error")) r.error = j.at("error").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
  }
}

std::string report_csv_header() {
  return "relation_id,inputs,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,combined_tail,tol,pass,error";
}

std::string report_to_csv(const VerificationReport& r) {
  std::string out = csv_field(r.relation_id) + "," + csv_field(inputs_text(r, ";"));
  for (double x : {r.lhs.real(), r.lhs.imag(), r.rhs.real(), r.rhs.imag(), r.abs_err, r.combined_tail, r.tol}) {
    out += "," + real_text(x);
  }
  out += r.pass ? ",true," : ",false,";
  return out + csv_field(r.error);
}

std::string report_to_human(const VerificationReport& r) {
  std::string out = (r.pass ? "PASS " : "FAIL ") + r.relation_id + " [" + inputs_text(r, ", ") + "]";
  if (!r.error.empty()) return out + " error: " + r.error;
  out += " lhs=" + format_complex(r.lhs) + " rhs=" + format_complex(r.rhs);
  out += " abs_err=" + real_text(r.abs_err) + " combined_tail=" + real_text(r.combined_tail) + " tol=" + real_text(r.tol);
  return out;
}

std::string render_report(const VerificationReport& r, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json:
      return report_to_json(r);
    case OutputFormat::Csv:
      return report_to_csv(r);
    case OutputFormat::Human:
      break;
  }
  return report_to_human(r);
}

std::string series_value_csv_header() { return "value_re,value_im,tail_bound,terms_used,converged,warning"; }

std::string render_series_value(const SeriesValue& v, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: {
      ordered_json j;
      j["value"] = complex_json(v.value);
      j["tail_bound"] = number(v.tail_bound);
      j["terms_used"] = v.terms_used;
      j["converged"] = v.converged;
      if (!v.warning.empty()) j["warning"] = v.warning;
      return j.dump();
    }
    case OutputFormat::Csv:
      return real_text(v.value.real()) + "," + real_text(v.value.imag()) + "," + real_text(v.tail_bound) + "," +
             std::to_string(v.terms_used) + "," + (v.converged ? "true" : "false") + "," + csv_field(v.warning);
    case OutputFormat::Human:
      break;
  }
  std::string out = "value = " + format_complex(v.value) + "\ntail_bound = " + real_text(v.tail_bound) +
                    "\nterms_used = " + std::to_string(v.terms_used) + "\nconverged = " + (v.converged ? "yes" : "no");
  if (!v.warning.empty()) out += "\nwarning = " + v.warning;
  return out;
}

std::string render_sweep_summary(const SweepResult& result, OutputFormat format) {
  const std::size_t total = result.reports.size();
  if (format == OutputFormat::Json) {
    ordered_json j;
    j["total"] = total;
    j["pass"] = result.passed;
    j["fail"] = result.failed;
    j["worst_abs_err"] = result.worst_abs_err;
    return ordered_json{{"summary", j}}.dump();
  }
  return "total=" + std::to_string(total) + " pass=" + std::to_string(result.passed) +
         " fail=" + std::to_string(result.failed) + " worst_abs_err=" + real_text(result.worst_abs_err);
}

}  // namespace ohno
