#include "commtuple/records.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace commtuple {

OutputFormat parse_format(const std::string& text) {
  if (text == "markdown" || text == "markdown-table" || text == "md") return OutputFormat::kMarkdown;
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "jsonl" || text == "json-lines") return OutputFormat::kJsonLines;
  throw std::invalid_argument("unknown format '" + text + "' (markdown, csv, jsonl)");
}

std::vector<ExceptionRecord> exception_records(const std::vector<ExceptionReport>& reports) {
  std::vector<ExceptionRecord> out;
  for (const auto& report : reports) {
    for (const auto& [a, b] : report.zero_pairs) out.push_back({report.ell, a, b, DeltaSign::kZero});
    for (const auto& [a, b] : report.negative_pairs) {
      out.push_back({report.ell, a, b, DeltaSign::kNegative});
    }
  }
  std::sort(out.begin(), out.end(), [](const ExceptionRecord& x, const ExceptionRecord& y) {
    return std::tie(x.ell, x.a, x.b) < std::tie(y.ell, y.a, y.b);
  });
  return out;
}

Json to_json(const ExceptionRecord& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["record"] = "exception";
  j["ell"] = r.ell;
  j["a"] = r.a;
  j["b"] = r.b;
  j["sign"] = name(r.sign);
  return j;
}

namespace {

void check_schema(const Json& j, const char* record) {
  if (j.at("schema_version").get<int>() != kSchemaVersion) {
    throw std::invalid_argument("unsupported schema_version");
  }
  if (j.at("record").get<std::string>() != record) {
    throw std::invalid_argument(std::string("expected a '") + record + "' record");
  }
}

std::string certificate_name(Certificate c) {
  return c == Certificate::kTheoremBound ? "theorem_bound" : "empirical_only";
}

}  // namespace

ExceptionRecord exception_record_from_json(const Json& j) {
  check_schema(j, "exception");
  return {j.at("ell").get<int>(), j.at("a").get<int>(), j.at("b").get<int>(),
          parse_sign(j.at("sign").get<std::string>())};
}

Json to_json(const SignProfile& p) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["record"] = "sign_profile";
  j["a"] = p.a;
  j["b"] = p.b;
  j["label"] = p.label();
  j["final_sign"] = name(p.final_sign());
  j["stable_from"] = p.stable_from;
  j["ell_checked"] = p.ell_checked;
  j["certificate"] = certificate_name(p.certificate);
  if (p.bound) {
    j["bound_case"] = tag(p.bound->which);
    j["bound_ell_star"] = p.bound->ell_star;
    j["bound_value"] = p.bound->bound;
    j["predicted_sign"] = name(p.bound->predicted);
  } else {
    j["bound_case"] = nullptr;
    j["bound_ell_star"] = nullptr;
    j["bound_value"] = nullptr;
    j["predicted_sign"] = nullptr;
  }
  Json runs = Json::array();
  for (const auto& run : p.runs) runs.push_back(Json::array({std::string(1, symbol(run.sign)), run.length}));
  j["runs"] = std::move(runs);
  return j;
}

SignProfile sign_profile_from_json(const Json& j) {
  check_schema(j, "sign_profile");
  SignProfile p;
  p.a = j.at("a").get<int>();
  p.b = j.at("b").get<int>();
  p.stable_from = j.at("stable_from").get<int>();
  p.ell_checked = j.at("ell_checked").get<int>();
  const auto cert = j.at("certificate").get<std::string>();
  if (cert == "theorem_bound") {
    p.certificate = Certificate::kTheoremBound;
  } else if (cert == "empirical_only") {
    p.certificate = Certificate::kEmpiricalOnly;
  } else {
    throw std::invalid_argument("unknown certificate '" + cert + "'");
  }
  if (!j.at("bound_case").is_null()) {
    p.bound = TheoremBound{j.at("bound_ell_star").get<int>(),
                           parse_bound_case(j.at("bound_case").get<std::string>()),
                           parse_sign(j.at("predicted_sign").get<std::string>()),
                           j.at("bound_value").get<double>()};
  }
  for (const auto& run : j.at("runs")) {
    p.runs.push_back({parse_sign(run.at(0).get<std::string>()), run.at(1).get<int>()});
  }
  if (p.runs.empty()) throw std::invalid_argument("sign_profile record has no runs");
  return p;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string TextTable::render(OutputFormat format) const {
  std::string out;
  auto emit = [&](const std::vector<std::string>& cells) {
    if (format == OutputFormat::kCsv) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += csv_field(cells[i]);
      }
    } else {
      out += '|';
      for (const auto& c : cells) out += ' ' + c + " |";
    }
    out += '\n';
  };
  if (format == OutputFormat::kJsonLines) {
    throw std::logic_error("TextTable::render: JSON lines are rendered per record");
  }
  emit(columns);
  if (format == OutputFormat::kMarkdown) {
    out += '|';
    for (std::size_t i = 0; i < columns.size(); ++i) out += "---|";
    out += '\n';
  }
  for (const auto& row : rows) emit(row);
  return out;
}

std::string render_exceptions(const std::vector<ExceptionReport>& reports, OutputFormat format) {
  const auto records = exception_records(reports);
  if (format == OutputFormat::kJsonLines) {
    std::string out;
    for (const auto& r : records) out += to_json(r).dump() + '\n';
    return out;
  }
  TextTable t{{"ell", "a", "b", "sign"}, {}};
  for (const auto& r : records) {
    t.rows.push_back({std::to_string(r.ell), std::to_string(r.a), std::to_string(r.b), name(r.sign)});
  }
  return t.render(format);
}

std::string render_profiles(const std::vector<SignProfile>& profiles, OutputFormat format) {
  if (format == OutputFormat::kJsonLines) {
    std::string out;
    for (const auto& p : profiles) out += to_json(p).dump() + '\n';
    return out;
  }
  TextTable t{{"a", "b", "label", "stable_from", "ell_checked", "certificate", "bound_case", "runs"},
              {}};
  for (const auto& p : profiles) {
    t.rows.push_back({std::to_string(p.a), std::to_string(p.b), p.label(),
                      std::to_string(p.stable_from), std::to_string(p.ell_checked),
                      p.certificate == Certificate::kTheoremBound ? "certified" : "uncertified",
                      p.bound ? tag(p.bound->which) : "none", p.runs_text()});
  }
  return t.render(format);
}

std::string render_positivity_thresholds(const std::vector<ExceptionReport>& reports,
                                         OutputFormat format) {
  if (format == OutputFormat::kJsonLines) {
    std::string out;
    for (const auto& r : reports) {
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["record"] = "positivity_threshold";
      j["ell"] = r.ell;
      j["a_max"] = r.a_max;
      j["threshold"] = empirical_positivity_threshold(r);
      j["certified"] = false;
      out += j.dump() + '\n';
    }
    return out;
  }
  TextTable t{{"ell", "a_max", "threshold", "certificate"}, {}};
  for (const auto& r : reports) {
    t.rows.push_back({std::to_string(r.ell), std::to_string(r.a_max),
                      std::to_string(empirical_positivity_threshold(r)), "uncertified"});
  }
  return t.render(format);
}

}  // namespace commtuple
