#include "subord/report.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <utility>
#include <variant>

namespace subord::report {

namespace {

// A flat record with a fixed field order, rendered as JSON-lines, CSV or an
// aligned plain-text table.
using Field = std::variant<std::string, double, std::optional<double>, long long, bool>;
using Record = std::vector<std::pair<std::string, Field>>;

std::string json_escape(std::string_view s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

std::string plain_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string render_json_field(const Field& f) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::string>) return "\"" + json_escape(v) + "\"";
        if constexpr (std::is_same_v<T, double>) return format_number(v);
        if constexpr (std::is_same_v<T, std::optional<double>>)
          return v ? format_number(*v) : std::string("null");
        if constexpr (std::is_same_v<T, long long>) return std::to_string(v);
        if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
      },
      f);
}

std::string render_text_field(const Field& f, bool compact) {
  return std::visit(
      [compact](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        auto num = [compact](double x) {
          if (!compact) return plain_number(x);
          char buf[64];
          std::snprintf(buf, sizeof buf, "%.10g", x);
          return std::string(buf);
        };
        if constexpr (std::is_same_v<T, std::string>) return v;
        if constexpr (std::is_same_v<T, double>) return num(v);
        if constexpr (std::is_same_v<T, std::optional<double>>) return v ? num(*v) : "";
        if constexpr (std::is_same_v<T, long long>) return std::to_string(v);
        if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
      },
      f);
}

std::string csv_quote(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char ch : cell) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string render(const std::vector<Record>& records, OutputFormat format) {
  std::string out;
  if (records.empty()) return out;
  switch (format) {
    case OutputFormat::Json:
      for (const Record& r : records) {
        out += '{';
        for (std::size_t i = 0; i < r.size(); ++i) {
          if (i) out += ',';
          out += "\"" + r[i].first + "\":" + render_json_field(r[i].second);
        }
        out += "}\n";
      }
      break;
    case OutputFormat::Csv:
      for (std::size_t i = 0; i < records.front().size(); ++i)
        out += (i ? "," : "") + records.front()[i].first;
      out += '\n';
      for (const Record& r : records) {
        for (std::size_t i = 0; i < r.size(); ++i)
          out += (i ? "," : "") + csv_quote(render_text_field(r[i].second, false));
        out += '\n';
      }
      break;
    case OutputFormat::Table: {
      const std::size_t cols = records.front().size();
      std::vector<std::vector<std::string>> cells;
      std::vector<std::string> header;
      for (const auto& [key, value] : records.front()) header.push_back(key);
      cells.push_back(header);
      for (const Record& r : records) {
        std::vector<std::string> row;
        for (const auto& [key, value] : r) row.push_back(render_text_field(value, true));
        cells.push_back(std::move(row));
      }
      std::vector<std::size_t> width(cols, 0);
      for (const auto& row : cells)
        for (std::size_t i = 0; i < cols; ++i) width[i] = std::max(width[i], row[i].size());
      for (const auto& row : cells) {
        std::string line;
        for (std::size_t i = 0; i < cols; ++i) {
          line += row[i];
          if (i + 1 < cols) line += std::string(width[i] - row[i].size() + 2, ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + '\n';
      }
      break;
    }
  }
  return out;
}

std::optional<double> janowski_field(const TheoremCase& c, double value) {
  if (!is_janowski(c.label)) return std::nullopt;
  return value;
}

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "json" || lower == "jsonl") return OutputFormat::Json;
  if (lower == "csv") return OutputFormat::Csv;
  if (lower == "table" || lower == "plain" || lower == "text") return OutputFormat::Table;
  return std::nullopt;
}

void RunConfig::validate() const {
  if (n_samples == 0) throw std::invalid_argument("n must be positive");
  if (!(band > 0.0)) throw std::invalid_argument("delta must be positive");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
}

std::vector<TableRow> constant_table(const RunConfig& config, JanowskiParams janowski) {
  config.validate();
  std::vector<TableRow> rows;
  for (CaseLabel label : kAllCases) {
    const TheoremCase c = is_janowski(label) ? TheoremCase::make(label, janowski)
                                             : TheoremCase::make(label);
    TableRow row{c, closed_form_beta(c), beta_numeric(c, config.tol), std::nullopt,
                 printed_decimal(label), std::nullopt};
    if (label == CaseLabel::T1f || label == CaseLabel::T3d)
      row.reproduced = janowski_crossover(c.family);
    else if (row.printed)
      row.reproduced = row.closed.beta_sharp;
    if (row.reproduced && row.printed) row.deviation = std::abs(*row.reproduced - *row.printed);
    rows.push_back(std::move(row));
  }
  return rows;
}

bool all_rows_ok(const std::vector<TableRow>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.ok(); });
}

std::vector<CurveSample> target_curve(const TargetFunction& target, std::size_t n) {
  const std::vector<Complex> values = boundary_curve(target, n);
  std::vector<CurveSample> out;
  out.reserve(n);
  for (std::size_t m = 0; m < n; ++m) out.push_back({target.name(), m, grid_angle(m, n), values[m]});
  return out;
}

std::vector<CurveSample> case_curves(const TheoremCase& c, double beta, std::size_t n) {
  if (n < 4) throw std::invalid_argument("curve needs at least 4 samples");
  const DominantSolution q(c.family, beta);
  std::vector<CurveSample> out;
  out.reserve(2 * n);
  const std::string name = "q[" + std::string(to_string(c.family)) + "]";
  for (std::size_t m = 0; m < n; ++m)
    out.push_back({name, m, grid_angle(m, n), q(circle_point(m, n))});
  for (CurveSample& s : target_curve(c.target, n)) out.push_back(std::move(s));
  return out;
}

std::string format_number(double x) {
  if (!std::isfinite(x)) return "null";
  return plain_number(x);
}

std::string format_table(const std::vector<TableRow>& rows, OutputFormat format) {
  std::vector<Record> records;
  for (const TableRow& r : rows) {
    const TheoremCase& c = r.theorem_case;
    records.push_back({
        {"case", std::string(to_string(c.label))},
        {"j", static_cast<long long>(exponent(c.family))},
        {"target", std::string(to_string(c.target.kind()))},
        {"A", janowski_field(c, c.target.a())},
        {"B", janowski_field(c, c.target.b())},
        {"beta1", r.closed.beta1},
        {"beta2", r.closed.beta2},
        {"beta_sharp", r.closed.beta_sharp},
        {"beta_numeric", r.numeric.beta_sharp},
        {"reproduced", r.reproduced},
        {"printed", r.printed},
        {"deviation", r.deviation},
        {"ok", r.ok()},
    });
  }
  return render(records, format);
}

std::string format_report(const VerificationReport& report, OutputFormat format) {
  const TheoremCase& c = report.theorem_case;
  const auto cx = report.counterexample;
  Record rec{
      {"case", std::string(to_string(c.label))},
      {"j", static_cast<long long>(exponent(c.family))},
      {"target", std::string(to_string(c.target.kind()))},
      {"A", janowski_field(c, c.target.a())},
      {"B", janowski_field(c, c.target.b())},
      {"beta", report.beta},
      {"n", static_cast<long long>(report.n_samples)},
      {"delta", report.band},
      {"passed", report.passed},
      {"worst_margin", report.worst_margin},
      {"worst_re", report.worst_sample.real()},
      {"worst_im", report.worst_sample.imag()},
      {"worst_theta", report.worst_theta},
      {"counterexample_re", cx ? std::optional<double>(cx->real()) : std::nullopt},
      {"counterexample_im", cx ? std::optional<double>(cx->imag()) : std::nullopt},
      {"counterexample_theta", report.counterexample_theta},
      {"boundary_touches", static_cast<long long>(report.boundary_touches)},
      {"center_anchored", report.center_anchored},
  };
  if (format != OutputFormat::Table) return render({rec}, format);
  // vertical key/value layout reads better for a single record
  std::vector<Record> lines;
  for (auto& [key, value] : rec)
    lines.push_back({{"field", key}, {"value", render_text_field(value, false)}});
  return render(lines, format);
}

std::string format_curve(const std::vector<CurveSample>& samples, OutputFormat format) {
  std::vector<Record> records;
  records.reserve(samples.size());
  for (const CurveSample& s : samples) {
    records.push_back({
        {"curve", s.curve},
        {"m", static_cast<long long>(s.index)},
        {"theta", s.theta},
        {"re", s.value.real()},
        {"im", s.value.imag()},
    });
  }
  return render(records, format);
}

std::string format_lemma(const LemmaCheck& check, double r_max, std::size_t n,
                         OutputFormat format) {
  Record rec{
      {"r_max", r_max},
      {"n", static_cast<long long>(n)},
      {"points", static_cast<long long>(check.points)},
      {"holds", check.holds},
      {"min_real_part", check.min_real_part},
      {"argmin_re", check.argmin.real()},
      {"argmin_im", check.argmin.imag()},
  };
  return render({rec}, format);
}

}  // namespace subord::report
