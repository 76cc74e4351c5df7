#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "coordlab_cli/cli.hpp"

namespace coordlab::cli {

namespace {

constexpr int kMachineDigits = 17;
constexpr int kTableDigits = 6;

std::string number(double v, int digits) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string optional_number(const std::optional<double>& v, int digits) {
  return v ? number(*v, digits) : std::string();
}

std::string json_number(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) return "null";
  return number(*v, kMachineDigits);
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

std::vector<std::string> row_fields(const Row& r, int digits) {
  return {r.function,
          r.rect,
          r.check_id,
          optional_number(r.s, digits),
          optional_number(r.p, digits),
          optional_number(r.q, digits),
          optional_number(r.r1, digits),
          optional_number(r.r2, digits),
          number(r.lhs, digits),
          number(r.rhs, digits),
          number(r.margin, digits),
          number(r.ratio, digits),
          r.hypothesis_ok ? "true" : "false",
          r.verdict};
}

std::vector<std::string> compare_fields(const CompareRow& r, int digits) {
  return {r.function,
          r.rect,
          r.comparison,
          optional_number(r.s, digits),
          optional_number(r.p, digits),
          optional_number(r.q, digits),
          number(r.new_rhs, digits),
          number(r.reference_rhs, digits),
          optional_number(r.ratio, digits),
          optional_number(r.printed_rhs, digits),
          optional_number(r.printed_ratio, digits)};
}

std::vector<std::string> split_header(const std::string& header) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = header.find(',', start);
    out.push_back(header.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

void write_csv(std::ostream& out, const std::string& header,
               const std::vector<std::vector<std::string>>& rows) {
  out << header << '\n';
  for (const auto& fields : rows) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i != 0) out << ',';
      out << fields[i];
    }
    out << '\n';
  }
}

void write_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& fields : rows) {
    for (std::size_t i = 0; i < fields.size(); ++i) width[i] = std::max(width[i], fields[i].size());
  }
  auto line = [&](const std::vector<std::string>& fields) {
    std::string text;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i != 0) text += "  ";
      text += fields[i];
      if (i + 1 < fields.size()) text.append(width[i] - fields[i].size(), ' ');
    }
    out << text << '\n';
  };
  line(header);
  for (const auto& fields : rows) line(fields);
}

}  // namespace

void write_rows(std::ostream& out, const std::vector<Row>& rows, OutputFormat format,
                Command command) {
  if (format == OutputFormat::Json) {
    out << "{\n  \"command\": " << json_string(command_name(command)) << ",\n  \"rows\": [";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Row& r = rows[i];
      out << (i == 0 ? "\n" : ",\n") << "    {\"function\": " << json_string(r.function)
          << ", \"rect\": " << json_string(r.rect) << ", \"check_id\": "
          << json_string(r.check_id) << ", \"s\": " << json_number(r.s)
          << ", \"p\": " << json_number(r.p) << ", \"q\": " << json_number(r.q)
          << ", \"r1\": " << json_number(r.r1) << ", \"r2\": " << json_number(r.r2)
          << ", \"lhs\": " << json_number(r.lhs) << ", \"rhs\": " << json_number(r.rhs)
          << ", \"margin\": " << json_number(r.margin) << ", \"ratio\": " << json_number(r.ratio)
          << ", \"hypothesis_ok\": " << (r.hypothesis_ok ? "true" : "false")
          << ", \"verdict\": " << json_string(r.verdict) << "}";
    }
    out << (rows.empty() ? "]\n}\n" : "\n  ]\n}\n");
    return;
  }
  const int digits = format == OutputFormat::Table ? kTableDigits : kMachineDigits;
  std::vector<std::vector<std::string>> fields;
  fields.reserve(rows.size());
  for (const auto& r : rows) fields.push_back(row_fields(r, digits));
  if (format == OutputFormat::Csv) {
    write_csv(out, kCsvHeader, fields);
  } else {
    write_table(out, split_header(kCsvHeader), fields);
  }
}

void write_compare_rows(std::ostream& out, const std::vector<CompareRow>& rows,
                        OutputFormat format) {
  if (format == OutputFormat::Json) {
    out << "{\n  \"command\": \"compare\",\n  \"rows\": [";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const CompareRow& r = rows[i];
      out << (i == 0 ? "\n" : ",\n") << "    {\"function\": " << json_string(r.function)
          << ", \"rect\": " << json_string(r.rect)
          << ", \"comparison\": " << json_string(r.comparison) << ", \"s\": " << json_number(r.s)
          << ", \"p\": " << json_number(r.p) << ", \"q\": " << json_number(r.q)
          << ", \"new_rhs\": " << json_number(r.new_rhs)
          << ", \"reference_rhs\": " << json_number(r.reference_rhs)
          << ", \"ratio\": " << json_number(r.ratio)
          << ", \"printed_rhs\": " << json_number(r.printed_rhs)
          << ", \"printed_ratio\": " << json_number(r.printed_ratio) << "}";
    }
    out << (rows.empty() ? "]\n}\n" : "\n  ]\n}\n");
    return;
  }
  const int digits = format == OutputFormat::Table ? kTableDigits : kMachineDigits;
  std::vector<std::vector<std::string>> fields;
  fields.reserve(rows.size());
  for (const auto& r : rows) fields.push_back(compare_fields(r, digits));
  if (format == OutputFormat::Csv) {
    write_csv(out, kCompareCsvHeader, fields);
  } else {
    write_table(out, split_header(kCompareCsvHeader), fields);
  }
}

}  // namespace coordlab::cli
