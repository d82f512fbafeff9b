#include "ladderlab/report.hpp"

#include <cstdio>
#include <cstring>
#include <sstream>

namespace ladderlab::report {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
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

std::string csv_row(const std::vector<std::string>& cells) {
  std::string line;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += csv_escape(cells[i]);
  }
  line += '\n';
  return line;
}

std::string json_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string json_rows(const std::vector<JsonRow>& rows) {
  std::ostringstream os;
  os << "[\n";
  for (size_t r = 0; r < rows.size(); ++r) {
    os << "  {";
    for (size_t k = 0; k < rows[r].size(); ++k) {
      if (k) os << ", ";
      os << json_quote(rows[r][k].first) << ": " << rows[r][k].second;
    }
    os << "}" << (r + 1 < rows.size() ? "," : "") << "\n";
  }
  os << "]\n";
  return os.str();
}

std::string params_hash(const std::vector<double>& params) {
  // FNV-1a over the raw bytes
  unsigned long long h = 1469598103934665603ull;
  for (double v : params) {
    unsigned char bytes[sizeof v];
    std::memcpy(bytes, &v, sizeof v);
    for (unsigned char b : bytes) {
      h ^= b;
      h *= 1099511628211ull;
    }
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", h);
  return buf;
}

}  // namespace ladderlab::report
