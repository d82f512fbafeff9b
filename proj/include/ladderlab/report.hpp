#ifndef LADDERLAB_REPORT_HPP
#define LADDERLAB_REPORT_HPP

#include <string>
#include <vector>

namespace ladderlab::report {

// 17 significant digits, round-trip exact
std::string fmt_double(double v);

std::string csv_escape(const std::string& s);

// one CSV line from already-formatted cells
std::string csv_row(const std::vector<std::string>& cells);

// JSON array of flat objects; values must be pre-formatted JSON literals
using JsonRow = std::vector<std::pair<std::string, std::string>>;
std::string json_rows(const std::vector<JsonRow>& rows);

std::string json_quote(const std::string& s);

// short stable hash of a parameter vector, for report keys
std::string params_hash(const std::vector<double>& params);

}  // namespace ladderlab::report

#endif
