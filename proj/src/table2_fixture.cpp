#include "rq/table2_fixture.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace rq {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  return out;
}

}  // namespace

std::filesystem::path default_table2_path() {
  if (const char* dir = std::getenv("RQ_FIXTURE_DIR"); dir && *dir) {
    return std::filesystem::path(dir) / "table2.csv";
  }
  return std::filesystem::path(RQ_DEFAULT_FIXTURE_DIR) / "table2.csv";
}

std::vector<Table2Row> load_table2(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path.string());
  std::string line;
  if (!std::getline(in, line) || line.rfind("r,c,k_threshold", 0) != 0) {
    throw std::runtime_error(path.string() + ": missing header");
  }
  std::vector<Table2Row> rows;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != 10) {
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": expected 10 fields");
    }
    try {
      Table2Row row;
      row.r = std::stoi(f[0]);
      row.c = std::stoll(f[1]);
      row.k_threshold = std::stoll(f[2]);
      for (std::size_t i = 0; i < 5; ++i) row.first_primes[i] = std::stoull(f[3 + i]);
      row.count = std::stoull(f[8]);
      row.density = std::stod(f[9]);
      rows.push_back(row);
    } catch (const std::logic_error&) {
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": malformed number");
    }
  }
  return rows;
}

std::optional<Table2Row> find_row(const std::vector<Table2Row>& rows, int r, std::int64_t c) {
  for (const auto& row : rows) {
    if (row.r == r && row.c == c) return row;
  }
  return std::nullopt;
}

}  // namespace rq
