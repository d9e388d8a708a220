#pragma once

// Reference rows for the 54 exceptional-prime families, loaded from CSV with
// header r,c,k_threshold,j1,j2,j3,j4,j5,N,density.

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

namespace rq {

struct Table2Row {
  int r = 0;
  std::int64_t c = 0;
  std::int64_t k_threshold = 0;
  std::array<std::uint64_t, 5> first_primes{};
  std::uint64_t count = 0;
  double density = 0.0;
};

// $RQ_FIXTURE_DIR/table2.csv if the variable is set, else the source-tree copy.
std::filesystem::path default_table2_path();

std::vector<Table2Row> load_table2(const std::filesystem::path& path);

std::optional<Table2Row> find_row(const std::vector<Table2Row>& rows, int r, std::int64_t c);

}  // namespace rq
