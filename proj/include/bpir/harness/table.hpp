#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bpir/pir/capacity.hpp"

namespace bpir::harness {

using pir::Rational;

struct TableInput {
  std::size_t k = 0, t = 0, b = 0, r = 0;
  std::size_t l = 1;                 // repetitions
  std::optional<std::uint32_t> q{};  // defaults to the Π2 field characteristic
};

// Live honest trace-mode sessions, l of them.
struct Measured {
  std::uint32_t q = 0;                 // characteristic of the field actually used
  std::size_t file_symbols = 0;        // F_q symbols over all repetitions
  std::size_t downloaded_symbols = 0;  // F_q symbols over all repetitions
  Rational rate;
  bool retrieved = false;              // every session returned the planted file
  bool matches_formula = false;
};

struct TableColumn {
  std::string scheme;
  bool valid = false;
  std::string violation;
  std::array<std::string, 6> cells;
  std::optional<Measured> measured;  // Π1 and Π2 when valid
};

struct ComparisonTable {
  TableInput input;
  std::uint32_t q = 0;
  std::array<TableColumn, 4> columns;  // Π1, Π2, 𝔸1, 𝔸2
};

inline constexpr std::array<const char*, 6> kTableRows{"File size",     "Field",    "Download cost",
                                                       "Download rate", "Capacity", "Byzantine-resistance"};

// Formula cells of every column plus live measurements for Π1 and Π2. Cells
// read like "8*log2(7)", "F_{7^2}", "1/2". Π1 uses the same (k, t, r) with b = 0.
ComparisonTable comparison_table(const TableInput& in, std::uint64_t seed);

std::string to_text(const ComparisonTable& t);
std::string to_csv(const ComparisonTable& t);
nlohmann::json to_json(const ComparisonTable& t);

}  // namespace bpir::harness
