#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "bpir/pir/kernels.hpp"
#include "bpir/pir/params.hpp"

namespace bpir::pir {

// m x delta array over F_{q^s}; row i is file i.
class Database {
 public:
  explicit Database(Grid entries) : entries_(std::move(entries)) {}

  std::size_t files() const noexcept { return entries_.rows(); }
  std::size_t delta() const noexcept { return entries_.cols(); }
  const Grid& entries() const noexcept { return entries_; }
  std::vector<ExtElem> file(std::size_t i) const;

  friend bool operator==(const Database&, const Database&) = default;

 private:
  Grid entries_;
};

// Throws DimensionMismatch unless db is m x delta over the scheme field.
void require_compatible(const SchemeParams& p, const Database& db);

Database random_database(const SchemeParams& p, std::uint64_t seed);

// One file per line: "<x1>,<x2>,...,<x_delta>" with each symbol in the element
// format of the field. Blank lines are rejected; errors carry line numbers.
Database read_database(const ExtField& field, std::size_t delta, std::istream& in);
void write_database(const ExtField& field, const Database& db, std::ostream& out);

}  // namespace bpir::pir
