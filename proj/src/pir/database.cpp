#include "bpir/pir/database.hpp"

#include <istream>
#include <ostream>
#include <string>

namespace bpir::pir {

std::vector<ExtElem> Database::file(std::size_t i) const {
  if (i >= files()) throw IndexOutOfRange("file index " + std::to_string(i) + " outside the database");
  const auto row = entries_.row(i);
  return {row.begin(), row.end()};
}

void require_compatible(const SchemeParams& p, const Database& db) {
  if (db.files() != p.m || db.delta() != p.delta) {
    throw DimensionMismatch("database is " + std::to_string(db.files()) + "x" + std::to_string(db.delta()) +
                            ", scheme expects " + std::to_string(p.m) + "x" + std::to_string(p.delta));
  }
  for (auto e : db.entries().flat()) {
    if (!p.field.contains(e)) throw FieldMismatch("database symbol outside " + p.field.description());
  }
}

Database random_database(const SchemeParams& p, std::uint64_t seed) {
  return Database(draw_uniform_grid(p.field, CounterRng(seed, 0xDA7A).substream(0), p.m, p.delta));
}

Database read_database(const ExtField& field, std::size_t delta, std::istream& in) {
  std::vector<ExtElem> data;
  std::string line;
  std::size_t lineno = 0, rows = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) throw ParseError("empty line", lineno);
    std::size_t start = 0, count = 0;
    for (;;) {
      const auto pos = line.find(',', start);
      const auto token = line.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
      try {
        data.push_back(field.parse_element(token));
      } catch (const Error& e) {
        throw ParseError(e.what(), lineno);
      }
      ++count;
      if (pos == std::string::npos) break;
      start = pos + 1;
    }
    if (count != delta) {
      throw ParseError("expected " + std::to_string(delta) + " symbols, found " + std::to_string(count), lineno);
    }
    ++rows;
  }
  if (rows == 0) throw ParseError("database has no files");
  return Database(Grid(rows, delta, std::move(data)));
}

void write_database(const ExtField& field, const Database& db, std::ostream& out) {
  for (std::size_t i = 0; i < db.files(); ++i) {
    for (std::size_t c = 0; c < db.delta(); ++c) {
      if (c != 0) out << ',';
      out << field.format(db.entries()(i, c));
    }
    out << '\n';
  }
}

}  // namespace bpir::pir
