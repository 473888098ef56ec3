#include "bpir/harness/table.hpp"

#include <sstream>

#include "bpir/gf/prime_field.hpp"
#include "bpir/harness/session.hpp"
#include "bpir/pir/database.hpp"

namespace bpir::harness {
namespace {

using Int = long long;

std::string log_cell(Int n, std::uint32_t q) { return std::to_string(n) + "*log2(" + std::to_string(q) + ")"; }

std::string field_cell(std::uint32_t q, std::optional<Rational> s) {
  if (!s) return "F_{" + std::to_string(q) + "}";
  const std::string e = pir::to_string(*s);
  return "F_{" + std::to_string(q) + "^" + (e.find('/') == std::string::npos ? e : "(" + e + ")") + "}";
}

std::optional<Rational> ratio(Int num, Int den) {
  if (den == 0) return std::nullopt;
  return Rational(num, den);
}

std::string rate_cell(Int num, Int k) { return k == 0 ? "undefined" : pir::to_string(Rational(num, k)); }

// Staircase constraint chains with the r ≤ k relaxation applied throughout.
std::optional<std::string> staircase_violation(Int k, Int t, Int b, Int r, Int q) {
  if (t < 1) return "t ≥ 1";
  if (t >= r - 2 * b) return b == 0 ? "t < r" : "t < r−2b";
  if (r > k) return "r ≤ k";
  if (k > q) return "k ≤ q";
  return std::nullopt;
}

std::optional<Measured> measure(std::size_t k, std::size_t t, std::size_t b, std::size_t r, std::size_t l,
                                std::uint32_t q, std::uint64_t seed) {
  pir::SchemeParams p = [&] {
    try {
      return pir::setup({.k = k, .t = t, .b = b, .r = r, .m = 2, .q = q});
    } catch (const InvalidParameters&) {
      // s = 1 needs room for the alpha and chi points inside F_q.
      return pir::setup({.k = k, .t = t, .b = b, .r = r, .m = 2});
    }
  }();
  Measured out;
  out.q = p.q();
  out.retrieved = true;
  for (std::size_t rep = 0; rep < l; ++rep) {
    const auto db = pir::random_database(p, seed + rep);
    const auto s = run_session(p, db, rep % p.m, {}, AnswerMode::trace, seed + rep);
    out.retrieved = out.retrieved && s.ground_truth_match;
    out.file_symbols += s.file_symbols;
    out.downloaded_symbols += s.downloaded_symbols;
  }
  out.rate = Rational(out.file_symbols, out.downloaded_symbols);
  return out;
}

}  // namespace

ComparisonTable comparison_table(const TableInput& in, std::uint64_t seed) {
  if (in.l < 1) throw InvalidParameters("l ≥ 1 violated");
  ComparisonTable out;
  out.input = in;
  const Int k = static_cast<Int>(in.k), t = static_cast<Int>(in.t), b = static_cast<Int>(in.b);
  const Int r = static_cast<Int>(in.r), l = static_cast<Int>(in.l);

  const auto pi1_violation = pir::check_constraints(in.k, in.t, 0, in.r);
  const auto pi2_violation = pir::check_constraints(in.k, in.t, in.b, in.r);
  if (in.q) {
    if (!gf::is_prime(*in.q)) throw InvalidParameters("q prime violated (q=" + std::to_string(*in.q) + ")");
    out.q = *in.q;
  } else if (!pi2_violation) {
    out.q = pir::setup({.k = in.k, .t = in.t, .b = in.b, .r = in.r}).q();
  } else {
    out.q = gf::next_prime(std::max<std::uint32_t>(2, static_cast<std::uint32_t>(in.k)));
  }
  const std::uint32_t q = out.q;
  const std::string byz = "b=" + std::to_string(in.b);

  auto& pi1 = out.columns[0];
  pi1.scheme = "Π1";
  pi1.cells = {log_cell(l * (k - t), q), field_cell(q, ratio(k - t, r - t)), log_cell(l * k, q), rate_cell(k - t, k),
               rate_cell(k - t, k), "0"};
  auto& pi2 = out.columns[1];
  pi2.scheme = "Π2";
  pi2.cells = {log_cell(l * (k - 2 * b - t), q), field_cell(q, ratio(k - 2 * b - t, r - 2 * b - t)), log_cell(l * k, q),
               rate_cell(k - 2 * b - t, k), rate_cell(k - 2 * b - t, k), byz};
  auto& a1 = out.columns[2];
  a1.scheme = "𝔸1";
  a1.cells = {log_cell(l * (r - t) * (k - t), q), field_cell(q, std::nullopt), log_cell(l * k * (r - t), q),
              rate_cell(k - t, k), rate_cell(k - t, k), "0"};
  auto& a2 = out.columns[3];
  a2.scheme = "𝔸2";
  a2.cells = {log_cell(l * (r - 2 * b - t) * (k - 2 * b - t), q), field_cell(q, std::nullopt),
              log_cell(l * k * (r - 2 * b - t), q), rate_cell(k - 2 * b - t, k), rate_cell(k - 2 * b - t, k), byz};

  const auto mark = [&](TableColumn& c, std::optional<std::string> v) {
    if (!v && static_cast<Int>(q) < k) v = "k ≤ q";
    c.valid = !v;
    c.violation = v.value_or("");
  };
  mark(pi1, pi1_violation);
  mark(pi2, pi2_violation);
  mark(a1, staircase_violation(k, t, 0, r, q));
  mark(a2, staircase_violation(k, t, b, r, q));

  const auto live = [&](TableColumn& c, std::size_t bb) {
    if (!c.valid) return;
    c.measured = measure(in.k, in.t, bb, in.r, in.l, q, seed);
    auto& m = *c.measured;
    const Int file = l * (k - 2 * static_cast<Int>(bb) - t);
    m.matches_formula = m.retrieved && static_cast<Int>(m.file_symbols) == file &&
                        static_cast<Int>(m.downloaded_symbols) == l * k && m.rate == Rational(file / l, k);
  };
  live(pi1, 0);
  live(pi2, in.b);
  return out;
}

namespace {

std::size_t width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80;
  return n;
}

std::vector<std::vector<std::string>> grid(const ComparisonTable& t) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({""});
  for (const auto& c : t.columns) rows.back().push_back(c.scheme);
  for (std::size_t i = 0; i < kTableRows.size(); ++i) {
    rows.push_back({kTableRows[i]});
    for (const auto& c : t.columns) rows.back().push_back(c.cells[i]);
  }
  rows.push_back({"Valid"});
  for (const auto& c : t.columns) rows.back().push_back(c.valid ? "yes" : "no (" + c.violation + ")");
  rows.push_back({"Measured download cost"});
  for (const auto& c : t.columns)
    rows.back().push_back(c.measured ? log_cell(static_cast<Int>(c.measured->downloaded_symbols), c.measured->q) : "-");
  rows.push_back({"Measured download rate"});
  for (const auto& c : t.columns) rows.back().push_back(c.measured ? pir::to_string(c.measured->rate) : "-");
  return rows;
}

}  // namespace

std::string to_text(const ComparisonTable& t) {
  const auto rows = grid(t);
  std::vector<std::size_t> w(rows.front().size(), 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) w[c] = std::max(w[c], width(row[c]));
  std::ostringstream os;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(w[c] - width(row[c]) + 2, ' ');
    }
    os << line << '\n';
  }
  return os.str();
}

std::string to_csv(const ComparisonTable& t) {
  std::ostringstream os;
  for (const auto& row : grid(t)) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      const bool quote = row[c].find_first_of(",\"") != std::string::npos;
      os << (c ? "," : "") << (quote ? "\"" + row[c] + "\"" : row[c]);
    }
    os << '\n';
  }
  return os.str();
}

nlohmann::json to_json(const ComparisonTable& t) {
  auto cols = nlohmann::json::array();
  for (const auto& c : t.columns) {
    nlohmann::json j{{"scheme", c.scheme}, {"valid", c.valid}};
    j["violation"] = c.valid ? nlohmann::json(nullptr) : nlohmann::json(c.violation);
    for (std::size_t i = 0; i < kTableRows.size(); ++i) j[kTableRows[i]] = c.cells[i];
    if (c.measured) {
      j["measured"] = {{"q", c.measured->q},
                       {"file_symbols", c.measured->file_symbols},
                       {"downloaded_symbols", c.measured->downloaded_symbols},
                       {"rate", pir::to_string(c.measured->rate)},
                       {"retrieved", c.measured->retrieved},
                       {"matches_formula", c.measured->matches_formula}};
    }
    cols.push_back(std::move(j));
  }
  return {{"k", t.input.k}, {"t", t.input.t}, {"b", t.input.b}, {"r", t.input.r},
          {"l", t.input.l}, {"q", t.q},       {"columns", cols}};
}

}  // namespace bpir::harness
