// bpir: command-line front end for the byzantine-resistant PIR toolkit.
//
// Exit codes: 0 ok, 1 usage, 2 invalid parameters, 3 byzantine budget
// exceeded, 4 I/O or parse error, 5 enumeration guard exceeded, 6 selftest
// failure, 7 internal error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bpir/errors.hpp"
#include "bpir/harness/acceptance.hpp"
#include "bpir/harness/audit.hpp"
#include "bpir/harness/session.hpp"
#include "bpir/harness/sweep.hpp"
#include "bpir/harness/table.hpp"
#include "bpir/pir/optimality.hpp"
#include "bpir/pir/serialize.hpp"

namespace {

using namespace bpir;
using nlohmann::json;

enum Exit { kOk = 0, kUsage = 1, kInvalid = 2, kByzantine = 3, kIo = 4, kGuard = 5, kSelftest = 6, kInternal = 7 };

struct Failure {
  Exit code;
  std::string kind;
  std::string message;
};

struct Options {
  std::size_t k = 0, t = 0, b = 0, r = 0;
  std::optional<std::size_t> m;
  std::optional<std::uint32_t> q;
  std::size_t iota = 1;
  std::string db_path;
  bool random_db = false;
  std::string seed_text = "0xC0DEC0DE";
  std::string mode = "trace";
  std::optional<std::string> out;
  std::vector<std::size_t> byzantine;
  std::string strategy = "random-symbol";
  std::vector<std::uint64_t> offsets;
  bool exhaustive = false;
  std::optional<std::size_t> randomized;
  std::optional<std::size_t> byzantine_count;
  bool transfer_matrix = false;
  std::vector<std::size_t> subset;
  std::size_t l = 1;
};

std::uint64_t parse_seed(const std::string& text) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(text, &used, 0);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw Failure{kUsage, "usage", "--seed expects a 64-bit integer, got '" + text + "'"};
}

std::vector<std::size_t> zero_based(const std::vector<std::size_t>& ids, const char* flag) {
  std::vector<std::size_t> out;
  for (auto j : ids) {
    if (j == 0) throw Failure{kUsage, "usage", std::string(flag) + " ids are 1-based"};
    out.push_back(j - 1);
  }
  return out;
}

pir::SchemeConfig config(const Options& o, std::size_t m) { return {.k = o.k, .t = o.t, .b = o.b, .r = o.r, .m = m, .q = o.q}; }

pir::Database load_database(const pir::SchemeParams& p, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{kIo, "io", "cannot open database '" + path + "'"};
  return pir::read_database(p.field, p.delta, in);
}

// Params and database for run/sweep. With --db, m defaults to the row count.
std::pair<pir::SchemeParams, pir::Database> scheme_and_db(const Options& o, std::uint64_t seed, bool db_required) {
  if (!o.db_path.empty() && o.random_db) throw Failure{kUsage, "usage", "--db and --random-db are exclusive"};
  if (o.db_path.empty() && !o.random_db && db_required) throw Failure{kUsage, "usage", "give --db PATH or --random-db"};
  if (!o.db_path.empty()) {
    auto probe = pir::setup(config(o, o.m.value_or(1)));
    auto db = load_database(probe, o.db_path);
    if (o.m && *o.m != db.files()) {
      throw Failure{kIo, "io", "database has " + std::to_string(db.files()) + " rows but --m is " + std::to_string(*o.m)};
    }
    return {pir::setup(config(o, db.files())), std::move(db)};
  }
  auto p = pir::setup(config(o, o.m.value_or(2)));
  auto db = pir::random_database(p, seed);
  return {std::move(p), std::move(db)};
}

std::string scalar(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void emit(const json& j, const std::optional<std::string>& format) {
  const std::string out = format.value_or("json");
  if (out == "json") {
    std::cout << j.dump(2) << '\n';
  } else if (out == "text") {
    for (const auto& [key, value] : j.items()) std::cout << key << ": " << scalar(value) << '\n';
  } else {
    std::string head, row;
    for (const auto& [key, value] : j.items()) {
      head += (head.empty() ? "" : ",") + csv_field(key);
      row += (row.empty() && head == csv_field(key) ? "" : ",") + csv_field(scalar(value));
    }
    std::cout << head << '\n' << row << '\n';
  }
}

int cmd_params(const Options& o) {
  const auto p = pir::setup(config(o, o.m.value_or(1)));
  const auto rep = pir::validate_optimality(p);
  json j = pir::params_to_json(p);
  j["optimality"] = pir::optimality_to_json(rep);
  emit(j, o.out);
  return kOk;
}

int cmd_run(const Options& o) {
  const auto seed = parse_seed(o.seed_text);
  const auto [p, db] = scheme_and_db(o, seed, true);
  if (o.iota < 1 || o.iota > p.m) {
    throw IndexOutOfRange("iota " + std::to_string(o.iota) + " outside [1, " + std::to_string(p.m) + "]");
  }
  harness::AdversaryModel adv;
  adv.byzantine = zero_based(o.byzantine, "--byzantine");
  adv.strategy = harness::parse_strategy(o.strategy);
  adv.offsets = o.offsets;
  const auto rep = harness::run_session(p, db, o.iota - 1, adv, pir::parse_answer_mode(o.mode), seed);
  emit(harness::to_json(p, rep), o.out);
  if (rep.status != harness::SessionStatus::ok) {
    throw Failure{kByzantine, "byzantine-budget-exceeded", rep.failure_reason + ": " + rep.failure_detail};
  }
  return kOk;
}

int cmd_sweep(const Options& o) {
  if (o.exhaustive == o.randomized.has_value()) throw Failure{kUsage, "usage", "give exactly one of --exhaustive, --randomized N"};
  const auto seed = parse_seed(o.seed_text);
  const auto [p, db] = scheme_and_db(o, seed, false);
  harness::SweepOptions opt;
  opt.scope = o.exhaustive ? harness::SweepScope{harness::SweepScope::exhaustive, 0}
                           : harness::SweepScope{harness::SweepScope::randomized, *o.randomized};
  opt.mode = pir::parse_answer_mode(o.mode);
  opt.seed = seed;
  opt.byzantine_count = o.byzantine_count;
  const auto rep = harness::byzantine_sweep(p, db, opt);
  emit(harness::to_json(p, rep), o.out);
  if (rep.cases_failed != 0) {
    throw Failure{kByzantine, "byzantine-budget-exceeded",
                  std::to_string(rep.cases_failed) + " of " + std::to_string(rep.cases_total) + " cases failed"};
  }
  return kOk;
}

int cmd_audit(const Options& o) {
  if (o.exhaustive == o.transfer_matrix) throw Failure{kUsage, "usage", "give exactly one of --exhaustive, --transfer-matrix"};
  const auto seed = parse_seed(o.seed_text);
  const auto p = pir::setup(config(o, o.m.value_or(2)));
  const auto mode = o.exhaustive ? harness::AuditMode::exhaustive : harness::AuditMode::transfer_matrix;
  const auto rep = harness::privacy_audit(p, zero_based(o.subset, "--subset"), mode, seed);
  emit(harness::to_json(p, rep), o.out);
  if (rep.cases_failed != 0) throw Failure{kInternal, "internal", "privacy audit found distinguishable queries"};
  return kOk;
}

int cmd_table(const Options& o) {
  const auto seed = parse_seed(o.seed_text);
  const auto t = harness::comparison_table({.k = o.k, .t = o.t, .b = o.b, .r = o.r, .l = o.l, .q = o.q}, seed);
  const std::string out = o.out.value_or("text");
  if (out == "json") {
    std::cout << harness::to_json(t).dump(2) << '\n';
  } else {
    std::cout << (out == "csv" ? harness::to_csv(t) : harness::to_text(t));
  }
  for (const auto& c : t.columns) {
    if (c.measured && !c.measured->matches_formula) throw Failure{kInternal, "internal", c.scheme + " measurement differs from its formula"};
  }
  return kOk;
}

int cmd_selftest() {
  int failed = 0;
  for (const auto& r : harness::run_acceptance()) {
    std::cout << harness::format_result(r) << '\n';
    failed += !r.passed;
  }
  if (failed) throw Failure{kSelftest, "selftest-failed", std::to_string(failed) + " of 10 criteria failed"};
  return kOk;
}

void scheme_flags(CLI::App* cmd, Options& o, bool with_m) {
  cmd->add_option("--k", o.k, "servers")->required();
  cmd->add_option("--t", o.t, "collusion bound")->required();
  cmd->add_option("--b", o.b, "byzantine bound")->required();
  cmd->add_option("--r", o.r, "retrieval threshold")->required();
  cmd->add_option("--q", o.q, "prime override for the base field");
  if (with_m) cmd->add_option("--m", o.m, "number of files");
}

void output_flag(CLI::App* cmd, Options& o, const std::string& def) {
  cmd->add_option("--out", o.out, "output format (default " + def + ")")->check(CLI::IsMember({"json", "csv", "text"}));
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Byzantine-resistant multi-server private information retrieval"};
  app.require_subcommand(1);
  Options o;

  auto* params = app.add_subcommand("params", "print scheme parameters and optimality flags");
  scheme_flags(params, o, true);
  output_flag(params, o, "json");

  auto* run = app.add_subcommand("run", "run one retrieval session");
  scheme_flags(run, o, true);
  run->add_option("--iota", o.iota, "file to retrieve (1-based)")->capture_default_str();
  run->add_option("--db", o.db_path, "database file, one file per line");
  run->add_flag("--random-db", o.random_db, "generate the database from the seed");
  run->add_option("--seed", o.seed_text, "64-bit seed")->capture_default_str();
  run->add_option("--mode", o.mode, "answer mode")->check(CLI::IsMember({"trace", "full"}))->capture_default_str();
  run->add_option("--byzantine", o.byzantine, "corrupting servers (1-based)")->delimiter(',');
  run->add_option("--strategy", o.strategy, "random-symbol | fixed-offset | query-aware")->capture_default_str();
  run->add_option("--offset", o.offsets, "fixed-offset symbol index, one or one per byzantine server")->delimiter(',');

  auto* sweep = app.add_subcommand("sweep", "byzantine correctness sweep");
  scheme_flags(sweep, o, true);
  sweep->add_option("--db", o.db_path, "database file");
  sweep->add_flag("--random-db", o.random_db, "generate the database from the seed (default)");
  sweep->add_option("--seed", o.seed_text, "64-bit seed")->capture_default_str();
  sweep->add_option("--mode", o.mode, "answer mode")->check(CLI::IsMember({"trace", "full"}))->capture_default_str();
  sweep->add_flag("--exhaustive", o.exhaustive, "every byzantine set, offset and file");
  sweep->add_option("--randomized", o.randomized, "number of random cases");
  sweep->add_option("--byzantine-count", o.byzantine_count, "size of the byzantine set (default b)");

  auto* audit = app.add_subcommand("audit", "t-privacy audit");
  scheme_flags(audit, o, true);
  audit->add_option("--seed", o.seed_text, "64-bit seed")->capture_default_str();
  audit->add_flag("--exhaustive", o.exhaustive, "enumerate all blinding values");
  audit->add_flag("--transfer-matrix", o.transfer_matrix, "check invertibility of the transfer matrices");
  audit->add_option("--subset", o.subset, "coalition (1-based); default every t-subset")->delimiter(',');

  auto* table = app.add_subcommand("table", "scheme comparison table");
  scheme_flags(table, o, false);
  table->add_option("--l", o.l, "repetitions")->capture_default_str();
  table->add_option("--seed", o.seed_text, "64-bit seed")->capture_default_str();

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");

  output_flag(run, o, "json");
  output_flag(sweep, o, "json");
  output_flag(audit, o, "json");
  output_flag(table, o, "text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    throw Failure{kUsage, "usage", e.what()};
  }

  if (params->parsed()) return cmd_params(o);
  if (run->parsed()) return cmd_run(o);
  if (sweep->parsed()) return cmd_sweep(o);
  if (audit->parsed()) return cmd_audit(o);
  if (table->parsed()) return cmd_table(o);
  if (selftest->parsed()) return cmd_selftest();
  throw Failure{kUsage, "usage", "unknown command"};
}

int fail(Exit code, const std::string& kind, const std::string& message) {
  std::string line = message;
  for (auto& c : line)
    if (c == '\n') c = ' ';
  std::cerr << "error: " << kind << ": " << line << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const Failure& f) {
    return fail(f.code, f.kind, f.message);
  } catch (const bpir::ParseError& e) {
    return fail(kIo, "io", e.what());
  } catch (const bpir::ByzantineBudgetExceeded& e) {
    return fail(kByzantine, "byzantine-budget-exceeded", e.what());
  } catch (const bpir::EnumerationTooLarge& e) {
    return fail(kGuard, "guard-exceeded", e.what());
  } catch (const bpir::InvalidParameters& e) {
    return fail(kInvalid, "invalid-parameters", e.what());
  } catch (const bpir::IndexOutOfRange& e) {
    return fail(kInvalid, "invalid-parameters", e.what());
  } catch (const bpir::DimensionMismatch& e) {
    return fail(kIo, "io", e.what());
  } catch (const std::exception& e) {
    return fail(kInternal, "internal", e.what());
  }
}
