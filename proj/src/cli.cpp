// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "nonne/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "nonne/bounds.hpp"
#include "nonne/eisenstein.hpp"
#include "nonne/error.hpp"
#include "nonne/heilbronn.hpp"
#include "nonne/selfcheck.hpp"

namespace nonne::cli {

namespace {

enum class Format { Text, Csv, Json };

std::string verdict_of(const SieveOutcome& o) {
  return o.eliminated() ? "eliminated" : std::string(to_string(o.reason));
}

class RecordWriter {
 public:
  RecordWriter(std::ostream& out, Format format) : out_(out), format_(format) {}

  void header() {
    if (format_ == Format::Csv) out_ << "f,verdict,q1,q2,r,evals\n";
  }

  void write(const SieveOutcome& o) {
    switch (format_) {
      case Format::Text:
        if (o.eliminated()) {
          out_ << format_witness(*o.witness) << '\n';
        } else {
          out_ << "# survivor f=" << o.f << ", reason=" << to_string(o.reason) << ", q1=" << o.q1
               << ", q2=" << o.q2 << ", r=" << o.r << ", evals=" << o.evals << '\n';
        }
        break;
      case Format::Csv:
        out_ << o.f << ',' << verdict_of(o) << ',' << o.q1 << ',' << o.q2 << ',' << o.r << ',' << o.evals
             << '\n';
        break;
      case Format::Json: {
        const nlohmann::json j = {{"f", o.f},   {"verdict", verdict_of(o)}, {"q1", o.q1},
                                  {"q2", o.q2}, {"r", o.r},                 {"evals", o.evals}};
        out_ << j.dump() << '\n';
        break;
      }
    }
  }

 private:
  std::ostream& out_;
  Format format_;
};

struct SieveArgs {
  std::uint32_t ell = 3;
  u64 from = 2;
  u64 to = 10'000;
  std::string engine = "auto";
  unsigned workers = 1;
  std::string format = "text";
  std::string checkpoint;
  bool emit_witnesses = false;
  u64 prime_limit = 0;
  u64 chunk = 1 << 20;
};

std::optional<Format> parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  return std::nullopt;
}

int cmd_sieve(const SieveArgs& a, std::ostream& out, std::ostream& err) {
  const auto engine = parse_engine_choice(a.engine);
  if (!engine) fail(ErrorKind::Usage, "unknown engine '" + a.engine + "'");
  const auto format = parse_format(a.format);
  if (!format) fail(ErrorKind::Usage, "unknown format '" + a.format + "'");
  if (*engine == EngineChoice::Cubic && a.ell != 3) fail(ErrorKind::Usage, "--engine cubic requires --ell 3");

  SieveOptions opt;
  opt.engine = *engine;
  opt.workers = a.workers;
  opt.prime_limit = a.prime_limit;
  opt.chunk_width = a.chunk;
  opt.table_max = table_max_from_env();
  if (!a.checkpoint.empty()) opt.checkpoint = a.checkpoint;

  RecordWriter writer(out, *format);
  std::ostream& info = *format == Format::Text ? out : err;
  info << "# sieve ell=" << a.ell << " A=" << a.from << " B=" << a.to << " engine=" << a.engine
       << " workers=" << a.workers << '\n';
  writer.header();
  opt.on_chunk = [&](const ChunkReport& chunk) {
    for (const SieveOutcome& o : chunk.outcomes) {
      if (a.emit_witnesses || !o.eliminated()) writer.write(o);
    }
    out.flush();
  };

  const SieveReport report = sieve_range(a.ell, a.from, a.to, opt);

  if (report.resumed_from) info << "# resumed from f=" << report.resumed_from << '\n';
  info << "# survivors (" << report.survivors.size() << "):";
  for (std::size_t i = 0; i < report.survivors.size(); ++i) {
    info << (i ? ", " : " ") << report.survivors[i];
  }
  info << '\n';
  info << "# conductors=" << report.conductors << " eliminated=" << report.eliminated
       << " evals=" << report.evals << std::fixed << std::setprecision(3)
       << " avg_evals=" << report.average_evals() << " heuristic=" << avg_eval_estimate(a.ell)
       << " seconds=" << report.seconds << '\n';
  info.unsetf(std::ios::floatfield);
  return kOk;
}

void emit_table(std::ostream& out, Format format, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  if (format == Format::Csv) {
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
      out << '\n';
    }
    return;
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << cells[i];
    }
    out << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

std::string fmt_double(double v, int precision) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(precision) << v;
  return os.str();
}

int cmd_constants(const std::string& table, const std::string& format_name, std::ostream& out) {
  const auto format = parse_format(format_name);
  if (!format || *format == Format::Json) fail(ErrorKind::Usage, "constants supports --format text|csv");
  std::vector<std::vector<std::string>> rows;
  if (table == "c-burgess") {
    for (int r = 2; r <= 15; ++r) rows.push_back({std::to_string(r), bounds::burgess_C({.r = r}).fixed()});
    emit_table(out, *format, {"r", "C(r)"}, rows);
  } else if (table == "d1" || table == "d2") {
    for (int k = 2; k <= 15; ++k) {
      rows.push_back({std::to_string(k), (table == "d1" ? bounds::d1(k) : bounds::d2(k)).fixed()});
    }
    emit_table(out, *format, {"k", table == "d1" ? "D1(k)" : "D2(k)"}, rows);
  } else if (table == "e") {
    for (int k = 2; k <= 8; ++k) {
      rows.push_back({std::to_string(k), bounds::e_constant(k).scientific(), bounds::eprime_constant(k).scientific()});
    }
    emit_table(out, *format, {"k", "E(k)", "E'(k)"}, rows);
  } else if (table == "c-ell") {
    for (std::uint32_t ell = 3; ell < 100; ell += 2) {
      if (!is_prime(ell)) continue;
      const bounds::ClResult c = bounds::cl_bound(ell);
      rows.push_back({std::to_string(ell), std::to_string(c.k), fmt_double(c.log10_crossing, 4),
                      "10^" + std::to_string(c.exponent), c.holds_at_bound ? "yes" : "no",
                      std::to_string(c.best_k), fmt_double(c.best_log10_crossing, 4)});
    }
    emit_table(out, *format, {"ell", "k", "log10(f*)", "C_ell", "verified", "best_k", "best_log10(f*)"}, rows);
  } else if (table == "special") {
    for (std::uint32_t ell = 3; ell < 100; ell += 2) {
      if (!is_prime(ell)) continue;
      rows.push_back({std::to_string(ell), std::to_string(bounds::special_threshold(1, ell)),
                      std::to_string(bounds::special_threshold(2, ell))});
    }
    emit_table(out, *format, {"ell", "case1_f0", "case2_f0"}, rows);
  } else {
    fail(ErrorKind::Usage, "unknown table '" + table + "' (c-burgess|d1|d2|e|c-ell|special)");
  }
  return kOk;
}

int cmd_verify(const std::string& path, std::uint32_t ell, std::ostream& out) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Usage, "cannot open " + path);
  std::vector<std::pair<std::string, Witness>> lines;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto w = parse_witness(line, ell);
    if (!w) fail(ErrorKind::Parse, path + ":" + std::to_string(lineno) + ": malformed witness line");
    lines.emplace_back(line.substr(first), *w);
  }
  int failures = 0;
  for (const auto& [text, w] : lines) {
    bool ok = false;
    try {
      const CharacterSpec spec = make_spec(w.f, ell);
      const auto engine = ell == 3 ? build_cubic_engine(spec) : build_powmod_engine(spec);
      ok = validate_witness(w, *engine);
    } catch (const Error&) {
      ok = false;
    }
    out << (ok ? "PASS " : "FAIL ") << format_witness(w) << '\n';
    if (!ok) ++failures;
  }
  return failures ? kVerificationFailed : kOk;
}

int cmd_selfcheck(bool quick, std::ostream& out) {
  const auto started = std::chrono::steady_clock::now();
  SelfcheckOptions options;
  options.quick = quick;
  const SelfcheckResult result = run_selfcheck(options, &out);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  out << (result.ok() ? "selfcheck passed" : "selfcheck FAILED") << " (" << result.passed.size() << " suites ok, "
      << result.failures.size() << " failures, " << fmt_double(seconds, 2) << " s)\n";
  for (const auto& f : result.failures) out << "failed: " << f << '\n';
  return result.ok() ? kOk : kVerificationFailed;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Resource:
    case ErrorKind::Range: return kResource;
    default: return kUsage;
  }
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certify Galois fields of odd prime degree as not norm-Euclidean, and recompute the bound constants"};
  app.require_subcommand(1);

  SieveArgs sieve;
  auto* s = app.add_subcommand("sieve", "Sieve conductors in [A, B] for a given ell");
  s->add_option("--ell", sieve.ell, "Odd prime degree")->required();
  s->add_option("--from", sieve.from, "Lower end A of the conductor range")->required();
  s->add_option("--to", sieve.to, "Upper end B of the conductor range")->required();
  s->add_option("--engine", sieve.engine, "auto|table|powmod|cubic")->capture_default_str();
  s->add_option("--workers", sieve.workers, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  s->add_option("--format", sieve.format, "text|csv|json")->capture_default_str();
  s->add_option("--checkpoint", sieve.checkpoint, "Checkpoint file (resumed when present)");
  s->add_flag("--emit-witnesses", sieve.emit_witnesses, "Print a record for every conductor");
  s->add_option("--prime-limit", sieve.prime_limit, "Primes scanned per conductor (default max(1000, sqrt B, 1e5))");
  s->add_option("--chunk", sieve.chunk, "Integers per work chunk")->check(CLI::PositiveNumber)->capture_default_str();

  std::string table, table_format = "text";
  auto* c = app.add_subcommand("constants", "Print a recomputed constant table");
  c->add_option("--table", table, "c-burgess|d1|d2|e|c-ell|special")->required();
  c->add_option("--format", table_format, "text|csv")->capture_default_str();

  std::string witness_file;
  std::uint32_t verify_ell = 3;
  auto* v = app.add_subcommand("verify", "Re-validate witness lines");
  v->add_option("file", witness_file, "File of 'f=<f>, q1=<q1>, q2=<q2>, r=<r>' lines")->required();
  v->add_option("--ell", verify_ell, "Degree of the fields")->capture_default_str();

  bool quick = false;
  auto* sc = app.add_subcommand("selfcheck", "Run the built-in consistency suites");
  sc->add_flag("--quick", quick, "Reduced ranges");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (s->parsed()) return cmd_sieve(sieve, out, err);
    if (c->parsed()) return cmd_constants(table, table_format, out);
    if (v->parsed()) return cmd_verify(witness_file, verify_ell, out);
    if (sc->parsed()) return cmd_selfcheck(quick, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("nonne");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : storage) argv.push_back(a.data());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace nonne::cli
