#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "qcong/q_objects.hpp"
#include "qcong/special_seq.hpp"
#include "qcong/verify.hpp"

using namespace qcong;
using nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

long to_long(const std::string& text, const std::string& flag) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw UsageError(flag + ": '" + text + "' is not an integer");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, sep);)
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<long> parse_longs(const std::string& text, const std::string& flag) {
  std::vector<long> out;
  for (const auto& s : split(text, ',')) out.push_back(to_long(s, flag));
  return out;
}

// "3,5,7" or "5-13" or a mix; non-primes inside a range are skipped.
std::vector<long> parse_primes(const std::string& text, const std::string& flag) {
  std::vector<long> out;
  for (const auto& item : split(text, ',')) {
    const auto dash = item.find('-', 1);
    if (dash != std::string::npos) {
      const long lo = to_long(item.substr(0, dash), flag), hi = to_long(item.substr(dash + 1), flag);
      if (lo > hi) throw UsageError(flag + ": empty range '" + item + "'");
      for (long p = std::max(3L, lo); p <= hi; ++p)
        if (is_prime(p)) out.push_back(p);
    } else {
      const long p = to_long(item, flag);
      if (p < 3 || !is_prime(p)) throw UsageError(flag + ": " + item + " is not a prime >= 3");
      out.push_back(p);
    }
  }
  if (out.empty()) throw UsageError(flag + ": no primes given");
  return out;
}

long parse_family(const std::string& text) {
  if (text == "12" || text == "CG12") return 12;
  if (text == "23" || text == "CG23") return 23;
  throw UsageError("--family: expected 12 or 23, got '" + text + "'");
}

ordered_json params_json(const Params& ps) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : ps) j[k] = v;
  return j;
}

ordered_json report_json(const CheckReport& r) {
  return ordered_json{{"check_id", r.check_id},   {"params", params_json(r.params)}, {"status", to_string(r.status)},
                      {"lhs", r.lhs},             {"rhs", r.rhs},                    {"elapsed_ms", r.elapsed.count()}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void write_reports(std::ostream& os, const std::vector<CheckReport>& reports, const std::string& format) {
  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    os << arr.dump(2) << "\n";
  } else if (format == "csv") {
    os << "check_id,params,status,lhs,rhs,elapsed_ms\n";
    for (const auto& r : reports)
      os << csv_field(r.check_id) << ',' << csv_field(params_to_string(r.params)) << ',' << to_string(r.status) << ','
         << csv_field(r.lhs) << ',' << csv_field(r.rhs) << ',' << r.elapsed.count() << "\n";
  } else {
    std::size_t pass = 0, fail = 0, skip = 0;
    for (const auto& r : reports) {
      os << to_string(r.status) << "  " << r.check_id << "  " << params_to_string(r.params);
      if (r.status == Status::fail) os << "\n    lhs: " << r.lhs << "\n    rhs: " << r.rhs;
      if (r.status == Status::hypothesis_violated) os << "  (" << r.lhs << ")";
      os << "\n";
      (r.status == Status::pass ? pass : r.status == Status::fail ? fail : skip)++;
    }
    os << "total " << reports.size() << ": " << pass << " pass, " << fail << " fail, " << skip << " hypothesis_violated\n";
  }
}

int finish(const std::vector<CheckReport>& reports, const std::string& format, const std::string& out) {
  if (out.empty()) {
    write_reports(std::cout, reports, format);
  } else {
    std::ofstream f(out);
    if (!f) throw UsageError("--out: cannot open '" + out + "'");
    write_reports(f, reports, format);
  }
  for (const auto& r : reports)
    if (r.status == Status::fail) return 1;
  return 0;
}

unsigned resolve_workers(long flag) {
  if (const char* env = std::getenv("QCONG_WORKERS")) {
    const long v = to_long(env, "QCONG_WORKERS");
    if (v < 1) throw UsageError("QCONG_WORKERS: must be positive");
    return static_cast<unsigned>(v);
  }
  if (flag < 1) throw UsageError("--workers: must be positive");
  return static_cast<unsigned>(flag);
}

void require_positive(long v, const std::string& flag) {
  if (v < 1) throw UsageError(flag + ": must be positive");
}

// All d-vectors of the family with weight r <= max_r.
std::vector<std::vector<long>> d_vectors(long family, long max_r) {
  std::vector<std::vector<long>> out;
  const long per_t = family == 12 ? 2 : 3, per_d = family == 12 ? 1 : 2;
  for (long t = 0; per_t * t <= max_r; ++t) {
    std::vector<long> d(static_cast<std::size_t>(t + 1), 0);
    const long budget = (max_r - per_t * t) / per_d;
    while (true) {
      out.push_back(d);
      std::size_t j = 0;
      while (j < d.size()) {
        long sum = 0;
        for (long x : d) sum += x;
        if (sum < budget) {
          ++d[j];
          break;
        }
        d[j++] = 0;
      }
      if (j == d.size()) break;
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of q-analogue multiple harmonic sum congruences"};
  app.require_subcommand(1);

  std::string format = "text", out;
  long workers = 1;

  GridConfig cfg;
  std::string checks = "*", primes_text = "3,5,7,11,13";
  bool list = false;
  auto* verify = app.add_subcommand("verify", "run checks over a parameter grid");
  verify->add_option("--check", checks, "comma-separated check id globs");
  verify->add_option("--primes", primes_text, "prime list or range, e.g. 3,5,7 or 5-13");
  verify->add_option("--max-n", cfg.max_n, "identity length / depth-1 exponent bound");
  verify->add_option("--max-weight", cfg.max_weight, "composition weight bound");
  verify->add_option("--max-t", cfg.max_t, "repetition count bound");
  verify->add_option("--max-depth", cfg.max_depth, "composition length bound (0 = none)");
  verify->add_option("--max-r12", cfg.max_r_12, "cyclic 1/2 weight bound");
  verify->add_option("--max-r23", cfg.max_r_23, "cyclic 2/3 weight bound");
  verify->add_option("--random-specs", cfg.random_specs, "random specs per prime for reversal checks");
  verify->add_flag("--list", list, "print check ids and exit");

  std::string family_text, d_text, prime_text;
  long t_flag = -1, max_r = -1;
  auto* conj = app.add_subcommand("conjecture", "cyclic sums: compare or extract the constant");
  conj->add_option("--family", family_text, "12 or 23")->required();
  conj->add_option("--t", t_flag, "number of separators; d must have t+1 entries");
  conj->add_option("--d", d_text, "comma-separated block lengths; omit to sweep all");
  conj->add_option("--prime,--primes", prime_text, "prime list or range");
  conj->add_option("--max-r", max_r, "weight bound for sweeps");

  std::string table_kind, table_primes = "3,5,7,11,13";
  long table_max_n = 12, table_max_r = 9;
  auto* table = app.add_subcommand("table", "tabulate K_n(p) or extracted cyclic constants");
  table->add_option("kind", table_kind, "kn or n")->required()->check(CLI::IsMember({"kn", "n"}));
  table->add_option("--prime,--primes", table_primes, "prime list or range");
  table->add_option("--max-n", table_max_n, "largest n for kn");
  table->add_option("--max-r", table_max_r, "largest weight for n");

  for (auto* sub : {verify, conj, table}) {
    sub->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", out, "write to a file instead of stdout");
    sub->add_option("--workers", workers, "worker threads");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const unsigned nworkers = resolve_workers(workers);

    if (*verify) {
      if (list) {
        for (const auto& id : check_ids()) std::cout << id << "\n";
        return 0;
      }
      cfg.primes = parse_primes(primes_text, "--primes");
      require_positive(cfg.max_n, "--max-n");
      require_positive(cfg.max_weight, "--max-weight");
      require_positive(cfg.max_t, "--max-t");
      require_positive(cfg.max_r_12, "--max-r12");
      require_positive(cfg.max_r_23, "--max-r23");
      if (cfg.max_depth < 0) throw UsageError("--max-depth: must be non-negative");
      const auto ids = select_checks(split(checks, ','));
      if (ids.empty()) throw UsageError("--check: no check matches '" + checks + "'");
      return finish(run_cells(build_grid(ids, cfg), nworkers), format, out);
    }

    if (*conj) {
      const long family = parse_family(family_text);
      const auto ps = parse_primes(prime_text.empty() ? "3,5,7,11,13" : prime_text, "--prime");
      std::vector<std::vector<long>> ds;
      if (!d_text.empty()) {
        ds.push_back(parse_longs(d_text, "--d"));
        for (long x : ds[0])
          if (x < 0) throw UsageError("--d: entries must be non-negative");
        if (t_flag >= 0 && static_cast<long>(ds[0].size()) != t_flag + 1)
          throw UsageError("--d: expected t+1 = " + std::to_string(t_flag + 1) + " entries");
      } else {
        for (auto& d : d_vectors(family, max_r > 0 ? max_r : (family == 12 ? cfg.max_r_12 : cfg.max_r_23)))
          if (t_flag < 0 || static_cast<long>(d.size()) == t_flag + 1) ds.push_back(std::move(d));
      }
      std::vector<CheckCell> cells;
      const std::string id = family == 12 ? "conj.cyclic12" : "conj.cyclic23";
      for (long p : ps)
        for (const auto& d : ds) {
          Params prm{{"p", p}, {"t", static_cast<long>(d.size()) - 1}};
          push_vector(prm, "d", d, true);
          cells.push_back({id, std::move(prm)});
        }
      return finish(run_cells(cells, nworkers), format, out);
    }

    // table
    const auto ps = parse_primes(table_primes, "--prime");
    ordered_json rows = ordered_json::array();
    std::ostringstream text;
    if (table_kind == "kn") {
      require_positive(table_max_n, "--max-n");
      for (long p : ps)
        for (const auto& kv : k_table(p, table_max_n)) {
          rows.push_back({{"p", kv.p}, {"n", kv.n}, {"value", to_string(kv.value)}});
          text << "K_" << kv.n << "(" << kv.p << ")=" << to_string(kv.value) << "\n";
        }
    } else {
      require_positive(table_max_r, "--max-r");
      for (long p : ps)
        for (const auto& d : d_vectors(23, table_max_r)) {
          if (p <= cyclic_weight(23, d) + 1) continue;
          const auto res = conjecture_check(p, 23, d);
          ordered_json dj = d;
          const long r = cyclic_weight(23, d), t = static_cast<long>(d.size()) - 1;
          std::string value = res.constant ? to_string(res.constant->value) : "nonconstant";
          rows.push_back({{"p", p}, {"r", r}, {"t", t}, {"d", dj}, {"value", value}});
          text << "N(" << p << "," << r << "," << t << ") d=" << dj.dump() << " = " << value << "\n";
        }
    }
    std::string body;
    if (format == "json") {
      body = rows.dump(2) + "\n";
    } else if (format == "csv") {
      std::ostringstream csv;
      const bool kn = table_kind == "kn";
      csv << (kn ? "p,n,value\n" : "p,r,t,d,value\n");
      for (const auto& row : rows) {
        csv << row["p"].get<long>() << ',';
        if (kn) {
          csv << row["n"].get<long>() << ',';
        } else {
          csv << row["r"].get<long>() << ',' << row["t"].get<long>() << ',' << csv_field(row["d"].dump()) << ',';
        }
        csv << row["value"].get<std::string>() << "\n";
      }
      body = csv.str();
    } else {
      body = text.str();
    }
    if (out.empty()) {
      std::cout << body;
    } else {
      std::ofstream f(out);
      if (!f) throw UsageError("--out: cannot open '" + out + "'");
      f << body;
    }
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
}
