#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcong/cyclo.hpp"
#include "qcong/rational.hpp"

namespace qcong {

enum class Status { pass, fail, hypothesis_violated };

std::string to_string(Status s);

/// Ordered name -> integer parameters. Vectors are spelled out as s1, s2, ...
using Params = std::vector<std::pair<std::string, long>>;

long param(const Params& ps, const std::string& name);
std::optional<long> find_param(const Params& ps, const std::string& name);
/// Values of prefix1, prefix2, ... in order.
std::vector<long> param_vector(const Params& ps, const std::string& prefix);
/// Appends prefix1.. for the vector, or prefix0.. when zero_based.
void push_vector(Params& ps, const std::string& prefix, const std::vector<long>& v, bool zero_based = false);
std::string params_to_string(const Params& ps);

struct CheckReport {
  std::string check_id;
  Params params;
  Status status = Status::fail;
  std::string lhs;
  std::string rhs;
  std::chrono::duration<double, std::milli> elapsed{0};
};

/// A congruence constant read off a computation that came out q-free.
struct ExtractedConstant {
  long p = 0;
  long r = 0;
  long t = 0;
  std::vector<long> d;
  Rational value;
};

struct CheckCell {
  std::string check_id;
  Params params;
};

/// Bounds of a sweep. Families that do not use primes ignore `primes`.
struct GridConfig {
  std::vector<long> primes{3, 5, 7, 11, 13};
  long max_n = 8;        // identities; depth-1 exponents
  long max_weight = 5;   // compositions in identity and duality grids
  long max_t = 12;       // repetition counts
  long max_depth = 0;    // 0 = no limit on composition length
  long max_r_12 = 8;     // cyclic sums over 1/2 strings
  long max_r_23 = 9;     // cyclic sums over 2/3 strings
  long random_specs = 20;
  long cl_max_p = 12;
  long cl_max_s = 3;
};

std::vector<std::string> check_ids();
bool has_check(const std::string& id);
/// Shell-style glob with * and ?.
bool glob_match(const std::string& pattern, const std::string& text);
std::vector<std::string> select_checks(const std::vector<std::string>& patterns);

/// Every cell of the selected checks, in registry order then grid order.
std::vector<CheckCell> build_grid(const std::vector<std::string>& ids, const GridConfig& cfg);

/// Runs one cell. Throws std::invalid_argument on an unknown id or missing parameter.
CheckReport run_cell(const CheckCell& cell);

/// Runs cells on a worker pool; output order equals input order.
std::vector<CheckReport> run_cells(const std::vector<CheckCell>& cells, unsigned workers);

/// Cyclic sum of H-values over the rotations of the strings built from d:
/// {a}^(d_i), b, {a}^(d_(i+1)), b, ..., b, {a}^(d_(i+t)), with (a, b) = (1, 2)
/// for family 12 and (2, 3) for family 23.
std::vector<long> cyclic_string(long family, const std::vector<long>& d, long rotation);
long cyclic_weight(long family, const std::vector<long>& d);
CycloElement cyclic_sum(long p, long family, const std::vector<long>& d);

struct ConjectureResult {
  CheckReport report;
  std::optional<ExtractedConstant> constant;
};

/// Family 12: compares with (-1)^t binom(p+t, r+1) (1-q)^r / p.
/// Family 23: X = LHS p (1-q)^(-r) must be q-free; records N = X.
ConjectureResult conjecture_check(long p, long family, const std::vector<long>& d);

/// F(p) for repeated twos without twist: extracted value when q-free.
std::optional<Rational> repeated_twos_factor(long p, long t);

}  // namespace qcong
