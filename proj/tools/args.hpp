#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bcsum/complex_val.hpp"
#include "bcsum/sums.hpp"

namespace bcsum::cli {

/// Bad command-line input; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "2.5", "-3", "2+1i", "2-i", "0.5i", "i".
cplx parse_complex(const std::string& text);
double parse_real(const std::string& text);
long parse_long(const std::string& text);

/// Comma-separated items; integer items may be ranges "a..b" (empty when a > b).
/// Complex lists accept integer ranges too.
std::vector<long> parse_long_list(const std::string& text);
std::vector<cplx> parse_complex_list(const std::string& text);

/// Raw option values of one subcommand, keyed by long option name without dashes.
class Params {
 public:
  std::map<std::string, std::string> raw;

  bool has(const std::string& key) const;
  std::string get(const std::string& key, const std::string& fallback) const;
  std::string require(const std::string& key) const;

  long one_long(const std::string& key) const;
  long one_long(const std::string& key, long fallback) const;
  std::vector<long> longs(const std::string& key) const;
  std::vector<long> longs(const std::string& key, const std::string& fallback) const;
  std::vector<unsigned> unsigneds(const std::string& key) const;
  std::vector<unsigned> unsigneds(const std::string& key, const std::string& fallback) const;
  std::vector<cplx> complexes(const std::string& key) const;
  std::vector<cplx> complexes(const std::string& key, const std::string& fallback) const;
  cplx one_complex(const std::string& key) const;

  /// x = p/q from --p (default 1) and --q, every combination in order.
  std::vector<sums::RationalArg> rational_args() const;
  /// (h, k) pairs: every coprime pair with 1 ≤ h, k ≤ --hk-max, the explicit
  /// --hk list "h:k,...", or every combination of --h and --k.
  std::vector<std::pair<long, long>> hk_pairs() const;
};

}  // namespace bcsum::cli
