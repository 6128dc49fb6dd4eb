#include "args.hpp"

#include <numeric>

namespace bcsum::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const std::string item = trim(text.substr(start, comma - start));
    if (!item.empty()) out.push_back(item);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

double parse_real(const std::string& text) {
  const std::string t = trim(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + text + "'");
  }
  if (used != t.size()) throw UsageError("not a number: '" + text + "'");
  return v;
}

long parse_long(const std::string& text) {
  const std::string t = trim(text);
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(t, &used);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + text + "'");
  }
  if (used != t.size()) throw UsageError("not an integer: '" + text + "'");
  return v;
}

cplx parse_complex(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) throw UsageError("empty complex number");
  if (t.back() != 'i') return {parse_real(t), 0.0};
  const std::string body = t.substr(0, t.size() - 1);
  std::size_t split_at = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split_at = i;
      break;
    }
  }
  const std::string re = split_at == std::string::npos ? "" : body.substr(0, split_at);
  std::string im = split_at == std::string::npos ? body : body.substr(split_at);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? 0.0 : parse_real(re), parse_real(im)};
}

std::vector<long> parse_long_list(const std::string& text) {
  std::vector<long> out;
  for (const std::string& item : split(text)) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_long(item));
      continue;
    }
    const long lo = parse_long(item.substr(0, dots)), hi = parse_long(item.substr(dots + 2));
    for (long v = lo; v <= hi; ++v) out.push_back(v);
  }
  return out;
}

std::vector<cplx> parse_complex_list(const std::string& text) {
  std::vector<cplx> out;
  for (const std::string& item : split(text)) {
    if (item.find("..") == std::string::npos) {
      out.push_back(parse_complex(item));
    } else {
      for (long v : parse_long_list(item)) out.emplace_back(static_cast<double>(v), 0.0);
    }
  }
  return out;
}

bool Params::has(const std::string& key) const { return raw.count(key) != 0; }

std::string Params::get(const std::string& key, const std::string& fallback) const {
  const auto it = raw.find(key);
  return it == raw.end() ? fallback : it->second;
}

std::string Params::require(const std::string& key) const {
  const auto it = raw.find(key);
  if (it == raw.end()) throw UsageError("missing --" + key);
  return it->second;
}

long Params::one_long(const std::string& key) const { return parse_long(require(key)); }

long Params::one_long(const std::string& key, long fallback) const {
  return has(key) ? parse_long(raw.at(key)) : fallback;
}

std::vector<long> Params::longs(const std::string& key) const { return parse_long_list(require(key)); }

std::vector<long> Params::longs(const std::string& key, const std::string& fallback) const {
  return parse_long_list(get(key, fallback));
}

namespace {

std::vector<unsigned> to_unsigned(const std::vector<long>& v, const std::string& key) {
  std::vector<unsigned> out;
  for (long x : v) {
    if (x < 0) throw UsageError("--" + key + " needs nonnegative integers");
    out.push_back(static_cast<unsigned>(x));
  }
  return out;
}

}  // namespace

std::vector<unsigned> Params::unsigneds(const std::string& key) const { return to_unsigned(longs(key), key); }

std::vector<unsigned> Params::unsigneds(const std::string& key, const std::string& fallback) const {
  return to_unsigned(longs(key, fallback), key);
}

std::vector<cplx> Params::complexes(const std::string& key) const { return parse_complex_list(require(key)); }

std::vector<cplx> Params::complexes(const std::string& key, const std::string& fallback) const {
  return parse_complex_list(get(key, fallback));
}

cplx Params::one_complex(const std::string& key) const {
  const auto v = complexes(key);
  if (v.size() != 1) throw UsageError("--" + key + " takes a single value");
  return v.front();
}

std::vector<sums::RationalArg> Params::rational_args() const {
  std::vector<sums::RationalArg> out;
  for (long q : longs("q")) {
    for (long p : longs("p", "1")) out.push_back(sums::RationalArg::make(p, q));
  }
  return out;
}

std::vector<std::pair<long, long>> Params::hk_pairs() const {
  std::vector<std::pair<long, long>> out;
  const int sources = static_cast<int>(has("hk-max")) + static_cast<int>(has("hk")) + static_cast<int>(has("h") || has("k"));
  if (sources > 1) throw UsageError("give one of --hk-max, --hk, or --h with --k");
  if (has("hk")) {
    for (const std::string& item : split(require("hk"))) {
      const auto colon = item.find(':');
      if (colon == std::string::npos) throw UsageError("--hk items look like h:k, got '" + item + "'");
      out.emplace_back(parse_long(item.substr(0, colon)), parse_long(item.substr(colon + 1)));
    }
    return out;
  }
  if (has("hk-max")) {
    const long n = one_long("hk-max");
    for (long h = 1; h <= n; ++h) {
      for (long k = 1; k <= n; ++k) {
        if (std::gcd(h, k) == 1) out.emplace_back(h, k);
      }
    }
    return out;
  }
  for (long h : longs("h")) {
    for (long k : longs("k")) out.emplace_back(h, k);
  }
  return out;
}

}  // namespace bcsum::cli
