#pragma once

// Seeded instance generation. The engine is std::mt19937_64, whose output
// sequence is fixed by the standard; the distributions below are written out
// by hand because the std:: ones are implementation-defined. Together they
// make generated files byte-identical across platforms.

#include <aon/core.hpp>
#include <aon/rational.hpp>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <variant>

namespace aon {

using Rng = std::mt19937_64;

/// Uniform integer on [lo, hi] by rejection.
inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return lo + static_cast<std::int64_t>(rng());
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % span + 1) % span;
  std::uint64_t x = rng();
  while (x > limit) x = rng();
  return lo + static_cast<std::int64_t>(x % span);
}

/// Uniform double strictly inside (0, 1), on the grid (k + 1/2) 2^-53.
inline double uniform_unit_open(Rng& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

/// Uniform double strictly inside (lo, hi).
inline double uniform_open(Rng& rng, double lo, double hi) {
  double v = lo + (hi - lo) * uniform_unit_open(rng);
  if (v <= lo) v = std::nextafter(lo, hi);
  if (v >= hi) v = std::nextafter(hi, lo);
  return v;
}

struct UniformProb {
  double lo = 0.0;
  double hi = 1.0;
};

/// With probability q draw p from (0.01, 0.5), otherwise from (0.5, 0.99).
struct MixedProb {
  double q = 0.5;
};

using ProbDist = std::variant<UniformProb, MixedProb>;

inline constexpr double kMixedLow = 0.01;
inline constexpr double kMixedHigh = 0.99;

inline std::string to_string(const ProbDist& d) {
  if (const auto* u = std::get_if<UniformProb>(&d)) {
    return "uniform(" + shortest_decimal(u->lo) + "," + shortest_decimal(u->hi) + ")";
  }
  return "mixed(" + shortest_decimal(std::get<MixedProb>(d).q) + ")";
}

/// Parses "uniform(lo,hi)" or "mixed(q)".
inline ProbDist parse_prob_dist(std::string_view text) {
  const auto bad = [&](const std::string& why) {
    return Error(ErrorCode::BadDistributionSpec, "'" + std::string(text) + "': " + why);
  };
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')') throw bad("expected name(args)");
  const std::string_view name = text.substr(0, open);
  const std::string_view args = text.substr(open + 1, text.size() - open - 2);
  const auto number = [&](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) throw bad("bad number");
    return v;
  };
  if (name == "uniform") {
    const auto comma = args.find(',');
    if (comma == std::string_view::npos) throw bad("uniform needs two arguments");
    const UniformProb u{number(args.substr(0, comma)), number(args.substr(comma + 1))};
    if (!(u.lo >= 0.0 && u.lo < u.hi && u.hi <= 1.0)) throw bad("need 0 <= lo < hi <= 1");
    return u;
  }
  if (name == "mixed") {
    const MixedProb m{number(args)};
    if (!(m.q >= 0.0 && m.q <= 1.0)) throw bad("need 0 <= q <= 1");
    return m;
  }
  throw bad("unknown distribution");
}

inline double draw_prob(Rng& rng, const ProbDist& dist) {
  if (const auto* u = std::get_if<UniformProb>(&dist)) return uniform_open(rng, u->lo, u->hi);
  const double q = std::get<MixedProb>(dist).q;
  const bool low = uniform_unit_open(rng) < q;
  return low ? uniform_open(rng, kMixedLow, 0.5) : uniform_open(rng, 0.5, kMixedHigh);
}

/// Profits uniform on [1, cmax]; each item draws its profit, then its probability.
inline Instance generate(std::size_t n, std::int64_t cmax, const ProbDist& dist, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::EmptyInstance, "gen needs n >= 1");
  if (cmax < 1) throw Error(ErrorCode::NonPositiveProfit, "gen needs cmax >= 1");
  Rng rng(seed);
  Instance out;
  out.items.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t c = uniform_int(rng, 1, cmax);
    const double p = draw_prob(rng, dist);
    out.items.push_back({c, p});
  }
  return out;
}

}  // namespace aon
