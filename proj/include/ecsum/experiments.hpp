/*
 * Copyright 2026 The ecsum Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Batch experiments: a parameter grid is expanded into tasks, the tasks run
// on a worker pool, and the rows are assembled in task order into one report
// document. Each task draws from its own random stream, split from the seed
// by task index, so the document does not depend on the thread count.

#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ecsum/characters.hpp"
#include "ecsum/combinat.hpp"
#include "ecsum/config.hpp"
#include "ecsum/curves.hpp"
#include "ecsum/endos.hpp"
#include "ecsum/error.hpp"
#include "ecsum/extractor.hpp"
#include "ecsum/fields.hpp"
#include "ecsum/limits.hpp"
#include "ecsum/nafgen.hpp"
#include "ecsum/numtheory.hpp"
#include "ecsum/report.hpp"
#include "ecsum/rng.hpp"
#include "ecsum/sums.hpp"

namespace ecsum {

inline constexpr const char* kExperimentNames[] = {
    "curve-info", "single-sum-sweep", "bilinear-u", "bilinear-v", "stationary",
    "powgen",     "naf",              "sumprod",    "sarkozy",    "extract"};

struct ExperimentConfig {
  std::string command;
  Json curve;                     // curve document, already resolved
  Json params = Json::object();   // experiment parameters
  std::uint64_t seed = 0;
  std::string out;                // empty: standard output
  std::string format = "json";    // json | csv
  unsigned threads = 1;
  std::uint64_t max_q = std::uint64_t{1} << 20;
};

// Reads an experiment file:
//   {"experiment": "...", "curve": {...} or "path.json", "params": {...},
//    "seed": 42, "format": "json", "threads": 1, "max_q": 4096, "out": "..."}
// A relative curve path is resolved against the file's directory.
inline ExperimentConfig load_experiment_config(const std::string& path) {
  const Json j = load_json_file(path);
  if (!j.is_object()) config_error("<root>", "expected an object");
  reject_unknown_keys(j, "", {"experiment", "curve", "params", "seed", "format",
                              "threads", "max_q", "out"});
  ExperimentConfig c;
  if (j.contains("experiment")) {
    if (!j.at("experiment").is_string()) config_error("experiment", "expected a string");
    c.command = j.at("experiment").get<std::string>();
  }
  if (j.contains("curve")) {
    const Json& cv = j.at("curve");
    if (cv.is_string()) {
      std::string p = cv.get<std::string>();
      const auto slash = path.find_last_of('/');
      if (!p.empty() && p[0] != '/' && slash != std::string::npos) {
        p = path.substr(0, slash + 1) + p;
      }
      c.curve = load_json_file(p);
    } else {
      c.curve = cv;
    }
  }
  if (j.contains("params")) {
    if (!j.at("params").is_object()) config_error("params", "expected an object");
    c.params = j.at("params");
  }
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) config_error("seed", "expected an unsigned integer");
    c.seed = j.at("seed").get<std::uint64_t>();
  }
  if (j.contains("format")) {
    if (!j.at("format").is_string()) config_error("format", "expected \"json\" or \"csv\"");
    c.format = j.at("format").get<std::string>();
  }
  if (j.contains("threads")) c.threads = static_cast<unsigned>(json_int(j, "threads", ""));
  if (j.contains("max_q")) c.max_q = static_cast<std::uint64_t>(json_int(j, "max_q", ""));
  if (j.contains("out")) {
    if (!j.at("out").is_string()) config_error("out", "expected a string");
    c.out = j.at("out").get<std::string>();
  }
  return c;
}

// Runs fn(i) for i < n on up to `threads` workers and returns the results in
// index order. The exception of the lowest failing index is rethrown.
template <typename Fn>
std::vector<Json> run_pool(std::size_t n, unsigned threads, Fn&& fn) {
  std::vector<Json> out(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        out[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned workers =
      static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(threads, n)));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

namespace detail {

// Typed access to the "params" object; every failure names the key.
class Params {
 public:
  Params(const Json& j, std::initializer_list<const char*> allowed) : j_(j) {
    if (!j_.is_object()) config_error("params", "expected an object");
    reject_unknown_keys(j_, "params.", allowed);
  }

  bool has(const std::string& key) const { return j_.contains(key); }

  std::int64_t integer(const std::string& key, std::int64_t fallback) const {
    return json_int_or(j_, key, "params.", fallback);
  }

  double real(const std::string& key, double fallback) const {
    if (!has(key)) return fallback;
    if (!j_.at(key).is_number()) config_error("params." + key, "expected a number");
    return j_.at(key).get<double>();
  }

  std::string text(const std::string& key, const std::string& fallback) const {
    if (!has(key)) return fallback;
    if (!j_.at(key).is_string()) config_error("params." + key, "expected a string");
    return j_.at(key).get<std::string>();
  }

  // A scalar or a list of integers.
  std::vector<std::int64_t> integers(const std::string& key,
                                     std::vector<std::int64_t> fallback) const {
    if (!has(key)) return fallback;
    const Json& v = j_.at(key);
    if (v.is_number_integer()) return {v.get<std::int64_t>()};
    if (!v.is_array()) config_error("params." + key, "expected an integer or a list");
    std::vector<std::int64_t> out;
    for (const Json& e : v) {
      if (!e.is_number_integer()) config_error("params." + key, "expected integers");
      out.push_back(e.get<std::int64_t>());
    }
    return out;
  }

  std::vector<double> reals(const std::string& key, std::vector<double> fallback) const {
    if (!has(key)) return fallback;
    const Json& v = j_.at(key);
    if (v.is_number()) return {v.get<double>()};
    if (!v.is_array()) config_error("params." + key, "expected a number or a list");
    std::vector<double> out;
    for (const Json& e : v) {
      if (!e.is_number()) config_error("params." + key, "expected numbers");
      out.push_back(e.get<double>());
    }
    return out;
  }

  Point point(const std::string& key, const Curve& curve, const Point& fallback) const {
    if (!has(key)) return fallback;
    try {
      return parse_point(text(key, ""), curve);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kConfigError) throw;
      config_error("params." + key, e.what());
    }
  }

  const Json& raw(const std::string& key) const { return j_.at(key); }

 private:
  const Json& j_;
};

inline std::int64_t positive(std::int64_t v, const std::string& key) {
  if (v < 1) config_error("params." + key, "must be positive");
  return v;
}

inline AdditiveCharacter make_psi(const Field& f, std::int64_t a) {
  return AdditiveCharacter(f, f.from_int(a));
}

inline Complex random_phase(Rng& rng) {
  const double t = 2.0 * std::numbers::pi * rng.unit();
  return {std::cos(t), std::sin(t)};
}

inline Complex draw_weight(Rng& rng, const std::string& mode) {
  return mode == "unit" ? Complex(1.0, 0.0) : random_phase(rng);
}

// Row for results that are not a single complex sum.
inline Json plain_row(const std::string& kind, Json params, double value,
                      Json bounds = Json::array()) {
  Json j;
  j["kind"] = kind;
  j["sum_re"] = value;
  j["sum_im"] = 0.0;
  j["abs"] = std::abs(value);
  j["params"] = std::move(params);
  j["bounds"] = std::move(bounds);
  return j;
}

inline Json bound_json(const std::string& name, double value, double measured) {
  return Json{{"name", name},
              {"value", value},
              {"ratio", value > 0 ? measured / value : INFINITY}};
}

// Cyclic subgroup generated by g, in canonical order.
inline std::vector<Point> cyclic_subgroup(const Curve& curve, const Point& g) {
  std::vector<Point> out{Point::infinity()};
  for (Point p = g; !p.is_infinity(); p = curve.add(p, g)) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

struct Context {
  const ExperimentConfig& config;
  Curve curve;
  Limits limits;
  Rng root;
  std::shared_ptr<const GroupStructure> structure;  // built on demand

  const GroupStructure& group() {
    if (!structure) structure = group_structure(curve, limits);
    return *structure;
  }
  Rng stream(std::size_t task) const { return root.split(task); }
};

using Task = std::function<Json(Rng&)>;

inline std::vector<Task> curve_info_tasks(Context& ctx) {
  Params p(ctx.config.params, {});
  const GroupStructure& s = ctx.group();
  Json info;
  info["q"] = ctx.curve.field().size();
  info["curve"] = ctx.curve.describe();
  info["order"] = s.order();
  info["M"] = s.m();
  info["L"] = s.l();
  info["P1"] = to_string(s.p1());
  info["P2"] = to_string(s.p2());
  info["trace"] = static_cast<std::int64_t>(ctx.curve.field().size()) + 1 -
                  static_cast<std::int64_t>(s.order());
  info["ordinary"] = is_ordinary(ctx.curve, s.order());
  return {[info](Rng&) { return plain_row("curve-info", info, 0.0); }};
}

inline std::vector<Task> single_sum_tasks(Context& ctx) {
  Params p(ctx.config.params, {"G", "psi", "characters", "twist"});
  const GroupStructure& s = ctx.group();
  const Point g = p.point("G", ctx.curve, s.p1());
  const std::string twist_name = p.text("twist", "point_multiple");
  if (twist_name != "point_multiple" && twist_name != "fixed_point") {
    config_error("params.twist", "expected \"point_multiple\" or \"fixed_point\"");
  }
  const SingleSumTwist twist = twist_name == "point_multiple"
                                   ? SingleSumTwist::kPointMultiple
                                   : SingleSumTwist::kFixedPoint;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> chars;
  if (p.has("characters")) {
    const Json& cj = p.raw("characters");
    if (!cj.is_array()) config_error("params.characters", "expected a list of [u, v]");
    for (const Json& e : cj) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
          !e[1].is_number_unsigned()) {
        config_error("params.characters", "expected a list of [u, v]");
      }
      chars.emplace_back(e[0].get<std::uint32_t>(), e[1].get<std::uint32_t>());
    }
  } else {
    for (std::uint32_t u = 0; u < s.m(); ++u) {
      for (std::uint32_t v = 0; v < s.l(); ++v) chars.emplace_back(u, v);
    }
  }
  std::vector<Task> tasks;
  for (std::int64_t a : p.integers("psi", {1})) {
    const AdditiveCharacter psi = make_psi(ctx.curve.field(), a);
    for (auto [u, v] : chars) {
      const GroupCharacter chi(ctx.structure, u, v);
      tasks.push_back([=](Rng&) { return single_sum(g, psi, chi, twist).to_json(); });
    }
  }
  return tasks;
}

inline std::vector<Task> bilinear_u_tasks(Context& ctx) {
  Params p(ctx.config.params, {"G", "psi", "size_a", "size_b", "trials", "weights"});
  const GroupStructure& s = ctx.group();
  const Point g = p.point("G", ctx.curve, s.p1());
  const std::uint64_t t = s.order_of(g);
  std::vector<std::uint64_t> units;
  for (std::uint64_t r = 1; r < t; ++r) {
    if (std::gcd(r, t) == 1) units.push_back(r);
  }
  if (t == 1) units.push_back(0);
  const auto quarter = static_cast<std::int64_t>(std::max<std::size_t>(1, units.size() / 4));
  const std::string weights = p.text("weights", "phase");
  const std::int64_t trials = positive(p.integer("trials", 1), "trials");
  std::vector<Task> tasks;
  for (std::int64_t a : p.integers("psi", {1})) {
    const AdditiveCharacter psi = make_psi(ctx.curve.field(), a);
    for (std::int64_t sa : p.integers("size_a", {quarter})) {
      for (std::int64_t sb : p.integers("size_b", {quarter})) {
        positive(sa, "size_a");
        positive(sb, "size_b");
        for (std::int64_t trial = 0; trial < trials; ++trial) {
          tasks.push_back([=, &ctx](Rng& rng) {
            auto draw = [&](std::int64_t k) {
              std::vector<std::pair<std::uint64_t, Complex>> e;
              for (std::uint64_t r : rng.sample(units, static_cast<std::size_t>(k))) {
                e.emplace_back(r, draw_weight(rng, weights));
              }
              return WeightedResidueSet(t, std::move(e));
            };
            const WeightedResidueSet a_set = draw(sa);
            const WeightedResidueSet b_set = draw(sb);
            Json row = bilinear_mult_sum(ctx.curve, g, a_set, b_set, psi, ctx.limits).to_json();
            row["params"]["trial"] = trial;
            return row;
          });
        }
      }
    }
  }
  return tasks;
}

inline std::vector<Task> bilinear_v_tasks(Context& ctx) {
  Params p(ctx.config.params, {"psi", "size_p", "size_q", "trials", "weights"});
  const auto points =
      std::make_shared<const std::vector<Point>>(enumerate_points(ctx.curve, ctx.limits));
  const auto quarter = static_cast<std::int64_t>(std::max<std::size_t>(1, points->size() / 4));
  const std::string weights = p.text("weights", "phase");
  const std::int64_t trials = positive(p.integer("trials", 1), "trials");
  std::vector<Task> tasks;
  for (std::int64_t a : p.integers("psi", {1})) {
    const AdditiveCharacter psi = make_psi(ctx.curve.field(), a);
    for (std::int64_t sp : p.integers("size_p", {quarter})) {
      for (std::int64_t sq : p.integers("size_q", {quarter})) {
        positive(sp, "size_p");
        positive(sq, "size_q");
        for (std::int64_t trial = 0; trial < trials; ++trial) {
          tasks.push_back([=, &ctx](Rng& rng) {
            auto draw = [&](std::int64_t k) {
              std::vector<std::pair<Point, Complex>> e;
              for (const Point& pt : rng.sample(*points, static_cast<std::size_t>(k))) {
                e.emplace_back(pt, draw_weight(rng, weights));
              }
              return WeightedPointSet(ctx.curve, std::move(e));
            };
            const WeightedPointSet ps = draw(sp);
            const WeightedPointSet qs = draw(sq);
            Json row = bilinear_add_sum(ps, qs, psi).to_json();
            row["params"]["trial"] = trial;
            return row;
          });
        }
      }
    }
  }
  return tasks;
}

inline std::vector<Task> stationary_tasks(Context& ctx) {
  Params p(ctx.config.params, {"psi", "n", "a", "b"});
  const Field& f = ctx.curve.field();
  std::vector<Task> tasks;
  for (std::int64_t n : p.integers("n", {1, 2, 3})) {
    for (std::int64_t a : p.integers("a", {1})) {
      for (std::int64_t b : p.integers("b", {0, 1})) {
        for (std::int64_t c : p.integers("psi", {1})) {
          const AdditiveCharacter psi = make_psi(f, c);
          // Validate eagerly so a bad grid fails before any work starts.
          check_stationary_args(ctx.curve, n, f.from_int(a), f.from_int(b));
          tasks.push_back([=, &ctx](Rng&) {
            return stationary_sum(ctx.curve, n, f.from_int(a), f.from_int(b), psi, ctx.limits)
                .to_json();
          });
        }
      }
    }
  }
  return tasks;
}

inline std::vector<Task> powgen_tasks(Context& ctx) {
  Params p(ctx.config.params, {"G", "psi", "e", "N", "epsilon", "nu_min", "nu_max"});
  const GroupStructure& s = ctx.group();
  const Point g = p.point("G", ctx.curve, s.p1());
  const std::uint64_t t = s.order_of(g);
  PowerGenOptions options;
  options.epsilon = p.real("epsilon", 0.0);
  options.nu_min = static_cast<int>(positive(p.integer("nu_min", 1), "nu_min"));
  options.nu_max = static_cast<int>(positive(p.integer("nu_max", 4), "nu_max"));
  const std::vector<std::int64_t> lengths = p.integers("N", {});
  std::vector<std::int64_t> units;
  for (std::int64_t e = 2; units.size() < 2 && e < 2 + static_cast<std::int64_t>(t); ++e) {
    if (std::gcd(static_cast<std::uint64_t>(e), t) == 1) units.push_back(e);
  }
  if (units.empty()) units.push_back(1);
  std::vector<Task> tasks;
  for (std::int64_t e : p.integers("e", units)) {
    const std::uint64_t er = reduce_exponent(e, t);
    if (std::gcd(er, t) != 1) {
      config_error("params.e", std::to_string(e) + " is not a unit mod " + std::to_string(t));
    }
    const std::uint64_t period = t == 1 ? 1 : multiplicative_order(er, t);
    std::vector<std::int64_t> ns = lengths;
    if (ns.empty()) ns.push_back(static_cast<std::int64_t>(period));
    for (std::int64_t n : ns) {
      if (n < 1 || static_cast<std::uint64_t>(n) > period) {
        config_error("params.N", std::to_string(n) + " is outside [1, " +
                                     std::to_string(period) + "]");
      }
      for (std::int64_t c : p.integers("psi", {1})) {
        const AdditiveCharacter psi = make_psi(ctx.curve.field(), c);
        tasks.push_back([=, &ctx](Rng&) {
          return power_gen_sum(ctx.curve, g, e, static_cast<std::uint64_t>(n), psi,
                               options, ctx.limits)
              .to_json();
        });
      }
    }
  }
  return tasks;
}

inline EndoKind parse_endo(const std::string& name) {
  if (name == "doubling") return EndoKind::kDoubling;
  if (name == "frobenius") return EndoKind::kFrobenius;
  if (name == "glv") return EndoKind::kGlv;
  config_error("params.endo", "expected \"doubling\", \"frobenius\" or \"glv\"");
}

inline std::vector<Task> naf_tasks(Context& ctx) {
  Params p(ctx.config.params, {"endo", "P", "k", "psi"});
  const std::string fallback = ctx.curve.variant() == CurveVariant::kKoblitz ? "frobenius"
                               : ctx.curve.variant() == CurveVariant::kGlv   ? "glv"
                                                                             : "doubling";
  const EndoKind kind = parse_endo(p.text("endo", fallback));
  std::optional<Endomorphism> sigma;
  try {
    sigma.emplace(kind, ctx.curve);
  } catch (const Error& e) {
    config_error("params.endo", e.what());
  }
  const Point pt = p.point("P", ctx.curve, ctx.group().p1());
  std::vector<Task> tasks;
  for (std::int64_t k : p.integers("k", {4, 6, 8})) {
    if (k < 0) config_error("params.k", "must be non-negative");
    if (static_cast<std::uint64_t>(k) > ctx.limits.max_naf_points_k) {
      throw Error(ErrorKind::kScaleLimitExceeded,
                  "params.k: point sweeps limited to k <= " +
                      std::to_string(ctx.limits.max_naf_points_k));
    }
    for (std::int64_t c : p.integers("psi", {1})) {
      const AdditiveCharacter psi = make_psi(ctx.curve.field(), c);
      tasks.push_back([=, &ctx](Rng&) {
        return naf_sum(*sigma, pt, static_cast<unsigned>(k), psi, ctx.limits).to_json();
      });
    }
  }
  return tasks;
}

inline std::vector<Task> sumprod_tasks(Context& ctx) {
  Params p(ctx.config.params, {"size_r", "size_s", "trials"});
  auto found = std::make_shared<std::vector<Point>>(enumerate_points(ctx.curve, ctx.limits));
  found->erase(found->begin());
  const std::shared_ptr<const std::vector<Point>> affine = found;
  const auto root = static_cast<std::int64_t>(
      std::max(1.0, std::sqrt(static_cast<double>(ctx.curve.field().size()))));
  const std::int64_t trials = positive(p.integer("trials", 1), "trials");
  std::vector<Task> tasks;
  for (std::int64_t sr : p.integers("size_r", {root})) {
    for (std::int64_t ss : p.integers("size_s", {root})) {
      positive(sr, "size_r");
      positive(ss, "size_s");
      for (std::int64_t trial = 0; trial < trials; ++trial) {
        tasks.push_back([=, &ctx](Rng& rng) {
          const PointSet r(ctx.curve, rng.sample(*affine, static_cast<std::size_t>(sr)));
          const PointSet s(ctx.curve, rng.sample(*affine, static_cast<std::size_t>(ss)));
          const Json rep = sum_product_report(r, s);
          Json params{{"q", rep["q"]},     {"size_r", rep["size_r"]}, {"size_s", rep["size_s"]},
                      {"trial", trial},    {"size_u", rep["size_u"]}, {"size_v", rep["size_v"]}};
          return plain_row("sumprod", std::move(params), rep["product"].get<double>(),
                           rep["bounds"]);
        });
      }
    }
  }
  return tasks;
}

// Random subset of `points` of the given relative density.
inline std::vector<Point> density_subset(Rng& rng, const std::vector<Point>& points,
                                         double density) {
  const auto k = static_cast<std::size_t>(std::llround(density * points.size()));
  return rng.sample(points, k);
}

inline std::vector<Task> sarkozy_tasks(Context& ctx) {
  Params p(ctx.config.params, {"density", "trials", "epsilon"});
  const auto points =
      std::make_shared<const std::vector<Point>>(enumerate_points(ctx.curve, ctx.limits));
  const double epsilon = p.real("epsilon", 0.0);
  const std::int64_t trials = positive(p.integer("trials", 1), "trials");
  std::vector<Task> tasks;
  for (double density : p.reals("density", {0.65})) {
    if (!(density > 0.0 && density <= 1.0)) config_error("params.density", "must be in (0, 1]");
    for (std::int64_t trial = 0; trial < trials; ++trial) {
      tasks.push_back([=, &ctx](Rng& rng) {
        PointSetQuad quad{PointSet(ctx.curve, density_subset(rng, *points, density)),
                          PointSet(ctx.curve, density_subset(rng, *points, density)),
                          PointSet(ctx.curve, density_subset(rng, *points, density)),
                          PointSet(ctx.curve, density_subset(rng, *points, density))};
        const SarkozyReport rep = sarkozy_asymptotic_report(quad, epsilon, ctx.limits);
        Json params = rep.to_json();
        params.erase("count");
        params["density"] = density;
        params["trial"] = trial;
        Json bounds = Json::array(
            {bound_json("main_term", rep.main_term, static_cast<double>(rep.count))});
        return plain_row("sarkozy", std::move(params), static_cast<double>(rep.count),
                         std::move(bounds));
      });
    }
  }
  return tasks;
}

inline PointSource source_from_json(const Json& j, const Curve& curve,
                                    const std::string& key) {
  if (!j.is_object() || !j.contains("entries") || !j.at("entries").is_array()) {
    config_error(key, "expected {\"entries\": [{\"point\": \"x:y\", \"prob\": p}, ...]}");
  }
  reject_unknown_keys(j, key + ".", {"curve", "entries"});
  std::vector<std::pair<Point, double>> entries;
  for (const Json& e : j.at("entries")) {
    if (!e.is_object() || !e.contains("point") || !e.at("point").is_string() ||
        !e.contains("prob") || !e.at("prob").is_number()) {
      config_error(key + ".entries", "each entry needs \"point\" and \"prob\"");
    }
    try {
      entries.emplace_back(parse_point(e.at("point").get<std::string>(), curve),
                           e.at("prob").get<double>());
    } catch (const Error& err) {
      config_error(key + ".entries", err.what());
    }
  }
  try {
    return PointSource(curve, std::move(entries));
  } catch (const Error& err) {
    config_error(key, err.what());
  }
}

inline std::vector<Task> extract_tasks(Context& ctx) {
  Params p(ctx.config.params, {"m", "sources", "min_order", "trials"});
  if (!ctx.curve.field().is_prime_field()) {
    config_error("curve.field", "bit extraction needs a prime field");
  }
  std::vector<std::int64_t> ms = p.integers("m", {1});
  for (std::int64_t m : ms) {
    if (m < 0 || m > 24) config_error("params.m", "must be in [0, 24]");
  }
  std::vector<Task> tasks;
  auto make_row = [](const PointSource& a, const PointSource& b, std::int64_t m,
                       Json params, const Limits& limits) {
    const Json rep = extractor_report(a, b, static_cast<unsigned>(m), limits);
    params["m"] = m;
    params["min_entropies"] = rep["min_entropies"];
    params["supports"] = rep["supports"];
    params["rejected"] = rep["rejected"];
    Json row = plain_row("extract", std::move(params), rep["sd"].get<double>());
    row["sd"] = rep["sd"];
    row["distribution"] = rep["distribution"];
    return row;
  };
  if (p.has("sources")) {
    const Json& sj = p.raw("sources");
    if (!sj.is_array() || sj.size() != 2) config_error("params.sources", "expected two sources");
    const auto a = std::make_shared<PointSource>(source_from_json(sj[0], ctx.curve, "params.sources[0]"));
    const auto b = std::make_shared<PointSource>(source_from_json(sj[1], ctx.curve, "params.sources[1]"));
    for (std::int64_t m : ms) {
      tasks.push_back([=, &ctx](Rng&) { return make_row(*a, *b, m, Json::object(), ctx.limits); });
    }
    return tasks;
  }
  // Uniform sources on random cyclic subgroups of order >= min_order.
  const GroupStructure& s = ctx.group();
  const double q = static_cast<double>(ctx.curve.field().size());
  const std::int64_t min_order =
      p.integer("min_order", static_cast<std::int64_t>(std::ceil(std::pow(q, 0.75))));
  auto found = std::make_shared<std::vector<Point>>();
  for (const Point& pt : s.points()) {
    if (static_cast<std::int64_t>(s.order_of(pt)) >= min_order) found->push_back(pt);
  }
  const std::shared_ptr<const std::vector<Point>> generators = found;
  if (generators->empty()) {
    config_error("params.min_order", "no point has order >= " + std::to_string(min_order));
  }
  const std::int64_t trials = positive(p.integer("trials", 1), "trials");
  for (std::int64_t trial = 0; trial < trials; ++trial) {
    for (std::int64_t m : ms) {
      tasks.push_back([=, &ctx](Rng& rng) {
        const Point g1 = (*generators)[rng.below(generators->size())];
        const Point g2 = (*generators)[rng.below(generators->size())];
        const PointSource a = PointSource::uniform(ctx.curve, cyclic_subgroup(ctx.curve, g1));
        const PointSource b = PointSource::uniform(ctx.curve, cyclic_subgroup(ctx.curve, g2));
        Json params{{"trial", trial}, {"generators", {to_string(g1), to_string(g2)}}};
        return make_row(a, b, m, std::move(params), ctx.limits);
      });
    }
  }
  return tasks;
}

}  // namespace detail

// Executes the experiment and returns the report document
//   {"experiment", "seed", "curve", "rows": [...]}.
inline Json run_experiment(const ExperimentConfig& config) {
  if (config.curve.is_null()) config_error("curve", "missing");
  const Curve curve = curve_from_json(config.curve);
  if (curve.field().size() > config.max_q) {
    throw Error(ErrorKind::kScaleLimitExceeded,
                "q = " + std::to_string(curve.field().size()) + " exceeds max_q = " +
                    std::to_string(config.max_q));
  }
  if (config.format != "json" && config.format != "csv") {
    config_error("format", "expected \"json\" or \"csv\"");
  }
  detail::Context ctx{config, curve, kDefaultLimits, Rng(config.seed), nullptr};
  std::vector<detail::Task> tasks;
  const std::string& c = config.command;
  if (c == "curve-info") tasks = detail::curve_info_tasks(ctx);
  else if (c == "single-sum-sweep") tasks = detail::single_sum_tasks(ctx);
  else if (c == "bilinear-u") tasks = detail::bilinear_u_tasks(ctx);
  else if (c == "bilinear-v") tasks = detail::bilinear_v_tasks(ctx);
  else if (c == "stationary") tasks = detail::stationary_tasks(ctx);
  else if (c == "powgen") tasks = detail::powgen_tasks(ctx);
  else if (c == "naf") tasks = detail::naf_tasks(ctx);
  else if (c == "sumprod") tasks = detail::sumprod_tasks(ctx);
  else if (c == "sarkozy") tasks = detail::sarkozy_tasks(ctx);
  else if (c == "extract") tasks = detail::extract_tasks(ctx);
  else config_error("experiment", "unknown experiment \"" + c + "\"");

  std::vector<Json> rows = run_pool(tasks.size(), config.threads, [&](std::size_t i) {
    Rng rng = ctx.stream(i);
    return tasks[i](rng);
  });
  Json doc;
  doc["experiment"] = c;
  doc["seed"] = config.seed;
  doc["curve"] = curve_to_json(curve);
  doc["rows"] = std::move(rows);
  return doc;
}

inline std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

// Fixed CSV projection: one line per (row, bound); rows without bounds get a
// single line with empty bound columns.
inline constexpr const char* kCsvHeader =
    "experiment,params,sum_re,sum_im,abs,bound,bound_value,ratio";

inline std::string render_csv(const Json& doc) {
  std::ostringstream out;
  out << kCsvHeader << "\n";
  const std::string experiment = doc.at("experiment").get<std::string>();
  for (const Json& row : doc.at("rows")) {
    const std::string prefix = experiment + "," + csv_quote(row.at("params").dump()) + "," +
                               row.at("sum_re").dump() + "," + row.at("sum_im").dump() + "," +
                               row.at("abs").dump() + ",";
    if (row.at("bounds").empty()) {
      out << prefix << ",,\n";
      continue;
    }
    for (const Json& b : row.at("bounds")) {
      out << prefix << b.at("name").get<std::string>() << "," << b.at("value").dump() << ","
          << b.at("ratio").dump() << "\n";
    }
  }
  return out.str();
}

inline std::string render(const Json& doc, const std::string& format) {
  return format == "csv" ? render_csv(doc) : doc.dump(2) + "\n";
}

// Process exit code for an error: 3 for scale caps, 2 for invalid input.
inline int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::kScaleLimitExceeded: return 3;
    case ErrorKind::kInternalInconsistency: return 1;
    default: return 2;
  }
}

}  // namespace ecsum
