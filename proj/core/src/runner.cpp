#include "pachner/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "pachner/euclidean4.hpp"
#include "pachner/geometry3.hpp"
#include "pachner/jacobians.hpp"
#include "pachner/lambda_omega.hpp"
#include "pachner/rng.hpp"

namespace pachner {

using Json = nlohmann::ordered_json;

namespace {

// Stream salts within one trial.
constexpr std::uint64_t kSaltConfiguration = 0;
constexpr std::uint64_t kSaltPerturbation = 1;
constexpr std::uint64_t kSaltEuclidean = 2;

constexpr double kEuclideanTolerance = 1e-6;
constexpr double kClosureTolerance = 1e-9;
constexpr double kStabilityTolerance = 1e-6;

constexpr std::string_view kSameAreaVariant = "S_ABC/S_ABC";
constexpr std::string_view kOwnAreaVariant = "S_ABC/S_DEF";

Json point_json(const Point3& p) { return Json::array({p.x.str(), p.y.str(), p.z.str()}); }

Json scalars_json(std::span<const Scalar> values) {
  Json out = Json::array();
  for (const Scalar& s : values) out.push_back(s.str());
  return out;
}

bool all_zero(std::span<const Scalar> values) {
  return std::all_of(values.begin(), values.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool is_degenerate_error(ErrorCode code) {
  return code == ErrorCode::SingularOmega || code == ErrorCode::SingularTransport ||
         code == ErrorCode::NotRealizable || code == ErrorCode::DivisionByZero;
}

struct TrialOutcome {
  Json block;
  std::map<Check, Status> statuses;
  std::optional<Json> first_failure;
  std::size_t resamples = 0;
  // Euclidean
  bool euclidean_evaluated = false;
  double max_same_area = 0.0;
  double max_own_area = 0.0;
  // Jacobians
  std::size_t jacobians_evaluated = 0;
  std::size_t zero_abc = 0;
  std::size_t zero_def = 0;
  bool guard_evaluated = false;
  bool guard_ok = true;
};

class TrialRunner {
 public:
  TrialRunner(const TrialConfig& config, std::size_t index)
      : config_(config), index_(index), selected_(config.checks.begin(), config.checks.end()) {}

  TrialOutcome run() {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(stream_seed(config_.seed, index_, kSaltConfiguration));
    config3_ = random_configuration(rng, static_cast<int>(config_.coord_range), &outcome_.resamples);
    volumes_ = volume_table(config3_);
    lambda_ = solve_lambda(volumes_);

    Json configuration = Json::object();
    for (Vertex v : kAllVertices) configuration[std::string(1, to_char(v))] = point_json(config3_[v]);

    outcome_.block["index"] = index_;
    outcome_.block["resamples"] = outcome_.resamples;
    outcome_.block["configuration"] = configuration;
    outcome_.block["checks"] = Json::object();

    for (Check check : kAllChecks) {
      if (selected_.count(check) == 0) continue;
      Json detail = Json::object();
      Status status = Status::Fail;
      try {
        status = dispatch(check, detail);
      } catch (const Error& e) {
        status = is_degenerate_error(e.code()) ? Status::Skip : Status::Fail;
        detail["error"] = e.what();
      }
      Json entry = Json::object();
      entry["status"] = to_string(status);
      entry.update(detail);
      outcome_.block["checks"][std::string(to_string(check))] = entry;
      outcome_.statuses[check] = status;
      if (status == Status::Fail && !outcome_.first_failure) {
        outcome_.first_failure = Json{{"trial", index_}, {"check", to_string(check)}, {"detail", entry}};
      }
    }
    if (config_.timing) {
      const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
      outcome_.block["elapsed_ms"] = elapsed.count();
    }
    return std::move(outcome_);
  }

 private:
  Status dispatch(Check check, Json& detail) {
    switch (check) {
      case Check::Boundary: return boundary(detail);
      case Check::Transport: return transport(detail);
      case Check::Holonomy: return holonomy_check(detail);
      case Check::Flatness: return flatness(detail);
      case Check::Rank: return rank_check(detail);
      case Check::Ratio: return ratio(detail);
      case Check::Main: return main_relation(detail);
      case Check::Euclidean: return euclidean(detail);
    }
    return Status::Fail;
  }

  Status boundary(Json& detail) {
    const auto residuals = check_boundary_relations(volumes_);
    detail["residuals"] = scalars_json(residuals);
    return all_zero(residuals) ? Status::Pass : Status::Fail;
  }

  Status transport(Json& detail) {
    bool ok = true;
    Json steps = Json::array();
    for (Hinge h : {Hinge::ABC, Hinge::DEF}) {
      const auto [a, b, c] = hinge_map(h, tuple_of("ABC"));
      const auto cycle = hinge_map(h, tuple_of("DEF"));
      const Point3& origin = config3_[c];
      for (std::size_t k = 0; k < 3; ++k) {
        const Vertex x = cycle[k];
        const Vertex y = cycle[(k + 1) % 3];
        const Vector3 moved = transport_vertex(volumes_, h, x, y, config3_[a] - origin, config3_[b] - origin,
                                               config3_[x] - origin);
        const Vector3 difference = moved - (config3_[y] - origin);
        const bool exact = difference == Vector3{};
        ok = ok && exact;
        steps.push_back(Json{{"hinge", to_string(h)},
                             {"from", std::string(1, to_char(x))},
                             {"to", std::string(1, to_char(y))},
                             {"difference", point_json(difference)}});
      }
    }
    detail["transports"] = steps;
    return ok ? Status::Pass : Status::Fail;
  }

  Status holonomy_check(Json& detail) {
    bool ok = true;
    Json flat = Json::object();
    for (Hinge h : {Hinge::ABC, Hinge::DEF}) {
      const Holonomy hol = holonomy(volumes_, h);
      flat[std::string(to_string(h))] = scalars_json(std::array{hol.c_a, hol.c_b, hol.c_x});
      ok = ok && hol.c_a.is_zero() && hol.c_b.is_zero() && hol.c_x == Scalar(1);
    }
    detail["flat"] = flat;

    Rng rng(stream_seed(config_.seed, index_, kSaltPerturbation));
    const auto& faces = admissible_aux_faces();
    const FaceKey face = faces[static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(faces.size()) - 1))];
    const LambdaAssignment perturbed = perturb(lambda_, face, config_.perturb_delta);
    const VolumeTable pv = volumes_from_lambda(perturbed);

    Json perturbed_json = Json::object();
    perturbed_json["face"] = face.str();
    perturbed_json["delta"] = config_.perturb_delta.str();
    bool nonflat = false;
    for (Hinge h : {Hinge::ABC, Hinge::DEF}) {
      const Holonomy hol = holonomy(pv, h);
      const OmegaPair w = omega(h, pv);
      const Scalar base = pv.get(hinge_map(h, tuple_of("ABCD")));
      const Scalar residual_a = hol.c_a - w.w1 * base;
      const Scalar residual_b = hol.c_b - w.w2 * base;
      ok = ok && residual_a.is_zero() && residual_b.is_zero() && hol.c_x == Scalar(1);
      nonflat = nonflat || !w.w1.is_zero() || !w.w2.is_zero();
      perturbed_json[std::string(to_string(h))] =
          Json{{"omega", scalars_json(std::array{w.w1, w.w2})},
               {"coefficients", scalars_json(std::array{hol.c_a, hol.c_b, hol.c_x})},
               {"residuals", scalars_json(std::array{residual_a, residual_b})}};
    }
    perturbed_json["nonflat"] = nonflat;
    detail["perturbed"] = perturbed_json;
    return ok ? Status::Pass : Status::Fail;
  }

  Status flatness(Json& detail) {
    bool ok = true;
    Json omegas = Json::object();
    for (Hinge h : {Hinge::ABC, Hinge::DEF}) {
      const OmegaPair w = omega_of_lambda(h, lambda_);
      omegas[std::string(to_string(h))] = scalars_json(std::array{w.w1, w.w2});
      ok = ok && w.w1.is_zero() && w.w2.is_zero();
    }
    detail["omega"] = omegas;
    return ok ? Status::Pass : Status::Fail;
  }

  Status rank_check(Json& detail) {
    const std::size_t r = flatness_rank(lambda_);
    detail["rank"] = r;
    return r == 3 ? Status::Pass : Status::Fail;
  }

  const JacobiTable& jacobians() {
    if (!jacobians_) {
      jacobians_ = jacobi_table(lambda_);
      outcome_.jacobians_evaluated = jacobians_->abc.size();
      for (std::size_t k = 0; k < jacobians_->abc.size(); ++k) {
        outcome_.zero_abc += jacobians_->abc[k].value.is_zero() ? 1 : 0;
        outcome_.zero_def += jacobians_->def[k].value.is_zero() ? 1 : 0;
      }
    }
    return *jacobians_;
  }

  Status ratio(Json& detail) {
    const RatioReport report = check_ratio_independence(jacobians());
    Json violations = Json::array();
    for (const auto& [i, j] : report.violations) violations.push_back(Json::array({i.str(), j.str()}));
    Json zero_abc = Json::array();
    for (const FaceKey& f : report.zero_abc) zero_abc.push_back(f.str());
    Json zero_def = Json::array();
    for (const FaceKey& f : report.zero_def) zero_def.push_back(f.str());
    detail["pairs"] = report.pairs_checked;
    detail["violations"] = violations;
    detail["zero_jacobians"] = Json{{"ABC", zero_abc}, {"DEF", zero_def}};
    return report.ok() ? Status::Pass : Status::Fail;
  }

  Status main_relation(Json& detail) {
    const JacobiTable& table = jacobians();
    Json residuals = Json::object();
    bool ok = true;
    bool exp1_nonzero = false;
    bool exp3_nonzero = false;
    for (std::size_t k = 0; k < table.abc.size(); ++k) {
      const Scalar& ja = table.abc[k].value;
      const Scalar& jd = table.def[k].value;
      const Scalar r = main_relation_residual(volumes_, ja, jd, 2);
      residuals[table.abc[k].aux.str()] = r.str();
      ok = ok && r.is_zero();
      exp1_nonzero = exp1_nonzero || !main_relation_residual(volumes_, ja, jd, 1).is_zero();
      exp3_nonzero = exp3_nonzero || !main_relation_residual(volumes_, ja, jd, 3).is_zero();
    }
    outcome_.guard_evaluated = true;
    outcome_.guard_ok = exp1_nonzero && exp3_nonzero;
    detail["residuals"] = residuals;
    detail["exponent_guard"] = Json{{"exp1_nonzero", exp1_nonzero}, {"exp3_nonzero", exp3_nonzero}};
    return ok && outcome_.guard_ok ? Status::Pass : Status::Fail;
  }

  Status euclidean(Json& detail) {
    Rng rng(stream_seed(config_.seed, index_, kSaltEuclidean));
    std::size_t resamples = 0;
    const Configuration4 points = random_configuration4(rng, 1e-2, &resamples);
    std::vector<EdgeLengthVector> directions;
    for (long d = 0; d < config_.directions; ++d) directions.push_back(random_direction(rng));

    const EuclideanReport report = check_euclidean_relation(points, directions);

    Json coords = Json::array();
    for (const Point4& p : points) coords.push_back(Json::array({p[0], p[1], p[2], p[3]}));
    detail["configuration"] = coords;
    detail["resamples"] = resamples;
    const auto signs_json = [](const SignInference& s) {
      return Json{{"eps", Json::array({s.signs.eps[0], s.signs.eps[1], s.signs.eps[2]})},
                  {"winding", s.signs.winding},
                  {"closure", s.closure},
                  {"candidates", s.candidates}};
    };
    detail["signs"] = Json{{"ABC", signs_json(report.signs_abc)}, {"DEF", signs_json(report.signs_def)}};
    detail["oriented_volumes"] = Json{{"ABCDE (F^)", report.volumes_abc[0]},
                                      {"ABCEF (D^)", report.volumes_abc[1]},
                                      {"ABCFD (-E^)", report.volumes_abc[2]},
                                      {"DEFAB (C^)", report.volumes_def[0]},
                                      {"DEFBC (A^)", report.volumes_def[1]},
                                      {"DEFCA (-B^)", report.volumes_def[2]}};
    detail["areas"] = Json{{"ABC", report.area_abc}, {"DEF", report.area_def}};
    detail["stability"] = report.stability;

    const double same = report.max_same_area();
    const double own = report.max_own_area();
    detail["max_residual"] = Json{{kSameAreaVariant, same}, {kOwnAreaVariant, own}};
    Json holds = Json::array();
    if (same < kEuclideanTolerance) holds.push_back(kSameAreaVariant);
    if (own < kEuclideanTolerance) holds.push_back(kOwnAreaVariant);
    detail["holds"] = holds;

    if (report.sign_ambiguity()) {
      detail["sign_ambiguity"] = true;
      return Status::Skip;
    }
    outcome_.euclidean_evaluated = true;
    outcome_.max_same_area = same;
    outcome_.max_own_area = own;
    const bool closed = report.signs_abc.closure < kClosureTolerance && report.signs_def.closure < kClosureTolerance;
    const bool stable = report.stability < kStabilityTolerance;
    return holds.size() == 1 && closed && stable ? Status::Pass : Status::Fail;
  }

  const TrialConfig& config_;
  std::size_t index_;
  std::set<Check> selected_;
  TrialOutcome outcome_;
  Configuration3 config3_;
  VolumeTable volumes_;
  LambdaAssignment lambda_;
  std::optional<JacobiTable> jacobians_;
};

}  // namespace

std::string_view to_string(Check check) {
  switch (check) {
    case Check::Boundary: return "boundary";
    case Check::Transport: return "transport";
    case Check::Holonomy: return "holonomy";
    case Check::Flatness: return "flatness";
    case Check::Rank: return "rank";
    case Check::Ratio: return "ratio";
    case Check::Main: return "main";
    case Check::Euclidean: return "euclidean";
  }
  return "unknown";
}

std::string_view to_string(Status status) {
  switch (status) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
  }
  return "unknown";
}

std::vector<Check> parse_check_list(std::string_view list) {
  if (list == "all") return {kAllChecks.begin(), kAllChecks.end()};
  std::set<Check> chosen;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const std::size_t comma = std::min(list.find(',', pos), list.size());
    const std::string_view name = list.substr(pos, comma - pos);
    const auto it = std::find_if(kAllChecks.begin(), kAllChecks.end(), [&](Check c) { return to_string(c) == name; });
    if (it == kAllChecks.end()) throw Error(ErrorCode::InvalidConfig, "unknown check '" + std::string(name) + "'");
    chosen.insert(*it);
    pos = comma + 1;
  }
  return {chosen.begin(), chosen.end()};
}

void validate(const TrialConfig& config) {
  if (config.trials < 1) throw Error(ErrorCode::InvalidConfig, "trials must be >= 1");
  if (config.coord_range < 2) throw Error(ErrorCode::InvalidConfig, "coord-range must be >= 2");
  if (config.coord_range > 1'000'000) throw Error(ErrorCode::InvalidConfig, "coord-range must be <= 1000000");
  if (config.perturb_delta.is_zero()) throw Error(ErrorCode::InvalidConfig, "perturb-delta must be nonzero");
  if (config.directions < 1) throw Error(ErrorCode::InvalidConfig, "directions must be >= 1");
  if (config.checks.empty()) throw Error(ErrorCode::InvalidConfig, "no checks selected");
  if (config.jobs < 1) throw Error(ErrorCode::InvalidConfig, "jobs must be >= 1");
}

RunResult run(const TrialConfig& config) {
  validate(config);
  const auto trials = static_cast<std::size_t>(config.trials);

  std::vector<TrialOutcome> outcomes(trials);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t k = next++; k < trials; k = next++) outcomes[k] = TrialRunner(config, k).run();
  };
  const unsigned workers = std::min<std::size_t>(config.jobs, trials);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  std::set<Check> selected(config.checks.begin(), config.checks.end());
  RunResult result;
  Json report = Json::object();

  Json checks_json = Json::array();
  for (Check c : kAllChecks) {
    if (selected.count(c) != 0) checks_json.push_back(to_string(c));
  }
  report["config"] = Json{{"seed", config.seed},
                          {"trials", config.trials},
                          {"coord_range", config.coord_range},
                          {"checks", checks_json},
                          {"perturb_delta", config.perturb_delta.str()},
                          {"directions", config.directions},
                          {"timing", config.timing},
                          {"rng", "mt19937_64 per stream; stream seed = splitmix64 mix of (seed, trial, salt); "
                                  "salts: 0 configuration, 1 perturbation, 2 euclidean"}};

  Json trials_json = Json::array();
  std::optional<Json> first_failure;
  std::size_t total_resamples = 0;
  std::size_t jacobians = 0;
  std::size_t zero_abc = 0;
  std::size_t zero_def = 0;
  std::size_t guard_failures = 0;
  std::size_t euclidean_trials = 0;
  double max_same = 0.0;
  double max_own = 0.0;
  for (TrialOutcome& o : outcomes) {
    trials_json.push_back(std::move(o.block));
    for (const auto& [check, status] : o.statuses) {
      CheckTally& t = result.tallies[check];
      (status == Status::Pass ? t.pass : status == Status::Fail ? t.fail : t.skip)++;
    }
    if (!first_failure && o.first_failure) first_failure = o.first_failure;
    total_resamples += o.resamples;
    jacobians += o.jacobians_evaluated;
    zero_abc += o.zero_abc;
    zero_def += o.zero_def;
    guard_failures += (o.guard_evaluated && !o.guard_ok) ? 1 : 0;
    if (o.euclidean_evaluated) {
      ++euclidean_trials;
      max_same = std::max(max_same, o.max_same_area);
      max_own = std::max(max_own, o.max_own_area);
    }
  }
  report["trials"] = std::move(trials_json);

  bool all_passed = true;
  Json tallies = Json::object();
  for (Check c : kAllChecks) {
    if (selected.count(c) == 0) continue;
    const CheckTally& t = result.tallies[c];
    tallies[std::string(to_string(c))] = Json{{"pass", t.pass}, {"fail", t.fail}, {"skip", t.skip}};
    all_passed = all_passed && t.fail == 0;
    std::ostringstream line;
    line << (t.fail == 0 ? "PASS " : "FAIL ") << to_string(c) << ": " << t.pass << " pass, " << t.fail << " fail, "
         << t.skip << " skip";
    result.summary_lines.push_back(line.str());
  }

  Json summary = Json::object();
  summary["trials"] = config.trials;
  summary["checks"] = tallies;
  summary["total_resamples"] = total_resamples;
  summary["lambda_map_rank"] = rank(lambda_volume_matrix());
  if (jacobians > 0) {
    summary["zero_jacobians"] = Json{{"evaluated_per_hinge", jacobians}, {"ABC", zero_abc}, {"DEF", zero_def}};
  }
  if (selected.count(Check::Main) != 0) summary["exponent_guard_failures"] = guard_failures;
  if (selected.count(Check::Euclidean) != 0) {
    const bool same_holds = euclidean_trials > 0 && max_same < kEuclideanTolerance;
    const bool own_holds = euclidean_trials > 0 && max_own < kEuclideanTolerance;
    std::string winner = "none";
    if (same_holds != own_holds) winner = same_holds ? kSameAreaVariant : kOwnAreaVariant;
    if (same_holds && own_holds) winner = "both";
    summary["euclidean"] = Json{{"trials_evaluated", euclidean_trials},
                                {"max_residual", Json{{kSameAreaVariant, max_same}, {kOwnAreaVariant, max_own}}},
                                {"tolerance", kEuclideanTolerance},
                                {"winner", winner}};
    const bool unique = same_holds != own_holds;
    all_passed = all_passed && unique;
    result.summary_lines.push_back(std::string(unique ? "PASS " : "FAIL ") + "euclidean winner: " + winner);
  }
  summary["first_failure"] = first_failure ? *first_failure : Json(nullptr);
  summary["all_passed"] = all_passed;
  report["summary"] = summary;

  result.all_passed = all_passed;
  result.report_json = report.dump(2) + "\n";
  return result;
}

}  // namespace pachner
