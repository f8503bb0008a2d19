// Copyright 2026 The cavity-udw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cavity_udw/cli/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "cavity_udw/cli/table.hpp"
#include "cavity_udw/derivative_response.hpp"
#include "cavity_udw/evolution.hpp"

namespace cavity_udw::cli {

using nlohmann::json;

namespace {

std::string describe(const std::string& field, const std::string& message,
                     int line) {
  std::string out = line > 0 ? "line " + std::to_string(line) + ": " : "";
  if (!field.empty()) out += field + ": ";
  return out + message;
}

}  // namespace

ConfigError::ConfigError(std::string field, const std::string& message, int line)
    : std::runtime_error(describe(field, message, line)),
      field_(std::move(field)),
      line_(line) {}

Trajectory PhysicsBlock::worldline() const {
  return trajectory == TrajectoryKind::inertial
             ? Trajectory::inertial(rapidity)
             : Trajectory::accelerated(acceleration);
}

namespace {

void require(bool ok, const std::string& field, const std::string& message) {
  if (!ok) throw ConfigError(field, message);
}

template <class F>
void construct(const std::string& field, F&& f) {
  try {
    f();
  } catch (const std::domain_error& e) {
    throw ConfigError(field, e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(field, e.what());
  }
}

}  // namespace

void PhysicsBlock::validate(const std::string& prefix) const {
  const std::string p = prefix + ".";
  require(std::isfinite(L) && L > 0.0, p + "cavity.L", "must be finite and > 0");
  require(std::isfinite(gap), p + "detector.gap", "must be finite");
  require(std::isfinite(coupling) && coupling >= 0.0, p + "detector.coupling",
          "must be finite and >= 0");
  require(std::isfinite(sigma) && sigma > 0.0, p + "switching.sigma",
          "must be finite and > 0");
  require(std::isfinite(tau0), p + "switching.tau0", "must be finite");
  if (trajectory == TrajectoryKind::inertial) {
    require(std::isfinite(rapidity), p + "trajectory.rapidity", "must be finite");
  } else {
    require(std::isfinite(acceleration) && acceleration > 0.0,
            p + "trajectory.acceleration", "must be finite and > 0");
  }
  construct(p + "cavity", [&] { (void)cavity(); });
  construct(p + "detector", [&] { (void)detector(); });
  construct(p + "detector.initial", [&] { (void)initial_state(); });
  construct(p + "zero_mode", [&] { (void)zero_mode(); });
  construct(p + "trajectory", [&] { (void)worldline(); });
  construct(p + "switching", [&] { (void)switching(); });
}

SumSpec NumericsSpec::sum_spec() const {
  SumSpec s;
  s.abs_tol = abs_tol;
  s.rel_tol = rel_tol;
  s.max_terms = max_terms;
  return s;
}

const std::vector<std::string>& sweep_axes() {
  static const std::vector<std::string> axes = {
      "L",     "gap",  "coupling", "sigma",  "tau0",   "rapidity",
      "acceleration", "pp", "qq",  "mean_q", "mean_p", "gamma"};
  return axes;
}

void set_axis(PhysicsBlock& p, const std::string& axis, double v) {
  if (axis == "L") p.L = v;
  else if (axis == "gap") p.gap = v;
  else if (axis == "coupling") p.coupling = v;
  else if (axis == "sigma") p.sigma = v;
  else if (axis == "tau0") p.tau0 = v;
  else if (axis == "rapidity") p.rapidity = v;
  else if (axis == "acceleration") p.acceleration = v;
  else if (axis == "pp") p.pp = v;
  else if (axis == "qq") p.qq = v;
  else if (axis == "mean_q") p.mean_q = v;
  else if (axis == "mean_p") p.mean_p = v;
  else if (axis == "gamma") {
    p.qq = 0.5 / v;
    p.pp = 0.5 * v;
    p.qp = Complex(0.0, 0.5);
    p.mean_q = p.mean_p = 0.0;
  } else {
    throw ConfigError("sweep.axis", "unknown axis '" + axis + "'");
  }
}

namespace {

// ---- JSON reading -------------------------------------------------------

const json& object_at(const json& parent, const char* key,
                      const std::string& path) {
  const auto it = parent.find(key);
  if (it == parent.end()) throw ConfigError(path + key, "missing object");
  if (!it->is_object()) throw ConfigError(path + key, "expected an object");
  return *it;
}

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    const bool known = std::any_of(allowed.begin(), allowed.end(),
                                   [&](const char* k) { return item.key() == k; });
    if (!known) throw ConfigError(path + item.key(), "unknown field");
  }
}

double number(const json& obj, const char* key, const std::string& path,
              double fallback, bool required = false) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    if (required) throw ConfigError(path + key, "missing number");
    return fallback;
  }
  if (!it->is_number()) throw ConfigError(path + key, "expected a number");
  const double v = it->get<double>();
  if (!std::isfinite(v)) throw ConfigError(path + key, "must be finite");
  return v;
}

Complex complex_at(const json& obj, const char* key, const std::string& path,
                   Complex fallback) {
  const auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_array() || it->size() != 2 || !(*it)[0].is_number() ||
      !(*it)[1].is_number()) {
    throw ConfigError(path + key, "expected [re, im]");
  }
  return {(*it)[0].get<double>(), (*it)[1].get<double>()};
}

std::string string_at(const json& obj, const char* key, const std::string& path,
                      const std::string& fallback, bool required = false) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    if (required) throw ConfigError(path + key, "missing string");
    return fallback;
  }
  if (!it->is_string()) throw ConfigError(path + key, "expected a string");
  return it->get<std::string>();
}

template <class E>
E enum_at(const json& obj, const char* key, const std::string& path, E fallback,
          std::initializer_list<std::pair<const char*, E>> names,
          bool required = false) {
  const auto it = obj.find(key);
  if (it == obj.end() && !required) return fallback;
  const std::string v = string_at(obj, key, path, "", required);
  for (const auto& [name, value] : names) {
    if (v == name) return value;
  }
  std::string allowed;
  for (const auto& n : names) allowed += (allowed.empty() ? "" : ", ") + std::string(n.first);
  throw ConfigError(path + key, "'" + v + "' is not one of {" + allowed + "}");
}

constexpr std::initializer_list<std::pair<const char*, ScenarioKind>> kKinds = {
    {"evolve", ScenarioKind::evolve},
    {"response", ScenarioKind::response},
    {"sweep", ScenarioKind::sweep}};
constexpr std::initializer_list<std::pair<const char*, Quantity>> kQuantities = {
    {"response", Quantity::response},
    {"relative_strength", Quantity::relative_strength},
    {"minkowski_gap", Quantity::minkowski_gap},
    {"density", Quantity::density}};
constexpr std::initializer_list<std::pair<const char*, OutputFormat>> kFormats = {
    {"csv", OutputFormat::csv}, {"json", OutputFormat::json}};
constexpr std::initializer_list<std::pair<const char*, TrajectoryKind>> kTraj = {
    {"inertial", TrajectoryKind::inertial},
    {"accelerated", TrajectoryKind::accelerated}};

template <class E>
const char* name_of(E v, std::initializer_list<std::pair<const char*, E>> names) {
  for (const auto& [n, e] : names) {
    if (e == v) return n;
  }
  return "";
}

PhysicsBlock parse_physics(const json& j) {
  const std::string root = "physics.";
  check_keys(j, root,
             {"cavity", "detector", "zero_mode", "trajectory", "switching"});
  PhysicsBlock p;

  const json& cav = object_at(j, "cavity", root);
  check_keys(cav, root + "cavity.", {"L"});
  p.L = number(cav, "L", root + "cavity.", 0.0, true);

  const json& det = object_at(j, "detector", root);
  check_keys(det, root + "detector.", {"gap", "coupling", "initial"});
  p.gap = number(det, "gap", root + "detector.", 0.0, true);
  p.coupling = number(det, "coupling", root + "detector.", p.coupling);
  if (det.contains("initial")) {
    const std::string ip = root + "detector.initial.";
    const json& ini = object_at(det, "initial", root + "detector.");
    check_keys(ini, ip, {"a", "b"});
    p.rho_a = number(ini, "a", ip, p.rho_a);
    p.rho_b = complex_at(ini, "b", ip, p.rho_b);
  }

  if (j.contains("zero_mode")) {
    const std::string zp = root + "zero_mode.";
    const json& zm = object_at(j, "zero_mode", root);
    if (zm.contains("gamma")) {
      check_keys(zm, zp, {"gamma"});
      const double g = number(zm, "gamma", zp, 0.0, true);
      require(g > 0.0, zp + "gamma", "must be > 0");
      set_axis(p, "gamma", g);
    } else {
      check_keys(zm, zp, {"mean_q", "mean_p", "qq", "pp", "qp"});
      p.mean_q = number(zm, "mean_q", zp, 0.0);
      p.mean_p = number(zm, "mean_p", zp, 0.0);
      p.qq = number(zm, "qq", zp, 0.0, true);
      p.pp = number(zm, "pp", zp, 0.0, true);
      p.qp = complex_at(zm, "qp", zp, p.qp);
    }
  }

  const json& tr = object_at(j, "trajectory", root);
  const std::string tp = root + "trajectory.";
  p.trajectory = enum_at(tr, "kind", tp, TrajectoryKind::inertial, kTraj, true);
  if (p.trajectory == TrajectoryKind::inertial) {
    check_keys(tr, tp, {"kind", "rapidity"});
    p.rapidity = number(tr, "rapidity", tp, 0.0);
  } else {
    check_keys(tr, tp, {"kind", "acceleration"});
    p.acceleration = number(tr, "acceleration", tp, 0.0, true);
  }

  const json& sw = object_at(j, "switching", root);
  check_keys(sw, root + "switching.", {"sigma", "tau0"});
  p.sigma = number(sw, "sigma", root + "switching.", 0.0, true);
  p.tau0 = number(sw, "tau0", root + "switching.", 0.0);
  return p;
}

int line_of(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + byte, '\n'));
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("malformed JSON: ") + e.what(),
                      line_of(text, e.byte > 0 ? e.byte - 1 : 0));
  }
  if (!j.is_object()) throw ConfigError("", "top level must be an object", 1);
  check_keys(j, "", {"kind", "physics", "quantity", "sweep", "numerics", "output"});

  Scenario s;
  s.kind = enum_at(j, "kind", "", ScenarioKind::response, kKinds, true);
  s.physics = parse_physics(object_at(j, "physics", ""));
  s.quantity = enum_at(j, "quantity", "", Quantity::response, kQuantities);

  if (j.contains("sweep")) {
    const json& sw = object_at(j, "sweep", "");
    check_keys(sw, "sweep.", {"axis", "values"});
    SweepSpec spec;
    spec.axis = string_at(sw, "axis", "sweep.", "", true);
    const auto it = sw.find("values");
    if (it == sw.end() || !it->is_array()) {
      throw ConfigError("sweep.values", "expected an array of numbers");
    }
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& v = (*it)[i];
      const std::string f = "sweep.values[" + std::to_string(i) + "]";
      if (!v.is_number()) throw ConfigError(f, "expected a number");
      spec.values.push_back(v.get<double>());
    }
    s.sweep = spec;
  }

  if (j.contains("numerics")) {
    const json& nm = object_at(j, "numerics", "");
    check_keys(nm, "numerics.", {"abs_tol", "rel_tol", "max_terms"});
    s.numerics.abs_tol = number(nm, "abs_tol", "numerics.", s.numerics.abs_tol);
    s.numerics.rel_tol = number(nm, "rel_tol", "numerics.", s.numerics.rel_tol);
    if (nm.contains("max_terms")) {
      if (!nm["max_terms"].is_number_integer()) {
        throw ConfigError("numerics.max_terms", "expected an integer");
      }
      s.numerics.max_terms = nm["max_terms"].get<long>();
    }
  }

  const json& out = object_at(j, "output", "");
  check_keys(out, "output.", {"path", "format"});
  s.output.path = string_at(out, "path", "output.", "", true);
  s.output.format = enum_at(out, "format", "output.", OutputFormat::csv, kFormats);
  validate(s);
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("", "cannot read config '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

void validate(const Scenario& s) {
  require(s.numerics.abs_tol > 0.0, "numerics.abs_tol", "must be > 0");
  require(s.numerics.rel_tol >= 0.0, "numerics.rel_tol", "must be >= 0");
  require(s.numerics.max_terms >= 1, "numerics.max_terms", "must be >= 1");
  require(!s.output.path.empty(), "output.path", "must not be empty");
  s.physics.validate();

  const PhysicsBlock& p = s.physics;
  const bool inertial = p.trajectory == TrajectoryKind::inertial;
  if (s.kind == ScenarioKind::sweep) {
    require(s.sweep.has_value(), "sweep", "required when kind is 'sweep'");
  } else {
    require(!s.sweep.has_value(), "sweep", "only allowed when kind is 'sweep'");
    require(s.quantity == Quantity::response, "quantity",
            "only allowed when kind is 'sweep'");
  }
  if (s.kind == ScenarioKind::evolve ||
      (s.kind == ScenarioKind::sweep && s.quantity == Quantity::density)) {
    require(inertial, "physics.trajectory.kind",
            "density evolution needs an inertial trajectory");
  }
  if (s.kind == ScenarioKind::sweep && s.quantity == Quantity::minkowski_gap) {
    require(!inertial, "physics.trajectory.kind",
            "minkowski_gap needs an accelerated trajectory");
  }

  if (!s.sweep) return;
  const auto& axes = sweep_axes();
  require(std::find(axes.begin(), axes.end(), s.sweep->axis) != axes.end(),
          "sweep.axis", "unknown axis '" + s.sweep->axis + "'");
  require(!s.sweep->values.empty(), "sweep.values", "must not be empty");
  for (std::size_t i = 0; i < s.sweep->values.size(); ++i) {
    const std::string f = "sweep.values[" + std::to_string(i) + "]";
    const double v = s.sweep->values[i];
    require(std::isfinite(v), f, "must be finite");
    if (s.sweep->axis == "gamma") require(v > 0.0, f, "must be > 0");
    PhysicsBlock q = p;
    set_axis(q, s.sweep->axis, v);
    try {
      q.validate();
    } catch (const ConfigError& e) {
      throw ConfigError(f, e.what());
    }
    if (s.quantity == Quantity::relative_strength) {
      require(inertial && q.rapidity == 0.0 && q.tau0 == 0.0, f,
              "relative_strength needs a static detector with tau0 = 0");
      require(q.mean_q == 0.0 && q.mean_p == 0.0 && q.qp.real() == 0.0 &&
                  std::abs(4.0 * q.qq * q.pp - 1.0) <= 1e-12,
              f, "relative_strength needs a squeezed-vacuum zero mode (use gamma)");
      require(q.gap != 0.0, f, "relative_strength needs gap != 0");
    }
  }
}

json to_json(const Scenario& s) {
  const PhysicsBlock& p = s.physics;
  json traj = {{"kind", name_of(p.trajectory, kTraj)}};
  if (p.trajectory == TrajectoryKind::inertial) {
    traj["rapidity"] = p.rapidity;
  } else {
    traj["acceleration"] = p.acceleration;
  }
  json j = {
      {"kind", name_of(s.kind, kKinds)},
      {"physics",
       {{"cavity", {{"L", p.L}}},
        {"detector",
         {{"gap", p.gap},
          {"coupling", p.coupling},
          {"initial", {{"a", p.rho_a}, {"b", {p.rho_b.real(), p.rho_b.imag()}}}}}},
        {"zero_mode",
         {{"mean_q", p.mean_q},
          {"mean_p", p.mean_p},
          {"qq", p.qq},
          {"pp", p.pp},
          {"qp", {p.qp.real(), p.qp.imag()}}}},
        {"trajectory", traj},
        {"switching", {{"sigma", p.sigma}, {"tau0", p.tau0}}}}},
      {"numerics",
       {{"abs_tol", s.numerics.abs_tol},
        {"rel_tol", s.numerics.rel_tol},
        {"max_terms", s.numerics.max_terms}}},
      {"output", {{"path", s.output.path}, {"format", name_of(s.output.format, kFormats)}}}};
  if (s.kind == ScenarioKind::sweep) {
    j["quantity"] = name_of(s.quantity, kQuantities);
  }
  if (s.sweep) j["sweep"] = {{"axis", s.sweep->axis}, {"values", s.sweep->values}};
  return j;
}

// ---- evaluation ---------------------------------------------------------

namespace {

struct PointResult {
  std::vector<std::pair<std::string, double>> entries;
  double tail = 0.0;
  std::string status = "ok";
  std::string message;
};

double zm_response(const PhysicsBlock& p) {
  if (p.trajectory == TrajectoryKind::accelerated) {
    return response_zm_accelerated(p.gap, p.acceleration, p.cavity(),
                                   p.switching(), p.zero_mode());
  }
  return response_zm_general(p.zero_mode(), p.worldline(), p.switching(),
                             p.cavity(), p.gap);
}

ResponseBreakdown response_of(const PhysicsBlock& p, const SumSpec& sum) {
  if (p.trajectory == TrajectoryKind::accelerated) {
    return response_accelerated(p.gap, p.acceleration, p.cavity(),
                                p.switching(), p.zero_mode(), sum);
  }
  return response_inertial(p.gap, p.rapidity, p.cavity(), p.switching(),
                           p.zero_mode(), sum);
}

PointResult evaluate(const PhysicsBlock& p, Quantity q, const SumSpec& sum) {
  PointResult r;
  try {
    switch (q) {
      case Quantity::response: {
        const ResponseBreakdown b = response_of(p, sum);
        r.entries = {{"f_osc", b.f_osc}, {"f_zm", b.f_zm}, {"total", b.total()}};
        r.tail = b.tail_estimate;
        break;
      }
      case Quantity::relative_strength: {
        const double g = 2.0 * p.pp;
        r.entries = {
            {"S_plus", relative_strength_S(Sign::plus, g, p.detector(),
                                           p.switching(), p.cavity(), sum)},
            {"S_minus", relative_strength_S(Sign::minus, g, p.detector(),
                                            p.switching(), p.cavity(), sum)}};
        break;
      }
      case Quantity::minkowski_gap: {
        const double fm = response_mink_accel(p.gap, p.acceleration, p.switching());
        const ResponseBreakdown b = response_of(p, sum);
        r.entries = {{"f_mink", fm},
                     {"f_osc", b.f_osc},
                     {"gap", std::abs(fm - b.f_osc) / fm}};
        r.tail = b.tail_estimate;
        break;
      }
      case Quantity::density: {
        const Evolution ev =
            evolve_density(p.initial_state(), p.detector(), p.zero_mode(),
                           p.worldline(), p.switching(), p.cavity(), sum);
        r.entries = {{"rho_gg", ev.rho(0, 0).real()},
                     {"rho_ge_re", ev.rho(0, 1).real()},
                     {"rho_ge_im", ev.rho(0, 1).imag()},
                     {"rho_ee", ev.rho(1, 1).real()}};
        break;
      }
    }
  } catch (const ConvergenceError& e) {
    r.status = "nonconverged";
    r.message = e.what();
    r.tail = e.achieved_tolerance();
    const double part = e.partial_value().real();
    if (q == Quantity::response) {
      const double zm = zm_response(p);
      r.entries = {{"f_osc", part}, {"f_zm", zm}, {"total", part + zm}};
    } else {
      r.entries = {{"partial", part}};
    }
  } catch (const UnderflowError& e) {
    r.status = "underflow";
    r.message = e.what();
    r.entries = {{"value", std::numeric_limits<double>::quiet_NaN()}};
  }
  return r;
}

const char* part_label(const DensityContribution& c) {
  if (c.source == Source::osc) return "osc_lambda2";
  return c.order == Order::lambda1 ? "zm_lambda1" : "zm_lambda2";
}

Table evolve_table(const Scenario& s, ExitCode& code, std::ostream& log) {
  const PhysicsBlock& p = s.physics;
  Table t;
  t.columns = {"part", "row", "col", "re", "im"};
  t.units = {"label", "basis", "basis", "dimensionless", "dimensionless"};
  auto add = [&](const std::string& label, const Matrix2& m) {
    const char* basis[2] = {"g", "e"};
    for (int i = 0; i < 2; ++i) {
      for (int k = 0; k < 2; ++k) {
        t.rows.push_back({label, basis[i], basis[k], format_number(m(i, k).real()),
                          format_number(m(i, k).imag())});
      }
    }
  };
  try {
    const Evolution ev =
        evolve_density(p.initial_state(), p.detector(), p.zero_mode(),
                       p.worldline(), p.switching(), p.cavity(),
                       s.numerics.sum_spec());
    add("total", ev.rho);
    for (const auto& c : ev.parts) add(part_label(c), c.matrix);
  } catch (const ConvergenceError& e) {
    log << "error: " << e.what() << " (tail estimate "
        << format_number(e.achieved_tolerance()) << ")\n";
    code = ExitCode::numerical;
    t.rows.push_back({"partial", "-", "-", format_number(e.partial_value().real()),
                      format_number(e.partial_value().imag())});
  }
  return t;
}

Table response_table(const Scenario& s, ExitCode& code, std::ostream& log) {
  const PhysicsBlock& p = s.physics;
  Table t;
  t.columns = {"omega", "f_osc", "f_zm", "total", "terms_used", "tail_estimate", "status"};
  t.units = {"1/length", "dimensionless", "dimensionless", "dimensionless",
             "count", "dimensionless", "label"};
  try {
    const ResponseBreakdown b = response_of(p, s.numerics.sum_spec());
    t.rows.push_back({format_number(p.gap), format_number(b.f_osc),
                      format_number(b.f_zm), format_number(b.total()),
                      format_number(b.terms_used), format_number(b.tail_estimate),
                      "ok"});
  } catch (const ConvergenceError& e) {
    log << "error: " << e.what() << '\n';
    code = ExitCode::numerical;
    const double part = e.partial_value().real();
    const double zm = zm_response(p);
    t.rows.push_back({format_number(p.gap), format_number(part), format_number(zm),
                      format_number(part + zm), format_number(e.work()),
                      format_number(e.achieved_tolerance()), "nonconverged"});
  }
  return t;
}

Table sweep_table(const Scenario& s, int threads, ExitCode& code,
                  std::ostream& log) {
  const SweepSpec& sw = *s.sweep;
  const SumSpec sum = s.numerics.sum_spec();
  const auto results = parallel_map(sw.values.size(), threads, [&](std::size_t i) {
    PhysicsBlock p = s.physics;
    set_axis(p, sw.axis, sw.values[i]);
    return evaluate(p, s.quantity, sum);
  });
  Table t;
  t.columns = {sw.axis, "series", "value", "tail_estimate", "status"};
  t.units = {"parameter", "label", "dimensionless", "dimensionless", "label"};
  for (std::size_t i = 0; i < results.size(); ++i) {
    const PointResult& r = results[i];
    if (r.status != "ok") {
      code = ExitCode::numerical;
      log << "error: " << sw.axis << "=" << format_number(sw.values[i]) << ": "
          << r.message << '\n';
    }
    for (const auto& [series, value] : r.entries) {
      t.rows.push_back({format_number(sw.values[i]), series, format_number(value),
                        format_number(r.tail), r.status});
    }
  }
  return t;
}

void write_output(const Scenario& s, const Table& t, ExitCode code) {
  json meta = {{"scenario", to_json(s)},
               {"version", "0.1.0"},
               {"exit_code", static_cast<int>(code)}};
  auto save_json = [](const std::string& path, const json& j) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("output.path", "cannot open '" + path + "' for writing");
    out << j.dump(2) << '\n';
  };
  if (s.output.format == OutputFormat::csv) {
    t.save(s.output.path);
    save_json(s.output.path + ".meta.json", meta);
  } else {
    meta["columns"] = t.columns;
    meta["units"] = t.units;
    meta["rows"] = t.rows;
    save_json(s.output.path, meta);
  }
}

}  // namespace

ExitCode run_scenario(Scenario s, const RunOptions& opts, std::ostream& log) {
  if (opts.tol) s.numerics.rel_tol = *opts.tol;
  if (opts.max_terms) s.numerics.max_terms = *opts.max_terms;
  validate(s);
  ExitCode code = ExitCode::ok;
  Table t;
  switch (s.kind) {
    case ScenarioKind::evolve:
      t = evolve_table(s, code, log);
      break;
    case ScenarioKind::response:
      t = response_table(s, code, log);
      break;
    case ScenarioKind::sweep:
      t = sweep_table(s, opts.threads, code, log);
      break;
  }
  write_output(s, t, code);
  return code;
}

}  // namespace cavity_udw::cli
