// Copyright 2026 The mfspec Authors.
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

// mfspec command-line front end. Talks to the library only through mfspec.h.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "mfspec/mfspec.h"

#ifndef MFSPEC_DEFAULT_SYSTEMS
#define MFSPEC_DEFAULT_SYSTEMS "systems"
#endif

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kInputError = 2, kInvalidSystem = 3, kConditionViolated = 4 };

struct Failure {
  mfspec_status status;
  std::string message;
};

int exit_code(mfspec_status s) {
  switch (s) {
    case MFSPEC_OK: return kOk;
    case MFSPEC_NOT_IRREDUCIBLE:
    case MFSPEC_EMPTY_ROW:
    case MFSPEC_NOT_MARKOV: return kInvalidSystem;
    case MFSPEC_CONDITION_Q_VIOLATED:
    case MFSPEC_CONDITION_P_VIOLATED: return kConditionViolated;
    default: return kInputError;
  }
}

Failure input_error(const std::string& message) {
  return Failure{MFSPEC_INVALID_ARGUMENT, "InvalidArgument: " + message};
}

void check(mfspec_status s) {
  if (s != MFSPEC_OK) throw Failure{s, mfspec_last_error()};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string t; std::getline(ss, t, sep);) out.push_back(t);
  return out;
}

double number(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw input_error("not a number: '" + s + "'");
  return v;
}

int integer(const std::string& s) {
  const double v = number(s);
  if (v != std::floor(v) || v < 1) throw input_error("expected a positive integer: '" + s + "'");
  return static_cast<int>(v);
}

// "A" or "A:B:STEP", inclusive of B.
std::vector<double> axis(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() == 1) return {number(parts[0])};
  if (parts.size() != 3) throw input_error("alpha axis must be A or A:B:STEP, got '" + spec + "'");
  const double a = number(parts[0]);
  const double b = number(parts[1]);
  const double step = number(parts[2]);
  if (!(step > 0.0)) throw input_error("grid step must be positive");
  if (b < a) throw input_error("grid end lies below its start");
  const auto count = static_cast<long>(std::floor((b - a) / step + 1e-9)) + 1;
  std::vector<double> out;
  for (long i = 0; i < count; ++i) out.push_back(a + static_cast<double>(i) * step);
  return out;
}

// Cartesian product of the comma-separated axes, last axis fastest.
std::vector<std::vector<double>> grid(const std::string& spec) {
  std::vector<std::vector<double>> axes;
  for (const auto& a : split(spec, ',')) axes.push_back(axis(a));
  if (axes.empty()) throw input_error("empty alpha grid");
  std::vector<std::vector<double>> out{{}};
  for (const auto& ax : axes) {
    std::vector<std::vector<double>> next;
    for (const auto& prefix : out) {
      for (double v : ax) {
        next.push_back(prefix);
        next.back().push_back(v);
      }
    }
    out = std::move(next);
  }
  return out;
}

std::string real(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

std::string coordinate(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

const char* status_name(mfspec_point_status s) {
  switch (s) {
    case MFSPEC_INTERIOR: return "Interior";
    case MFSPEC_BOUNDARY: return "Boundary";
    case MFSPEC_OUTSIDE: return "Outside";
    default: return "Undefined";
  }
}

struct System {
  mfspec_system* handle = nullptr;
  explicit System(const std::string& path) { check(mfspec_system_load(path.c_str(), &handle)); }
  ~System() { mfspec_system_free(handle); }
  System(const System&) = delete;
  System& operator=(const System&) = delete;
};

// Potential name lists as C arrays.
struct Level {
  std::vector<std::string> phi_names;
  std::vector<std::string> psi_names;
  std::vector<const char*> phi;
  std::vector<const char*> psi;
  std::string xi;
  mfspec_level level{};

  Level(const std::string& phi_list, const std::string& psi_list, const std::string& xi_name)
      : phi_names(split(phi_list, ',')), psi_names(split(psi_list, ',')), xi(xi_name) {
    if (phi_names.empty()) throw input_error("--potential is required");
    if (psi_names.empty()) psi_names.assign(phi_names.size(), "one");
    if (psi_names.size() != phi_names.size()) {
      throw input_error("--potential and --psi list different numbers of names");
    }
    for (const auto& s : phi_names) phi.push_back(s.c_str());
    for (const auto& s : psi_names) psi.push_back(s.c_str());
    level = mfspec_level{phi.data(), psi.data(), phi.size(), xi.c_str()};
  }
  Level(const Level&) = delete;
  Level& operator=(const Level&) = delete;
};

// Evaluates rows on a worker pool; rows come back in index order. The first
// failing row (by index) is rethrown.
std::vector<std::string> evaluate_rows(std::size_t count, const std::function<std::string(std::size_t)>& row) {
  std::vector<std::string> out(count);
  std::vector<std::optional<Failure>> errors(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i] = row(i);
      } catch (const Failure& f) {
        errors[i] = f;
      } catch (const std::exception& e) {
        errors[i] = Failure{MFSPEC_INTERNAL_ERROR, std::string("InternalError: ") + e.what()};
      }
    }
  };
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(count, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) throw *e;
  }
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw input_error("cannot write '" + path + "'");
  f << text;
}

std::string spectrum_header(std::size_t d, bool argmin) {
  std::string h;
  for (std::size_t i = 1; i <= d; ++i) h += "alpha_" + std::to_string(i) + ",";
  h += "value,status";
  if (argmin) {
    for (std::size_t i = 1; i <= d; ++i) h += ",argmin_q_" + std::to_string(i);
  }
  return h + ",iterations\n";
}

std::string spectrum_row(const std::vector<double>& alpha, const mfspec_point& pt, const std::vector<double>& q,
                         bool argmin) {
  std::string r;
  for (double a : alpha) r += coordinate(a) + ",";
  r += real(pt.value) + "," + status_name(pt.status);
  if (argmin) {
    for (double v : q) r += "," + (pt.has_argmin ? real(v) : std::string());
  }
  return r + "," + std::to_string(pt.iterations) + "\n";
}

struct Options {
  std::string system;
  std::string potential;
  std::string psi;
  std::string xi = "zero";
  std::string alpha;
  std::string gamma;
  std::string n;
  int order = 1;
  std::string out;
  std::vector<std::string> tol;
  int criterion = 0;
  bool table = false;
};

int cmd_pressure(const Options& o) {
  System sys(o.system);
  const std::string name = o.potential.empty() ? "zero" : o.potential;
  std::string text;
  if (o.n.empty()) {
    double v = 0.0;
    check(mfspec_pressure(sys.handle, name.c_str(), &v));
    text = real(v) + "\n";
  } else {
    text = "n,value\n";
    for (const auto& s : split(o.n, ',')) {
      double v = 0.0;
      check(mfspec_cover_pressure(sys.handle, name.c_str(), integer(s), &v));
      text += s + "," + real(v) + "\n";
    }
  }
  emit(text, o.out);
  return kOk;
}

using PointFn = std::function<mfspec_status(const mfspec_system*, const mfspec_level*, const double*, mfspec_point*,
                                            double*)>;

int sweep(const Options& o, const PointFn& fn, bool argmin, std::size_t dim_override = 0) {
  System sys(o.system);
  Level level(o.potential, o.psi, o.xi);
  if (o.alpha.empty()) throw input_error("--alpha is required");
  const auto points = grid(o.alpha);
  const std::size_t d = dim_override != 0 ? dim_override : level.level.dim;
  for (const auto& p : points) {
    if (p.size() != d) {
      throw input_error("--alpha has " + std::to_string(p.size()) + " axes, expected " +
                                                 std::to_string(d));
    }
  }
  const auto rows = evaluate_rows(points.size(), [&](std::size_t i) {
    mfspec_point pt{};
    std::vector<double> q(d, 0.0);
    check(fn(sys.handle, &level.level, points[i].data(), &pt, q.data()));
    return spectrum_row(points[i], pt, q, argmin);
  });
  std::string text = spectrum_header(d, argmin);
  for (const auto& r : rows) text += r;
  emit(text, o.out);
  return kOk;
}

int cmd_spectrum(const Options& o) {
  return sweep(o, [](auto s, auto l, auto a, auto p, auto q) { return mfspec_predicted(s, l, a, p, q); }, true);
}

int cmd_cvp(const Options& o) {
  const int order = o.order;
  return sweep(
      o, [order](auto s, auto l, auto a, auto p, auto) { return mfspec_conditional(s, l, a, order, p); }, true);
}

int cmd_dimension(const Options& o, mfspec_dimension_kind kind) {
  const int order = o.order;
  Options opts = o;
  if (kind == MFSPEC_DIM_LYAPUNOV && opts.potential.empty()) opts.potential = "log_derivative";
  const std::size_t scalar =
      kind == MFSPEC_DIM_LYAPUNOV || kind == MFSPEC_DIM_BIRKHOFF || kind == MFSPEC_DIM_POINTWISE ||
              kind == MFSPEC_DIM_ENTROPY
          ? 1
          : 0;
  return sweep(
      opts,
      [kind, order](auto s, auto l, auto a, auto p, auto q) { return mfspec_dimension(s, kind, l, a, order, p, q); },
      true, scalar);
}

int cmd_coarse(const Options& o) {
  System sys(o.system);
  Level level(o.potential, o.psi, o.xi);
  if (o.alpha.empty() || o.gamma.empty() || o.n.empty()) {
    throw input_error("coarse needs --alpha, --gamma and --n");
  }
  struct Row {
    std::vector<double> alpha;
    double gamma;
    int n;
  };
  std::vector<Row> rows;
  for (const auto& a : grid(o.alpha)) {
    if (a.size() != level.level.dim) throw input_error("--alpha axes differ from --potential");
    for (const auto& g : split(o.gamma, ',')) {
      for (double gamma : axis(g)) {
        for (const auto& n : split(o.n, ',')) rows.push_back({a, gamma, integer(n)});
      }
    }
  }
  const auto out = evaluate_rows(rows.size(), [&](std::size_t i) {
    double v = 0.0;
    check(mfspec_coarse(sys.handle, &level.level, rows[i].alpha.data(), rows[i].gamma, rows[i].n, &v));
    std::string r;
    for (double a : rows[i].alpha) r += coordinate(a) + ",";
    return r + coordinate(rows[i].gamma) + "," + std::to_string(rows[i].n) + "," + real(v) + "\n";
  });
  std::string text;
  for (std::size_t i = 1; i <= level.level.dim; ++i) text += "alpha_" + std::to_string(i) + ",";
  text += "gamma,n,value\n";
  for (const auto& r : out) text += r;
  emit(text, o.out);
  return kOk;
}

int cmd_domain(const Options& o) {
  System sys(o.system);
  Level level(o.potential, o.psi, o.xi);
  char* json = nullptr;
  check(mfspec_domain(sys.handle, &level.level, &json));
  const std::string text = std::string(json) + "\n";
  mfspec_string_free(json);
  emit(text, o.out);
  return kOk;
}

int cmd_verify(const Options& o) {
  std::vector<const char*> tol;
  for (const auto& t : o.tol) tol.push_back(t.c_str());
  int passed = 0;
  char* summary = nullptr;
  char* table = nullptr;
  char* json = nullptr;
  const std::string dir = o.system.empty() ? MFSPEC_DEFAULT_SYSTEMS : o.system;
  check(mfspec_verify(dir.c_str(), tol.data(), tol.size(), o.criterion, &passed, &summary, &table,
                      o.out.empty() ? nullptr : &json));
  if (o.table) std::cout << table << "\n";
  std::cout << summary;
  std::cout << (passed ? "verify: all criteria passed\n" : "verify: some criteria failed\n");
  mfspec_string_free(summary);
  mfspec_string_free(table);
  if (json != nullptr) {
    const std::string text = std::string(json) + "\n";
    mfspec_string_free(json);
    emit(text, o.out);
  }
  return passed ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multifractal spectra of subshifts of finite type"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(mfspec_version()));
  Options o;

  auto system_flag = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--system", o.system, "System JSON file");
    if (required) opt->required();
  };
  auto level_flags = [&](CLI::App* c) {
    c->add_option("--potential", o.potential, "Numerator potential names, comma-separated");
    c->add_option("--psi", o.psi, "Denominator potential names (default: one)");
    c->add_option("--xi", o.xi, "Weight potential (default: zero)");
    c->add_option("--alpha", o.alpha, "Grid per axis, A or A:B:STEP, axes comma-separated");
    c->add_option("--out", o.out, "Output file (default: stdout)");
  };

  auto* pressure = app.add_subcommand("pressure", "Topological pressure of a potential");
  system_flag(pressure, true);
  pressure->add_option("--potential", o.potential, "Potential name (default: zero)");
  pressure->add_option("--n", o.n, "Cover orders, comma-separated, for finite-n estimates");
  pressure->add_option("--out", o.out, "Output file");

  auto* spectrum = app.add_subcommand("spectrum", "Level-set spectrum inf_q P(<q, Phi - alpha Psi> + xi)");
  system_flag(spectrum, true);
  level_flags(spectrum);

  auto* coarse = app.add_subcommand("coarse", "Finite-n box-counting spectrum");
  system_flag(coarse, true);
  level_flags(coarse);
  coarse->add_option("--gamma", o.gamma, "Box half-widths, comma-separated or A:B:STEP");
  coarse->add_option("--n", o.n, "Word lengths, comma-separated");

  auto* cvp = app.add_subcommand("cvp", "Conditional variational principle over Markov measures");
  system_flag(cvp, true);
  level_flags(cvp);
  cvp->add_option("--order", o.order, "Markov order")->check(CLI::PositiveNumber);

  auto* dimension = app.add_subcommand("dimension", "Dimension spectra");
  dimension->require_subcommand(1);
  const std::pair<const char*, mfspec_dimension_kind> kinds[] = {
      {"lyapunov", MFSPEC_DIM_LYAPUNOV},         {"birkhoff", MFSPEC_DIM_BIRKHOFF},
      {"pointwise", MFSPEC_DIM_POINTWISE},       {"u-dimension", MFSPEC_DIM_U_DIMENSION},
      {"entropy", MFSPEC_DIM_ENTROPY},           {"local-entropy", MFSPEC_DIM_LOCAL_ENTROPY},
      {"conditional", MFSPEC_DIM_CONDITIONAL}};
  std::vector<std::pair<CLI::App*, mfspec_dimension_kind>> dim_cmds;
  for (const auto& [name, kind] : kinds) {
    auto* c = dimension->add_subcommand(name, std::string(name) + " spectrum");
    system_flag(c, true);
    level_flags(c);
    c->add_option("--order", o.order, "Markov order")->check(CLI::PositiveNumber);
    dim_cmds.emplace_back(c, kind);
  }

  auto* domain = app.add_subcommand("domain", "Domain of the level-set spectrum as JSON");
  system_flag(domain, true);
  level_flags(domain);

  auto* verify = app.add_subcommand("verify", "Run the acceptance criteria");
  verify->add_option("--system", o.system, "Directory holding the bundled systems");
  verify->add_option("--tol", o.tol, "Tolerance override, NAME=T or T for all; repeatable");
  verify->add_option("--criterion", o.criterion, "Run one criterion (1-11)")->check(CLI::Range(0, 11));
  verify->add_flag("--table", o.table, "Print every check");
  verify->add_option("--out", o.out, "JSON report file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*pressure) return cmd_pressure(o);
    if (*spectrum) return cmd_spectrum(o);
    if (*coarse) return cmd_coarse(o);
    if (*cvp) return cmd_cvp(o);
    if (*domain) return cmd_domain(o);
    if (*verify) return cmd_verify(o);
    for (const auto& [c, kind] : dim_cmds) {
      if (*c) return cmd_dimension(o, kind);
    }
  } catch (const Failure& f) {
    std::cerr << "mfspec: " << f.message << "\n";
    return exit_code(f.status);
  }
  return kInputError;
}
