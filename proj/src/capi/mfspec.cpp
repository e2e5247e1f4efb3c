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

#include "mfspec/mfspec.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "json.hpp"

#include "core/conditional.hpp"
#include "core/dimension.hpp"
#include "core/error.hpp"
#include "core/pressure.hpp"
#include "core/spectra.hpp"
#include "io/system_io.hpp"
#include "verify/verify.hpp"

struct mfspec_system {
  mfspec::System system;
};

namespace {

using mfspec::ErrorCode;

thread_local std::string last_error;

mfspec_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return MFSPEC_INVALID_ARGUMENT;
    case ErrorCode::ParseError: return MFSPEC_PARSE_ERROR;
    case ErrorCode::NotIrreducible: return MFSPEC_NOT_IRREDUCIBLE;
    case ErrorCode::EmptyRow: return MFSPEC_EMPTY_ROW;
    case ErrorCode::NotMarkov: return MFSPEC_NOT_MARKOV;
    case ErrorCode::ResourceLimit: return MFSPEC_RESOURCE_LIMIT;
    case ErrorCode::DepthMismatch: return MFSPEC_DEPTH_MISMATCH;
    case ErrorCode::NonConvergence: return MFSPEC_NON_CONVERGENCE;
    case ErrorCode::ConditionQViolated: return MFSPEC_CONDITION_Q_VIOLATED;
    case ErrorCode::ConditionPViolated: return MFSPEC_CONDITION_P_VIOLATED;
    case ErrorCode::Infeasible: return MFSPEC_INFEASIBLE;
    case ErrorCode::ExcludedAlpha: return MFSPEC_EXCLUDED_ALPHA;
    case ErrorCode::UnknownFormula: return MFSPEC_UNKNOWN_FORMULA;
  }
  return MFSPEC_INTERNAL_ERROR;
}

// Runs body, translating exceptions into status codes and the thread's last error.
template <class F>
mfspec_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return MFSPEC_OK;
  } catch (const mfspec::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return MFSPEC_RESOURCE_LIMIT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return MFSPEC_INTERNAL_ERROR;
  }
}

void require(bool ok, const char* what) {
  if (!ok) mfspec::fail(ErrorCode::InvalidArgument, what);
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<std::string> names(const char* const* list, std::size_t count) {
  require(list != nullptr, "potential list is null");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) {
    require(list[i] != nullptr, "potential name is null");
    out.emplace_back(list[i]);
  }
  return out;
}

struct Level {
  mfspec::VectorPotential phi;
  mfspec::VectorPotential psi;
  mfspec::Potential xi;
  std::span<const double> alpha;
};

Level level_of(const mfspec_system* sys, const mfspec_level* level, const double* alpha, bool need_psi = true) {
  require(sys != nullptr && level != nullptr, "null system or level");
  require(level->dim > 0, "level dimension must be positive");
  const mfspec::System& s = sys->system;
  mfspec::VectorPotential phi = s.vector(names(level->phi, level->dim));
  mfspec::VectorPotential psi = need_psi || level->psi != nullptr ? s.vector(names(level->psi, level->dim))
                                                                  : phi;
  const mfspec::Potential& xi = s.potential(level->xi != nullptr ? level->xi : "zero");
  std::span<const double> a;
  if (alpha != nullptr) a = std::span<const double>(alpha, level->dim);
  return Level{std::move(phi), std::move(psi), xi, a};
}

void write_point(const mfspec::SpectrumPoint& pt, mfspec_point* out, double* argmin) {
  out->value = pt.value.value();
  out->iterations = pt.iterations;
  switch (pt.status) {
    case mfspec::PointStatus::Interior: out->status = MFSPEC_INTERIOR; break;
    case mfspec::PointStatus::Boundary: out->status = MFSPEC_BOUNDARY; break;
    case mfspec::PointStatus::Outside: out->status = MFSPEC_OUTSIDE; break;
    default: out->status = MFSPEC_UNDEFINED; break;
  }
  out->has_argmin = pt.argmin_q.has_value() ? 1 : 0;
  if (argmin != nullptr && pt.argmin_q) std::copy(pt.argmin_q->begin(), pt.argmin_q->end(), argmin);
}

nlohmann::json extended(const mfspec::ExtendedReal& x) {
  if (x.is_pos_inf()) return "inf";
  if (x.is_neg_inf()) return "-inf";
  return x.value();
}

const mfspec::PiecewiseLinearMap& map_of(const mfspec_system* sys) {
  if (!sys->system.map) mfspec::fail(ErrorCode::InvalidArgument, "system has no slopes, so no interval map");
  return *sys->system.map;
}

}  // namespace

extern "C" {

const char* mfspec_version(void) { return "1.0.0"; }

const char* mfspec_status_name(mfspec_status status) {
  switch (status) {
    case MFSPEC_OK: return "Ok";
    case MFSPEC_INVALID_ARGUMENT: return "InvalidArgument";
    case MFSPEC_PARSE_ERROR: return "ParseError";
    case MFSPEC_NOT_IRREDUCIBLE: return "NotIrreducible";
    case MFSPEC_EMPTY_ROW: return "EmptyRow";
    case MFSPEC_NOT_MARKOV: return "NotMarkov";
    case MFSPEC_RESOURCE_LIMIT: return "ResourceLimit";
    case MFSPEC_DEPTH_MISMATCH: return "DepthMismatch";
    case MFSPEC_NON_CONVERGENCE: return "NonConvergence";
    case MFSPEC_CONDITION_Q_VIOLATED: return "ConditionQViolated";
    case MFSPEC_CONDITION_P_VIOLATED: return "ConditionPViolated";
    case MFSPEC_INFEASIBLE: return "Infeasible";
    case MFSPEC_EXCLUDED_ALPHA: return "ExcludedAlpha";
    case MFSPEC_UNKNOWN_FORMULA: return "UnknownFormula";
    case MFSPEC_INTERNAL_ERROR: return "InternalError";
  }
  return "Unknown";
}

const char* mfspec_last_error(void) { return last_error.c_str(); }

void mfspec_string_free(char* s) { std::free(s); }

mfspec_status mfspec_system_load(const char* path, mfspec_system** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    *out = new mfspec_system{mfspec::load_system(path)};
  });
}

mfspec_status mfspec_system_parse(const char* json, mfspec_system** out) {
  return guarded([&] {
    require(json != nullptr && out != nullptr, "null argument");
    *out = new mfspec_system{mfspec::parse_system(json)};
  });
}

void mfspec_system_free(mfspec_system* system) { delete system; }

size_t mfspec_system_alphabet_size(const mfspec_system* system) {
  return system != nullptr ? system->system.sft.alphabet_size() : 0;
}

int mfspec_system_has_map(const mfspec_system* system) {
  return system != nullptr && system->system.map.has_value() ? 1 : 0;
}

mfspec_status mfspec_system_potentials(const mfspec_system* system, char** names_out) {
  return guarded([&] {
    require(system != nullptr && names_out != nullptr, "null argument");
    std::string s;
    for (const auto& [name, phi] : system->system.potentials) s += (s.empty() ? "" : ",") + name;
    *names_out = duplicate(s);
  });
}

mfspec_status mfspec_pressure(const mfspec_system* system, const char* potential, double* out) {
  return guarded([&] {
    require(system != nullptr && potential != nullptr && out != nullptr, "null argument");
    *out = mfspec::pressure(system->system.sft, system->system.potential(potential));
  });
}

mfspec_status mfspec_cover_pressure(const mfspec_system* system, const char* potential, int n, double* out) {
  return guarded([&] {
    require(system != nullptr && potential != nullptr && out != nullptr, "null argument");
    *out = mfspec::pressure_cover_estimate(system->system.sft, system->system.potential(potential), n);
  });
}

mfspec_status mfspec_pressure_gradient(const mfspec_system* system, const mfspec_level* level, const double* q,
                                       double* grad) {
  return guarded([&] {
    require(q != nullptr && grad != nullptr, "null argument");
    const Level l = level_of(system, level, nullptr, false);
    const auto g = mfspec::pressure_gradient(system->system.sft, l.phi, l.xi, std::span<const double>(q, level->dim));
    std::copy(g.begin(), g.end(), grad);
  });
}

mfspec_status mfspec_bowen_root(const mfspec_system* system, const char* eta, const char* u, double* out) {
  return guarded([&] {
    require(system != nullptr && eta != nullptr && u != nullptr && out != nullptr, "null argument");
    *out = mfspec::bowen_root(system->system.sft, system->system.potential(eta), system->system.potential(u)).value();
  });
}

mfspec_status mfspec_predicted(const mfspec_system* system, const mfspec_level* level, const double* alpha,
                               mfspec_point* out, double* argmin) {
  return guarded([&] {
    require(alpha != nullptr && out != nullptr, "null argument");
    const Level l = level_of(system, level, alpha);
    write_point(mfspec::predicted(system->system.sft, l.phi, l.psi, l.xi, l.alpha), out, argmin);
  });
}

mfspec_status mfspec_conditional(const mfspec_system* system, const mfspec_level* level, const double* alpha,
                                 int order, mfspec_point* out) {
  return guarded([&] {
    require(alpha != nullptr && out != nullptr, "null argument");
    const Level l = level_of(system, level, alpha);
    write_point(mfspec::conditional_variational(system->system.sft, l.phi, l.psi, l.xi, l.alpha, order), out,
                nullptr);
  });
}

mfspec_status mfspec_coarse(const mfspec_system* system, const mfspec_level* level, const double* alpha,
                            double gamma, int n, double* out) {
  return guarded([&] {
    require(alpha != nullptr && out != nullptr, "null argument");
    const Level l = level_of(system, level, alpha);
    *out = mfspec::coarse(system->system.sft, l.phi, l.psi, l.xi, l.alpha, gamma, n).value();
  });
}

mfspec_status mfspec_domain(const mfspec_system* system, const mfspec_level* level, char** json) {
  return guarded([&] {
    require(json != nullptr, "null argument");
    const Level l = level_of(system, level, nullptr);
    const mfspec::DomainDescription d = mfspec::domain(system->system.sft, l.phi, l.psi);
    nlohmann::json doc;
    doc["dim"] = d.dim;
    if (d.dim == 1) {
      doc["lower"] = extended(d.lower);
      doc["upper"] = extended(d.upper);
      doc["lower_witness"] = d.lower_witness ? nlohmann::json(system->system.format_word(*d.lower_witness)) : nullptr;
      doc["upper_witness"] = d.upper_witness ? nlohmann::json(system->system.format_word(*d.upper_witness)) : nullptr;
    }
    doc["unbounded"] = d.contains_unbounded_direction;
    auto points = [](const std::vector<Eigen::VectorXd>& pts) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& p : pts) arr.push_back(std::vector<double>(p.data(), p.data() + p.size()));
      return arr;
    };
    doc["ratio_points"] = points(d.ratio_points);
    doc["boundary_points"] = points(d.boundary_points);
    *json = duplicate(doc.dump(2));
  });
}

mfspec_status mfspec_dimension(const mfspec_system* system, mfspec_dimension_kind kind, const mfspec_level* level,
                               const double* alpha, int order, mfspec_point* out, double* argmin) {
  return guarded([&] {
    require(system != nullptr && alpha != nullptr && out != nullptr, "null argument");
    const mfspec::System& s = system->system;
    mfspec::SpectrumPoint pt;
    switch (kind) {
      case MFSPEC_DIM_LYAPUNOV:
        pt = mfspec::lyapunov_spectrum(map_of(system), alpha[0]);
        break;
      case MFSPEC_DIM_BIRKHOFF: {
        const Level l = level_of(system, level, alpha, false);
        pt = mfspec::birkhoff_dimension_spectrum(map_of(system), l.phi[0], alpha[0]);
        break;
      }
      case MFSPEC_DIM_POINTWISE: {
        const Level l = level_of(system, level, alpha, false);
        pt = mfspec::pointwise_dimension_spectrum(map_of(system), l.phi[0], alpha[0]);
        break;
      }
      case MFSPEC_DIM_U_DIMENSION: {
        const Level l = level_of(system, level, alpha);
        pt = mfspec::u_dimension_spectrum(s.sft, l.phi, l.psi, s.potential("log_derivative"), l.alpha);
        break;
      }
      case MFSPEC_DIM_ENTROPY: {
        const Level l = level_of(system, level, alpha, false);
        pt = mfspec::entropy_birkhoff_spectrum(s.sft, l.phi[0], alpha[0]);
        break;
      }
      case MFSPEC_DIM_LOCAL_ENTROPY: {
        const Level l = level_of(system, level, alpha, false);
        pt = mfspec::local_entropy_spectrum(s.sft, l.phi, l.alpha);
        break;
      }
      case MFSPEC_DIM_CONDITIONAL: {
        const Level l = level_of(system, level, alpha);
        pt = mfspec::conditional_dimension(s.sft, l.phi, l.psi, s.potential("log_derivative"), l.alpha, order);
        break;
      }
      default:
        mfspec::fail(ErrorCode::InvalidArgument, "unknown dimension spectrum kind");
    }
    write_point(pt, out, argmin);
  });
}

mfspec_status mfspec_verify(const char* systems_dir, const char* const* tolerances, size_t count, int criterion,
                            int* passed, char** summary, char** table, char** json) {
  return guarded([&] {
    require(systems_dir != nullptr && passed != nullptr, "null argument");
    mfspec::verify::Tolerances tol;
    for (std::size_t i = 0; i < count; ++i) {
      require(tolerances != nullptr && tolerances[i] != nullptr, "null tolerance spec");
      tol.apply(tolerances[i]);
    }
    const mfspec::verify::Bundle bundle = mfspec::verify::load_bundle(systems_dir);
    std::vector<mfspec::verify::CriterionResult> results;
    if (criterion == 0) {
      results = mfspec::verify::run_all(bundle, tol);
    } else {
      results.push_back(mfspec::verify::run_criterion(criterion, bundle, tol));
    }
    *passed = 1;
    for (const auto& r : results) *passed = *passed && r.passed;
    if (summary != nullptr) *summary = duplicate(mfspec::verify::format_summary(results));
    if (table != nullptr) *table = duplicate(mfspec::verify::format_table(results));
    if (json != nullptr) *json = duplicate(mfspec::verify::to_json(results));
  });
}

}  // extern "C"
