// Copyright 2026 The extractorlab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <variant>

#include <extractorlab/harness.hpp>
#include <extractorlab/io.hpp>
#include <extractorlab/report.hpp>

namespace extractorlab::cli {

namespace {

using Clock = std::chrono::steady_clock;

// Default side-information dimension for the verification harnesses
// (two qubits of quantum memory).
constexpr Index kSideDim = 4;

struct Timer {
  Clock::time_point start = Clock::now();
  double seconds() const {
    return std::chrono::duration<double>(Clock::now() - start).count();
  }
};

void emit(const ExtractorReport& rep, const Args& a, const Timer& timer,
          const std::string& summary) {
  std::cout << rep.canonical_text();
  std::cerr << rep.command << ": " << summary << " (" << timer.seconds()
            << " s)\n";
  if (!a.out.empty() && rep.command != "witness") {
    std::ofstream out(a.out);
    if (!out.good()) throw ParseError("cannot open --out path: " + a.out);
    out << rep.canonical_text();
  }
}

AnyFamily load_family(const Args& a) {
  if (a.family.rfind("file:", 0) == 0) {
    const std::string path = a.family.substr(5);
    std::ifstream in(path);
    if (!in.good()) throw ParseError("cannot open family file: " + path);
    AnyFamily fam = read_family_auto(in);
    // Flags refine the file: --m narrows the output, --mode overrides.
    if (std::holds_alternative<FunctionFamily>(fam)) {
      auto& f = std::get<FunctionFamily>(fam);
      if (a.n != 0 && a.n != f.n) throw ParseError("--n disagrees with file");
      if (a.m != 0 && a.m != f.m) f = restrict_output(f, a.m);
      f.mode = mode_from_string(a.mode);
    } else {
      auto& f = std::get<UnitaryFamily>(fam);
      if (a.n != 0 && a.n != f.n) throw ParseError("--n disagrees with file");
      if (a.m != 0) {
        if (a.m > f.n) throw ParseError("--m exceeds file input size");
        f.m = a.m;
      }
      f.mode = mode_from_string(a.mode);
    }
    return fam;
  }
  if (a.family == "hash") {
    FunctionFamily f = hash_family(a.n, a.m);
    f.mode = mode_from_string(a.mode);
    return f;
  }
  if (a.family == "perm") {
    FunctionFamily f = restrict_output(pairwise_permutations(a.n), a.m);
    f.mode = mode_from_string(a.mode);
    return f;
  }
  if (a.family == "clifford") {
    UnitaryFamily f = clifford_family(a.n, a.m);
    f.mode = mode_from_string(a.mode);
    return f;
  }
  if (a.family == "haar") {
    if (a.d < 0) throw ParseError("--family haar requires --d");
    if (a.d > 8) throw DimensionError("haar family limited to d <= 8");
    UnitaryFamily f;
    f.n = a.n;
    f.m = a.m;
    f.mode = mode_from_string(a.mode);
    Rng rng = Rng(a.seed).split(0);
    const Index dn = Index{1} << a.n;
    const Index count = Index{1} << a.d;
    for (Index i = 0; i < count; ++i) f.unitaries.push_back(haar_unitary(dn, rng));
    return f;
  }
  throw ParseError("unknown family: " + a.family);
}

nlohmann::json base_parameters(const Args& a, const AnyFamily& fam) {
  nlohmann::json p;
  if (std::holds_alternative<FunctionFamily>(fam)) {
    const auto& f = std::get<FunctionFamily>(fam);
    p["n"] = f.n;
    p["m"] = f.m;
    p["d"] = f.seed_bits();
    p["mode"] = to_string(f.mode);
  } else {
    const auto& f = std::get<UnitaryFamily>(fam);
    p["n"] = f.n;
    p["m"] = f.m;
    p["d"] = f.seed_bits();
    p["mode"] = to_string(f.mode);
  }
  p["family"] = a.family;
  return p;
}

SpectralCertificate certificate_of(const AnyFamily& fam) {
  if (std::holds_alternative<FunctionFamily>(fam)) {
    return spectral_certificate(std::get<FunctionFamily>(fam));
  }
  return q_spectral_certificate(std::get<UnitaryFamily>(fam));
}

double family_dim_m(const AnyFamily& fam) {
  return std::holds_alternative<FunctionFamily>(fam)
             ? static_cast<double>(std::get<FunctionFamily>(fam).dim_m())
             : static_cast<double>(std::get<UnitaryFamily>(fam).dim_m());
}

double family_count(const AnyFamily& fam) {
  return std::holds_alternative<FunctionFamily>(fam)
             ? static_cast<double>(std::get<FunctionFamily>(fam).count())
             : static_cast<double>(std::get<UnitaryFamily>(fam).count());
}

}  // namespace

int run_certify(const Args& a) {
  Timer timer;
  const AnyFamily fam = load_family(a);
  const SpectralCertificate cert = certificate_of(fam);
  const ErrorBound eb =
      epsilon_for_k(cert, a.k, family_dim_m(fam), family_count(fam));

  ExtractorReport rep;
  rep.command = "certify";
  rep.parameters = base_parameters(a, fam);
  rep.parameters["k"] = a.k;
  rep.rng_seed = a.seed;
  rep.certificate = cert;
  rep.epsilon = eb.epsilon;
  rep.quantum_error_bound = eb.quantum_proof_bound;
  rep.results["family_size"] = family_count(fam);
  emit(rep, a, timer,
       "lambda1_diff=" + format_double(cert.lambda1_diff) +
           " epsilon=" + format_double(eb.epsilon));
  return kExitOk;
}

int run_verify(const Args& a) {
  Timer timer;
  const AnyFamily fam = load_family(a);
  SoundnessReport sound;
  if (std::holds_alternative<FunctionFamily>(fam)) {
    sound = quantum_proof_soundness(std::get<FunctionFamily>(fam), a.k,
                                    kSideDim, a.trials, a.seed);
  } else {
    sound = decoupling_soundness(std::get<UnitaryFamily>(fam), a.k, kSideDim,
                                 a.trials, a.seed);
  }

  ExtractorReport rep;
  rep.command = "verify";
  rep.parameters = base_parameters(a, fam);
  rep.parameters["k"] = a.k;
  rep.parameters["trials"] = a.trials;
  rep.parameters["dim_r"] = static_cast<std::int64_t>(kSideDim);
  rep.rng_seed = a.seed;
  rep.certificate = sound.certificate;
  rep.epsilon = sound.epsilon;
  rep.quantum_error_bound = sound.bound;
  rep.trial_errors = sound.trial_errors;
  rep.violations = sound.violations;
  rep.results["worst_error"] = sound.worst_error;
  rep.results["trial_hmins"] = sound.trial_hmins;
  emit(rep, a, timer,
       "violations=" + std::to_string(sound.violations) +
           " worst=" + format_double(sound.worst_error) +
           " bound=" + format_double(sound.bound));
  return sound.violations > 0 ? kExitViolations : kExitOk;
}

int run_witness(const Args& a) {
  Timer timer;
  if ((a.kind == "prop2" || a.kind == "prop4") &&
      a.k != std::floor(a.k)) {
    // Flat sources are defined for integer k only; rounding is the
    // caller's decision, never the tool's.
    throw ParseError("--k must be an integer for flat-source witnesses");
  }
  const AnyFamily fam = load_family(a);

  ExtractorReport rep;
  rep.command = "witness";
  rep.parameters = base_parameters(a, fam);
  rep.parameters["kind"] = a.kind;
  rep.rng_seed = a.seed;
  const SpectralCertificate cert = certificate_of(fam);
  rep.certificate = cert;

  std::string summary;
  if (a.kind == "prop2") {
    if (!std::holds_alternative<FunctionFamily>(fam)) {
      throw ParseError("prop2 needs a function family");
    }
    const auto& f = std::get<FunctionFamily>(fam);
    const auto w = spectral_lower_bound_witness(f, static_cast<int>(a.k));
    rep.parameters["k"] = a.k;
    rep.results["formula_bound"] = w.formula_bound;
    rep.results["lambda1_diff"] = cert.lambda1_diff;
    rep.results["image_support"] = static_cast<std::int64_t>(w.image_support);
    rep.results["quadratic_form"] = w.quadratic_form;
    rep.violations = w.formula_bound <= cert.lambda1_diff + 1e-9 ? 0 : 1;
    if (!a.out.empty()) {
      std::ofstream out(a.out);
      if (!out.good()) throw ParseError("cannot open --out path: " + a.out);
      write_classical_state(out, w.source);
    }
    summary = "bound=" + format_double(w.formula_bound) +
              " lambda1=" + format_double(cert.lambda1_diff);
  } else if (a.kind == "prop4") {
    if (!std::holds_alternative<UnitaryFamily>(fam)) {
      throw ParseError("prop4 needs a unitary family");
    }
    const auto& f = std::get<UnitaryFamily>(fam);
    const auto w = spectral_lower_bound_witness(f, static_cast<int>(a.k));
    rep.parameters["k"] = a.k;
    rep.results["formula_bound"] = w.formula_bound;
    rep.results["lambda1_diff"] = cert.lambda1_diff;
    rep.results["image_support"] = static_cast<std::int64_t>(w.image_support);
    rep.results["h2"] = w.h2;
    rep.violations = w.formula_bound <= cert.lambda1_diff + 1e-9 ? 0 : 1;
    if (!a.out.empty()) {
      std::ofstream out(a.out);
      if (!out.good()) throw ParseError("cannot open --out path: " + a.out);
      write_state(out, BipartiteState(w.state, f.dim_n(), 1,
                                      StateKind::QuantumQuantum));
    }
    summary = "bound=" + format_double(w.formula_bound) +
              " lambda1=" + format_double(cert.lambda1_diff);
  } else if (a.kind == "prop5") {
    if (!std::holds_alternative<UnitaryFamily>(fam)) {
      throw ParseError("prop5 needs a unitary family");
    }
    const auto& f = std::get<UnitaryFamily>(fam);
    const auto w = single_seed_witness(f);
    rep.results["single_seed_error"] = w.single_seed_error;
    rep.results["family_error"] = w.family_error;
    rep.results["hmin"] = w.hmin;
    rep.violations = std::abs(w.single_seed_error - 1.0) <= 1e-9 ? 0 : 1;
    if (!a.out.empty()) {
      std::ofstream out(a.out);
      if (!out.good()) throw ParseError("cannot open --out path: " + a.out);
      write_state(out, BipartiteState(w.state, f.dim_n(), 1,
                                      StateKind::QuantumQuantum));
    }
    summary = "single_seed_error=" + format_double(w.single_seed_error);
  } else {
    throw ParseError("unknown witness kind: " + a.kind);
  }
  emit(rep, a, timer, summary);
  return rep.violations > 0 ? kExitViolations : kExitOk;
}

int run_shortseed(const Args& a) {
  Timer timer;
  if (a.d < 0 || a.d > 8) {
    throw ParseError("shortseed needs --d in [0, 8] (t = 2^d members)");
  }
  if (a.k != std::floor(a.k)) {
    throw ParseError("--k must be an integer for flat-source experiments");
  }
  const int t = 1 << a.d;
  const ShortSeedReport sr = shortseed_experiment(
      a.n, static_cast<int>(a.k), a.m, t, a.trials, a.seed);

  ExtractorReport rep;
  rep.command = "shortseed";
  rep.parameters["n"] = a.n;
  rep.parameters["m"] = a.m;
  rep.parameters["k"] = a.k;
  rep.parameters["d"] = a.d;
  rep.parameters["t"] = t;
  rep.parameters["trials"] = a.trials;
  rep.parameters["family"] = "haar";
  rep.parameters["mode"] = a.mode;
  rep.rng_seed = a.seed;
  rep.epsilon = sr.reference_epsilon;
  rep.quantum_error_bound = sr.reference_mean_error;
  rep.trial_errors = sr.trial_errors;
  rep.results["max_error"] = sr.max_error;
  rep.results["mean_error"] = sr.mean_error;
  rep.results["reference_epsilon"] = sr.reference_epsilon;
  rep.results["reference_mean_error"] = sr.reference_mean_error;
  emit(rep, a, timer,
       "mean=" + format_double(sr.mean_error) +
           " reference=" + format_double(sr.reference_mean_error));
  return kExitOk;
}

int run_design_check(const Args& a) {
  Timer timer;
  const AnyFamily fam = load_family(a);
  if (!std::holds_alternative<UnitaryFamily>(fam)) {
    throw ParseError("design-check needs a unitary family");
  }
  const double dev = two_design_check(std::get<UnitaryFamily>(fam));

  ExtractorReport rep;
  rep.command = "design-check";
  rep.parameters = base_parameters(a, fam);
  rep.rng_seed = a.seed;
  rep.results["deviation"] = dev;
  rep.violations = dev <= 1e-10 ? 0 : 1;
  emit(rep, a, timer, "deviation=" + format_double(dev));
  return rep.violations > 0 ? kExitViolations : kExitOk;
}

int run_entropy(const Args& a) {
  Timer timer;
  std::string path = a.state_path;
  if (path.rfind("file:", 0) == 0) path = path.substr(5);
  std::ifstream in(path);
  if (!in.good()) throw ParseError("cannot open state file: " + path);
  const BipartiteState state = read_state(in);

  const HminCondResult cond = hmin_cond(state);
  const H2CondResult renyi = h2_cond(state);

  ExtractorReport rep;
  rep.command = "entropy";
  rep.parameters["n"] = static_cast<std::int64_t>(state.dim_n);
  rep.parameters["dim_r"] = static_cast<std::int64_t>(state.dim_r);
  rep.parameters["kind"] = state.kind == StateKind::ClassicalClassical ? "cc"
                           : state.kind == StateKind::ClassicalQuantum ? "cq"
                                                                       : "qq";
  rep.rng_seed = a.seed;
  rep.results["hmin_n"] = hmin_q(state.marginal_n());
  rep.results["hmin_cond"] = cond.value;
  rep.results["h2_cond"] = renyi.value;
  rep.results["sdp_primal"] = cond.certificate.primal_value;
  rep.results["sdp_dual"] = cond.certificate.dual_value;
  rep.results["sdp_gap"] = cond.certificate.gap;
  if (state.kind == StateKind::ClassicalClassical) {
    rep.results["hmin_cond_closed_form"] = hmin_cond_classical(state);
  }
  emit(rep, a, timer,
       "hmin_cond=" + format_double(cond.value) +
           " h2_cond=" + format_double(renyi.value));
  return kExitOk;
}

}  // namespace extractorlab::cli
