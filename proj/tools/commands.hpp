#pragma once

// Subcommand implementations shared by the finosc executable and the tests.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "finosc/finosc.hpp"
#include "qutrit_reference.hpp"
#include "svg.hpp"

namespace finosc::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

struct RunConfig {
  int dim = 3;
  GaussianKind family = GaussianKind::G1;
  double kappa = 1.0;
  std::string kind = "fourier";
  double alpha = 1.0;
  double tol = 1e-8;
  int min_len = 3;
  std::string out;  // empty: stdout
  std::string format = "csv";
  std::string state;  // wigner: "", "delta0", "delta<k>"
  std::uint64_t seed = 1;
  std::string trace;  // revival: fidelity trace destination
  int samples = 201;
  bool ground_state = false;
};

inline GridDim grid(const RunConfig& cfg) { return GridDim::from_dimension(cfg.dim); }

inline void validate(const RunConfig& cfg) {
  GridDim::from_dimension(cfg.dim);
  if (!(cfg.kappa > 0.0)) throw InvalidArgument("kappa must be positive");
  if (!(cfg.tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  if (cfg.format != "csv" && cfg.format != "svg") throw InvalidArgument("format must be csv or svg");
  if (cfg.samples < 2) throw InvalidArgument("need at least 2 trace samples");
}

inline GaussianFamily family(const RunConfig& cfg) { return GaussianFamily::make(cfg.family, cfg.kappa); }

inline OscillatorKind oscillator_kind(const RunConfig& cfg) {
  const int i = static_cast<int>(cfg.family);
  if (cfg.kind == "fourier") return OscillatorKind::fourier();
  if (cfg.kind == "harper") return OscillatorKind::harper();
  if (cfg.kind == "kravchuk") return OscillatorKind::kravchuk();
  if (cfg.kind == "frame") return OscillatorKind::frame_quantized(i);
  if (cfg.kind == "gramschmidt") return OscillatorKind::gram_schmidt(i);
  if (cfg.kind == "deformed-fourier") return OscillatorKind::deformed_fourier(cfg.alpha);
  if (cfg.kind == "deformed-harper") return OscillatorKind::deformed_harper(cfg.alpha);
  throw InvalidArgument("unknown oscillator kind '" + cfg.kind + "'");
}

inline std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error("cannot open output file " + path);
  f << content;
  if (!f) throw Error("failed writing " + path);
}

// n, value, prob table of a real-valued grid function.
inline std::string profile_csv(const GridFunction& g) {
  std::ostringstream s;
  s << "n,value,prob\n";
  for (int n : g.dim().indices()) {
    const double v = g(n).real();
    s << n << "," << fmt(v) << "," << fmt(std::norm(g(n))) << "\n";
  }
  return s.str();
}

inline std::string profile_svg(const GridFunction& g, const std::string& title) {
  std::vector<double> x, y;
  for (int n : g.dim().indices()) {
    x.push_back(n);
    y.push_back(std::norm(g(n)));
  }
  return svg::stem_plot(x, y, title);
}

inline int cmd_gaussian(const RunConfig& cfg) {
  const GridFunction g = normalized_gaussian(grid(cfg), family(cfg));
  const std::string title = "|" + to_string(cfg.family) + "|^2, d = " + std::to_string(cfg.dim);
  emit(cfg.out, cfg.format == "svg" ? profile_svg(g, title) : profile_csv(g));
  return kOk;
}

inline GridFunction wigner_state(const RunConfig& cfg) {
  const GridDim dim = grid(cfg);
  if (cfg.state.empty()) return normalized_gaussian(dim, family(cfg));
  if (cfg.state.rfind("delta", 0) == 0) {
    const std::string k = cfg.state.substr(5);
    try {
      std::size_t used = 0;
      const int idx = std::stoi(k, &used);
      if (used == k.size() && dim.contains(idx)) return GridFunction::delta(dim, idx);
    } catch (const std::exception&) {
    }
  }
  throw InvalidArgument("state must be delta<k> with k in {-j..j}, got '" + cfg.state + "'");
}

inline int cmd_wigner(const RunConfig& cfg) {
  const WignerMap w = wigner(wigner_state(cfg));
  if (cfg.format == "svg") {
    std::vector<std::vector<double>> rows;
    for (int n : w.dim.indices()) {
      rows.emplace_back();
      for (int m : w.dim.indices()) rows.back().push_back(w(n, m));
    }
    emit(cfg.out, svg::heatmap(rows, -w.dim.j(), "Wigner function, d = " + std::to_string(cfg.dim)));
    return kOk;
  }
  std::ostringstream s;
  s << "n,m,w\n";
  for (int n : w.dim.indices()) {
    for (int m : w.dim.indices()) s << n << "," << m << "," << fmt(w(n, m)) << "\n";
  }
  emit(cfg.out, s.str());
  return kOk;
}

inline int cmd_spectrum(const RunConfig& cfg) {
  const GridDim dim = grid(cfg);
  const OscillatorKind kind = oscillator_kind(cfg);
  const SpectralDecomposition spec = eigendecompose_hermitian(hamiltonian(dim, kind));
  if (cfg.ground_state) {
    const GridFunction& g = spec.eigenvectors.front();
    emit(cfg.out, cfg.format == "svg" ? profile_svg(g, "ground state of " + to_string(kind))
                                      : profile_csv(g));
    return kOk;
  }
  if (cfg.format == "svg") {
    emit(cfg.out, svg::level_diagram(spec.eigenvalues, to_string(kind) + ", d = " + std::to_string(cfg.dim)));
    return kOk;
  }
  std::ostringstream s;
  s << "index,eigenvalue\n";
  for (std::size_t k = 0; k < spec.size(); ++k) s << k << "," << fmt(spec.eigenvalues[k]) << "\n";
  emit(cfg.out, s.str());
  return kOk;
}

inline GridFunction random_state(GridDim dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  return GridFunction::from_fn(dim, [&](int) { return Complex(normal(rng), normal(rng)); }).normalized();
}

struct FidelitySample {
  double t;
  double fidelity;
};

inline std::vector<FidelitySample> fidelity_trace(const SpectralDecomposition& spec, const GridFunction& psi,
                                                  double t_max, int samples) {
  std::vector<FidelitySample> out;
  for (int k = 0; k < samples; ++k) {
    const double t = t_max * k / (samples - 1);
    out.push_back({t, fidelity(spec, psi, t)});
  }
  return out;
}

inline int cmd_revival(const RunConfig& cfg) {
  const GridDim dim = grid(cfg);
  const SpectralDecomposition spec = eigendecompose_hermitian(hamiltonian(dim, oscillator_kind(cfg)));
  const RevivalReport report = detect_revivals(spec, cfg.min_len, cfg.tol);
  std::ostringstream s;
  s << "start,length,gap,max_deviation,period\n";
  for (const Progression& p : report.progressions) {
    s << p.start << "," << p.length << "," << fmt(p.gap) << "," << fmt(p.max_deviation) << ","
      << fmt(p.period) << "\n";
  }
  emit(cfg.out, s.str());
  if (!cfg.trace.empty()) {
    const double period = report.progressions.empty() ? 2.0 * kPi : report.progressions.front().period;
    const auto trace = fidelity_trace(spec, random_state(dim, cfg.seed), 2.0 * period, cfg.samples);
    if (cfg.format == "svg") {
      std::vector<double> x, y;
      for (const auto& p : trace) {
        x.push_back(p.t);
        y.push_back(p.fidelity);
      }
      emit(cfg.trace, svg::line_plot(x, y, "fidelity |<psi(0)|psi(t)>|"));
    } else {
      std::ostringstream t;
      t << "t,fidelity\n";
      for (const auto& p : trace) t << fmt(p.t) << "," << fmt(p.fidelity) << "\n";
      emit(cfg.trace, t.str());
    }
  }
  return kOk;
}

inline int cmd_kravchuk_table(const RunConfig& cfg) {
  const KravchukTable t = kravchuk_table(grid(cfg));
  std::ostringstream s;
  s << "m,n,polynomial,function\n";
  for (int m : t.dim.indices()) {
    for (int n : t.dim.indices()) {
      s << m << "," << n << "," << fmt(t.polynomial(m, n)) << "," << fmt(t.function(m, n)) << "\n";
    }
  }
  emit(cfg.out, s.str());
  return kOk;
}

// Coherent states of the chosen G_i, scaled by 1/sqrt(d), analysed as a frame.
inline int cmd_frame_check(const RunConfig& cfg) {
  const GridDim dim = grid(cfg);
  const CoherentFamily fam = coherent_family(dim, family(cfg));
  std::vector<GridFunction> vectors;
  for (int a : dim.indices()) {
    for (int b : dim.indices()) vectors.push_back(fam.state(a, b) / std::sqrt(double(dim.d())));
  }
  const FrameAnalysis fa = frame_analyze(vectors);
  const double resolution = max_abs_diff(fam.resolution(), LinearOperator::identity(dim));
  std::ostringstream s;
  s << "key,value\n"
    << "vectors," << vectors.size() << "\n"
    << "lower_bound," << fmt(fa.lower_bound) << "\n"
    << "upper_bound," << fmt(fa.upper_bound) << "\n"
    << "is_frame," << (fa.is_frame ? 1 : 0) << "\n"
    << "is_tight," << (fa.is_tight ? 1 : 0) << "\n"
    << "weight_sum," << (fa.frame ? fmt(fa.frame->weight_sum()) : std::string("nan")) << "\n"
    << "resolution_error," << fmt(resolution) << "\n";
  emit(cfg.out, s.str());
  return fa.is_tight && resolution <= 1e-10 ? kOk : kFailure;
}

// ---------------------------------------------------------------------------
// verify

class Verifier {
 public:
  explicit Verifier(std::ostream& os) : os_(os) {}

  // Records a check whose error must not exceed tol.
  void check(const std::string& name, const std::function<double()>& error, double tol) {
    double e = 0.0;
    try {
      e = error();
    } catch (const std::exception& ex) {
      report(false, name, std::string("threw: ") + ex.what());
      return;
    }
    const bool ok = std::isfinite(e) && e <= tol;
    report(ok, name, "err=" + fmt(e) + " tol=" + fmt(tol));
  }

  void check_true(const std::string& name, const std::function<bool()>& pred) {
    bool ok = false;
    std::string detail;
    try {
      ok = pred();
    } catch (const std::exception& ex) {
      detail = std::string("threw: ") + ex.what();
    }
    report(ok, name, detail);
  }

  void note(const std::string& text) { os_ << "NOTE " << text << "\n"; }

  int failures() const { return failures_; }
  int passes() const { return passes_; }

 private:
  void report(bool ok, const std::string& name, const std::string& detail) {
    (ok ? passes_ : failures_)++;
    os_ << (ok ? "PASS " : "FAIL ") << name;
    if (!detail.empty()) os_ << " (" << detail << ")";
    os_ << "\n";
  }

  std::ostream& os_;
  int passes_ = 0;
  int failures_ = 0;
};

inline double column_error(const GridFunction& g, const reference::Column& ref) {
  double e = 0.0;
  for (int n = -1; n <= 1; ++n) e = std::max(e, std::abs(g(n) - ref[static_cast<std::size_t>(n + 1)]));
  return e;
}

// Distance to the reference column after removing a global phase.
inline double column_error_mod_phase(const GridFunction& g, const reference::Column& ref) {
  const GridFunction r = GridFunction::from_fn(g.dim(), [&](int n) { return ref[static_cast<std::size_t>(n + 1)]; });
  const Complex overlap = inner_product(g, r);
  const Complex phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex(1.0);
  return max_abs_diff(g * phase, r);
}

inline double spectrum_error(const std::vector<double>& got, const reference::Column& ref) {
  double e = 0.0;
  for (std::size_t k = 0; k < 3; ++k) e = std::max(e, std::abs(got[k] - ref[k]));
  return e;
}

inline void verify_qutrit(Verifier& v) {
  const GridDim d3 = GridDim::from_dimension(3);
  namespace r = reference;
  const SpectralDecomposition hf = eigendecompose_hermitian(hamiltonian(d3, OscillatorKind::fourier()));
  // Ascending H_Fourier levels carry F-eigenvalues 1, -1, -i.
  v.check("d=3 F_-1 (mod phase)", [&] { return column_error_mod_phase(hf.eigenvectors[0], r::kFm1); }, 1e-12);
  v.check("d=3 F_1 (mod phase)", [&] { return column_error_mod_phase(hf.eigenvectors[1], r::kF1); }, 1e-12);
  v.check("d=3 F_0 (mod phase)", [&] { return column_error_mod_phase(hf.eigenvectors[2], r::kF0); }, 1e-12);
  const KravchukTable kt = kravchuk_table(d3);
  v.check("d=3 Kravchuk_-1", [&] { return column_error(kt.function_row(-1), r::kKm1); }, 1e-12);
  v.check("d=3 Kravchuk_0", [&] { return column_error(kt.function_row(0), r::kK0); }, 1e-12);
  v.check("d=3 Kravchuk_1", [&] { return column_error(kt.function_row(1), r::kK1); }, 1e-12);
  v.check("d=3 G1", [&] { return column_error(standard_gaussian(d3, 1), r::kG1); }, 1e-12);
  v.check("d=3 G4", [&] { return column_error(standard_gaussian(d3, 4), r::kG4); }, 1e-12);
  v.check("d=3 G5", [&] { return column_error(standard_gaussian(d3, 5), r::kG5); }, 1e-12);
  v.note("d=3 G2/G3 tabulated columns are (F_-1 +/- F_1)/sqrt2; the lattice sums give G2 = (" +
         fmt(standard_gaussian(d3, 2)(-1).real()) + ", " + fmt(standard_gaussian(d3, 2)(0).real()) +
         ", ...), checked instead through F G2 = G3 below");
  v.check("d=3 F G2 = G3", [&] {
    return max_abs_diff(fourier_transform(standard_gaussian(d3, 2)), standard_gaussian(d3, 3));
  }, 1e-12);
  v.check("d=3 H_Fourier spectrum", [&] { return spectrum_error(hf.eigenvalues, r::kFourierSpectrum); }, 1e-10);
  const SpectralDecomposition hh = eigendecompose_hermitian(hamiltonian(d3, OscillatorKind::harper()));
  v.check("d=3 H_Harper = 3 H_Fourier", [&] {
    return max_abs_diff(harper_hamiltonian(d3), Complex(3.0) * hamiltonian(d3, OscillatorKind::fourier()));
  }, 1e-12);
  v.note("tabulated H_Harper levels (0.2113, 0.7887, 3) have trace 4; tr H_Harper = " +
         fmt(harper_hamiltonian(d3).trace().real()) + ", computed levels " + fmt(hh.eigenvalues[0]) + ", " +
         fmt(hh.eigenvalues[1]) + ", " + fmt(hh.eigenvalues[2]));
  const LinearOperator af = frame_quantized_hamiltonian(d3, 1).shifted(0.5);
  const SpectralDecomposition saf = eigendecompose_hermitian(af);
  v.check("d=3 A_f spectrum (f = (a^2+b^2)/2, G1)", [&] { return spectrum_error(saf.eigenvalues, r::kH1Spectrum); }, 1e-10);
  v.note("tabulated H1 levels equal the spectrum of A_f; H1 = A_f - 1/2 is implemented");
  v.check("d=3 Kravchuk matrix", [&] {
    const double s2 = std::sqrt(2.0);
    Matrix k(3, 3);
    k << 1, s2, 1, -s2, 0, s2, 1, -s2, 1;
    return (kravchuk_transform(d3).matrix() - 0.5 * k).cwiseAbs().maxCoeff();
  }, 1e-12);
  v.check("d=3 J_x matrix", [&] {
    const double s2 = std::sqrt(2.0);
    Matrix jx(3, 3);
    jx << 0, s2, 0, s2, 0, s2, 0, s2, 0;
    return (su2_generators(d3).jx.matrix() - 0.5 * jx).cwiseAbs().maxCoeff();
  }, 1e-12);
}

inline void verify_dimension(Verifier& v, GridDim dim) {
  const LinearOperator f = fourier_operator(dim);
  const LinearOperator id = LinearOperator::identity(dim);
  const double d = dim.d();
  v.check("F unitary", [&] { return max_abs_diff(f * f.adjoint(), id); }, 1e-12);
  v.check("F^2 = parity", [&] { return max_abs_diff(f * f, parity_operator(dim)); }, 1e-12);
  v.check("F^4 = I", [&] { return max_abs_diff(f * f * f * f, id); }, 1e-12);
  v.check("convolution theorem", [&] {
    const GridFunction a = cli::random_state(dim, 11), b = cli::random_state(dim, 12);
    const GridFunction lhs = fourier_transform(convolve(a, b));
    const GridFunction fa = fourier_transform(a), fb = fourier_transform(b);
    return max_abs_diff(lhs, GridFunction(dim, std::sqrt(d) * fa.values().cwiseProduct(fb.values())));
  }, 1e-12);

  for (double kappa : {0.5, 1.0, 2.0}) {
    const std::string k = " kappa=" + fmt(kappa);
    const double s = 1.0 / std::sqrt(kappa);
    v.check("F g1 = g1(1/k)/sqrt k" + k, [&] {
      return max_abs_diff(fourier_transform(gaussian(dim, GaussianFamily::g1(kappa))),
                          s * gaussian(dim, GaussianFamily::g1(1 / kappa)));
    }, 1e-10);
    v.check("F g2 = g3(1/k)/sqrt k" + k, [&] {
      return max_abs_diff(fourier_transform(gaussian(dim, GaussianFamily::g2(kappa))),
                          s * gaussian(dim, GaussianFamily::g3(1 / kappa)));
    }, 1e-10);
    v.check("F g3 = g2(1/k)/sqrt k" + k, [&] {
      return max_abs_diff(fourier_transform(gaussian(dim, GaussianFamily::g3(kappa))),
                          s * gaussian(dim, GaussianFamily::g2(1 / kappa)));
    }, 1e-10);
  }
  v.check("F g4 = g5", [&] {
    return max_abs_diff(fourier_transform(gaussian(dim, GaussianFamily::g4())), gaussian(dim, GaussianFamily::g5()));
  }, 1e-12);
  v.check("F g5 = g4", [&] {
    return max_abs_diff(fourier_transform(gaussian(dim, GaussianFamily::g5())), gaussian(dim, GaussianFamily::g4()));
  }, 1e-12);

  const Complex tau(0.0, 1.0 / d);
  const double rs = 1.0 / std::sqrt(d);
  v.check("g1 = theta3 / sqrt d", [&] {
    const GridFunction g = gaussian(dim, GaussianFamily::g1());
    double e = 0;
    for (int n : dim.indices()) e = std::max(e, std::abs(g(n) - rs * theta(ThetaKind::Theta3, {n / d, tau})));
    return e;
  }, 1e-12);
  v.check("g2 = theta4 / sqrt d", [&] {
    const GridFunction g = gaussian(dim, GaussianFamily::g2());
    double e = 0;
    for (int n : dim.indices()) e = std::max(e, std::abs(g(n) - rs * theta(ThetaKind::Theta4, {n / d, tau})));
    return e;
  }, 1e-12);
  v.check("g3 = (-1)^n theta2 / sqrt d", [&] {
    const GridFunction g = gaussian(dim, GaussianFamily::g3());
    double e = 0;
    for (int n : dim.indices()) {
      const double sign = n % 2 == 0 ? 1.0 : -1.0;
      e = std::max(e, std::abs(g(n) - sign * rs * theta(ThetaKind::Theta2, {n / d, tau})));
    }
    return e;
  }, 1e-12);
  for (int i = 1; i <= 5; ++i) {
    const GaussianFamily fam = GaussianFamily::standard(i);
    v.check("closed-form norm g" + std::to_string(i), [&] {
      return std::abs(norm_squared_closed_form(dim, fam) - gaussian(dim, fam).squared_norm());
    }, 1e-12);
  }

  const KravchukTable kt = kravchuk_table(dim);
  const int j = dim.j();
  v.check("Kravchuk orthogonality (relative)", [&] {
    double e = 0;
    for (int m : dim.indices()) {
      for (int l : dim.indices()) {
        double acc = 0;
        for (int n : dim.indices()) acc += binomial(2 * j, j + n) * kt.polynomial(m, n) * kt.polynomial(l, n);
        acc /= std::pow(4.0, j);
        const double expect = m == l ? binomial(2 * j, j + m) : 0.0;
        e = std::max(e, std::abs(acc - expect) / binomial(2 * j, j + m));
      }
    }
    return e;
  }, 1e-9);
  v.check("Kravchuk symmetry", [&] {
    double e = 0;
    for (int m : dim.indices()) {
      for (int n : dim.indices()) e = std::max(e, std::abs(kt.function(m, n) - kt.function(n, m)));
    }
    return e;
  }, 1e-12);
  v.check("Kravchuk recurrence", [&] {
    double e = 0;
    auto k = [&](int n, int m) { return dim.contains(m) ? kt.function(n, m) : 0.0; };
    for (int n : dim.indices()) {
      for (int m : dim.indices()) {
        const double lhs = std::sqrt(double(j - m) * (j + m + 1)) * k(n, m + 1) +
                           std::sqrt(double(j + m) * (j - m + 1)) * k(n, m - 1);
        e = std::max(e, std::abs(lhs + 2.0 * n * k(n, m)));
      }
    }
    return e;
  }, 1e-10);
  const Su2Generators su = su2_generators(dim);
  const LinearOperator kk = kravchuk_transform(dim);
  v.check("K unitary", [&] { return max_abs_diff(kk * kk.adjoint(), id); }, 1e-12);
  v.check("K^4 = I", [&] { return max_abs_diff(kk * kk * kk * kk, id); }, 1e-12);
  v.check("J_x = K J_z K^+", [&] { return max_abs_diff(kk * su.jz * kk.adjoint(), su.jx); }, 1e-10);
  v.check("[J_x, J_y] = i J_z", [&] { return max_abs_diff(commutator(su.jx, su.jy), kI * su.jz); }, 1e-12);

  const GridFunction g1 = standard_gaussian(dim, 1);
  v.check("Wigner marginals (G1)", [&] {
    const WignerMap w = wigner(g1);
    const GridFunction fg = fourier_transform(g1);
    double e = 0;
    for (int n : dim.indices()) {
      double row = 0, col = 0;
      for (int m : dim.indices()) {
        row += w(n, m);
        col += w(m, n);
      }
      e = std::max({e, std::abs(row - std::norm(g1(n))), std::abs(col - std::norm(fg(n)))});
    }
    return e;
  }, 1e-10);
  for (GaussianKind kind : {GaussianKind::G1, GaussianKind::G2, GaussianKind::G3}) {
    v.check("Wigner product decomposition " + to_string(kind), [&] {
      return max_abs_diff(wigner_product_decomposition(kind, 1.0, dim), wigner(gaussian(dim, GaussianFamily::make(kind))));
    }, 1e-10);
  }
  v.check_true("Wigner covariance under F (g4)", [&] {
    return wigner_fourier_covariance_check(gaussian(dim, GaussianFamily::g4()));
  });

  for (int i = 1; i <= 5; ++i) {
    v.check("coherent resolution of identity G" + std::to_string(i), [&] {
      return max_abs_diff(coherent_family(dim, i).resolution(), id);
    }, 1e-10);
  }
  v.check("F |a,b>_2 = |b,-a>_3", [&] {
    const CoherentFamily c2 = coherent_family(dim, 2), c3 = coherent_family(dim, 3);
    double e = 0;
    for (int a : dim.indices()) {
      for (int b : dim.indices()) e = std::max(e, max_abs_diff(f * c2.state(a, b), c3.state(b, -a)));
    }
    return e;
  }, 1e-10);
  v.check("F H_2 F^+ = H_3", [&] {
    return max_abs_diff(f * frame_quantized_hamiltonian(dim, 2) * f.adjoint(), frame_quantized_hamiltonian(dim, 3));
  }, 1e-10);
  v.check("F H_4 F^+ = H_5", [&] {
    return max_abs_diff(f * frame_quantized_hamiltonian(dim, 4) * f.adjoint(), frame_quantized_hamiltonian(dim, 5));
  }, 1e-10);
  for (const OscillatorKind& k : {OscillatorKind::fourier(), OscillatorKind::harper(), OscillatorKind::frame_quantized(1)}) {
    v.check("[F, " + to_string(k) + "] = 0", [&] {
      return commutator(f, hamiltonian(dim, k)).max_abs();
    }, 1e-10);
  }

  try {
    const HarperBasis hb = harper_basis(dim);
    v.check("Harper functions: F h_n = (-i)^n h_n", [&] { return hb.max_fourier_residual; }, 1e-8);
    v.check("F^(1/2) F^(1/2) = F", [&] {
      const LinearOperator h = fractional_fourier(hb, 0.5);
      return max_abs_diff(h * h, f);
    }, 1e-8);
  } catch (const AmbiguousSignPattern& ex) {
    v.note(std::string("Harper ordering skipped: ") + ex.what());
  }

  for (int i = 1; i <= 5; ++i) {
    v.check("Gram-Schmidt ground state G" + std::to_string(i), [&] {
      const GridFunction g = standard_gaussian(dim, i);
      return max_abs_diff(gram_schmidt_oscillator(dim, i).hamiltonian * g, 0.5 * g);
    }, 1e-10);
  }
  v.check("weight g4 reproduces Kravchuk functions", [&] {
    const GridFunction root = GridFunction::from_fn(dim, [&](int n) {
      return std::sqrt(gaussian(dim, GaussianFamily::g4())(n).real());
    });
    const WeightedBasis wb = weighted_orthonormal_functions(root);
    double e = 0;
    for (int m : dim.indices()) {
      const double sign = (j + m) % 2 == 0 ? 1.0 : -1.0;
      e = std::max(e, max_abs_diff(sign * wb.functions[static_cast<std::size_t>(m + j)], kt.function_row(m)));
    }
    return e;
  }, 1e-8);
  v.check_true("H_Kravchuk full-length progression, period 2 pi", [&] {
    const RevivalReport r = detect_revivals(
        eigendecompose_hermitian(hamiltonian(dim, OscillatorKind::kravchuk())), 3, 1e-8);
    return r.full_spectrum() && std::abs(r.progressions.front().period - 2 * kPi) < 1e-8;
  });
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& os = std::cout) {
  const GridDim dim = grid(cfg);
  Verifier v(os);
  if (dim.d() == 3) verify_qutrit(v);
  verify_dimension(v, dim);
  os << "SUMMARY " << v.passes() << " passed, " << v.failures() << " failed\n";
  return v.failures() == 0 ? kOk : kFailure;
}

}  // namespace finosc::cli
