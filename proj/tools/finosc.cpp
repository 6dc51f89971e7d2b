#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>

#include "commands.hpp"

namespace {

using finosc::cli::RunConfig;

const std::map<std::string, finosc::GaussianKind> kFamilies{
    {"g1", finosc::GaussianKind::G1}, {"g2", finosc::GaussianKind::G2}, {"g3", finosc::GaussianKind::G3},
    {"g4", finosc::GaussianKind::G4}, {"g5", finosc::GaussianKind::G5}};

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--dim", cfg.dim, "odd dimension d = 2j+1 >= 3");
  sub->add_option("--out", cfg.out, "output file (default: stdout, or $FINOSC_OUT_DIR/<name>)");
  sub->add_option("--format", cfg.format, "csv or svg")->check(CLI::IsMember({"csv", "svg"}));
}

void add_family(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--family", cfg.family, "finite Gaussian g1..g5")
      ->transform(CLI::CheckedTransformer(kFamilies, CLI::ignore_case));
  sub->add_option("--kappa", cfg.kappa, "width parameter for g1..g3");
}

void add_kind(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--kind", cfg.kind, "oscillator")
      ->check(CLI::IsMember({"fourier", "harper", "kravchuk", "frame", "gramschmidt", "deformed-fourier",
                             "deformed-harper"}));
  sub->add_option("--alpha", cfg.alpha, "deformation parameter in (0, 2)");
}

// Resolves an unset --out against FINOSC_OUT_DIR.
void default_output(RunConfig& cfg, const std::string& stem) {
  if (!cfg.out.empty()) return;
  const char* dir = std::getenv("FINOSC_OUT_DIR");
  if (dir == nullptr || *dir == '\0') return;
  std::filesystem::create_directories(dir);
  cfg.out = (std::filesystem::path(dir) / (stem + "_d" + std::to_string(cfg.dim) + "." + cfg.format)).string();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace finosc::cli;
  CLI::App app{"Finite Gaussians, Wigner functions, frames and finite oscillators"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* gauss = app.add_subcommand("gaussian", "normalized finite Gaussian profile");
  add_common(gauss, cfg);
  add_family(gauss, cfg);

  auto* wig = app.add_subcommand("wigner", "discrete Wigner function of a Gaussian or delta state");
  add_common(wig, cfg);
  add_family(wig, cfg);
  wig->add_option("--state", cfg.state, "delta<k> instead of the Gaussian");

  auto* spec = app.add_subcommand("spectrum", "eigenvalues of an oscillator Hamiltonian");
  add_common(spec, cfg);
  add_family(spec, cfg);
  add_kind(spec, cfg);
  spec->add_flag("--ground-state", cfg.ground_state, "write the ground-state profile instead");

  auto* ver = app.add_subcommand("verify", "run the identity checks at one dimension");
  ver->add_option("--dim", cfg.dim, "odd dimension d = 2j+1 >= 3");

  auto* rev = app.add_subcommand("revival", "equidistant level runs and fidelity trace");
  add_common(rev, cfg);
  add_family(rev, cfg);
  add_kind(rev, cfg);
  rev->add_option("--tol", cfg.tol, "gap agreement tolerance")->envname("FINOSC_TOL");
  rev->add_option("--min-len", cfg.min_len, "minimum number of levels in a run");
  rev->add_option("--trace", cfg.trace, "write |<psi(0)|psi(t)>| over [0, 2 period] here");
  rev->add_option("--seed", cfg.seed, "seed of the random initial state");
  rev->add_option("--samples", cfg.samples, "number of trace samples");

  auto* kt = app.add_subcommand("kravchuk-table", "Kravchuk polynomials and functions");
  add_common(kt, cfg);

  auto* fc = app.add_subcommand("frame-check", "frame bounds of the displaced-Gaussian family");
  add_common(fc, cfg);
  add_family(fc, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    validate(cfg);
    if (*gauss) {
      default_output(cfg, "gaussian_" + finosc::to_string(cfg.family));
      return cmd_gaussian(cfg);
    }
    if (*wig) {
      default_output(cfg, "wigner");
      return cmd_wigner(cfg);
    }
    if (*spec) {
      default_output(cfg, "spectrum_" + cfg.kind);
      return cmd_spectrum(cfg);
    }
    if (*ver) return cmd_verify(cfg);
    if (*rev) {
      default_output(cfg, "revival_" + cfg.kind);
      return cmd_revival(cfg);
    }
    if (*kt) {
      default_output(cfg, "kravchuk");
      return cmd_kravchuk_table(cfg);
    }
    if (*fc) {
      default_output(cfg, "frame_" + finosc::to_string(cfg.family));
      return cmd_frame_check(cfg);
    }
  } catch (const finosc::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
