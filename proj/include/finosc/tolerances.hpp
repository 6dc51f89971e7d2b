#pragma once

namespace finosc {

// Numerical thresholds used across the library. Every routine that makes a
// tolerance-based decision takes one of these (defaulted), so callers can
// tighten or relax them without touching code.
struct Tolerances {
  // Largest |M - M^+| entry accepted as Hermitian.
  double hermitian = 1e-10;
  // Jacobi stops once the off-diagonal Frobenius mass drops below this
  // fraction of ||M||_F.
  double eigen_convergence = 1e-14;
  int max_sweeps = 100;
  // Neighbouring eigenvalues closer than this form a degenerate cluster.
  double degeneracy_gap = 1e-10;
  // Relative magnitude window inside which two entries tie for "largest"
  // when fixing eigenvector phases.
  double phase_tie = 1e-12;
  // Theta / lattice sums stop once the next term is below this fraction of
  // the accumulated magnitude.
  double series_relative = 1e-18;
  int series_min_terms = 3;
  // Frame operator eigenvalue spread below which a frame counts as tight.
  double frame_tightness = 1e-10;
  // Entries with |v| < sign_zero * max|v| count as zeros in sign scans.
  double sign_zero = 1e-9;
  // Per-step cancellation ratio above which Gram-Schmidt gives up.
  double gram_schmidt_condition = 1e12;
  // Accepted imaginary residue in the Wigner sum (relative to ||psi||^2).
  double wigner_imaginary = 1e-12;
  // Evenness / parity checks.
  double parity = 1e-12;
  // Unit-norm checks on fiducial vectors.
  double unit_norm = 1e-12;
};

inline const Tolerances& default_tolerances() {
  static const Tolerances defaults{};
  return defaults;
}

}  // namespace finosc
