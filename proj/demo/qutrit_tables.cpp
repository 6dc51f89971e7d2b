// Prints the d = 3 Gaussians, Kravchuk functions and oscillator levels.

#include <cstdio>

#include "finosc/finosc.hpp"

int main() {
  using namespace finosc;
  const GridDim dim = GridDim::from_dimension(3);

  std::printf("%4s", "n");
  for (int i = 1; i <= 5; ++i) std::printf("%14s%d", "G", i);
  std::printf("\n");
  for (int n : dim.indices()) {
    std::printf("%4d", n);
    for (int i = 1; i <= 5; ++i) std::printf("%15.10f", standard_gaussian(dim, i)(n).real());
    std::printf("\n");
  }

  const KravchukTable kt = kravchuk_table(dim);
  std::printf("\n%4s%15s%15s%15s\n", "n", "K_-1", "K_0", "K_1");
  for (int n : dim.indices()) {
    std::printf("%4d", n);
    for (int m : dim.indices()) std::printf("%15.10f", kt.function(m, n));
    std::printf("\n");
  }

  std::printf("\n");
  for (const OscillatorKind& k : {OscillatorKind::fourier(), OscillatorKind::harper(), OscillatorKind::kravchuk(),
                                  OscillatorKind::frame_quantized(1), OscillatorKind::gram_schmidt(1)}) {
    const SpectralDecomposition s = eigendecompose_hermitian(hamiltonian(dim, k));
    std::printf("%-14s", to_string(k).c_str());
    for (double e : s.eigenvalues) std::printf("%15.10f", e);
    std::printf("\n");
  }
}
