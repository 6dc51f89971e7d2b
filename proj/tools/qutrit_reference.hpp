#pragma once

// Closed-form d = 3 reference values (rows n = -1, 0, 1).

#include <array>
#include <cmath>

namespace finosc::reference {

using Column = std::array<double, 3>;

inline const double kS3 = std::sqrt(3.0);
inline const double kS2 = std::sqrt(2.0);
inline const double kS23 = std::sqrt(2.0 / 3.0);

// Fourier eigenvectors with eigenvalues 1, -i, -1.
inline const Column kFm1 = {0.5 * std::sqrt(1 - 1 / kS3), std::sqrt(1 + 1 / kS3) / kS2,
                            0.5 * std::sqrt(1 - 1 / kS3)};
inline const Column kF0 = {-1 / kS2, 0.0, 1 / kS2};
inline const Column kF1 = {0.5 * std::sqrt(1 + 1 / kS3), -std::sqrt(1 - 1 / kS3) / kS2,
                           0.5 * std::sqrt(1 + 1 / kS3)};

// Kravchuk functions K_{-1}, K_0, K_1.
inline const Column kKm1 = {0.5, 1 / kS2, 0.5};
inline const Column kK0 = {1 / kS2, 0.0, -1 / kS2};
inline const Column kK1 = {0.5, -1 / kS2, 0.5};

// Normalized Gaussians as tabulated.
inline const Column kG1 = {0.5 * std::sqrt(1 - 1 / kS3), std::sqrt(1 + 1 / kS3) / kS2,
                           0.5 * std::sqrt(1 - 1 / kS3)};
inline const Column kG2 = {0.5 * std::sqrt(1 + kS23), std::sqrt(1 - kS23) / kS2,
                           0.5 * std::sqrt(1 + kS23)};
inline const Column kG3 = {-0.5 * std::sqrt(1 - kS23), std::sqrt(1 + kS23) / kS2,
                           -0.5 * std::sqrt(1 - kS23)};
inline const Column kG4 = {1 / std::sqrt(6.0), 2 / std::sqrt(6.0), 1 / std::sqrt(6.0)};
inline const Column kG5 = {1 / (3 * kS2), 4 / (3 * kS2), 1 / (3 * kS2)};

// Tabulated spectra, ascending.
inline const Column kFourierSpectrum = {0.5 * (1 - 1 / kS3), 0.5 * (1 + 1 / kS3), 1.0};
inline const Column kHarperSpectrum = {0.5 * (1 - 1 / kS3), 0.5 * (1 + 1 / kS3), 3.0};
inline const Column kH1Spectrum = {0.5 * (1 - 1 / (2 * kS3)), 0.75, 0.25 * (3 + 1 / kS3)};

}  // namespace finosc::reference
