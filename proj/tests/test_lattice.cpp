#include <catch2/catch_amalgamated.hpp>

#include "finosc/finosc.hpp"
#include "oracles.hpp"

using namespace finosc;
using Catch::Approx;

namespace {
GridDim dim_of(int d) { return GridDim::from_dimension(d); }
}  // namespace

TEST_CASE("grid dimension validation", "[grid]") {
  CHECK_THROWS_AS(GridDim::from_dimension(4), InvalidArgument);
  CHECK_THROWS_AS(GridDim::from_dimension(1), InvalidArgument);
  CHECK_THROWS_AS(GridDim::from_j(0), InvalidArgument);
  CHECK_THROWS_WITH(GridDim::from_dimension(4), Catch::Matchers::ContainsSubstring("odd"));
  const GridDim d = dim_of(7);
  CHECK(d.j() == 3);
  std::vector<int> idx;
  for (int n : d.indices()) idx.push_back(n);
  CHECK(idx == std::vector<int>{-3, -2, -1, 0, 1, 2, 3});
  CHECK(d.wrap(4) == -3);
  CHECK(d.wrap(-4) == 3);
  CHECK(d.wrap(14) == 0);
}

TEST_CASE("grid functions read periodically", "[grid]") {
  const GridDim d = dim_of(5);
  const GridFunction f = GridFunction::from_fn(d, [](int n) { return double(n); });
  CHECK(f(3).real() == -2.0);
  CHECK(f(-3).real() == 2.0);
  CHECK(f.reflected()(1).real() == -1.0);
  CHECK_THROWS_AS(f + GridFunction(dim_of(7)), DimensionMismatch);
  CHECK_THROWS_AS(GridFunction(d).normalized(), InvalidArgument);
}

TEST_CASE("inner product", "[grid]") {
  const GridDim d = dim_of(3);
  for (int k : d.indices()) {
    for (int l : d.indices()) {
      CHECK(inner_product(GridFunction::delta(d, k), GridFunction::delta(d, l)) == Complex(k == l ? 1.0 : 0.0));
    }
  }
  CHECK(inner_product(GridFunction(d), GridFunction(d)) == Complex(0.0));
  Vector phi(3), psi(3);
  phi << 1.0, kI, 0.0;
  psi << 1.0, 1.0, 1.0;
  const Complex ip = inner_product(GridFunction(d, phi), GridFunction(d, psi));
  CHECK(ip.real() == Approx(1.0));
  CHECK(ip.imag() == Approx(-1.0));
  CHECK_THROWS_AS(inner_product(GridFunction(d), GridFunction(dim_of(5))), DimensionMismatch);
}

TEST_CASE("linear operators", "[grid]") {
  const GridDim d = dim_of(5);
  const LinearOperator m = oracle::random_hermitian(d, 3) + Complex(0, 1) * LinearOperator::identity(d);
  CHECK(max_abs_diff(m.adjoint().adjoint(), m) == 0.0);
  CHECK_THROWS_AS(LinearOperator(d, Matrix::Zero(3, 3)), DimensionMismatch);
  CHECK(LinearOperator::outer(GridFunction::delta(d, 1), GridFunction::delta(d, -2))(1, -2) == Complex(1.0));
}

TEST_CASE("Fourier transform matches the brute-force DFT", "[fourier]") {
  for (int d : {3, 7, 15, 31}) {
    const GridFunction psi = oracle::random_vector(dim_of(d), 10 + d);
    CHECK(max_abs_diff(fourier_transform(psi), oracle::dft(psi)) < 1e-12);
    CHECK(max_abs_diff(inverse_fourier_transform(psi), oracle::dft(psi, +1.0)) < 1e-12);
    CHECK(max_abs_diff(fourier_operator(dim_of(d)) * psi, oracle::dft(psi)) < 1e-12);
  }
}

TEST_CASE("Fourier examples", "[fourier]") {
  const GridDim d3 = dim_of(3);
  const GridFunction f0 = fourier_transform(GridFunction::delta(d3, 0));
  for (int k : d3.indices()) CHECK(std::abs(f0(k) - 1.0 / std::sqrt(3.0)) < 1e-15);

  const GridDim d15 = dim_of(15);
  const GridFunction psi = oracle::random_vector(d15, 5);
  CHECK(max_abs_diff(fourier_transform(fourier_transform(psi)), psi.reflected()) < 1e-12);

  Vector v(3);
  v << -1 / std::sqrt(2.0), 0, 1 / std::sqrt(2.0);
  const GridFunction ff0(d3, v);
  CHECK(max_abs_diff(fourier_transform(ff0), -kI * ff0) < 1e-15);
}

TEST_CASE("Fourier invariants", "[fourier]") {
  for (int d : {3, 15, 101, 201}) {
    const GridDim dim = dim_of(d);
    const GridFunction psi = oracle::random_vector(dim, d);
    CHECK(std::abs(fourier_transform(psi).norm() - psi.norm()) < 1e-12 * psi.norm());
  }
  for (int d : {3, 9, 31}) {
    const GridDim dim = dim_of(d);
    const LinearOperator f = fourier_operator(dim);
    const LinearOperator f2 = f * f;
    CHECK(max_abs_diff(f2 * f2, LinearOperator::identity(dim)) < 1e-12);
    CHECK(max_abs_diff(f2, parity_operator(dim)) < 1e-12);
    const GridFunction r = oracle::random_vector(dim, 1);
    const GridFunction even = r + r.reflected();
    CHECK(max_abs_diff(fourier_transform(even), inverse_fourier_transform(even)) < 1e-12);
    CHECK(is_even(even));
    CHECK_FALSE(is_even(r));
    CHECK(max_abs_diff(momentum_operator(dim), f.adjoint() * position_operator(dim) * f) == 0.0);
  }
}

TEST_CASE("convolution", "[fourier]") {
  const GridDim d7 = dim_of(7);
  const GridFunction psi = oracle::random_vector(d7, 2);
  const GridFunction phi = oracle::random_vector(d7, 3);
  CHECK(max_abs_diff(convolve(GridFunction::delta(d7, 0), psi), psi) < 1e-15);
  CHECK(max_abs_diff(convolve(phi, psi), convolve(psi, phi)) < 1e-13);

  const GridDim d15 = dim_of(15);
  const GridFunction a = oracle::random_vector(d15, 4), b = oracle::random_vector(d15, 5);
  const Vector prod = std::sqrt(15.0) * fourier_transform(a).values().cwiseProduct(fourier_transform(b).values());
  CHECK(max_abs_diff(fourier_transform(convolve(a, b)), GridFunction(d15, prod)) < 1e-12);

  const GridDim d3 = dim_of(3);
  CHECK(max_abs_diff(convolve(GridFunction::delta(d3, 1), GridFunction::delta(d3, 1)), GridFunction::delta(d3, -1)) == 0.0);
  CHECK_THROWS_AS(convolve(psi, a), DimensionMismatch);
}

TEST_CASE("Jacobi eigensolver examples", "[spectral]") {
  const GridDim d3 = dim_of(3);
  const SpectralDecomposition s = eigendecompose_hermitian(position_operator(d3));
  CHECK(s.eigenvalues == std::vector<double>{-1.0, 0.0, 1.0});
  for (int k = 0; k < 3; ++k) CHECK(max_abs_diff(s.eigenvectors[k], GridFunction::delta(d3, k - 1)) == 0.0);

  const SpectralDecomposition sx = eigendecompose_hermitian(su2_generators(d3).jx);
  CHECK(sx.eigenvalues[0] == Approx(-1.0).margin(1e-14));
  CHECK(sx.eigenvalues[1] == Approx(0.0).margin(1e-14));
  CHECK(sx.eigenvalues[2] == Approx(1.0).margin(1e-14));

  const SpectralDecomposition hf = eigendecompose_hermitian(hamiltonian(d3, OscillatorKind::fourier()));
  CHECK(std::abs(hf.eigenvalues[0] - 0.5 * (1 - 1 / std::sqrt(3.0))) < 1e-12);
  CHECK(std::abs(hf.eigenvalues[1] - 0.5 * (1 + 1 / std::sqrt(3.0))) < 1e-12);
  CHECK(std::abs(hf.eigenvalues[2] - 1.0) < 1e-12);
}

TEST_CASE("Jacobi eigensolver against the Eigen oracle", "[spectral]") {
  for (int d : {3, 5, 15, 31, 61}) {
    const GridDim dim = dim_of(d);
    const LinearOperator m = oracle::random_hermitian(dim, 100 + d);
    const SpectralDecomposition s = eigendecompose_hermitian(m);
    const Eigen::VectorXd ref = oracle::eigenvalues(m);
    const double scale = m.frobenius_norm();
    for (std::size_t k = 0; k < s.size(); ++k) {
      CHECK(std::abs(s.eigenvalues[k] - ref[static_cast<Eigen::Index>(k)]) < 1e-12 * scale);
      CHECK((m * s.eigenvectors[k] - s.eigenvalues[k] * s.eigenvectors[k]).norm() <= 1e-10 * scale);
    }
    CHECK(std::is_sorted(s.eigenvalues.begin(), s.eigenvalues.end()));
    const Matrix v = s.eigenvector_matrix();
    CHECK((v.adjoint() * v - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(max_abs_diff(s.reconstruct(), m) < 1e-10 * scale);
  }
}

TEST_CASE("Jacobi eigensolver determinism, phase and degeneracy", "[spectral]") {
  const GridDim d = dim_of(9);
  const LinearOperator m = oracle::random_hermitian(d, 7);
  const SpectralDecomposition a = eigendecompose_hermitian(m), b = eigendecompose_hermitian(m);
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a.eigenvalues[k] == b.eigenvalues[k]);
    CHECK(max_abs_diff(a.eigenvectors[k], b.eigenvectors[k]) == 0.0);
    const Vector& v = a.eigenvectors[k].values();
    Eigen::Index top = 0;
    v.cwiseAbs().maxCoeff(&top);
    CHECK(std::abs(v[top].imag()) < 1e-15);
    CHECK(v[top].real() > 0);
  }

  // Parity has eigenvalues -1 (j-fold) and +1 (j+1-fold).
  const SpectralDecomposition p = eigendecompose_hermitian(parity_operator(d));
  CHECK(p.has_degeneracy());
  REQUIRE(p.degenerate_clusters.size() == 2);
  CHECK(p.degenerate_clusters[0].last - p.degenerate_clusters[0].first + 1 == 4);
  const Matrix v = p.eigenvector_matrix();
  CHECK((v.adjoint() * v - Matrix::Identity(9, 9)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(max_abs_diff(p.reconstruct(), parity_operator(d)) < 1e-12);

  Matrix bad = Matrix::Zero(9, 9);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(eigendecompose_hermitian(LinearOperator(d, bad)), NotHermitian);
  Tolerances strict;
  strict.max_sweeps = 0;
  CHECK_THROWS_AS(eigendecompose_hermitian(m, strict), ConvergenceFailure);
}

TEST_CASE("operator exponential", "[spectral]") {
  const GridDim d3 = dim_of(3);
  CHECK(max_abs_diff(operator_exponential(LinearOperator::zero(d3), kI), LinearOperator::identity(d3)) < 1e-15);
  const LinearOperator u = operator_exponential(su2_generators(d3).jz, kI * kPi);
  const LinearOperator expect = LinearOperator::diagonal(d3, [](int n) { return n == 0 ? 1.0 : -1.0; });
  CHECK(max_abs_diff(u, expect) < 1e-15);
  const GridDim d11 = dim_of(11);
  const LinearOperator w = operator_exponential(oracle::random_hermitian(d11, 9), kI * 0.37);
  CHECK(max_abs_diff(w * w.adjoint(), LinearOperator::identity(d11)) < 1e-12);
}
