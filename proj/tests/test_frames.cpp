#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "finosc/finosc.hpp"
#include "oracles.hpp"

using namespace finosc;

namespace {
GridDim dim_of(int d) { return GridDim::from_dimension(d); }
}  // namespace

TEST_CASE("Schwinger operators", "[frames]") {
  const GridDim d3 = dim_of(3);
  CHECK(max_abs_diff(schwinger(d3, SchwingerKind::A, 1) * GridFunction::delta(d3, 0), GridFunction::delta(d3, 1)) == 0.0);
  const GridDim d7 = dim_of(7);
  const LinearOperator id = LinearOperator::identity(d7);
  CHECK(max_abs_diff(schwinger(d7, SchwingerKind::A, 7), id) < 1e-12);
  CHECK(max_abs_diff(schwinger(d7, SchwingerKind::B, 7), id) < 1e-12);
  LinearOperator a = id, b = id;
  for (int k = 0; k < 7; ++k) {
    a = a * schwinger(d7, SchwingerKind::A, 1);
    b = b * schwinger(d7, SchwingerKind::B, 1);
  }
  CHECK(max_abs_diff(a, id) < 1e-12);
  CHECK(max_abs_diff(b, id) < 1e-12);

  const GridDim d5 = dim_of(5);
  for (int al : d5.indices()) {
    for (int be : d5.indices()) {
      const LinearOperator lhs = schwinger(d5, SchwingerKind::A, al) * schwinger(d5, SchwingerKind::B, be);
      const LinearOperator rhs = std::polar(1.0, -2 * kPi * al * be / 5) *
                                 (schwinger(d5, SchwingerKind::B, be) * schwinger(d5, SchwingerKind::A, al));
      CHECK(max_abs_diff(lhs, rhs) < 1e-12);
    }
  }
}

TEST_CASE("displacement operators", "[frames]") {
  const GridDim d3 = dim_of(3);
  CHECK(max_abs_diff(displacement(d3, 0, 0), LinearOperator::identity(d3)) == 0.0);
  // D(alpha, beta) against its factored definition.
  const GridDim d5 = dim_of(5);
  for (int al : d5.indices()) {
    for (int be : d5.indices()) {
      const LinearOperator ref = std::polar(1.0, kPi * al * be / 5) *
                                 (schwinger(d5, SchwingerKind::A, al) * schwinger(d5, SchwingerKind::B, be));
      CHECK(max_abs_diff(displacement(d5, al, be), ref) < 1e-12);
      const LinearOperator dd = displacement(d5, al, be);
      CHECK(max_abs_diff(dd * dd.adjoint(), LinearOperator::identity(d5)) < 1e-12);
    }
  }
  for (int a1 : d3.indices()) {
    for (int b1 : d3.indices()) {
      for (int a2 : d3.indices()) {
        for (int b2 : d3.indices()) {
          const LinearOperator lhs = displacement(d3, a1, b1) * displacement(d3, a2, b2);
          const LinearOperator rhs = std::polar(1.0, -kPi * (a1 * b2 - a2 * b1) / 3) * displacement(d3, a1 + a2, b1 + b2);
          CHECK(max_abs_diff(lhs, rhs) < 1e-12);
        }
      }
    }
  }
  // Reduction mod d changes the sign for odd beta.
  CHECK(max_abs_diff(displacement(d3, 4, 1), Complex(-1.0) * displacement(d3, 1, 1)) < 1e-12);
  CHECK(DisplacementLabel::reduced(d3, 4, -2) == DisplacementLabel{1, 1});

  const GridDim d7 = dim_of(7);
  const LinearOperator f = fourier_operator(d7);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> u(-3, 3);
  for (int r = 0; r < 20; ++r) {
    const int al = u(rng), be = u(rng);
    CHECK(max_abs_diff(f * displacement(d7, al, be) * f.adjoint(), displacement(d7, be, -al)) < 1e-12);
  }
}

TEST_CASE("coherent families", "[frames]") {
  for (int d : {3, 5, 9}) {
    const GridDim dim = dim_of(d);
    for (int i = 1; i <= 5; ++i) {
      const CoherentFamily fam = coherent_family(dim, i);
      CHECK(max_abs_diff(fam.state(0, 0), standard_gaussian(dim, i)) == 0.0);
      for (int a : dim.indices()) {
        for (int b : dim.indices()) CHECK(std::abs(fam.state(a, b).norm() - 1.0) < 1e-12);
      }
      CHECK(max_abs_diff(fam.resolution(), LinearOperator::identity(dim)) < 1e-10);
    }
  }
  const GridDim d5 = dim_of(5);
  const LinearOperator f = fourier_operator(d5);
  const CoherentFamily c2 = coherent_family(d5, 2), c3 = coherent_family(d5, 3);
  for (int a : d5.indices()) {
    for (int b : d5.indices()) CHECK(max_abs_diff(f * c2.state(a, b), c3.state(b, -a)) < 1e-10);
  }
  const CoherentFamily c1 = coherent_family(d5, 1);
  for (int a : d5.indices()) {
    for (int b : d5.indices()) CHECK(max_abs_diff(f * c1.state(a, b), c1.state(b, -a)) < 1e-10);
  }
  CHECK_THROWS_AS(CoherentFamily(GridFunction::delta(d5, 0) * 2.0), InvalidArgument);
}

TEST_CASE("frame quantization and dequantization", "[frames]") {
  const GridDim d3 = dim_of(3);
  const CoherentFamily fam = coherent_family(d3, 1);
  CHECK(max_abs_diff(quantize(fam, [](int, int) { return Complex(1.0); }), LinearOperator::identity(d3)) < 1e-10);
  CHECK(max_abs_diff(quantize(fam, [](int, int) { return Complex(2.5); }), Complex(2.5) * LinearOperator::identity(d3)) < 1e-10);

  // The operator A_f for f = (a^2 + b^2)/2; its levels are the tabulated d = 3 values.
  const LinearOperator af = quantize(fam, [](int a, int b) { return Complex(0.5 * (a * a + b * b)); });
  const SpectralDecomposition s = eigendecompose_hermitian(af);
  const double r3 = std::sqrt(3.0);
  CHECK(std::abs(s.eigenvalues[0] - 0.5 * (1 - 1 / (2 * r3))) < 1e-10);
  CHECK(std::abs(s.eigenvalues[1] - 0.75) < 1e-10);
  CHECK(std::abs(s.eigenvalues[2] - 0.25 * (3 + 1 / r3)) < 1e-10);

  const GridDim d5 = dim_of(5);
  const CoherentFamily f5 = coherent_family(d5, 4);
  std::mt19937 rng(1);
  std::normal_distribution<double> nd;
  Eigen::MatrixXd vals(5, 5);
  for (int i = 0; i < 25; ++i) vals(i / 5, i % 5) = nd(rng);
  const LinearOperator q = quantize(f5, [&](int a, int b) { return Complex(vals(a + 2, b + 2)); });
  CHECK(q.hermiticity_defect() < 1e-12);

  const PhaseSpaceTable one = dequantize(f5, LinearOperator::identity(d5));
  CHECK((one.values.array() - 1.0).abs().maxCoeff() < 1e-12);
  const LinearOperator proj = LinearOperator::outer(f5.state(1, -2), f5.state(1, -2));
  CHECK(std::abs(dequantize(f5, proj)(1, -2) - 1.0) < 1e-12);
  const PhaseSpaceTable h = dequantize(f5, oracle::random_hermitian(d5, 4));
  CHECK(h.values.imag().cwiseAbs().maxCoeff() < 1e-12);
  CHECK_THROWS_AS(dequantize(f5, LinearOperator::identity(d3)), DimensionMismatch);
}

TEST_CASE("frame analysis", "[frames]") {
  const GridDim d3 = dim_of(3);
  std::vector<GridFunction> basis;
  for (int k : d3.indices()) basis.push_back(GridFunction::delta(d3, k));
  const FrameAnalysis fa = frame_analyze(basis);
  CHECK(fa.is_tight);
  REQUIRE(fa.frame);
  for (double w : fa.frame->weights) CHECK(std::abs(w - 1.0) < 1e-12);
  CHECK(std::abs(fa.frame->weight_sum() - 3.0) < 1e-12);

  const CoherentFamily fam = coherent_family(d3, 4);
  std::vector<GridFunction> cs;
  for (int a : d3.indices()) {
    for (int b : d3.indices()) cs.push_back(fam.state(a, b) / std::sqrt(3.0));
  }
  const FrameAnalysis fc = frame_analyze(cs);
  CHECK(fc.is_tight);
  REQUIRE(fc.frame);
  CHECK(std::abs(fc.frame->weight_sum() - 3.0) < 1e-10);
  CHECK(max_abs_diff(fc.frame->frame_operator(), LinearOperator::identity(d3)) < 1e-10);
  const GridFunction psi = oracle::random_vector(d3, 77);
  double parseval = 0;
  for (std::size_t i = 0; i < fc.frame->vectors.size(); ++i) {
    parseval += fc.frame->weights[i] * std::norm(inner_product(fc.frame->vectors[i], psi));
  }
  CHECK(std::abs(parseval - psi.squared_norm()) < 1e-10);

  std::vector<GridFunction> single{GridFunction::delta(d3, 0)};
  const FrameAnalysis fs = frame_analyze(single);
  CHECK_FALSE(fs.is_frame);
  CHECK_FALSE(fs.is_tight);
  CHECK(std::abs(fs.lower_bound) < 1e-12);

  // Scaled basis: tight with bound 4, weights rescaled to resolve the identity.
  std::vector<GridFunction> scaled;
  for (int k : d3.indices()) scaled.push_back(2.0 * GridFunction::delta(d3, k));
  const FrameAnalysis fb = frame_analyze(scaled);
  CHECK(fb.is_tight);
  CHECK(std::abs(fb.upper_bound - 4.0) < 1e-12);
  CHECK(max_abs_diff(fb.frame->frame_operator(), LinearOperator::identity(d3)) < 1e-12);

  std::vector<GridFunction> with_zero{GridFunction::delta(d3, 0), GridFunction(d3)};
  CHECK_THROWS_AS(frame_analyze(with_zero), InvalidArgument);
  CHECK_THROWS_AS(frame_analyze(std::vector<GridFunction>{}), InvalidArgument);
}
