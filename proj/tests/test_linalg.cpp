#include <doctest.h>

#include "wrdpm/errors.hpp"
#include "wrdpm/linalg.hpp"
#include "wrdpm/random.hpp"

using namespace wrdpm;

namespace {

Eigen::MatrixXd random_psd(Eigen::Index n, Eigen::Index rank, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXd f(n, rank);
  for (Eigen::Index i = 0; i < f.size(); ++i) f(i) = rng.normal();
  return f * f.transpose();
}

}  // namespace

TEST_CASE("paper block matrix factors exactly") {
  Eigen::Matrix3d b;
  b << .5, .05, .1,
       .05, .4, .05,
       .1, .05, .3;
  Eigen::MatrixXd x = factor_psd(b, 3);
  CHECK((x * x.transpose() - b).norm() < 1e-10);
  CHECK(x.row(0).squaredNorm() == doctest::Approx(.5));
}

TEST_CASE("identity and rank-one factors") {
  Eigen::MatrixXd x = factor_psd(Eigen::MatrixXd::Identity(4, 4), 4);
  CHECK((x.transpose() * x).isApprox(Eigen::MatrixXd::Identity(4, 4)));
  CHECK((x * x.transpose()).isApprox(Eigen::MatrixXd::Identity(4, 4)));

  Eigen::Vector3d v(-1, 2, 0.5);
  Eigen::MatrixXd r = factor_psd(Eigen::MatrixXd(v * v.transpose()), 1);
  CHECK(r.rows() == 3);
  CHECK(r.cols() == 1);
  // Canonical sign: first non-negligible entry is nonnegative.
  CHECK(r.col(0).isApprox(-v));
}

TEST_CASE("columns follow descending eigenvalues") {
  Eigen::MatrixXd m = Eigen::Vector4d(1, 5, 3, 0.5).asDiagonal();
  Eigen::VectorXd ev;
  Eigen::MatrixXd x = truncated_psd_factor(m, 2, &ev);
  CHECK(ev.isApprox(Eigen::Vector4d(5, 3, 1, 0.5)));
  CHECK(x.col(0).norm() == doctest::Approx(std::sqrt(5.0)));
  CHECK(x.col(1).norm() == doctest::Approx(std::sqrt(3.0)));
  CHECK(x(1, 0) > 0);
}

TEST_CASE("truncation gives the best rank-r approximation") {
  Eigen::MatrixXd m = random_psd(8, 8, 3);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m);
  Eigen::MatrixXd x = truncated_psd_factor(m, 3);
  // Frobenius error equals the norm of the discarded eigenvalues.
  CHECK((m - x * x.transpose()).norm() ==
        doctest::Approx(eig.eigenvalues().head(5).norm()).epsilon(1e-9));
}

TEST_CASE("negative eigenvalues") {
  Eigen::Matrix2d anti;
  anti << 0, 1, 1, 0;
  try {
    factor_psd(anti, 2);
    FAIL("expected NotPsdError");
  } catch (const NotPsdError& e) {
    CHECK(e.eigenvalue() == doctest::Approx(-1.0));
  }
  // Tiny negative eigenvalues within tolerance are clamped.
  Eigen::MatrixXd near = random_psd(5, 2, 4);
  near -= 1e-13 * Eigen::MatrixXd::Identity(5, 5);
  CHECK_NOTHROW(factor_psd(near, 5));
  CHECK_THROWS_AS(factor_psd(near, 5, 0.0), NotPsdError);
}

TEST_CASE("argument checks") {
  Eigen::MatrixXd asym = Eigen::MatrixXd::Identity(3, 3);
  asym(0, 1) = 0.5;
  CHECK_THROWS_AS(factor_psd(asym, 2), ValidationError);
  CHECK_THROWS_AS(factor_psd(Eigen::MatrixXd::Identity(3, 3), 0), ValidationError);
  CHECK_THROWS_AS(factor_psd(Eigen::MatrixXd::Identity(3, 3), 4), ValidationError);
  CHECK_THROWS_AS(factor_psd(Eigen::MatrixXd(2, 3), 1), ValidationError);
}

TEST_CASE("works for single precision") {
  Eigen::Matrix3f b;
  b << 2, 1, 0,
       1, 2, 1,
       0, 1, 2;
  Eigen::MatrixXf x = factor_psd(b, 3);
  CHECK((x * x.transpose() - b).norm() < 1e-5f);
  CHECK(offdiagonal_residual(b, x) < 1e-5f);
}

TEST_CASE("row helpers") {
  Eigen::MatrixXd x(3, 2);
  x << 3, 4,
       0, 0,
       -1, 0;
  CHECK(row_norms(x).isApprox(Eigen::Vector3d(5, 0, 1)));
  Eigen::MatrixXd u = normalize_rows(x);
  CHECK(u.row(0).isApprox(Eigen::RowVector2d(0.6, 0.8)));
  CHECK(u.row(1).isZero());
}

TEST_CASE("residual ignores the diagonal") {
  Eigen::MatrixXd x(2, 1);
  x << 1, 2;
  Eigen::Matrix2d a;
  a << 100, 2, 2, -7;
  CHECK(offdiagonal_residual(a, x) == 0);
  a(0, 1) = a(1, 0) = 5;
  CHECK(offdiagonal_residual(a, x) == doctest::Approx(std::sqrt(18.0)));
}
