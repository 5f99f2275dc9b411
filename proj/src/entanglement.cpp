#include "fieldlink/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "fieldlink/errors.hpp"

namespace fieldlink {

namespace {

constexpr double kEntropyZero = 1e-14;

// x log x with the measure-zero convention and a guard against genuinely
// negative eigenvalues leaking in.
double xlogx(double x) {
  if (x < -TwoQubitState::kPsdTol) {
    throw InvariantError("entropy input eigenvalue below -1e-10: " + std::to_string(x));
  }
  if (x < kEntropyZero) return 0.0;
  return x * std::log(x);
}

template <typename Matrix>
double entropy(const Matrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    s -= xlogx(es.eigenvalues()[i]);
  }
  return s;
}

}  // namespace

TwoQubitState::TwoQubitState(const Eigen::Matrix4cd& matrix) : matrix_(matrix) {
  const double herm = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermTol) {
    throw InvariantError("TwoQubitState not Hermitian (deviation " + std::to_string(herm) + ")");
  }
  const std::complex<double> tr = matrix_.trace();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw InvariantError("TwoQubitState trace differs from 1 by " + std::to_string(std::abs(tr - 1.0)));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(matrix_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kPsdTol) {
    throw InvariantError("TwoQubitState has eigenvalue " + std::to_string(es.eigenvalues().minCoeff()) +
                         " below -1e-10");
  }
}

Eigen::Matrix2cd TwoQubitState::reduced(Subsystem keep) const {
  Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
  for (int p = 0; p < 2; ++p) {
    for (int pp = 0; pp < 2; ++pp) {
      for (int q = 0; q < 2; ++q) {
        if (keep == Subsystem::A) {
          out(p, pp) += matrix_(2 * p + q, 2 * pp + q);
        } else {
          out(p, pp) += matrix_(2 * q + p, 2 * q + pp);
        }
      }
    }
  }
  return out;
}

Eigen::Matrix4cd partial_transpose(const TwoQubitState& rho, Subsystem subsystem) {
  const Eigen::Matrix4cd& m = rho.matrix();
  Eigen::Matrix4cd out;
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q)
      for (int pp = 0; pp < 2; ++pp)
        for (int qq = 0; qq < 2; ++qq) {
          if (subsystem == Subsystem::A) {
            // swap p <-> p'
            out(2 * p + q, 2 * pp + qq) = m(2 * pp + q, 2 * p + qq);
          } else {
            // swap q <-> q'
            out(2 * p + q, 2 * pp + qq) = m(2 * p + qq, 2 * pp + q);
          }
        }
  return out;
}

double negativity(const TwoQubitState& rho) {
  const Eigen::Matrix4cd pt = partial_transpose(rho, Subsystem::B);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(pt, Eigen::EigenvaluesOnly);
  double n = 0.0;
  for (int i = 0; i < 4; ++i) {
    if (es.eigenvalues()[i] < 0.0) n -= es.eigenvalues()[i];
  }
  return n;
}

double mutual_information(const TwoQubitState& rho) {
  const double sa = entropy<Eigen::Matrix2cd>(rho.reduced(Subsystem::A));
  const double sb = entropy<Eigen::Matrix2cd>(rho.reduced(Subsystem::B));
  const double sab = entropy<Eigen::Matrix4cd>(rho.matrix());
  return sa + sb - sab;
}

double concurrence(const TwoQubitState& rho) {
  // spin-flipped state: (sigma_y x sigma_y) conj(rho) (sigma_y x sigma_y)
  Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const Eigen::Matrix4cd r = rho.matrix() * yy * rho.matrix().conjugate() * yy;
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(r, false);
  Eigen::Vector4d lams;
  for (int i = 0; i < 4; ++i) {
    lams[i] = std::sqrt(std::max(0.0, es.eigenvalues()[i].real()));
  }
  std::sort(lams.data(), lams.data() + 4, std::greater<double>());
  return std::max(0.0, lams[0] - lams[1] - lams[2] - lams[3]);
}

double trace_distance(const TwoQubitState& rho, const TwoQubitState& sigma) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho.matrix() - sigma.matrix(), Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace fieldlink
