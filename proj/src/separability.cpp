#include "fieldlink/separability.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fieldlink/errors.hpp"

namespace fieldlink {

namespace {

using Complex = std::complex<double>;

constexpr double kUnitaryTol = 1e-12;
constexpr double kWeightCut = 1e-14;
constexpr double kWeightSumTol = 1e-10;

double unitarity_residual(const Eigen::MatrixXcd& u) {
  return (u.adjoint() * u - Eigen::MatrixXcd::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff();
}

// <chi| (X tensor Y) |chi> without forming the Kronecker product: with chi
// reshaped to the dim_a x dim_b matrix C (A-major), the value is
// tr(C+ X C Y^T).
Complex sandwich(const Eigen::VectorXcd& chi, int dim_a, int dim_b, const Eigen::MatrixXcd& x,
                 const Eigen::MatrixXcd& y) {
  const Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
      c(chi.data(), dim_a, dim_b);
  return (c.adjoint() * x * c * y.transpose()).trace();
}

double wrap_phase(double theta) {
  theta = std::remainder(theta, 2.0 * std::numbers::pi);
  if (theta <= -std::numbers::pi) theta += 2.0 * std::numbers::pi;
  return theta;
}

struct EigenPair {
  double theta;
  Eigen::VectorXcd vec;
};

// Orthonormal eigensystem of the unitary V via its Schur form (V is normal,
// so the Schur T is diagonal up to roundoff and the Schur basis is an
// orthonormal eigenbasis).
std::vector<EigenPair> unitary_eigensystem(const Eigen::MatrixXcd& v) {
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(v);
  std::vector<EigenPair> pairs;
  pairs.reserve(v.rows());
  for (Eigen::Index i = 0; i < v.rows(); ++i) {
    pairs.push_back({wrap_phase(std::arg(schur.matrixT()(i, i))), schur.matrixU().col(i)});
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const EigenPair& a, const EigenPair& b) { return a.theta < b.theta; });
  return pairs;
}

std::vector<PhaseProjector> cluster(const std::vector<EigenPair>& pairs, double tol, int dim) {
  std::vector<std::vector<const EigenPair*>> groups;
  for (const auto& p : pairs) {
    const bool merge =
        !groups.empty() &&
        std::abs(std::polar(1.0, p.theta) - std::polar(1.0, groups.back().back()->theta)) <= tol;
    if (merge) {
      groups.back().push_back(&p);
    } else {
      groups.push_back({&p});
    }
  }
  // wrap-around: phases near +pi and -pi belong to one cluster
  if (groups.size() > 1) {
    const double first = groups.front().front()->theta;
    const double last = groups.back().back()->theta;
    if (std::abs(std::polar(1.0, first) - std::polar(1.0, last)) <= tol) {
      for (const EigenPair* p : groups.back()) groups.front().push_back(p);
      groups.pop_back();
    }
  }

  std::vector<PhaseProjector> out;
  out.reserve(groups.size());
  for (const auto& g : groups) {
    Complex mean = 0.0;
    Eigen::MatrixXcd proj = Eigen::MatrixXcd::Zero(dim, dim);
    for (const EigenPair* p : g) {
      mean += std::polar(1.0, p->theta);
      proj += p->vec * p->vec.adjoint();
    }
    out.push_back({wrap_phase(std::arg(mean)), std::move(proj)});
  }
  std::sort(out.begin(), out.end(),
            [](const PhaseProjector& a, const PhaseProjector& b) { return a.theta < b.theta; });
  return out;
}

}  // namespace

void ControlledUnitaryModel::validate() const {
  if (u_a_r.rows() < 1 || u_b_r.rows() < 1) throw NumericError("model dimensions must be >= 1");
  for (const auto* u : {&u_a_r, &u_a_l, &u_b_r, &u_b_l}) {
    if (u->rows() != u->cols()) throw NumericError("model operators must be square");
  }
  if (u_a_l.rows() != dim_a() || u_b_l.rows() != dim_b())
    throw NumericError("branch unitaries of one object must share a dimension");
  for (const auto* u : {&u_a_r, &u_a_l, &u_b_r, &u_b_l}) {
    const double r = unitarity_residual(*u);
    if (r > kUnitaryTol)
      throw NumericError("model operator is not unitary (residual " + std::to_string(r) + ")");
  }
  if (chi.size() != static_cast<Eigen::Index>(dim_a()) * dim_b())
    throw NumericError("chi dimension must be dim_a * dim_b");
  if (std::abs(chi.norm() - 1.0) > kUnitaryTol) throw NumericError("chi must have unit norm");
  const double na = std::norm(alpha[0]) + std::norm(alpha[1]);
  const double nb = std::norm(beta[0]) + std::norm(beta[1]);
  if (std::abs(na - 1.0) > 1e-12 || std::abs(nb - 1.0) > 1e-12)
    throw NumericError("branch amplitudes must be normalized");
}

TwoQubitState build_rho(const ControlledUnitaryModel& model) {
  model.validate();
  const std::array<const Eigen::MatrixXcd*, 2> ua = {&model.u_a_r, &model.u_a_l};
  const std::array<const Eigen::MatrixXcd*, 2> ub = {&model.u_b_r, &model.u_b_l};
  Eigen::Matrix4cd rho;
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q)
      for (int pp = 0; pp < 2; ++pp)
        for (int qq = 0; qq < 2; ++qq) {
          const Eigen::MatrixXcd va = ua[pp]->adjoint() * (*ua[p]);
          const Eigen::MatrixXcd vb = ub[qq]->adjoint() * (*ub[q]);
          const Complex amp = model.alpha[p] * std::conj(model.alpha[pp]) * model.beta[q] *
                              std::conj(model.beta[qq]);
          rho(2 * p + q, 2 * pp + qq) =
              amp * sandwich(model.chi, model.dim_a(), model.dim_b(), va, vb);
        }
  return TwoQubitState(rho);
}

std::vector<PhaseProjector> spectral_decompose(const ControlledUnitaryModel& model, double tol) {
  model.validate();
  const Eigen::MatrixXcd v = model.u_a_r.adjoint() * model.u_a_l;
  if (unitarity_residual(v) > 1e-10)
    throw NumericError("V_RL is not unitary within 1e-10");
  return cluster(unitary_eigensystem(v), tol, model.dim_a());
}

SeparableDecomposition separable_decomposition(const ControlledUnitaryModel& model, double tol) {
  const std::vector<PhaseProjector> spectrum = spectral_decompose(model, tol);
  const Eigen::MatrixXcd identity_b = Eigen::MatrixXcd::Identity(model.dim_b(), model.dim_b());
  const std::array<const Eigen::MatrixXcd*, 2> ub = {&model.u_b_r, &model.u_b_l};

  SeparableDecomposition dec;
  double weight_sum = 0.0;
  for (const PhaseProjector& pp : spectrum) {
    const double mu =
        sandwich(model.chi, model.dim_a(), model.dim_b(), pp.projector, identity_b).real();
    weight_sum += mu;
    if (mu < kWeightCut) continue;

    SeparableEntry entry;
    entry.weight = mu;
    entry.theta = pp.theta;
    entry.a_state << model.alpha[0], model.alpha[1] * std::polar(1.0, pp.theta);
    for (int q = 0; q < 2; ++q)
      for (int qq = 0; qq < 2; ++qq) {
        const Eigen::MatrixXcd vb = ub[qq]->adjoint() * (*ub[q]);
        entry.b_density(q, qq) =
            model.beta[q] * std::conj(model.beta[qq]) *
            sandwich(model.chi, model.dim_a(), model.dim_b(), pp.projector, vb) / mu;
      }
    dec.entries.push_back(std::move(entry));
  }
  if (std::abs(weight_sum - 1.0) > kWeightSumTol)
    throw InvariantError("separable decomposition weights sum to " + std::to_string(weight_sum));
  return dec;
}

Eigen::Matrix4cd reconstruct(const SeparableDecomposition& decomposition) {
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  for (const SeparableEntry& e : decomposition.entries) {
    const Eigen::Matrix2cd a_proj = e.a_state * e.a_state.adjoint();
    for (int p = 0; p < 2; ++p)
      for (int pp = 0; pp < 2; ++pp)
        for (int q = 0; q < 2; ++q)
          for (int qq = 0; qq < 2; ++qq)
            rho(2 * p + q, 2 * pp + qq) += e.weight * a_proj(p, pp) * e.b_density(q, qq);
  }
  return rho;
}

ControlledUnitaryForm controlled_unitary_form(const ControlledUnitaryModel& model) {
  const std::vector<PhaseProjector> spectrum = spectral_decompose(model);
  const int da = model.dim_a();

  // X_F = i log(V_RL) = sum_lambda (-theta_lambda) P_lambda, principal branch.
  Eigen::MatrixXcd x_f = Eigen::MatrixXcd::Zero(da, da);
  for (const PhaseProjector& pp : spectrum) x_f -= pp.theta * pp.projector;

  // m_A x X_F on the branch (x) mediator space; m_A = diag(0, 1).
  Eigen::MatrixXcd generator = Eigen::MatrixXcd::Zero(2 * da, 2 * da);
  generator.block(da, da, da, da) = x_f;

  // exp(-i generator) through the eigensystem of the Hermitian generator.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(generator);
  Eigen::VectorXcd phases(2 * da);
  for (int i = 0; i < 2 * da; ++i) phases[i] = std::polar(1.0, -es.eigenvalues()[i]);
  const Eigen::MatrixXcd exp_gen =
      es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();

  Eigen::MatrixXcd u_ar_lifted = Eigen::MatrixXcd::Zero(2 * da, 2 * da);
  u_ar_lifted.block(0, 0, da, da) = model.u_a_r;
  u_ar_lifted.block(da, da, da, da) = model.u_a_r;

  Eigen::MatrixXcd u_af = Eigen::MatrixXcd::Zero(2 * da, 2 * da);
  u_af.block(0, 0, da, da) = model.u_a_r;
  u_af.block(da, da, da, da) = model.u_a_l;

  const Eigen::MatrixXcd diff = u_af - u_ar_lifted * exp_gen;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(diff);
  const double err = svd.singularValues().size() > 0 ? svd.singularValues()[0] : 0.0;
  return ControlledUnitaryForm{err, {0.0, 1.0}};
}

}  // namespace fieldlink
