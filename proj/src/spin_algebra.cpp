#include "dilute1d/spin_algebra.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>

namespace dilute1d::spin {

SpinLocalDim SpinLocalDim::from_twice_j(int twice_j) {
  if (twice_j < 1)
    throw std::invalid_argument("spin: 2J must be a positive integer");
  return SpinLocalDim{twice_j, twice_j + 1};
}

PairProjectors build_pair_projectors(const SpinLocalDim& spin) {
  const int d = spin.d;
  const int dd = d * d;
  Eigen::MatrixXd swap = Eigen::MatrixXd::Zero(dd, dd);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) swap(b * d + a, a * d + b) = 1.0;
  Eigen::MatrixXd id = Eigen::MatrixXd::Identity(dd, dd);
  return PairProjectors{d, swap, 0.5 * (id + swap), 0.5 * (id - swap)};
}

SpinOps build_spin_ops(const SpinLocalDim& spin) {
  const int d = spin.d;
  const double j = spin.j();
  Eigen::MatrixXd sp = Eigen::MatrixXd::Zero(d, d);  // S+
  Eigen::MatrixXd sz = Eigen::MatrixXd::Zero(d, d);
  // basis index m_idx = 0..d-1 maps to m = j - m_idx
  for (int i = 0; i < d; ++i) {
    const double m = j - i;
    sz(i, i) = m;
    if (i > 0) {
      const double mlow = j - i;  // S+ |j,m> = sqrt(j(j+1)-m(m+1)) |j,m+1>
      sp(i - 1, i) = std::sqrt(j * (j + 1) - mlow * (mlow + 1));
    }
  }
  Eigen::MatrixXd sm = sp.transpose();
  Eigen::MatrixXd sx = 0.5 * (sp + sm);
  Eigen::MatrixXd i_sy = 0.5 * (sp - sm);  // i*Sy = (S+ - S-)/2
  return SpinOps{sx, i_sy, sz};
}

Eigen::MatrixXd pair_spin_dot(const SpinLocalDim& spin) {
  const SpinOps ops = build_spin_ops(spin);
  Eigen::MatrixXd dot =
      Eigen::kroneckerProduct(ops.sx, ops.sx).eval() -
      Eigen::kroneckerProduct(ops.i_sy, ops.i_sy).eval() +
      Eigen::kroneckerProduct(ops.sz, ops.sz).eval();
  return dot;
}

PairCoupling build_coupling(const CouplingKind& kind,
                            const PairProjectors& proj) {
  Eigen::MatrixXd m;
  if (std::holds_alternative<LaiSutherlandKind>(kind)) {
    m = proj.p_sym;
  } else if (const auto* llh = std::get_if<LlhKind>(&kind)) {
    if (llh->c <= 0.0 || llh->c_prime <= 0.0)
      throw std::invalid_argument("llh coupling: c and c' must be positive");
    m = -(2.0 / llh->c_prime) * proj.p_asym - (2.0 / llh->c) * proj.p_sym;
  } else {
    const auto& mk = std::get<MatrixKind>(kind);
    if (mk.m.rows() != proj.p_sym.rows() || mk.m.cols() != proj.p_sym.cols())
      throw std::invalid_argument("matrix coupling: wrong dimension");
    if ((mk.m - mk.m.transpose()).cwiseAbs().maxCoeff() > 1e-12)
      throw std::invalid_argument("matrix coupling: not symmetric");
    m = 0.5 * (mk.m + mk.m.transpose());
  }
  return PairCoupling{kind, m};
}

}  // namespace dilute1d::spin
