#include "lovelab/errors.hpp"
#include "lovelab/quadrature.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace lovelab::quadrature {

LogTailFit fit_log_tail(const std::vector<LogTailSample>& samples, bool with_log2) {
  const int m = static_cast<int>(samples.size());
  if (m < 4) throw ConditioningError("fit_log_tail needs at least 4 samples");
  auto [lo, hi] = std::minmax_element(samples.begin(), samples.end(),
                                      [](auto& p, auto& q) { return p.X < q.X; });
  if (!(lo->X > 0.0) || hi->X < 100.0 * lo->X)
    throw ConditioningError("fit_log_tail needs X spanning two decades");

  const int cols = with_log2 ? 3 : 2;
  // centred log keeps the normal equations tame
  double center = 0.0;
  for (auto& s : samples) center += std::log(s.X);
  center /= m;
  Eigen::MatrixXd A(m, cols);
  Eigen::VectorXd y(m);
  for (int i = 0; i < m; ++i) {
    double l = std::log(samples[i].X) - center;
    A(i, 0) = 1.0;
    A(i, 1) = l;
    if (with_log2) A(i, 2) = l * l;
    y(i) = samples[i].value;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  auto sv = svd.singularValues();
  if (sv(cols - 1) <= 1e-10 * sv(0)) throw ConditioningError("fit_log_tail design matrix is ill-conditioned");
  Eigen::VectorXd b = svd.solve(y);
  double rms = std::sqrt((A * b - y).squaredNorm() / m);

  // undo the centring: q (l - c)^2 + p (l - c) + r
  double r = b(0), p = b(1), q = with_log2 ? b(2) : 0.0;
  LogTailFit fit;
  fit.c2 = q;
  fit.c1 = p - 2.0 * q * center;
  fit.c0 = r - p * center + q * center * center;
  fit.residual = rms;
  return fit;
}

}  // namespace lovelab::quadrature
