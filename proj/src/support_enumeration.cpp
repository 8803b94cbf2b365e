#include <algorithm>
#include <cmath>

#include <Eigen/LU>

#include "qgame/equilibrium.hpp"

namespace qgame {

namespace {

constexpr int kMaxSupport = 8;
constexpr double kNegativeSlack = 1e-12;
constexpr double kBestResponseSlack = 1e-9;

using SmallMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxSupport + 1, kMaxSupport + 1>;
using SmallVec = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, kMaxSupport + 1, 1>;

bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Mixture over `cols` (weights summing to 1) that equalizes the payoffs
// table(r, cols) for every r in `rows`. Empty when singular or negative.
std::optional<SmallVec> indifferent_mixture(const Eigen::MatrixXd& table, const std::vector<int>& rows,
                                            const std::vector<int>& cols, bool transpose) {
  const int k = static_cast<int>(rows.size());
  SmallMat sys(k + 1, k + 1);
  SmallVec rhs = SmallVec::Zero(k + 1);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) sys(i, j) = transpose ? table(cols[j], rows[i]) : table(rows[i], cols[j]);
    sys(i, k) = -1.0;
    sys(k, i) = 1.0;
  }
  sys(k, k) = 0.0;
  rhs(k) = 1.0;
  Eigen::FullPivLU<SmallMat> lu(sys);
  if (!lu.isInvertible()) return std::nullopt;
  SmallVec sol = lu.solve(rhs);
  if ((sys * sol - rhs).lpNorm<Eigen::Infinity>() > 1e-9) return std::nullopt;
  for (int j = 0; j < k; ++j)
    if (sol(j) < -kNegativeSlack) return std::nullopt;
  return sol;
}

std::vector<double> expand(const SmallVec& sol, const std::vector<int>& idx, Eigen::Index size) {
  std::vector<double> full(static_cast<std::size_t>(size), 0.0);
  double total = 0.0;
  for (std::size_t j = 0; j < idx.size(); ++j) {
    full[static_cast<std::size_t>(idx[j])] = std::max(0.0, sol(static_cast<int>(j)));
    total += full[static_cast<std::size_t>(idx[j])];
  }
  for (double& v : full) v /= total;
  return full;
}

bool same_profile(const TableProfile& x, const TableProfile& y) {
  for (std::size_t i = 0; i < x.p.size(); ++i)
    if (std::abs(x.p[i] - y.p[i]) > 1e-9) return false;
  for (std::size_t j = 0; j < x.q.size(); ++j)
    if (std::abs(x.q[j] - y.q[j]) > 1e-9) return false;
  return true;
}

}  // namespace

std::vector<TableProfile> support_enumeration(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                                              std::size_t max_support) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.size() == 0)
    throw std::invalid_argument("payoff tables must be nonempty and equally shaped");
  const int m = static_cast<int>(a.rows()), n = static_cast<int>(a.cols());
  const int kmax = std::min({static_cast<int>(max_support), m, n, kMaxSupport});

  std::vector<TableProfile> found;
  for (int k = 1; k <= kmax; ++k) {
    std::vector<int> rows(k);
    for (int i = 0; i < k; ++i) rows[i] = i;
    do {
      std::vector<int> cols(k);
      for (int i = 0; i < k; ++i) cols[i] = i;
      do {
        const auto q_sol = indifferent_mixture(a, rows, cols, false);
        if (!q_sol) continue;
        const auto p_sol = indifferent_mixture(b, cols, rows, true);
        if (!p_sol) continue;

        TableProfile t;
        t.q = expand(*q_sol, cols, n);
        t.p = expand(*p_sol, rows, m);
        const PayoffPair gaps = table_gaps(a, b, t);
        if (gaps.a > kBestResponseSlack || gaps.b > kBestResponseSlack) continue;

        const Eigen::Map<const Eigen::VectorXd> p(t.p.data(), m), q(t.q.data(), n);
        t.payoff_a = p.dot(a * q);
        t.payoff_b = p.dot(b * q);
        const bool duplicate = std::any_of(found.begin(), found.end(),
                                           [&](const TableProfile& f) { return same_profile(f, t); });
        if (!duplicate) found.push_back(std::move(t));
      } while (next_combination(cols, n));
    } while (next_combination(rows, m));
  }
  return found;
}

}  // namespace qgame
