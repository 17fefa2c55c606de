// Copyright (c) 2026 camtrack contributors
// SPDX-License-Identifier: Apache-2.0

#include "camtrack/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "camtrack/error.hpp"

namespace camtrack::numerics {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double max_abs_entry(const Mat& m) {
  double mx = 0.0;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) mx = std::max(mx, std::abs(m(r, c)));
  return mx;
}

double off_diagonal_norm(const Mat& m) {
  double s = 0.0;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (r != c) s += m(r, c) * m(r, c);
  return std::sqrt(s);
}

double frobenius(const Mat& m) {
  double s = 0.0;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) s += m(r, c) * m(r, c);
  return std::sqrt(s);
}

}  // namespace

Mat transpose(const Mat& m) {
  Mat t(m.cols(), m.rows());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  return t;
}

Mat operator*(const Mat& a, const Mat& b) {
  Mat m(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int k = 0; k < a.cols(); ++k) {
      const double ark = a(r, k);
      for (int c = 0; c < b.cols(); ++c) m(r, c) += ark * b(k, c);
    }
  return m;
}

std::vector<double> operator*(const Mat& m, const std::vector<double>& v) {
  std::vector<double> out(m.rows(), 0.0);
  for (int r = 0; r < m.rows(); ++r) {
    double s = 0.0;
    for (int c = 0; c < m.cols(); ++c) s += m(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

SymmetricEigenResult sym_eig(const Mat& S) {
  const int n = S.rows();
  if (n < 1 || S.cols() != n)
    throw Error(ErrorCode::InvalidArgument, "sym_eig: matrix must be square and non-empty");

  const double scale = max_abs_entry(S);
  for (int r = 0; r < n; ++r)
    for (int c = r + 1; c < n; ++c)
      if (std::abs(S(r, c) - S(c, r)) > 1e-12 * std::max(scale, 1e-300))
        throw Error(ErrorCode::NonSymmetric, "sym_eig: input is not symmetric within tolerance");

  Mat A = S;
  // enforce exact symmetry so rotations stay consistent
  for (int r = 0; r < n; ++r)
    for (int c = r + 1; c < n; ++c) A(c, r) = A(r, c);

  Mat V = Mat::identity(n);
  const double target = kEps * std::max(frobenius(A), 1e-300);

  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(A) <= target) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = A(p, q);
        if (apq == 0.0) continue;
        const double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        const double app = A(p, p);
        const double aqq = A(q, q);
        A(p, p) = app - t * apq;
        A(q, q) = aqq + t * apq;
        A(p, q) = 0.0;
        A(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = A(k, p);
          const double akq = A(k, q);
          A(k, p) = akp - s * (akq + tau * akp);
          A(p, k) = A(k, p);
          A(k, q) = akq + s * (akp - tau * akq);
          A(q, k) = A(k, q);
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = V(k, p);
          const double vkq = V(k, q);
          V(k, p) = vkp - s * (vkq + tau * vkp);
          V(k, q) = vkq + s * (vkp - tau * vkq);
        }
      }
    }
  }
  if (sweep == kMaxSweeps && off_diagonal_norm(A) > target)
    throw Error(ErrorCode::NoConvergence, "sym_eig: Jacobi sweeps did not converge");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return A(i, i) < A(j, j); });

  SymmetricEigenResult res;
  res.eigenvalues.resize(n);
  res.eigenvectors = Mat(n, n);
  for (int c = 0; c < n; ++c) {
    res.eigenvalues[c] = A(order[c], order[c]);
    for (int r = 0; r < n; ++r) res.eigenvectors(r, c) = V(r, order[c]);
  }
  return res;
}

std::vector<double> min_eigvec(const Mat& S) {
  const SymmetricEigenResult eig = sym_eig(S);
  const int n = S.rows();
  std::vector<double> v(n);
  for (int r = 0; r < n; ++r) v[r] = eig.eigenvectors(r, 0);

  double nrm = 0.0;
  for (double e : v) nrm += e * e;
  nrm = std::sqrt(nrm);
  int imax = 0;
  for (int i = 1; i < n; ++i)
    if (std::abs(v[i]) > std::abs(v[imax])) imax = i;
  const double sign = v[imax] < 0.0 ? -1.0 : 1.0;
  for (double& e : v) e *= sign / nrm;
  return v;
}

Svd3Result svd3(const Mat3& M) {
  for (double e : M.a)
    if (!std::isfinite(e))
      throw Error(ErrorCode::InvalidArgument, "svd3: non-finite entry");

  // Eigen-decomposition of M^T M; left vectors recovered as M v / sigma.
  Mat G(3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = r; c < 3; ++c) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += M(k, r) * M(k, c);
      G(r, c) = s;
      G(c, r) = s;
    }
  const SymmetricEigenResult eig = sym_eig(G);

  Svd3Result out;
  // descending singular values
  for (int i = 0; i < 3; ++i) {
    const double lam = std::max(eig.eigenvalues[2 - i], 0.0);
    out.S[i] = std::sqrt(lam);
    for (int r = 0; r < 3; ++r) out.V(r, i) = eig.eigenvectors(r, 2 - i);
  }

  const double tol = out.S[0] * 1e-13;
  int rank = 0;
  for (int i = 0; i < 3; ++i) {
    if (out.S[i] <= tol) break;
    const Vec3 u = normalized(M * out.V.column(i));
    for (int r = 0; r < 3; ++r) out.U(r, i) = u[r];
    ++rank;
  }
  // complete U to an orthonormal basis for (near-)rank-deficient inputs
  if (rank == 0) {
    out.U = Mat3::identity();
  } else if (rank == 1) {
    const Vec3 u0 = out.U.column(0);
    Vec3 pick{1.0, 0.0, 0.0};
    if (std::abs(u0.x) > std::abs(u0.y) || std::abs(u0.x) > std::abs(u0.z))
      pick = std::abs(u0.y) <= std::abs(u0.z) ? Vec3{0.0, 1.0, 0.0} : Vec3{0.0, 0.0, 1.0};
    const Vec3 u1 = normalized(cross(u0, pick));
    const Vec3 u2 = cross(u0, u1);
    for (int r = 0; r < 3; ++r) {
      out.U(r, 1) = u1[r];
      out.U(r, 2) = u2[r];
    }
  } else if (rank == 2) {
    const Vec3 u2 = cross(out.U.column(0), out.U.column(1));
    for (int r = 0; r < 3; ++r) out.U(r, 2) = u2[r];
  }
  return out;
}

std::vector<double> lstsq(const Mat& A, const std::vector<double>& b) {
  const int m = A.rows();
  const int n = A.cols();
  if (m < n)
    throw Error(ErrorCode::InvalidArgument, "lstsq: system must have rows >= cols");
  if (static_cast<int>(b.size()) != m)
    throw Error(ErrorCode::InvalidArgument, "lstsq: right-hand side size mismatch");

  // Householder QR applied in place to [A | b].
  Mat R = A;
  std::vector<double> rhs = b;
  for (int k = 0; k < n; ++k) {
    double colnorm = 0.0;
    for (int i = k; i < m; ++i) colnorm += R(i, k) * R(i, k);
    colnorm = std::sqrt(colnorm);
    if (colnorm == 0.0)
      throw Error(ErrorCode::RankDeficient, "lstsq: zero column during factorization");
    const double alpha = R(k, k) >= 0.0 ? -colnorm : colnorm;
    std::vector<double> v(m - k);
    v[0] = R(k, k) - alpha;
    for (int i = k + 1; i < m; ++i) v[i - k] = R(i, k);
    double vnorm2 = 0.0;
    for (double e : v) vnorm2 += e * e;
    R(k, k) = alpha;
    for (int i = k + 1; i < m; ++i) R(i, k) = 0.0;
    if (vnorm2 == 0.0) continue;
    for (int c = k + 1; c < n; ++c) {
      double s = 0.0;
      for (int i = k; i < m; ++i) s += v[i - k] * R(i, c);
      const double f = 2.0 * s / vnorm2;
      for (int i = k; i < m; ++i) R(i, c) -= f * v[i - k];
    }
    double s = 0.0;
    for (int i = k; i < m; ++i) s += v[i - k] * rhs[i];
    const double f = 2.0 * s / vnorm2;
    for (int i = k; i < m; ++i) rhs[i] -= f * v[i - k];
  }

  // Rank test on the extreme singular values of R: the largest comes from
  // R^T R, the smallest from the largest eigenvalue of R^{-1} R^{-T}.
  Mat Rn(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = r; c < n; ++c) Rn(r, c) = R(r, c);
  for (int i = 0; i < n; ++i)
    if (Rn(i, i) == 0.0)
      throw Error(ErrorCode::RankDeficient, "lstsq: exactly singular triangular factor");

  Mat G(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = r; c < n; ++c) {
      double s = 0.0;
      for (int k = 0; k <= r; ++k) s += Rn(k, r) * Rn(k, c);
      G(r, c) = s;
      G(c, r) = s;
    }
  const double sigma_max = std::sqrt(std::max(sym_eig(G).eigenvalues[n - 1], 0.0));

  // columns of R^{-1} by back substitution
  Mat Rinv(n, n);
  for (int c = 0; c < n; ++c) {
    std::vector<double> x(n, 0.0);
    x[c] = 1.0;
    for (int r = c; r >= 0; --r) {
      double s = x[r];
      for (int k = r + 1; k <= c; ++k) s -= Rn(r, k) * x[k];
      x[r] = s / Rn(r, r);
    }
    for (int r = 0; r <= c; ++r) Rinv(r, c) = x[r];
  }
  Mat C(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = r; c < n; ++c) {
      double s = 0.0;
      for (int k = std::max(r, c); k < n; ++k) s += Rinv(r, k) * Rinv(c, k);
      C(r, c) = s;
      C(c, r) = s;
    }
  bool finite = true;
  for (int r = 0; r < n && finite; ++r)
    for (int c = 0; c < n; ++c)
      if (!std::isfinite(C(r, c))) {
        finite = false;
        break;
      }
  if (!finite)
    throw Error(ErrorCode::RankDeficient, "lstsq: triangular factor not invertible");
  const double inv_norm = std::sqrt(std::max(sym_eig(C).eigenvalues[n - 1], 0.0));
  const double sigma_min = inv_norm > 0.0 ? 1.0 / inv_norm : 0.0;
  if (sigma_min < 1e-12 * sigma_max)
    throw Error(ErrorCode::RankDeficient, "lstsq: matrix is rank deficient");

  std::vector<double> x(n, 0.0);
  for (int r = n - 1; r >= 0; --r) {
    double s = rhs[r];
    for (int k = r + 1; k < n; ++k) s -= Rn(r, k) * x[k];
    x[r] = s / Rn(r, r);
  }
  return x;
}

MinimizeResult minimize(const std::function<double(const std::vector<double>&)>& objective,
                        const std::vector<double>& x0, const MinimizeOptions& options) {
  const int n = static_cast<int>(x0.size());
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "minimize: empty start point");

  auto eval = [&](const std::vector<double>& x) {
    const double f = objective(x);
    if (!std::isfinite(f))
      throw Error(ErrorCode::NonFiniteObjective, "minimize: objective returned a non-finite value");
    return f;
  };

  std::vector<std::vector<double>> sim;
  std::vector<double> fs;
  sim.reserve(n + 1);
  sim.push_back(x0);
  fs.push_back(eval(x0));
  for (int i = 0; i < n; ++i) {
    std::vector<double> x = x0;
    x[i] = x[i] != 0.0 ? 1.05 * x[i] : 0.00025;
    sim.push_back(std::move(x));
    fs.push_back(eval(sim.back()));
  }

  // best-seen never regresses; ties keep the start point
  std::vector<double> best_x = x0;
  double best_f = fs[0];
  auto consider = [&](const std::vector<double>& x, double f) {
    if (f < best_f) {
      best_f = f;
      best_x = x;
    }
  };
  for (int i = 1; i <= n; ++i) consider(sim[i], fs[i]);

  std::vector<int> order(n + 1);
  int iter = 0;
  for (; iter < options.max_iterations; ++iter) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return fs[i] < fs[j]; });
    {
      std::vector<std::vector<double>> s2(n + 1);
      std::vector<double> f2(n + 1);
      for (int i = 0; i <= n; ++i) {
        s2[i] = std::move(sim[order[i]]);
        f2[i] = fs[order[i]];
      }
      sim = std::move(s2);
      fs = std::move(f2);
    }
    consider(sim[0], fs[0]);
    if (options.on_iteration) options.on_iteration(iter, best_f);

    if (fs[n] - fs[0] <= options.tolerance * std::abs(fs[0]) + 1e-300) break;
    double xspread = 0.0;
    double xscale = 0.0;
    for (int i = 0; i < n; ++i) xscale = std::max(xscale, std::abs(sim[0][i]));
    for (int i = 1; i <= n; ++i)
      for (int k = 0; k < n; ++k) xspread = std::max(xspread, std::abs(sim[i][k] - sim[0][k]));
    if (xspread <= options.x_tolerance * (1.0 + xscale)) break;

    std::vector<double> centroid(n, 0.0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) centroid[k] += sim[i][k];
    for (double& c : centroid) c /= n;

    auto along = [&](double coef) {
      std::vector<double> x(n);
      for (int k = 0; k < n; ++k) x[k] = centroid[k] + coef * (centroid[k] - sim[n][k]);
      return x;
    };

    const std::vector<double> xr = along(1.0);
    const double fr = eval(xr);
    consider(xr, fr);
    if (fr < fs[0]) {
      const std::vector<double> xe = along(2.0);
      const double fe = eval(xe);
      consider(xe, fe);
      if (fe < fr) {
        sim[n] = xe;
        fs[n] = fe;
      } else {
        sim[n] = xr;
        fs[n] = fr;
      }
    } else if (fr < fs[n - 1]) {
      sim[n] = xr;
      fs[n] = fr;
    } else {
      bool shrink = false;
      if (fr < fs[n]) {
        const std::vector<double> xc = along(0.5);  // outside contraction
        const double fc = eval(xc);
        consider(xc, fc);
        if (fc <= fr) {
          sim[n] = xc;
          fs[n] = fc;
        } else {
          shrink = true;
        }
      } else {
        const std::vector<double> xc = along(-0.5);  // inside contraction
        const double fc = eval(xc);
        consider(xc, fc);
        if (fc < fs[n]) {
          sim[n] = xc;
          fs[n] = fc;
        } else {
          shrink = true;
        }
      }
      if (shrink) {
        for (int i = 1; i <= n; ++i) {
          for (int k = 0; k < n; ++k) sim[i][k] = sim[0][k] + 0.5 * (sim[i][k] - sim[0][k]);
          fs[i] = eval(sim[i]);
          consider(sim[i], fs[i]);
        }
      }
    }
  }

  MinimizeResult res;
  res.x = std::move(best_x);
  res.f = best_f;
  res.iterations = iter;
  return res;
}

}  // namespace camtrack::numerics
