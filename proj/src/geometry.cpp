// Copyright (c) 2026 camtrack contributors
// SPDX-License-Identifier: Apache-2.0

#include "camtrack/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "camtrack/error.hpp"

namespace camtrack {

Hom2 hom2(const Vec2& v) { return Hom2{{v.x, v.y, 1.0}}; }

Hom3 hom3(const Vec3& w) { return Hom3{{w.x, w.y, w.z, 1.0}}; }

namespace {

// last component must carry weight relative to the rest
void check_dehom(const double* v, int n) {
  double mx = 0.0;
  for (int i = 0; i < n; ++i) mx = std::max(mx, std::abs(v[i]));
  if (std::abs(v[n - 1]) <= 1e-14 * mx)
    throw Error(ErrorCode::PointAtInfinity, "dehom: last homogeneous component is zero");
}

}  // namespace

Vec2 dehom(const Hom2& v) {
  check_dehom(v.v.data(), 3);
  return {v.v[0] / v.v[2], v.v[1] / v.v[2]};
}

Vec3 dehom(const Hom3& w) {
  check_dehom(w.v.data(), 4);
  return {w.v[0] / w.v[3], w.v[1] / w.v[3], w.v[2] / w.v[3]};
}

bool proportional(const Hom2& a, const Hom2& b, double tol) {
  // cross-ratio style comparison: all 2x2 minors of [a; b] vanish
  double scale = 0.0;
  for (int i = 0; i < 3; ++i)
    scale = std::max({scale, std::abs(a.v[i]), std::abs(b.v[i])});
  if (scale == 0.0) return true;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (std::abs(a.v[i] * b.v[j] - a.v[j] * b.v[i]) > tol * scale * scale) return false;
  return true;
}

Intrinsics intrinsics_from_physical(double f, double s, double Nx, double Ny) {
  if (!(f > 0.0) || !(s > 0.0) || !(Nx > 0.0) || !(Ny > 0.0))
    throw Error(ErrorCode::InvalidPhysical,
                "intrinsics_from_physical: f, s, Nx, Ny must all be positive");
  Intrinsics i;
  i.alpha = -f / s;
  i.beta = -f / s;
  i.gamma = 0.0;
  i.n0x = Nx / 2.0;
  i.n0y = Ny / 2.0;
  return i;
}

Mat3 intrinsics_matrix(const Intrinsics& i) {
  Mat3 m;
  m(0, 0) = i.alpha;
  m(0, 1) = i.gamma;
  m(0, 2) = i.n0x;
  m(1, 1) = i.beta;
  m(1, 2) = i.n0y;
  m(2, 2) = 1.0;
  return m;
}

Mat34 extrinsics_matrix(const Extrinsics& e) {
  const Mat3 At = transpose(e.A_cam);
  Mat34 m;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) m(r, c) = At(r, c);
    m(r, 3) = -e.r_cam_bar[r];
  }
  return m;
}

CameraPoint world_to_camera(const Extrinsics& e, const WorldPoint& p) {
  const Vec3 u = apply_homogeneous(extrinsics_matrix(e), {p.rx, p.ry, p.rz});
  return {u.x, u.y, u.z};
}

WorldPoint camera_to_world(const Extrinsics& e, const CameraPoint& u) {
  const Vec3 r = e.A_cam * Vec3{e.r_cam_bar.x + u.ux, e.r_cam_bar.y + u.uy, e.r_cam_bar.z + u.uz};
  return {r.x, r.y, r.z};
}

Mat34 projection_matrix(const Intrinsics& i, const Extrinsics& e) {
  return intrinsics_matrix(i) * extrinsics_matrix(e);
}

Projection project(const Intrinsics& i, const Extrinsics& e, const WorldPoint& p) {
  const Vec3 nh = apply_homogeneous(projection_matrix(i, e), {p.rx, p.ry, p.rz});
  if (std::abs(nh.z) <= 1e-12)
    throw Error(ErrorCode::DegenerateProjection, "project: point lies in the camera plane");
  return {{nh.x / nh.z, nh.y / nh.z}, nh.z};
}

Mat3 rodriguez_to_matrix(const RodriguezParams& p) {
  const Mat3 gt = skew(p.g);
  const double f = 2.0 / (1.0 + dot(p.g, p.g));
  return Mat3::identity() + f * (gt + gt * gt);
}

RodriguezParams matrix_to_rodriguez(const Mat3& A) {
  if (!is_rotation(A))
    throw Error(ErrorCode::InvalidArgument, "matrix_to_rodriguez: input is not a rotation");
  const double denom = 1.0 + trace(A);
  // denom == 2 (1 + cos(angle)) vanishes at angle == pi
  if (denom <= 1e-12)
    throw Error(ErrorCode::NearPiRotation, "matrix_to_rodriguez: rotation angle too close to pi");
  return {(1.0 / denom) * Vec3{A(2, 1) - A(1, 2), A(0, 2) - A(2, 0), A(1, 0) - A(0, 1)}};
}

bool is_rotation(const Mat3& A, double tol) {
  const Mat3 G = transpose(A) * A;
  const Mat3 I = Mat3::identity();
  for (int k = 0; k < 9; ++k)
    if (std::abs(G.a[k] - I.a[k]) > tol) return false;
  return std::abs(det(A) - 1.0) <= tol;
}

}  // namespace camtrack
