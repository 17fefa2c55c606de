// Copyright (c) 2026 camtrack contributors
// SPDX-License-Identifier: Apache-2.0

// Pinhole projection model: homogeneous coordinates, intrinsic and extrinsic
// parameter containers, projection, and the Rodriguez rotation parametrization.
//
// Conventions:
//   - world coordinates and the camera-frame camera position are millimeters,
//   - image coordinates are pixels (sub-pixel resolution allowed),
//   - the pixel-unit focal terms alpha/beta are negative for a physical camera
//     (alpha = beta = -f/s when built from focal length and pixel size),
//   - the projective scale factor c is positive for points in front of the
//     camera.

#pragma once

#include <array>

#include "camtrack/linalg.hpp"

namespace camtrack {

// 2D image position in pixels.
struct PixelPoint {
  double nx = 0.0;
  double ny = 0.0;
};

// Position resolved in the camera frame.
struct CameraPoint {
  double ux = 0.0;
  double uy = 0.0;
  double uz = 0.0;
};

// Position resolved in the world frame, millimeters.
struct WorldPoint {
  double rx = 0.0;
  double ry = 0.0;
  double rz = 0.0;
};

// Homogeneous coordinates; two values are equivalent iff proportional.
struct Hom2 {
  std::array<double, 3> v{};
};
struct Hom3 {
  std::array<double, 4> v{};
};

// The five intrinsic parameters.
struct Intrinsics {
  double alpha = 0.0;  // pixels
  double beta = 0.0;   // pixels
  double gamma = 0.0;  // skew, pixels
  double n0x = 0.0;    // principal point, pixels
  double n0y = 0.0;
};

// Camera pose: rotation that maps camera-frame components to world-frame
// components, plus the camera position resolved in the camera frame.
struct Extrinsics {
  Mat3 A_cam = Mat3::identity();
  Vec3 r_cam_bar{};  // millimeters
};

// Gibbs vector g = tan(angle/2) * axis; singular at angle == pi.
struct RodriguezParams {
  Vec3 g{};
};

using ProjectionMatrix = Mat34;

Hom2 hom2(const Vec2& v);
Hom3 hom3(const Vec3& w);
Vec2 dehom(const Hom2& v);
Vec3 dehom(const Hom3& w);

// True when a and b represent the same projective point.
bool proportional(const Hom2& a, const Hom2& b, double tol = 1e-12);

// Pixel-unit intrinsics from focal length f (meters), pixel size s
// (meters/pixel) and sensor resolution.
Intrinsics intrinsics_from_physical(double f, double s, double Nx, double Ny);

Mat3 intrinsics_matrix(const Intrinsics& i);

// [A_cam^T | -r_cam_bar]
Mat34 extrinsics_matrix(const Extrinsics& e);

CameraPoint world_to_camera(const Extrinsics& e, const WorldPoint& p);
WorldPoint camera_to_world(const Extrinsics& e, const CameraPoint& u);

Mat34 projection_matrix(const Intrinsics& i, const Extrinsics& e);

struct Projection {
  PixelPoint pixel;
  double scale = 0.0;  // projective depth c; positive in front of the camera
};

Projection project(const Intrinsics& i, const Extrinsics& e, const WorldPoint& p);

Mat3 rodriguez_to_matrix(const RodriguezParams& g);
RodriguezParams matrix_to_rodriguez(const Mat3& A);

// Orthogonality / determinant check used by rotation-consuming operations.
bool is_rotation(const Mat3& A, double tol = 1e-9);

}  // namespace camtrack
