#pragma once

#include <Eigen/Dense>
#include <Eigen/Geometry>
#include <optional>
#include <vector>

#include "urfgs/errors.hpp"

namespace urfgs {

/// One anisotropic 3D Gaussian carrying geometry, appearance and material
/// attributes. This is the unified primitive shared by the optical and the
/// wireless render paths.
struct GaussianPrimitive {
    Eigen::Vector3d mean = Eigen::Vector3d::Zero();
    Eigen::Quaterniond rotation = Eigen::Quaterniond::Identity(); // unit
    Eigen::Vector3d scale = Eigen::Vector3d::Ones();              // positive axis lengths
    double opacity = 1.0;                                         // [0,1]

    /// One RGB triple per spherical-harmonic basis function, band-major
    /// (DC first). Degree 0 means a single constant triple.
    std::vector<Eigen::Vector3d> color_coeffs{Eigen::Vector3d::Zero()};

    Eigen::Vector3d normal = Eigen::Vector3d(0, 0, 1); // unit
    Eigen::Vector3d albedo = Eigen::Vector3d(0.5, 0.5, 0.5); // [0,1]^3
    double metallic = 0.0;  // [0,1]
    double roughness = 0.5; // [0,1]
};

struct Covariance3 {
    Eigen::Matrix3d matrix = Eigen::Matrix3d::Identity(); // symmetric PSD
};

/// A primitive after perspective projection onto one image plane.
struct ProjectedGaussian {
    Eigen::Vector2d center_px = Eigen::Vector2d::Zero();
    Eigen::Matrix2d cov2d = Eigen::Matrix2d::Identity(); // symmetric
    double view_depth = 0.0; // camera-frame z of the mean
};

/// Pinhole camera pose and intrinsics. The camera looks along +z in its own
/// frame; pixel u = fx*x/z + cx maps to columns, v = fy*y/z + cy to rows.
/// `orientation` rotates camera-frame vectors into the world frame.
struct CameraView {
    Eigen::Vector3d position = Eigen::Vector3d::Zero();
    Eigen::Quaterniond orientation = Eigen::Quaterniond::Identity();
    Eigen::Vector2d focal = Eigen::Vector2d(100, 100);
    Eigen::Vector2d principal_point = Eigen::Vector2d(0, 0);
    int width = 1;
    int height = 1;
    double near_plane = 0.01;
    double far_plane = 100.0;

    Eigen::Matrix3d world_to_camera_rotation() const {
        return orientation.conjugate().toRotationMatrix();
    }
    Eigen::Vector3d world_to_camera(const Eigen::Vector3d& p) const {
        return orientation.conjugate() * (p - position);
    }
    Eigen::Vector3d camera_to_world(const Eigen::Vector3d& p) const {
        return orientation * p + position;
    }
    /// Pinhole projection of a camera-frame point (z > 0) to pixel coords.
    Eigen::Vector2d project_camera_point(const Eigen::Vector3d& t) const {
        return {focal.x() * t.x() / t.z() + principal_point.x(),
                focal.y() * t.y() / t.z() + principal_point.y()};
    }
    /// World-space direction through the center of pixel (row, col).
    Eigen::Vector3d pixel_direction(double row, double col) const {
        Eigen::Vector3d d((col - principal_point.x()) / focal.x(),
                          (row - principal_point.y()) / focal.y(), 1.0);
        return (orientation * d).normalized();
    }
    void validate() const {
        if (!(near_plane > 0.0) || !(far_plane > near_plane))
            throw InvalidInputError("CameraView: requires 0 < near < far");
        if (width < 1 || height < 1)
            throw InvalidInputError("CameraView: resolution must be at least 1x1");
    }
};

/// Sigma = R * S * S^T * R^T with S = diag(scale).
/// Throws InvalidInputError if the quaternion is not unit within 1e-6 or a
/// scale component is not strictly positive.
Covariance3 build_covariance(const Eigen::Quaterniond& rotation, const Eigen::Vector3d& scale);

/// exp(-1/2 (x-mu)^T Sigma^-1 (x-mu)); 1 at the mean. A small ridge
/// (1e-6 * max(scale)^2) is added before inversion; throws NumericError if
/// the covariance is still singular after that.
double eval_gaussian(const GaussianPrimitive& primitive, const Eigen::Vector3d& x);

/// EWA-style projection: center is the pinhole image of the mean, cov2d is
/// J W Sigma W^T J^T with W the world->camera rotation and J the local affine
/// Jacobian of the perspective map. Returns nullopt when the mean is closer
/// than the near plane or the 3-sigma footprint misses the image entirely.
std::optional<ProjectedGaussian> project(const GaussianPrimitive& primitive, const CameraView& view);

/// Number of SH basis functions for a degree (degree <= 3).
int sh_basis_count(int degree);

/// Real spherical-harmonic basis values for a unit direction, band-major.
/// Writes sh_basis_count(degree) values into out.
void sh_basis(int degree, const Eigen::Vector3d& dir, double* out);

/// Derivative of each basis value with respect to the (unnormalized) input
/// direction is handled by callers; this gives d(basis)/d(unit dir).
void sh_basis_gradient(int degree, const Eigen::Vector3d& dir, Eigen::Vector3d* out);

/// View-dependent color: 0.5 + sum_b Y_b(dir) * coeffs[b]. dir need not be
/// fed normalized by callers of the primitive-level helper below.
Eigen::Vector3d eval_sh_color(const std::vector<Eigen::Vector3d>& coeffs, const Eigen::Vector3d& unit_dir);

} // namespace urfgs
