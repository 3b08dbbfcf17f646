#pragma once

#include <Eigen/Dense>

#include <cmath>

// 6D spatial vector algebra in Plucker coordinates, angular components first.
//
// Conventions used throughout the library:
//  - A SpatialTransform stores the placement of a child frame in its parent
//    frame: x_parent = rotation * x_child + translation.
//  - transformMotion / transformForce re-express parent-frame spatial
//    quantities in child-frame coordinates (the recursion direction of
//    inverse dynamics). The pair is dual, so <v, f> is preserved.
//  - SpatialInertia keeps the rotational inertia about the body's center of
//    mass together with the com position in the owning frame; parallel-axis
//    terms appear only in inertiaAboutOrigin() and composeInertia().

namespace paycap {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

struct MotionVector {
  Vec3 angular = Vec3::Zero();  // rad/s or rad/s^2
  Vec3 linear = Vec3::Zero();   // m/s or m/s^2
};

struct ForceVector {
  Vec3 moment = Vec3::Zero();  // N*m
  Vec3 force = Vec3::Zero();   // N
};

struct SpatialTransform {
  Mat3 rotation = Mat3::Identity();
  Vec3 translation = Vec3::Zero();
};

struct SpatialInertia {
  double mass = 0.0;                 // kg
  Vec3 com = Vec3::Zero();           // m, in owning frame
  Mat3 inertiaAboutCom = Mat3::Zero();  // kg*m^2, symmetric
};

inline SpatialTransform composeTransforms(const SpatialTransform& a, const SpatialTransform& b) {
  return {a.rotation * b.rotation, a.translation + a.rotation * b.translation};
}

inline SpatialTransform invertTransform(const SpatialTransform& x) {
  Mat3 rt = x.rotation.transpose();
  return {rt, -(rt * x.translation)};
}

inline Vec3 transformPoint(const SpatialTransform& x, const Vec3& p) {
  return x.rotation * p + x.translation;
}

// Parent-frame coordinates -> child-frame coordinates.
inline MotionVector transformMotion(const SpatialTransform& x, const MotionVector& v) {
  MotionVector out;
  out.angular.noalias() = x.rotation.transpose() * v.angular;
  out.linear.noalias() = x.rotation.transpose() * (v.linear - x.translation.cross(v.angular));
  return out;
}

// Dual of transformMotion; preserves the power pairing <v, f>.
inline ForceVector transformForce(const SpatialTransform& x, const ForceVector& f) {
  ForceVector out;
  out.force.noalias() = x.rotation.transpose() * f.force;
  out.moment.noalias() = x.rotation.transpose() * (f.moment - x.translation.cross(f.force));
  return out;
}

// Spatial motion cross product v x m.
inline MotionVector crossMotion(const MotionVector& v, const MotionVector& m) {
  return {v.angular.cross(m.angular), v.angular.cross(m.linear) + v.linear.cross(m.angular)};
}

// Spatial force cross product v x* f.
inline ForceVector crossForce(const MotionVector& v, const ForceVector& f) {
  return {v.angular.cross(f.moment) + v.linear.cross(f.force), v.angular.cross(f.force)};
}

// Power pairing: moment.angular + force.linear.
inline double pairing(const MotionVector& v, const ForceVector& f) {
  return v.angular.dot(f.moment) + v.linear.dot(f.force);
}

// Spatial momentum h = I * v (same linear map applies spatial accelerations).
inline ForceVector applyInertia(const SpatialInertia& inertia, const MotionVector& v) {
  Vec3 comVelocity = v.linear + v.angular.cross(inertia.com);
  Vec3 linearMomentum = inertia.mass * comVelocity;
  ForceVector out;
  out.force = linearMomentum;
  out.moment.noalias() = inertia.inertiaAboutCom * v.angular;
  out.moment += inertia.com.cross(linearMomentum);
  return out;
}

// Rotational inertia about the owning frame origin (parallel-axis shift).
inline Mat3 inertiaAboutOrigin(const SpatialInertia& inertia) {
  const Vec3& c = inertia.com;
  return inertia.inertiaAboutCom +
         inertia.mass * (c.squaredNorm() * Mat3::Identity() - c * c.transpose());
}

// Same body rigidly displaced by `displacement` in the owning frame (the com
// moves; inertia about the com is translation invariant).
inline SpatialInertia shiftInertia(const SpatialInertia& inertia, const Vec3& displacement) {
  return {inertia.mass, inertia.com + displacement, inertia.inertiaAboutCom};
}

// Re-express a child-frame inertia in the parent frame of `x`.
inline SpatialInertia transformInertia(const SpatialTransform& x, const SpatialInertia& inertia) {
  return {inertia.mass, transformPoint(x, inertia.com),
          x.rotation * inertia.inertiaAboutCom * x.rotation.transpose()};
}

// Rigid composition of two bodies expressed in the same frame.
inline SpatialInertia composeInertia(const SpatialInertia& a, const SpatialInertia& b) {
  SpatialInertia out;
  out.mass = a.mass + b.mass;
  out.com = out.mass > 0.0 ? Vec3((a.mass * a.com + b.mass * b.com) / out.mass) : Vec3::Zero();
  auto aboutCombinedCom = [&out](const SpatialInertia& body) -> Mat3 {
    Vec3 r = body.com - out.com;
    return body.inertiaAboutCom +
           body.mass * (r.squaredNorm() * Mat3::Identity() - r * r.transpose());
  };
  out.inertiaAboutCom = aboutCombinedCom(a) + aboutCombinedCom(b);
  return out;
}

inline bool isOrthonormal(const Mat3& r, double tol = 1e-9) {
  return (r.transpose() * r - Mat3::Identity()).cwiseAbs().maxCoeff() <= tol &&
         std::abs(r.determinant() - 1.0) <= tol;
}

// Axis-angle logarithm of a rotation matrix, as axis * angle.
inline Vec3 rotationLog(const Mat3& r) {
  Eigen::AngleAxisd aa(r);
  return aa.angle() * aa.axis();
}

}  // namespace paycap
