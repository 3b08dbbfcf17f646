#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "paycap/errors.hpp"
#include "paycap/spatial.hpp"

// Robot and payload description: a serial kinematic chain with per-link
// spatial inertia and per-joint effort limits. Models are immutable after
// construction and freely shareable across threads.

namespace paycap {

enum class JointKind { Revolute, Prismatic, Fixed };

inline const char* jointKindName(JointKind kind) {
  switch (kind) {
    case JointKind::Revolute: return "revolute";
    case JointKind::Prismatic: return "prismatic";
    case JointKind::Fixed: return "fixed";
  }
  return "unknown";
}

struct Joint {
  std::string name;
  JointKind kind = JointKind::Revolute;
  Vec3 axis = Vec3::UnitZ();             // unit, in the joint (child) frame
  SpatialTransform originTransform;      // parent link frame -> joint frame
  double positionLower = 0.0;            // rad or m
  double positionUpper = 0.0;
  double velocityLimit = 0.0;            // rad/s or m/s, > 0 for non-fixed
  double effortLimit = 0.0;              // N*m or N, > 0 for non-fixed
};

struct Link {
  std::string name;
  SpatialInertia inertia;
};

struct PayloadSpec {
  double mass = 0.0;                     // kg
  Vec3 comOffset = Vec3::Zero();         // m, in the end-effector frame
  Mat3 inertiaAboutCom = Mat3::Zero();   // kg*m^2; zero = point mass
};

// Placement of the child link frame in the parent link frame at joint
// position q. The child frame coincides with the joint frame at q = 0.
inline SpatialTransform jointChildPlacement(const Joint& joint, double q) {
  switch (joint.kind) {
    case JointKind::Revolute:
      return composeTransforms(joint.originTransform,
                               {Eigen::AngleAxisd(q, joint.axis).toRotationMatrix(), Vec3::Zero()});
    case JointKind::Prismatic:
      return composeTransforms(joint.originTransform, {Mat3::Identity(), q * joint.axis});
    case JointKind::Fixed:
      return joint.originTransform;
  }
  return joint.originTransform;
}

// Joint motion subspace in child-frame coordinates.
inline MotionVector jointMotionSubspace(const Joint& joint) {
  switch (joint.kind) {
    case JointKind::Revolute: return {joint.axis, Vec3::Zero()};
    case JointKind::Prismatic: return {Vec3::Zero(), joint.axis};
    case JointKind::Fixed: return {};
  }
  return {};
}

// Serial chain: links[0] is the base; joints[i] connects links[i] to
// links[i+1]. Fixed joints are allowed in the chain and carry no coordinate.
class RobotModel {
 public:
  RobotModel(std::vector<Link> links, std::vector<Joint> joints,
             Vec3 gravity = Vec3(0.0, 0.0, -9.81))
      : links_(std::move(links)), joints_(std::move(joints)), gravity_(std::move(gravity)) {
    if (links_.empty() || links_.size() != joints_.size() + 1) {
      raise(ErrorCode::DimensionMismatch,
            "serial chain needs joints.size()+1 links, got " + std::to_string(links_.size()) +
                " links and " + std::to_string(joints_.size()) + " joints");
    }
    dofIndex_.resize(joints_.size(), -1);
    for (std::size_t i = 0; i < joints_.size(); ++i) {
      if (joints_[i].kind != JointKind::Fixed) dofIndex_[i] = dof_++;
    }
  }

  const std::vector<Link>& links() const { return links_; }
  const std::vector<Joint>& joints() const { return joints_; }
  const Vec3& gravity() const { return gravity_; }
  int dof() const { return dof_; }

  // Coordinate index of joint i, or -1 for fixed joints.
  int dofIndex(std::size_t jointIdx) const { return dofIndex_[jointIdx]; }

  const Link& endEffectorLink() const { return links_.back(); }

  double totalMass() const {
    double m = 0.0;
    for (const Link& link : links_) m += link.inertia.mass;
    return m;
  }

  RobotModel withGravity(const Vec3& gravity) const {
    RobotModel copy(*this);
    copy.gravity_ = gravity;
    return copy;
  }

  RobotModel withTerminalInertia(const SpatialInertia& inertia) const {
    RobotModel copy(*this);
    copy.links_.back().inertia = inertia;
    return copy;
  }

  RobotModel withJoints(std::vector<Joint> joints) const {
    return RobotModel(links_, std::move(joints), gravity_);
  }

 private:
  std::vector<Link> links_;
  std::vector<Joint> joints_;
  Vec3 gravity_;
  std::vector<int> dofIndex_;
  int dof_ = 0;
};

// Payload as a rigid body in the end-effector frame.
inline SpatialInertia payloadInertia(const PayloadSpec& payload) {
  return shiftInertia({payload.mass, Vec3::Zero(), payload.inertiaAboutCom}, payload.comOffset);
}

// New model whose terminal link rigidly carries the payload. The input model
// is unmodified; a zero-mass payload is a no-op.
inline RobotModel attachPayload(const RobotModel& model, const PayloadSpec& payload) {
  return model.withTerminalInertia(
      composeInertia(model.endEffectorLink().inertia, payloadInertia(payload)));
}

// Payload of mass `massKg` from a template: com offset held fixed, rotational
// inertia scaled proportionally with mass.
inline PayloadSpec scalePayload(const PayloadSpec& tmpl, double massKg) {
  PayloadSpec out;
  out.mass = massKg;
  out.comOffset = tmpl.comOffset;
  out.inertiaAboutCom =
      tmpl.mass > 0.0 ? Mat3((massKg / tmpl.mass) * tmpl.inertiaAboutCom) : Mat3::Zero();
  return out;
}

struct Diagnostic {
  enum class Severity { Error, Warning };
  Severity severity = Severity::Error;
  std::string code;
  std::string where;
  std::string message;
};

namespace detail {

inline void checkInertia(const SpatialInertia& inertia, const std::string& where,
                         std::vector<Diagnostic>& out) {
  if (!(inertia.mass >= 0.0) || !std::isfinite(inertia.mass)) {
    out.push_back({Diagnostic::Severity::Error, "NegativeMass", where,
                   "mass must be finite and >= 0"});
  }
  if (!inertia.com.allFinite() || !inertia.inertiaAboutCom.allFinite()) {
    out.push_back({Diagnostic::Severity::Error, "NonFiniteValue", where,
                   "inertial fields must be finite"});
    return;
  }
  if ((inertia.inertiaAboutCom - inertia.inertiaAboutCom.transpose()).cwiseAbs().maxCoeff() >
      1e-12) {
    out.push_back({Diagnostic::Severity::Error, "NonSymmetricInertia", where,
                   "rotational inertia must be symmetric"});
    return;
  }
  Eigen::SelfAdjointEigenSolver<Mat3> eig(inertia.inertiaAboutCom);
  Vec3 moments = eig.eigenvalues();
  if (moments.minCoeff() < -1e-12) {
    out.push_back({Diagnostic::Severity::Error, "NonPsdInertia", where,
                   "rotational inertia has a negative principal moment"});
    return;
  }
  if (inertia.mass > 0.0 && moments(0) + moments(1) < moments(2) - 1e-9) {
    out.push_back({Diagnostic::Severity::Warning, "TriangleInequality", where,
                   "principal moments violate the triangle inequality"});
  }
}

}  // namespace detail

// Structural diagnostics; empty iff all type invariants hold. Triangle
// inequality issues are warnings (point masses sit on the boundary).
inline std::vector<Diagnostic> validateModel(const RobotModel& model) {
  std::vector<Diagnostic> out;
  std::vector<std::string> seen;
  for (const Link& link : model.links()) {
    for (const std::string& name : seen) {
      if (name == link.name) {
        out.push_back({Diagnostic::Severity::Error, "DuplicateName", link.name,
                       "link names must be unique"});
      }
    }
    seen.push_back(link.name);
    detail::checkInertia(link.inertia, "link " + link.name, out);
  }
  for (const Joint& joint : model.joints()) {
    const std::string where = "joint " + joint.name;
    if (!isOrthonormal(joint.originTransform.rotation)) {
      out.push_back({Diagnostic::Severity::Error, "NonOrthonormalRotation", where,
                     "origin rotation is not orthonormal"});
    }
    if (!joint.originTransform.translation.allFinite()) {
      out.push_back({Diagnostic::Severity::Error, "NonFiniteValue", where,
                     "origin translation must be finite"});
    }
    if (joint.kind == JointKind::Fixed) continue;
    if (std::abs(joint.axis.norm() - 1.0) > 1e-9) {
      out.push_back(
          {Diagnostic::Severity::Error, "NonUnitAxis", where, "joint axis must be unit length"});
    }
    if (!(joint.effortLimit > 0.0)) {
      out.push_back(
          {Diagnostic::Severity::Error, "InvalidLimit", where, "effort limit must be > 0"});
    }
    if (!(joint.velocityLimit > 0.0)) {
      out.push_back(
          {Diagnostic::Severity::Error, "InvalidLimit", where, "velocity limit must be > 0"});
    }
    if (!(joint.positionLower < joint.positionUpper)) {
      out.push_back({Diagnostic::Severity::Error, "InvalidLimit", where,
                     "position limits must satisfy min < max"});
    }
  }
  return out;
}

}  // namespace paycap
