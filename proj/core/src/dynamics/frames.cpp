#include "proxsafe/dynamics/frames.hpp"

#include "proxsafe/common/math.hpp"

namespace proxsafe::dynamics {

PolytopeSpec box_spec(const Eigen::Vector3d& half_extents) {
  PolytopeSpec spec;
  spec.normals.resize(6, 3);
  spec.offsets.resize(6);
  for (int axis = 0; axis < 3; ++axis) {
    Eigen::RowVector3d n = Eigen::RowVector3d::Zero();
    n(axis) = 1.0;
    spec.normals.row(2 * axis) = n;
    spec.normals.row(2 * axis + 1) = -n;
    spec.offsets(2 * axis) = half_extents(axis);
    spec.offsets(2 * axis + 1) = half_extents(axis);
  }
  return spec;
}

RsoState advance(const RsoState& rso, double dt) {
  RsoState out = rso;
  // Body-frame rate composes on the right of the body->inertial rotation.
  out.attitude = rso.attitude * quat_exp(rso.omega * dt);
  out.attitude.normalize();
  return out;
}

Eigen::Matrix3d dcm_body_to_inertial_at(const RsoState& rso, double time_offset) {
  return rso.attitude.toRotationMatrix() *
         quat_exp(rso.omega * time_offset).toRotationMatrix();
}

FrameVec to_rso_frame(const FrameVec& inertial, const RsoState& rso) {
  const Eigen::Matrix3d r_ib = rso.dcm_inertial_to_body();
  FrameVec body;
  body.pos = r_ib * inertial.pos;
  body.vel = r_ib * inertial.vel - rso.omega.cross(body.pos);
  return body;
}

FrameVec from_rso_frame(const FrameVec& body, const RsoState& rso) {
  const Eigen::Matrix3d r_bi = rso.dcm_body_to_inertial();
  FrameVec inertial;
  inertial.pos = r_bi * body.pos;
  inertial.vel = r_bi * (body.vel + rso.omega.cross(body.pos));
  return inertial;
}

}  // namespace proxsafe::dynamics
