#pragma once

#include "afflog/balls/ball_linalg.hpp"
#include "afflog/heights/subspace.hpp"

namespace afflog {

/// Enclosure of inf_{x in W} |u - x| (Euclidean). Uses an exact orthogonal
/// projector over K when the field has a conjugation automorphism and an
/// interval Gram solve otherwise; hyperplanes are cross-checked against
/// |<u, y>| / |y| for the normal vector y. Throws std::runtime_error when the
/// Gram matrix cannot be inverted at this precision.
RealEnclosure distance_to_subspace(const BallVector& u, const SubspaceSpec& w, Precision prec = kDefaultPrecision);

/// Normal vector y of a hyperplane W = {z : sum y_k conj(z_k) = 0}, scaled so
/// that its first nonzero coordinate is 1.
std::vector<FieldElement> hyperplane_normal(const SubspaceSpec& w);

}  // namespace afflog
