#ifndef AITCHISON_QUBIT_HPP
#define AITCHISON_QUBIT_HPP

// Closed-form geometry on 2x2 states through Bloch-ball coordinates.
// Every operation here has a general counterpart in state_space; the
// closed forms act as the analytic oracle for that machinery.

#include "aitchison/state_space.hpp"

namespace aitchison {

struct BlochVector {
    // Interior of the unit ball, with a 1e-12 guard below the boundary
    // (bounds atanh at about 14.2).
    BlochVector(double x, double y, double z);

    double norm() const;

    double x, y, z;
};

// (x,y,z) -> (1/2) [[1+z, x+iy], [x-iy, 1-z]].
DensityState bloch_to_state(const BlochVector& v);

// Inverse read-off: x = 2 Re D01, y = 2 Im D01, z = D00 - D11. Dim 2 only.
BlochVector state_to_bloch(const DensityState& d);

// atanh(|v1|) atanh(|v2|) cos(theta). A zero vector annihilates the
// product, so the undefined angle at the origin never enters.
double inner_closed(const BlochVector& v1, const BlochVector& v2);

// atanh(|v|).
double norm_closed(const BlochVector& v);

// sqrt(atanh^2 R + atanh^2 r - 2 cos(theta) atanh R atanh r).
double distance_closed(const BlochVector& v1, const BlochVector& v2);

// Reflection through the origin; matches I - D at the state level.
BlochVector negate_closed(const BlochVector& v);

// Dilatation: same direction, radius tanh(lambda atanh(|v|)). Extended to
// all real lambda (tanh and atanh are odd, so negative lambda composes the
// positive dilatation with the reflection).
BlochVector dilate_closed(double lambda, const BlochVector& v);

} // namespace aitchison

#endif
