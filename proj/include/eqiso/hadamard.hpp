#pragma once

#include <Eigen/Dense>

#include "eqiso/conference.hpp"

namespace eqiso {

struct HadamardMatrix {
  int order = 0;
  Eigen::MatrixXcd values;
};

/// H = [[C + I, C* - I], [C - I, -C* - I]] for a symmetric conference matrix
/// C of order n; H is complex Hadamard of order 2n. Throws NotConference when
/// C is not symmetric or its conference residual exceeds 1e-10.
HadamardMatrix double_conference(const ConferenceMatrix& c);

/// max of the worst | |h_ij| - 1 | and |HH* - nI|_max.
double verify_hadamard(const Eigen::MatrixXcd& h);
inline double verify_hadamard(const HadamardMatrix& h) { return verify_hadamard(h.values); }

}  // namespace eqiso
