#pragma once

#include "bfc/lincomb.hpp"
#include "bfc/partition.hpp"

namespace bfc {

using SchurVector = LinComb<Partition>;

SchurVector schur(const Partition& p, const Q& c = Q(1));

SchurVector apply_q(const SchurVector& v);  // remove a box
SchurVector apply_p(const SchurVector& v);  // add a box

// Strip operators. Size 0 is the identity, negative sizes give 0.
SchurVector apply_p_row(int m, const SchurVector& v);  // add a horizontal m-strip
SchurVector apply_p_col(int m, const SchurVector& v);  // add a vertical m-strip
SchurVector apply_q_row(int m, const SchurVector& v);  // remove a horizontal m-strip
SchurVector apply_q_col(int m, const SchurVector& v);  // remove a vertical m-strip

// All eta containing p with eta / p a horizontal strip of m boxes.
std::vector<Partition> horizontal_strips_added(const Partition& p, int m);

std::string to_string(const SchurVector& v);

}  // namespace bfc
