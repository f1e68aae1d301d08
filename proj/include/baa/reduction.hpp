#pragma once

#include <cstddef>
#include <vector>

#include "baa/lattice.hpp"
#include "baa/simplexkit.hpp"

namespace baa {

// w in Z^{m+n} with positive last coordinate R, and the frame e_1..e_m, w.
class ReductionContext {
 public:
  ReductionContext(std::vector<long> w_bar, std::size_t m);

  const std::vector<long>& w_bar() const { return w_bar_; }
  const Line& w() const { return w_; }
  long R() const { return w_bar_.back(); }
  std::size_t m() const { return m_; }
  std::size_t dim() const { return w_bar_.size(); }
  // e_1..e_m followed by w.
  const std::vector<Line>& frame() const { return frame_; }

 private:
  std::vector<long> w_bar_;
  Line w_;
  std::size_t m_;
  std::vector<Line> frame_;
};

// Representative with nonnegative last coordinate (the canonical one when the
// last coordinate is zero).
std::vector<long> bar(const Line& v);

// Last coordinate of bar(v) modulo R.
long b_coordinate(const Line& v, const ReductionContext& ctx);

// bar(v) - a w_bar with a chosen so the last coordinate lands in [0, R).
std::vector<long> reduce_bar(const Line& v, const ReductionContext& ctx);
Line reduce_line(const Line& v, const ReductionContext& ctx);

enum class CarryingStatus { Carrying, NotCarrying, NotApplicable };
const char* to_string(CarryingStatus s);

// Carrying test by image: reduce every vertex and ask whether the image still
// spans a simplex of the target link (standard and 2-additive simplices only
// for 2-additive sigma).
CarryingStatus carrying_status(const std::vector<Line>& sigma, const ReductionContext& ctx);

// Facet variant for double-triple sigma: carrying when one of its 2- or
// 3-additive facets carries. Agrees with carrying_status on other types.
CarryingStatus carrying_facet_status(const std::vector<Line>& sigma, const ReductionContext& ctx);

// The same question answered from the b-coordinates and the shape of the
// additive relations alone. For double-triple sigma only four shapes count:
// {x, y, x+y+-w, x+y}, {x, y, x+y+-e_i, x+-e_i}, {x, y, x+y+-e_i, x+y} and
// {x, y, t, x+y+-t, x+y}, with x, y, t the representatives of nonnegative
// last coordinate.
CarryingStatus carrying_closed_form(const std::vector<Line>& sigma, const ReductionContext& ctx);

// Additive core of sigma inside the link: the lines of sigma in the core of
// sigma together with the frame. Empty for standard simplices.
std::vector<Line> link_core(const std::vector<Line>& sigma, const std::vector<Line>& frame, Ring ring,
                            std::size_t n);

}  // namespace baa
