#pragma once

#include <string_view>

#include "ncpbw/job.hpp"
#include "ncpbw/poly.hpp"

namespace th {

inline ncpbw::Quiver::Ptr free_xy() { return ncpbw::Quiver::make_free({"x", "y"}); }

/// a:1->2, b:2->1
inline ncpbw::Quiver::Ptr two_cycle() { return ncpbw::Quiver::make_path({"1", "2"}, {{"a", 0, 1}, {"b", 1, 0}}); }

inline ncpbw::NcPoly P(const ncpbw::Quiver::Ptr& q, std::string_view text) { return ncpbw::parse_expression(q, text); }

inline ncpbw::NcPoly T(const ncpbw::Quiver::Ptr& q, std::uint32_t k = 1) { return ncpbw::NcPoly::constant(q, 1, k); }

inline ncpbw::Monomial M(const ncpbw::Quiver::Ptr& q, std::initializer_list<std::string_view> names,
                         std::uint32_t tpow = 0) {
  return q->path(names)->with_tpow(tpow);
}

}  // namespace th
