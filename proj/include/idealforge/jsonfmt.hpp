#pragma once

#include <limits>

#include "json.hpp"

#include "idealforge/types.hpp"

namespace idealforge {

using Json = nlohmann::ordered_json;

/// An exact integer as JSON: a number when it fits in int64, otherwise a
/// decimal string.
inline Json int_json(const Int& v) {
  if (v.fits_slong_p() && sizeof(long) == 8) return Json(v.get_si());
  return Json(v.get_str());
}

inline Json vector_json(const IntVector& v) {
  Json arr = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(int_json(v(i)));
  return arr;
}

inline Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) rows.push_back(vector_json(m.row(i).transpose()));
  return rows;
}

}  // namespace idealforge
