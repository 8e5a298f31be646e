#pragma once

#include <string_view>
#include <vector>

#include "ads/geometry.hpp"

namespace ads {

// Normal extremals carry multiplier nu = -1, abnormal ones nu = 0.
// AbnormalPlus moves with u2 = +u1, AbnormalMinus with u2 = -u1.
enum class ExtremalClass { Normal, AbnormalPlus, AbnormalMinus };

std::string_view to_string(ExtremalClass c);

struct TrajectorySample {
  double t = 0.0;
  Point point;
  Control control;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;  // strictly increasing t
  ExtremalClass kind = ExtremalClass::Normal;
  // Set when the trajectory is one representative of a continuum of optimal
  // trajectories (the apex (0, pi)).
  bool continuum = false;
};

}  // namespace ads
