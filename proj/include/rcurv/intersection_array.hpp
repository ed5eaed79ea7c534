#pragma once

#include <string>
#include <vector>

namespace rcurv {

// (b_0, ..., b_{L-1}; c_1, ..., c_L) of a distance-regular graph of diameter L.
struct IntersectionArray {
  std::vector<int> b;
  std::vector<int> c;

  int diameter() const { return static_cast<int>(b.size()); }
  // b_1, or 0 when the diameter is 1.
  int b1() const { return b.size() > 1 ? b[1] : 0; }
  // b_i + c_i <= b_0 and c_1 = 1.
  bool valid() const;
  std::string to_string() const;  // "(16,5;1,8)"

  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

}  // namespace rcurv
