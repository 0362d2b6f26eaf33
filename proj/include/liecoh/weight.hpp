#pragma once

#include <string>
#include <vector>

#include "liecoh/rational.hpp"

namespace liecoh {

// Weight in fundamental-weight coordinates: coords[i] = <w, alpha_i-check>.
struct Weight {
  std::vector<Rat> coords;

  Weight() = default;
  explicit Weight(int rank) : coords(rank) {}
  explicit Weight(std::vector<Rat> c) : coords(std::move(c)) {}

  int rank() const { return int(coords.size()); }

  bool operator==(const Weight& o) const { return coords == o.coords; }
  bool operator!=(const Weight& o) const { return coords != o.coords; }
  bool operator<(const Weight& o) const { return coords < o.coords; }

  Weight operator+(const Weight& o) const {
    Weight r = *this;
    for (int i = 0; i < rank(); ++i) r.coords[i] += o.coords[i];
    return r;
  }
  Weight operator-(const Weight& o) const {
    Weight r = *this;
    for (int i = 0; i < rank(); ++i) r.coords[i] -= o.coords[i];
    return r;
  }
  Weight operator*(const Rat& c) const {
    Weight r = *this;
    for (auto& x : r.coords) x *= c;
    return r;
  }
  Weight operator-() const { return *this * Rat(-1); }

  bool is_zero() const {
    for (const auto& x : coords)
      if (x != 0) return false;
    return true;
  }

  bool is_integral() const {
    for (const auto& x : coords)
      if (x.get_den() != 1) return false;
    return true;
  }

  bool is_dominant() const {
    for (const auto& x : coords)
      if (x < 0) return false;
    return true;
  }

  std::string str() const {
    std::string s = "(";
    for (int i = 0; i < rank(); ++i) {
      if (i) s += ",";
      s += rat_str(coords[i]);
    }
    return s + ")";
  }
};

}  // namespace liecoh
