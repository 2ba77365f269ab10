#pragma once

// Brute-force Euler brick enumeration and the perfect-cuboid root filter.

#include <optional>
#include <vector>

#include "cuboid/bigpoly.hpp"
#include "cuboid/linear_factor.hpp"

namespace cuboid {

/// Edges x <= y <= z with integer face diagonals dxy, dyz, dzx. `body` is the
/// space diagonal when it is an integer.
struct Brick {
  BigInt x, y, z;
  BigInt dxy, dyz, dzx;
  std::optional<BigInt> body;

  friend bool operator==(const Brick&, const Brick&) = default;
};

/// Face diagonals and body are consistent with the edges.
bool is_valid_brick(const Brick& b);

/// Brick from edges; nullopt unless all three face diagonals are integers.
std::optional<Brick> make_brick(const BigInt& x, const BigInt& y, const BigInt& z);

/// Primitive Euler bricks with edges x <= y <= z <= max_edge, in
/// lexicographic order. Built by intersecting Pythagorean-leg tables;
/// `workers` threads split the z range. Throws InvalidArgument for
/// max_edge < 1.
std::vector<Brick> enumerate_euler_bricks(unsigned max_edge, unsigned workers = 1);

/// x^2 + y^2 + z^2 is a perfect square. Throws NotEulerBrick for an
/// invalid brick.
bool check_perfect(const Brick& b);

/// Roots t satisfying t > a, t > b, t > u and (a + t)(b + t) > 2 t^2. A
/// nonempty result for positive a, b, u would witness a perfect cuboid.
RootSet filter_cuboid_roots(const BigInt& a, const BigInt& b, const BigInt& u, const RootSet& roots);

/// filter_cuboid_roots applied to the integer roots of build_p_abu(a, b, u).
RootSet cuboid_witnesses(const BigInt& a, const BigInt& b, const BigInt& u);

}  // namespace cuboid
