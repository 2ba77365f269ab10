#include "cuboid/cuboid_search.hpp"

#include <algorithm>
#include <thread>

#include "cuboid/cuboid_polys.hpp"
#include "cuboid/error.hpp"

namespace cuboid {

bool is_valid_brick(const Brick& b) {
  if (b.x <= 0 || b.y <= 0 || b.z <= 0) return false;
  if (b.x * b.x + b.y * b.y != b.dxy * b.dxy || b.dxy <= 0) return false;
  if (b.y * b.y + b.z * b.z != b.dyz * b.dyz || b.dyz <= 0) return false;
  if (b.z * b.z + b.x * b.x != b.dzx * b.dzx || b.dzx <= 0) return false;
  const auto body = exact_sqrt(b.x * b.x + b.y * b.y + b.z * b.z);
  return body == b.body;
}

std::optional<Brick> make_brick(const BigInt& x, const BigInt& y, const BigInt& z) {
  if (x <= 0 || y <= 0 || z <= 0) return std::nullopt;
  auto dxy = exact_sqrt(x * x + y * y);
  auto dyz = exact_sqrt(y * y + z * z);
  auto dzx = exact_sqrt(z * z + x * x);
  if (!dxy || !dyz || !dzx) return std::nullopt;
  return Brick{x, y, z, *dxy, *dyz, *dzx, exact_sqrt(x * x + y * y + z * z)};
}

namespace {

// legs[z] lists every x < z with x^2 + z^2 a perfect square.
std::vector<std::vector<unsigned>> pythagorean_legs(unsigned max_edge) {
  std::vector<std::vector<unsigned>> legs(max_edge + 1);
  for (unsigned z = 1; z <= max_edge; ++z)
    for (unsigned x = 1; x < z; ++x) {
      const std::uint64_t s = std::uint64_t{x} * x + std::uint64_t{z} * z;
      if (mpz_perfect_square_p(BigInt(static_cast<unsigned long>(s)).get_mpz_t()))
        legs[z].push_back(x);
    }
  return legs;
}

void bricks_for_z(const std::vector<std::vector<unsigned>>& legs, unsigned z,
                  std::vector<Brick>& out) {
  const auto& zl = legs[z];
  for (std::size_t j = 0; j < zl.size(); ++j) {
    const unsigned y = zl[j];
    for (std::size_t i = 0; i < j; ++i) {
      const unsigned x = zl[i];
      if (!std::binary_search(legs[y].begin(), legs[y].end(), x)) continue;
      if (!coprime(BigInt(x), BigInt(y), BigInt(z))) continue;
      if (auto b = make_brick(x, y, z)) out.push_back(std::move(*b));
    }
  }
}

}  // namespace

std::vector<Brick> enumerate_euler_bricks(unsigned max_edge, unsigned workers) {
  if (max_edge < 1) throw Error(Errc::InvalidArgument, "max_edge must be at least 1");
  workers = std::max(1u, workers);
  const auto legs = pythagorean_legs(max_edge);

  std::vector<std::vector<Brick>> chunks(workers);
  {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w)
      threads.emplace_back([&, w] {
        for (unsigned z = 1 + w; z <= max_edge; z += workers) bricks_for_z(legs, z, chunks[w]);
      });
  }
  std::vector<Brick> out;
  for (auto& c : chunks) out.insert(out.end(), c.begin(), c.end());
  std::sort(out.begin(), out.end(), [](const Brick& l, const Brick& r) {
    if (l.x != r.x) return l.x < r.x;
    if (l.y != r.y) return l.y < r.y;
    return l.z < r.z;
  });
  return out;
}

bool check_perfect(const Brick& b) {
  if (!is_valid_brick(b)) throw Error(Errc::NotEulerBrick, "edges or diagonals are inconsistent");
  return is_perfect_square(b.x * b.x + b.y * b.y + b.z * b.z);
}

RootSet filter_cuboid_roots(const BigInt& a, const BigInt& b, const BigInt& u, const RootSet& roots) {
  RootSet out;
  for (const auto& t : roots)
    if (t > a && t > b && t > u && (a + t) * (b + t) > 2 * t * t) out.insert(t);
  return out;
}

RootSet cuboid_witnesses(const BigInt& a, const BigInt& b, const BigInt& u) {
  return filter_cuboid_roots(a, b, u, integer_roots(build_p_abu(a, b, u)));
}

}  // namespace cuboid
