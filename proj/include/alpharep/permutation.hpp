#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace alpharep {

// A bijection of {0..n-1}; text forms use points 1..n.
// Composition is right to left: (g * h)(x) = g(h(x)).
class Permutation {
public:
  using Point = std::uint32_t;

  Permutation() = default;
  explicit Permutation(std::size_t degree);
  // 0-based images; throws InvalidArgument unless a bijection.
  explicit Permutation(std::vector<Point> images);
  static Permutation from_images1(const std::vector<Point> &images1);
  // Cycles of 1-based points.
  static Permutation from_cycles(const std::vector<std::vector<Point>> &cycles,
                                 std::size_t degree);

  std::size_t degree() const { return img_.size(); }
  Point operator()(Point x) const { return img_[x]; }
  const std::vector<Point> &images() const { return img_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation pow(long k) const;
  std::uint64_t order() const;
  // Cycle lengths (including fixed points) in decreasing order.
  std::vector<std::uint32_t> cycle_type() const;
  std::size_t fixed_points() const;
  int sign() const;

  std::string str() const;

  friend Permutation operator*(const Permutation &g, const Permutation &h);
  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend std::strong_ordering operator<=>(const Permutation &a, const Permutation &b)
  {
    return a.img_ <=> b.img_;
  }

private:
  std::vector<Point> img_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const noexcept;
};

// "(1 2 3)(4 5)" style; "()" is the identity.
Permutation parse_permutation(const std::string &text, std::size_t degree);

// g acting on points offset..offset+deg(g)-1 of a larger set.
Permutation embed(const Permutation &g, std::size_t degree, std::size_t offset);

// Conjugate g^x = x g x^-1.
Permutation conjugate(const Permutation &g, const Permutation &x);

} // namespace alpharep
