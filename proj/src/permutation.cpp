#include "alpharep/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "alpharep/errors.hpp"
#include "alpharep/rational.hpp"

namespace alpharep {

Permutation::Permutation(std::size_t degree) : img_(degree)
{
  std::iota(img_.begin(), img_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : img_(std::move(images))
{
  std::vector<bool> seen(img_.size(), false);
  for (auto x : img_) {
    if (x >= img_.size() || seen[x])
      throw InvalidArgument("image list is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::from_images1(const std::vector<Point> &images1)
{
  std::vector<Point> img(images1.size());
  for (std::size_t i = 0; i < images1.size(); ++i) {
    if (images1[i] == 0)
      throw InvalidArgument("point 0 in 1-based image list");
    img[i] = images1[i] - 1;
  }
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(const std::vector<std::vector<Point>> &cycles,
                                     std::size_t degree)
{
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  for (const auto &c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      Point x = c[i];
      if (x == 0 || x > degree)
        throw InvalidArgument("point " + std::to_string(x) + " outside 1.." +
                              std::to_string(degree));
      if (used[x - 1])
        throw InvalidArgument("point " + std::to_string(x) + " repeated");
      used[x - 1] = true;
      p.img_[x - 1] = c[(i + 1) % c.size()] - 1;
    }
  }
  return p;
}

bool Permutation::is_identity() const
{
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i)
      return false;
  return true;
}

Permutation Permutation::inverse() const
{
  Permutation r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i)
    r.img_[img_[i]] = static_cast<Point>(i);
  return r;
}

Permutation Permutation::pow(long k) const
{
  long o = static_cast<long>(order());
  k %= o;
  if (k < 0)
    k += o;
  Permutation r;
  r.img_.resize(img_.size());
  // walk each cycle once
  std::vector<bool> done(img_.size(), false);
  std::vector<Point> cyc;
  for (std::size_t s = 0; s < img_.size(); ++s) {
    if (done[s])
      continue;
    cyc.clear();
    for (Point x = static_cast<Point>(s); !done[x]; x = img_[x]) {
      done[x] = true;
      cyc.push_back(x);
    }
    std::size_t len = cyc.size();
    for (std::size_t i = 0; i < len; ++i)
      r.img_[cyc[i]] = cyc[(i + static_cast<std::size_t>(k)) % len];
  }
  return r;
}

std::uint64_t Permutation::order() const
{
  std::uint64_t o = 1;
  for (auto l : cycle_type())
    o = lcm_u64(o, l);
  return o;
}

std::vector<std::uint32_t> Permutation::cycle_type() const
{
  std::vector<std::uint32_t> out;
  std::vector<bool> done(img_.size(), false);
  for (std::size_t s = 0; s < img_.size(); ++s) {
    if (done[s])
      continue;
    std::uint32_t len = 0;
    for (Point x = static_cast<Point>(s); !done[x]; x = img_[x]) {
      done[x] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::size_t Permutation::fixed_points() const
{
  std::size_t n = 0;
  for (std::size_t i = 0; i < img_.size(); ++i)
    n += img_[i] == i;
  return n;
}

int Permutation::sign() const
{
  int s = 1;
  for (auto l : cycle_type())
    if (l % 2 == 0)
      s = -s;
  return s;
}

std::string Permutation::str() const
{
  std::string out;
  std::vector<bool> done(img_.size(), false);
  for (std::size_t s = 0; s < img_.size(); ++s) {
    if (done[s] || img_[s] == s)
      continue;
    out += "(";
    bool first = true;
    for (Point x = static_cast<Point>(s); !done[x]; x = img_[x]) {
      done[x] = true;
      if (!first)
        out += " ";
      out += std::to_string(x + 1);
      first = false;
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation &g, const Permutation &h)
{
  if (g.img_.size() != h.img_.size())
    throw InvalidArgument("degree mismatch in permutation product");
  Permutation r;
  r.img_.resize(h.img_.size());
  for (std::size_t i = 0; i < h.img_.size(); ++i)
    r.img_[i] = g.img_[h.img_[i]];
  return r;
}

std::size_t PermutationHash::operator()(const Permutation &p) const noexcept
{
  std::size_t h = 1469598103934665603ull;
  for (auto x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

Permutation parse_permutation(const std::string &text, std::size_t degree)
{
  std::vector<std::vector<Permutation::Point>> cycles;
  std::vector<bool> used(degree + 1, false);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip();
  if (i == text.size())
    throw ParseError("empty permutation text");
  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError("expected '('", i);
    ++i;
    std::vector<Permutation::Point> cyc;
    for (;;) {
      skip();
      if (i >= text.size())
        throw ParseError("unterminated cycle", i);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("unexpected '" + std::string(1, text[i]) + "'", i);
      std::size_t b = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      unsigned long v = std::stoul(text.substr(b, i - b));
      if (v == 0 || v > degree)
        throw ParseError("point " + std::to_string(v) + " outside 1.." +
                             std::to_string(degree),
                         b);
      if (used[v])
        throw ParseError("point " + std::to_string(v) + " repeated", b);
      used[v] = true;
      cyc.push_back(static_cast<Permutation::Point>(v));
    }
    if (!cyc.empty())
      cycles.push_back(std::move(cyc));
    skip();
  }
  return Permutation::from_cycles(cycles, degree);
}

Permutation embed(const Permutation &g, std::size_t degree, std::size_t offset)
{
  if (offset + g.degree() > degree)
    throw InvalidArgument("embedding does not fit");
  std::vector<Permutation::Point> img(degree);
  std::iota(img.begin(), img.end(), Permutation::Point{0});
  for (std::size_t i = 0; i < g.degree(); ++i)
    img[offset + i] = static_cast<Permutation::Point>(offset + g(static_cast<Permutation::Point>(i)));
  return Permutation(std::move(img));
}

Permutation conjugate(const Permutation &g, const Permutation &x)
{
  return x * g * x.inverse();
}

} // namespace alpharep
