#include "aqpath/cube.hpp"

#include <algorithm>
#include <bit>

namespace aqpath {

std::string AdjacencyMask::label() const {
  return (kind == Kind::Hyper ? "h" : "c") + std::to_string(level);
}

AugmentedCube::AugmentedCube(int n) : n_(n) {
  if (n < 1 || n > kMaxDimension) {
    throw InvalidArgument("invalid dimension " + std::to_string(n));
  }
  for (int d = 1; d <= n_; ++d) {
    masks_.push_back({AdjacencyMask::Kind::Hyper, d, hyper_mask(d)});
  }
  for (int d = 1; d <= n_ - 1; ++d) {
    masks_.push_back({AdjacencyMask::Kind::Complement, d, complement_mask(d)});
  }
}

std::uint64_t AugmentedCube::edge_count() const {
  if (n_ == 1) return 1;
  return static_cast<std::uint64_t>(2 * n_ - 1) << (n_ - 1);
}

Vertex AugmentedCube::hyper_mask(int level) const {
  if (level < 1 || level > n_) {
    throw InvalidArgument("hypercubic level " + std::to_string(level) +
                          " out of range for n=" + std::to_string(n_));
  }
  return Vertex{1} << (n_ - level);
}

Vertex AugmentedCube::complement_mask(int level) const {
  if (level < 1 || level > n_ - 1) {
    throw InvalidArgument("complement level " + std::to_string(level) +
                          " out of range for n=" + std::to_string(n_));
  }
  return (Vertex{1} << (n_ - level + 1)) - 1;
}

void AugmentedCube::check_vertex(Vertex x) const {
  if (!contains(x)) {
    throw InvalidArgument("vertex " + std::to_string(x) + " not in AQ_" +
                          std::to_string(n_));
  }
}

Vertex AugmentedCube::h_neighbor(Vertex x, int level) const {
  check_vertex(x);
  return x ^ hyper_mask(level);
}

Vertex AugmentedCube::c_neighbor(Vertex x, int level) const {
  check_vertex(x);
  return x ^ complement_mask(level);
}

std::vector<Vertex> AugmentedCube::neighbors(Vertex x) const {
  check_vertex(x);
  std::vector<Vertex> out;
  out.reserve(masks_.size());
  for (const auto& m : masks_) out.push_back(x ^ m.word);
  return out;
}

bool AugmentedCube::is_adjacent(Vertex x, Vertex y) const {
  return joining_mask(x, y) != nullptr;
}

const AdjacencyMask* AugmentedCube::joining_mask(Vertex x, Vertex y) const {
  if (!contains(x) || !contains(y) || x == y) return nullptr;
  const Vertex diff = x ^ y;
  // A hyper mask has one bit set; a complement mask is a suffix run of ones.
  if ((diff & (diff - 1)) == 0) {
    return &masks_[static_cast<std::size_t>(n_ - std::countr_zero(diff) - 1)];
  }
  if ((diff & (diff + 1)) == 0) {
    const int run = std::countr_one(diff);
    if (run <= n_) {
      const int level = n_ - run + 1;
      return &masks_[static_cast<std::size_t>(n_ + level - 1)];
    }
  }
  return nullptr;
}

Quadrant AugmentedCube::quadrant(Vertex x) const {
  if (n_ < 2) throw InvalidArgument("quadrant undefined for n < 2");
  check_vertex(x);
  return Quadrant{x >> (n_ - 2)};
}

unsigned AugmentedCube::half(Vertex x) const {
  check_vertex(x);
  return x >> (n_ - 1);
}

std::string AugmentedCube::format(Vertex x) const {
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int i = 0; i < n_; ++i) {
    if ((x >> (n_ - 1 - i)) & 1U) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

Vertex AugmentedCube::parse(std::string_view text) const {
  if (text.size() != static_cast<std::size_t>(n_)) {
    throw InvalidArgument("vertex '" + std::string(text) + "' must be " +
                          std::to_string(n_) + " binary digits");
  }
  Vertex v = 0;
  for (char ch : text) {
    if (ch != '0' && ch != '1') {
      throw InvalidArgument("vertex '" + std::string(text) +
                            "' is not a binary string");
    }
    v = (v << 1) | static_cast<Vertex>(ch - '0');
  }
  return v;
}

Vertex translate(Vertex x, XorTranslation t) { return t.apply(x); }

std::string_view to_string(TriplePattern p) {
  switch (p) {
    case TriplePattern::SameQuadrant:
      return "same-quadrant";
    case TriplePattern::SplitQuadrants:
      return "split-quadrants";
    case TriplePattern::SplitHalves:
      return "split-halves";
  }
  return "?";
}

namespace {

void check_triple(const AugmentedCube& cube, const Triple& d) {
  for (Vertex v : d) {
    if (!cube.contains(v)) {
      throw InvalidArgument("vertex " + std::to_string(v) + " not in AQ_" +
                            std::to_string(cube.dimension()));
    }
  }
  if (d[0] == d[1] || d[0] == d[2] || d[1] == d[2]) {
    throw InvalidArgument("terminal vertices must be distinct");
  }
}

// Index of the element whose key differs from the other two, or -1.
template <typename Key>
int lone_index(const Triple& d, Key key) {
  const auto k0 = key(d[0]), k1 = key(d[1]), k2 = key(d[2]);
  if (k0 == k1 && k1 != k2) return 2;
  if (k0 == k2 && k0 != k1) return 1;
  if (k1 == k2 && k0 != k1) return 0;
  return -1;
}

}  // namespace

TriplePattern classify_triple(const AugmentedCube& cube, const Triple& d) {
  check_triple(cube, d);
  const int n = cube.dimension();
  auto half = [n](Vertex v) { return v >> (n - 1); };
  if (lone_index(d, half) >= 0) return TriplePattern::SplitHalves;
  if (n >= 2) {
    auto quad = [n](Vertex v) { return v >> (n - 2); };
    if (lone_index(d, quad) >= 0) return TriplePattern::SplitQuadrants;
  }
  return TriplePattern::SameQuadrant;
}

CanonicalTriple canonicalize_triple(const AugmentedCube& cube,
                                    const Triple& d) {
  const TriplePattern pattern = classify_triple(cube, d);
  const int n = cube.dimension();
  int lone = -1;
  if (pattern == TriplePattern::SplitHalves) {
    lone = lone_index(d, [n](Vertex v) { return v >> (n - 1); });
  } else if (pattern == TriplePattern::SplitQuadrants) {
    lone = lone_index(d, [n](Vertex v) { return v >> (n - 2); });
  }

  std::array<int, 3> roles{};
  if (lone >= 0) {
    int a = -1, b = -1;
    for (int i = 0; i < 3; ++i) {
      if (i == lone) continue;
      (a < 0 ? a : b) = i;
    }
    if (d[static_cast<std::size_t>(b)] < d[static_cast<std::size_t>(a)]) {
      std::swap(a, b);
    }
    roles = {a, b, lone};
  } else {
    const int x = static_cast<int>(std::min_element(d.begin(), d.end()) -
                                   d.begin());
    int k = 1;
    roles[0] = x;
    for (int i = 0; i < 3; ++i) {
      if (i != x) roles[static_cast<std::size_t>(k++)] = i;
    }
  }

  CanonicalTriple out{};
  out.transform = XorTranslation{d[static_cast<std::size_t>(roles[0])]};
  out.roles = roles;
  out.pattern = pattern;
  for (std::size_t r = 0; r < 3; ++r) {
    out.canonical[r] =
        out.transform.apply(d[static_cast<std::size_t>(roles[r])]);
  }
  return out;
}

Triple parse_triple(const AugmentedCube& cube, std::string_view text) {
  Triple d{};
  std::size_t start = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t comma = text.find(',', start);
    const bool last = i == 2;
    if (last != (comma == std::string_view::npos)) {
      throw InvalidArgument("triple must be three comma-separated vertices");
    }
    const std::size_t end = last ? text.size() : comma;
    d[i] = cube.parse(text.substr(start, end - start));
    start = end + 1;
  }
  check_triple(cube, d);
  return d;
}

std::string format_triple(const AugmentedCube& cube, const Triple& d,
                          char sep) {
  return cube.format(d[0]) + sep + cube.format(d[1]) + sep + cube.format(d[2]);
}

}  // namespace aqpath
