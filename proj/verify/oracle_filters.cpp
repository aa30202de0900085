#include "oracles.hpp"

#include "germcat/error.hpp"

namespace germcat::oracle {

namespace {

bool in(Mask s, std::size_t x) { return (s >> x & 1u) != 0; }

Mask full(const Poset& p) { return p.size() == 32 ? ~Mask{0} : (Mask{1} << p.size()) - 1; }

void check_small(const Poset& p) {
  if (p.size() > 16) fail(ErrorKind::InvalidArgument, "oracle limited to 16 poset elements");
}

}  // namespace

bool literal_is_filter(const Poset& p, Mask s) {
  check_small(p);
  if (s == 0) return false;
  const std::size_t n = p.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (in(s, x) && p.leq(x, y) && !in(s, y)) return false;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!in(s, x) || !in(s, y)) continue;
      bool lower = false;
      for (std::size_t z = 0; z < n && !lower; ++z) lower = in(s, z) && p.leq(z, x) && p.leq(z, y);
      if (!lower) return false;
    }
  return true;
}

std::vector<Mask> literal_filters(const Poset& p) {
  check_small(p);
  std::vector<Mask> out;
  for (Mask s = 1; s <= full(p); ++s) {
    if (literal_is_filter(p, s)) out.push_back(s);
    if (s == full(p)) break;
  }
  return out;
}

Mask smallest_filter_containing(const Poset& p, Mask base) {
  Mask result = full(p);
  bool any = false;
  for (Mask f : literal_filters(p))
    if ((f & base) == base) {
      result &= f;
      any = true;
    }
  return any ? result : 0;
}

bool literal_is_ultrafilter(const Poset& p, Mask s) {
  if (!literal_is_filter(p, s) || s == full(p)) return false;
  for (Mask f : literal_filters(p))
    if (f != s && f != full(p) && (f & s) == s) return false;
  return true;
}

Mask to_mask(const Subset& s) {
  Mask m = 0;
  for (auto x : s) m |= Mask{1} << x;
  return m;
}

Subset to_subset(Mask m) {
  Subset out;
  for (std::size_t x = 0; x < 32; ++x)
    if (in(m, x)) out.push_back(x);
  return out;
}

}  // namespace germcat::oracle
