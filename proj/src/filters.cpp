#include "germcat/filters.hpp"

#include <algorithm>
#include <set>

#include "germcat/budget.hpp"
#include "germcat/error.hpp"

namespace germcat {

// ---------------------------------------------------------------- Poset

Poset::Poset(std::vector<std::string> labels,
             const std::function<bool(std::size_t, std::size_t)>& leq)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  {
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != n) fail(ErrorKind::InvalidPoset, "duplicate element labels");
  }
  leq_.assign(n * n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) leq_[x * n + y] = leq(x, y) ? 1 : 0;

  for (std::size_t x = 0; x < n; ++x) {
    if (!this->leq(x, x)) fail(ErrorKind::InvalidPoset, "not reflexive at " + labels_[x]);
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && this->leq(x, y) && this->leq(y, x))
        fail(ErrorKind::InvalidPoset, "not antisymmetric: " + labels_[x] + ", " + labels_[y]);
      for (std::size_t z = 0; z < n; ++z) {
        budget::tick();
        if (this->leq(x, y) && this->leq(y, z) && !this->leq(x, z))
          fail(ErrorKind::InvalidPoset,
               "not transitive: " + labels_[x] + " <= " + labels_[y] + " <= " + labels_[z]);
      }
    }
  }

  // meet(x, y): the common lower bound with the largest down-set, kept only if
  // every common lower bound lies below it
  std::vector<std::size_t> down(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t z = 0; z < n; ++z) down[x] += this->leq(z, x) ? 1 : 0;
  meet_.assign(n * n, std::nullopt);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      std::optional<std::size_t> best;
      for (std::size_t z = 0; z < n; ++z)
        if (this->leq(z, x) && this->leq(z, y) && (!best || down[z] > down[*best])) best = z;
      for (std::size_t z = 0; best && z < n; ++z)
        if (this->leq(z, x) && this->leq(z, y) && !this->leq(z, *best)) best.reset();
      meet_[x * n + y] = best;
    }
  }
}

Poset Poset::from_pairs(std::vector<std::string> labels,
                        const std::vector<std::pair<std::string, std::string>>& pairs) {
  const std::size_t n = labels.size();
  std::vector<std::uint8_t> rel(n * n, 0);
  auto index = [&](const std::string& s) {
    auto it = std::find(labels.begin(), labels.end(), s);
    if (it == labels.end()) fail(ErrorKind::UnknownElement, "'" + s + "' is not a poset element");
    return static_cast<std::size_t>(it - labels.begin());
  };
  for (const auto& [a, b] : pairs) rel[index(a) * n + index(b)] = 1;
  return Poset(std::move(labels), [&](std::size_t x, std::size_t y) { return rel[x * n + y] != 0; });
}

Poset Poset::powerset(std::vector<std::string> atoms) {
  if (atoms.size() > 8) fail(ErrorKind::InvalidArgument, "powerset over more than 8 atoms");
  const std::size_t n = std::size_t{1} << atoms.size();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t mask = 0; mask < n; ++mask) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      if (!first) s += ',';
      s += atoms[i];
      first = false;
    }
    labels.push_back(s + "}");
  }
  Poset p(std::move(labels), [](std::size_t x, std::size_t y) { return (x & ~y) == 0; });
  p.atoms_ = std::move(atoms);
  p.is_powerset_ = true;
  return p;
}

Poset Poset::chain(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return Poset(std::move(labels), [](std::size_t x, std::size_t y) { return x <= y; });
}

std::optional<std::size_t> Poset::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t Poset::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  fail(ErrorKind::UnknownElement, "'" + std::string(label) + "' is not a poset element");
}

Subset Poset::indices_of(std::span<const std::string> labels) const {
  Subset out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(index_of(l));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Poset::has_all_meets() const noexcept {
  return std::all_of(meet_.begin(), meet_.end(), [](const auto& m) { return m.has_value(); });
}

std::optional<std::size_t> Poset::top() const {
  for (std::size_t t = 0; t < size(); ++t) {
    bool is_top = true;
    for (std::size_t x = 0; x < size() && is_top; ++x) is_top = leq(x, t);
    if (is_top) return t;
  }
  return std::nullopt;
}

std::optional<std::size_t> Poset::bottom() const {
  for (std::size_t b = 0; b < size(); ++b) {
    bool is_bottom = true;
    for (std::size_t x = 0; x < size() && is_bottom; ++x) is_bottom = leq(b, x);
    if (is_bottom) return b;
  }
  return std::nullopt;
}

Subset Poset::up(std::size_t x) const {
  Subset out;
  for (std::size_t y = 0; y < size(); ++y)
    if (leq(x, y)) out.push_back(y);
  return out;
}

// ---------------------------------------------------------------- DefinableSubset

namespace {

std::vector<std::uint64_t> normalized(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<std::uint64_t> set_union(const std::vector<std::uint64_t>& a,
                                     const std::vector<std::uint64_t>& b) {
  std::vector<std::uint64_t> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<std::uint64_t> set_intersection(const std::vector<std::uint64_t>& a,
                                            const std::vector<std::uint64_t>& b) {
  std::vector<std::uint64_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<std::uint64_t> set_difference(const std::vector<std::uint64_t>& a,
                                          const std::vector<std::uint64_t>& b) {
  std::vector<std::uint64_t> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

DefinableSubset::DefinableSubset(std::vector<std::uint64_t> exceptions, bool cofinite)
    : exceptions_(normalized(std::move(exceptions))), cofinite_(cofinite) {}

DefinableSubset DefinableSubset::finite(std::vector<std::uint64_t> members) {
  return DefinableSubset(std::move(members), false);
}

DefinableSubset DefinableSubset::cofinite(std::vector<std::uint64_t> missing) {
  return DefinableSubset(std::move(missing), true);
}

bool DefinableSubset::contains(std::uint64_t n) const {
  const bool listed = std::binary_search(exceptions_.begin(), exceptions_.end(), n);
  return cofinite_ ? !listed : listed;
}

bool DefinableSubset::subset_of(const DefinableSubset& other) const {
  return intersect(*this, other.complement()) == DefinableSubset::none();
}

DefinableSubset DefinableSubset::complement() const { return DefinableSubset(exceptions_, !cofinite_); }

DefinableSubset unite(const DefinableSubset& a, const DefinableSubset& b) {
  if (!a.cofinite_ && !b.cofinite_) return DefinableSubset(set_union(a.exceptions_, b.exceptions_), false);
  if (a.cofinite_ && b.cofinite_)
    return DefinableSubset(set_intersection(a.exceptions_, b.exceptions_), true);
  const auto& co = a.cofinite_ ? a : b;
  const auto& fin = a.cofinite_ ? b : a;
  return DefinableSubset(set_difference(co.exceptions_, fin.exceptions_), true);
}

DefinableSubset intersect(const DefinableSubset& a, const DefinableSubset& b) {
  return unite(a.complement(), b.complement()).complement();
}

std::string DefinableSubset::to_string() const {
  std::string s = cofinite_ ? "N\\{" : "{";
  for (std::size_t i = 0; i < exceptions_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(exceptions_[i]);
  }
  return s + "}";
}

DefinableSubset definable_algebra(SetOp op, const DefinableSubset& a,
                                  const std::optional<DefinableSubset>& b) {
  if (op == SetOp::Complement) return a.complement();
  if (!b) fail(ErrorKind::InvalidArgument, "binary set operation needs two operands");
  return op == SetOp::Union ? unite(a, *b) : intersect(a, *b);
}

bool frechet_contains(const DefinableSubset& s) { return s.is_cofinite(); }

// ---------------------------------------------------------------- filters

bool is_filter(const Poset& p, std::span<const std::size_t> subset) {
  if (subset.empty()) return false;
  std::vector<std::uint8_t> in(p.size(), 0);
  for (auto x : subset) {
    if (x >= p.size()) fail(ErrorKind::UnknownElement, "element index out of range");
    in[x] = 1;
  }
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (!in[x]) continue;
    for (std::size_t y = 0; y < p.size(); ++y) {
      budget::tick();
      if (p.leq(x, y) && !in[y]) return false;
      if (!in[y]) continue;
      bool directed = false;
      for (std::size_t z = 0; z < p.size() && !directed; ++z)
        directed = in[z] && p.leq(z, x) && p.leq(z, y);
      if (!directed) return false;
    }
  }
  return true;
}

bool is_filter(const Poset& p, std::span<const std::string> labels) {
  const Subset s = p.indices_of(labels);
  return is_filter(p, s);
}

Filter Filter::make_explicit(std::shared_ptr<const Poset> poset, Subset members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!is_filter(*poset, members)) fail(ErrorKind::NotAFilter, "subset is not a filter");
  Filter f;
  f.kind_ = Kind::Explicit;
  f.member_mask_.assign(poset->size(), 0);
  for (auto x : members) f.member_mask_[x] = 1;
  // a finite filter is principal: its minimum lies below every member
  for (auto x : members) {
    bool below_all = true;
    for (auto y : members) below_all = below_all && poset->leq(x, y);
    if (below_all) f.minimum_ = x;
  }
  f.members_ = std::move(members);
  f.poset_ = std::move(poset);
  return f;
}

Filter Filter::principal(std::shared_ptr<const Poset> poset, std::size_t generator) {
  if (generator >= poset->size()) fail(ErrorKind::UnknownElement, "generator out of range");
  Subset up = poset->up(generator);
  return make_explicit(std::move(poset), std::move(up));
}

Filter Filter::minimal(std::shared_ptr<const Poset> poset) {
  auto t = poset->top();
  if (!t) fail(ErrorKind::InvalidPoset, "poset has no top element");
  return principal(std::move(poset), *t);
}

Filter Filter::improper(std::shared_ptr<const Poset> poset) {
  Subset all(poset->size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return make_explicit(std::move(poset), std::move(all));
}

Filter Filter::frechet() {
  Filter f;
  f.kind_ = Kind::Frechet;
  return f;
}

Filter Filter::principal_definable(DefinableSubset generator) {
  Filter f;
  f.kind_ = Kind::PrincipalDefinable;
  f.generator_ = std::move(generator);
  return f;
}

const Poset& Filter::poset() const { return *poset_ptr(); }

const std::shared_ptr<const Poset>& Filter::poset_ptr() const {
  if (kind_ != Kind::Explicit) fail(ErrorKind::NonEnumerableFilter, "filter on P(N) has no finite poset");
  return poset_;
}

const Subset& Filter::members() const {
  if (kind_ != Kind::Explicit) fail(ErrorKind::NonEnumerableFilter, "filter on P(N) is not enumerable");
  return members_;
}

std::size_t Filter::minimum() const {
  if (kind_ != Kind::Explicit) fail(ErrorKind::NonEnumerableFilter, "filter on P(N) has no minimum stage");
  return minimum_;
}

const DefinableSubset& Filter::generator() const {
  if (kind_ != Kind::PrincipalDefinable) fail(ErrorKind::InvalidArgument, "filter has no definable generator");
  return generator_;
}

bool Filter::contains(std::size_t element) const {
  if (kind_ != Kind::Explicit) fail(ErrorKind::InvalidArgument, "element query on a filter over P(N)");
  return element < member_mask_.size() && member_mask_[element] != 0;
}

bool Filter::contains(const DefinableSubset& s) const {
  switch (kind_) {
    case Kind::Frechet: return frechet_contains(s);
    case Kind::PrincipalDefinable: return generator_.subset_of(s);
    case Kind::Explicit: break;
  }
  fail(ErrorKind::InvalidArgument, "definable-subset query on an explicit filter");
}

bool Filter::is_proper() const {
  switch (kind_) {
    case Kind::Explicit: return members_.size() != poset_->size();
    case Kind::Frechet: return true;
    case Kind::PrincipalDefinable: return generator_ != DefinableSubset::none();
  }
  return true;
}

Filter generate_filter(std::shared_ptr<const Poset> p, std::span<const std::size_t> base) {
  if (base.empty()) fail(ErrorKind::EmptyBase, "cannot generate a filter from an empty base");
  std::vector<std::uint8_t> in(p->size(), 0);
  std::vector<std::size_t> members;
  for (auto x : base) {
    if (x >= p->size()) fail(ErrorKind::UnknownElement, "base element out of range");
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      auto m = p->meet(members[i], members[j]);
      if (!m)
        fail(ErrorKind::MeetUnavailable,
             "no meet of " + p->label(members[i]) + " and " + p->label(members[j]));
      if (!in[*m]) {
        in[*m] = 1;
        members.push_back(*m);
      }
    }
  }
  Subset closed;
  for (std::size_t y = 0; y < p->size(); ++y) {
    bool above = false;
    for (auto x : members) above = above || p->leq(x, y);
    if (above) closed.push_back(y);
  }
  return Filter::make_explicit(std::move(p), std::move(closed));
}

std::vector<Subset> all_filters(const Poset& p) {
  std::vector<Subset> out;
  for (std::size_t x = 0; x < p.size(); ++x) {
    Subset up = p.up(x);
    if (std::find(out.begin(), out.end(), up) == out.end()) out.push_back(std::move(up));
  }
  return out;
}

bool is_ultrafilter(const Poset& p, std::span<const std::size_t> subset) {
  Subset f(subset.begin(), subset.end());
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  if (!is_filter(p, f)) fail(ErrorKind::NotAFilter, "subset is not a filter");
  if (f.size() == p.size()) return false;
  for (const auto& g : all_filters(p)) {
    if (g.size() == p.size() || g.size() <= f.size()) continue;
    if (std::includes(g.begin(), g.end(), f.begin(), f.end())) return false;
  }
  return true;
}

bool is_ultrafilter(const Filter& f) {
  if (!f.is_explicit()) fail(ErrorKind::NonEnumerableFilter, "maximality over P(N) is not decidable here");
  return is_ultrafilter(f.poset(), f.members());
}

}  // namespace germcat
