#include "germcat/simplicial/enriched.hpp"

#include <algorithm>
#include <set>

#include "germcat/budget.hpp"
#include "germcat/error.hpp"

namespace germcat {

std::size_t EnrichedCat::compose(std::size_t a, std::size_t b, std::size_t c, std::size_t n, std::size_t g,
                                 std::size_t f) const {
  const std::size_t t = (a * size() + b) * size() + c;
  return composition.at(t).at(n).at(g * hom(a, b).count(n) + f);
}

std::size_t EnrichedCat::identity_at(std::size_t a, std::size_t n) const {
  std::size_t v = identities.at(a);
  for (std::size_t l = 0; l < n; ++l) v = hom(a, a).degeneracy(l, 0, v);
  return v;
}

namespace {

std::string objs(const EnrichedCat& k, std::initializer_list<std::size_t> xs) {
  std::string s = "(";
  bool first = true;
  for (auto x : xs) {
    s += (first ? "" : ",") + k.objects[x];
    first = false;
  }
  return s + ")";
}

std::string shape_failure(const EnrichedCat& k) {
  const std::size_t N = k.size();
  if (k.homs.size() != N * N) return "one hom per ordered pair of objects is required";
  if (k.composition.size() != N * N * N) return "one composition per triple of objects is required";
  if (k.identities.size() != N) return "one identity per object is required";
  for (const auto& h : k.homs)
    if (h.dim_bound() != k.dim_bound) return "hom with a different dimension bound";
  for (std::size_t a = 0; a < N; ++a) {
    if (k.identities[a] >= k.hom(a, a).count(0)) return "identity of " + k.objects[a] + " out of range";
    for (std::size_t b = 0; b < N; ++b)
      for (std::size_t c = 0; c < N; ++c) {
        const auto& table = k.composition[(a * N + b) * N + c];
        if (table.size() != k.dim_bound + 1) return "composition " + objs(k, {a, b, c}) + " has the wrong number of levels";
        for (std::size_t n = 0; n <= k.dim_bound; ++n) {
          if (table[n].size() != k.hom(a, b).count(n) * k.hom(b, c).count(n))
            return "composition " + objs(k, {a, b, c}) + " has the wrong size at level " + std::to_string(n);
          for (auto v : table[n])
            if (v >= k.hom(a, c).count(n))
              return "composition " + objs(k, {a, b, c}) + " out of range at level " + std::to_string(n);
        }
      }
  }
  return {};
}

}  // namespace

EnrichmentCheck check_enrichment(const EnrichedCat& k) {
  auto failed = [](std::string why) { return EnrichmentCheck{false, std::move(why)}; };
  if (auto s = shape_failure(k); !s.empty()) return failed(s);
  const std::size_t N = k.size();
  const std::size_t D = k.dim_bound;
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      const auto& hab = k.hom(a, b);
      for (std::size_t n = 0; n <= D; ++n)
        for (std::size_t f = 0; f < hab.count(n); ++f) {
          if (k.compose(a, b, b, n, k.identity_at(b, n), f) != f || k.compose(a, a, b, n, f, k.identity_at(a, n)) != f)
            return failed("unit law fails at level " + std::to_string(n) + " for " + objs(k, {a, b}));
        }
      for (std::size_t c = 0; c < N; ++c) {
        const auto& hbc = k.hom(b, c);
        const auto& hac = k.hom(a, c);
        for (std::size_t n = 0; n <= D; ++n)
          for (std::size_t g = 0; g < hbc.count(n); ++g)
            for (std::size_t f = 0; f < hab.count(n); ++f) {
              budget::tick();
              const std::size_t gf = k.compose(a, b, c, n, g, f);
              for (std::size_t i = 0; n >= 1 && i <= n; ++i)
                if (hac.face(n, i, gf) != k.compose(a, b, c, n - 1, hbc.face(n, i, g), hab.face(n, i, f)))
                  return failed("face d_" + std::to_string(i) + " does not commute with composition " +
                                objs(k, {a, b, c}) + " at level " + std::to_string(n));
              for (std::size_t i = 0; n < D && i <= n; ++i)
                if (hac.degeneracy(n, i, gf) !=
                    k.compose(a, b, c, n + 1, hbc.degeneracy(n, i, g), hab.degeneracy(n, i, f)))
                  return failed("degeneracy s_" + std::to_string(i) + " does not commute with composition " +
                                objs(k, {a, b, c}) + " at level " + std::to_string(n));
            }
        for (std::size_t d = 0; d < N; ++d) {
          const auto& hcd = k.hom(c, d);
          for (std::size_t n = 0; n <= D; ++n)
            for (std::size_t h = 0; h < hcd.count(n); ++h)
              for (std::size_t g = 0; g < hbc.count(n); ++g)
                for (std::size_t f = 0; f < hab.count(n); ++f) {
                  budget::tick();
                  if (k.compose(a, c, d, n, h, k.compose(a, b, c, n, g, f)) !=
                      k.compose(a, b, d, n, k.compose(b, c, d, n, h, g), f))
                    return failed("associativity fails at level " + std::to_string(n) + " for " +
                                  objs(k, {a, b, c, d}));
                }
        }
      }
    }
  return {};
}

EnrichedCat with_entry(EnrichedCat k, std::size_t triple, std::size_t level, std::size_t entry, std::size_t value) {
  k.composition.at(triple).at(level).at(entry) = value;
  return k;
}

EnrichedCat enriched_from_category(const SmallCategory& c, std::size_t group_order, std::size_t dim_bound) {
  validate(c);
  const std::size_t N = c.objects.size();
  const SimpSet group = nerve(cyclic_group(group_order), dim_bound);
  EnrichedCat k;
  k.dim_bound = dim_bound;
  k.objects = c.objects;
  std::vector<std::vector<std::size_t>> arrows(N * N);
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y) {
      arrows[x * N + y] = c.hom(x, y);
      std::vector<std::string> labels;
      for (auto a : arrows[x * N + y]) labels.push_back(c.arrows[a].label);
      k.homs.push_back(product({discrete_simpset(labels, dim_bound), group}, dim_bound));
    }
  auto position = [&](std::size_t x, std::size_t y, std::size_t arrow) {
    const auto& list = arrows[x * N + y];
    return static_cast<std::size_t>(std::find(list.begin(), list.end(), arrow) - list.begin());
  };
  // a string of l residues, most significant first, as a nerve simplex index
  auto add_strings = [group_order](std::size_t s, std::size_t t, std::size_t l) {
    std::size_t out = 0, scale = 1;
    for (std::size_t p = 0; p < l; ++p) {
      out += ((s % group_order + t % group_order) % group_order) * scale;
      s /= group_order;
      t /= group_order;
      scale *= group_order;
    }
    return out;
  };
  k.composition.resize(N * N * N);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      for (std::size_t cc = 0; cc < N; ++cc) {
        auto& table = k.composition[(a * N + b) * N + cc];
        table.resize(dim_bound + 1);
        for (std::size_t l = 0; l <= dim_bound; ++l) {
          const std::size_t gl = group.count(l);
          const std::size_t nf = k.hom(a, b).count(l);
          const std::size_t ng = k.hom(b, cc).count(l);
          table[l].resize(nf * ng);
          for (std::size_t g = 0; g < ng; ++g)
            for (std::size_t f = 0; f < nf; ++f) {
              const std::size_t u = arrows[a * N + b][f / gl];
              const std::size_t w = arrows[b * N + cc][g / gl];
              table[l][g * nf + f] = position(a, cc, c.compose(w, u)) * gl + add_strings(g % gl, f % gl, l);
            }
        }
      }
  for (std::size_t a = 0; a < N; ++a) k.identities.push_back(position(a, a, c.identities[a]) * group.count(0));
  return k;
}

// ---------------------------------------------------------------- quotient

EnrichedQuotient::EnrichedQuotient(std::vector<std::string> index, std::vector<EnrichedCat> components, Filter filter)
    : index_(std::move(index)), components_(std::move(components)), filter_(std::move(filter)) {
  if (!filter_.is_explicit()) fail(ErrorKind::NonEnumerableFilter, "enriched quotients need an explicit filter");
  if (index_.size() != components_.size()) fail(ErrorKind::InvalidArgument, "one component per index");
  if (!filter_.poset().is_powerset() || filter_.poset().atoms() != index_)
    fail(ErrorKind::InvalidArgument, "the filter must live on the powerset of the index");
  if (!components_.empty()) dim_bound_ = components_[0].dim_bound;
  for (const auto& k : components_)
    if (k.dim_bound != dim_bound_) fail(ErrorKind::InvalidArgument, "components have different dimension bounds");
}

std::vector<EnrichedQuotient::Object> EnrichedQuotient::objects() const {
  std::vector<Object> out{{}};
  for (const auto& k : components_) {
    std::vector<Object> next;
    for (const auto& o : out)
      for (std::size_t x = 0; x < k.size(); ++x) {
        next.push_back(o);
        next.back().push_back(x);
      }
    out = std::move(next);
  }
  return out;
}

std::vector<SimpSet> EnrichedQuotient::factors(const Object& x, const Object& y, std::size_t stage) const {
  std::vector<SimpSet> out;
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (stage >> i & 1) out.push_back(components_[i].hom(x.at(i), y.at(i)));
  return out;
}

SimpSet EnrichedQuotient::stage_hom(const Object& x, const Object& y, std::size_t stage) const {
  return product(factors(x, y, stage), dim_bound_);
}

SimpMap EnrichedQuotient::restriction(const Object& x, const Object& y, std::size_t from, std::size_t to) const {
  if ((to & ~from) != 0) fail(ErrorKind::InvalidArgument, "restriction goes to a smaller stage");
  std::vector<std::size_t> keep;
  std::size_t position = 0;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (!(from >> i & 1)) continue;
    if (to >> i & 1) keep.push_back(position);
    ++position;
  }
  const auto fs = factors(x, y, from);
  if (fs.empty()) return identity_map(stage_hom(x, y, from));
  return product_projection(fs, keep);
}

SimpDiagram EnrichedQuotient::stage_diagram(const Object& x, const Object& y) const {
  SimpDiagram d;
  const auto& stages = filter_.members();
  for (auto v : stages) d.objects.push_back(stage_hom(x, y, v));
  for (std::size_t p = 0; p < stages.size(); ++p)
    for (std::size_t q = 0; q < stages.size(); ++q)
      if (p != q && (stages[q] & ~stages[p]) == 0) d.arrows.push_back({p, q, restriction(x, y, stages[p], stages[q])});
  return d;
}

std::size_t EnrichedQuotient::compose_at(std::size_t stage, const Object& x, const Object& y, const Object& z,
                                         std::size_t n, std::size_t g, std::size_t f) const {
  std::size_t out = 0;
  // mixed radix, first factor slowest: peel from the last factor
  std::vector<std::size_t> is;
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (stage >> i & 1) is.push_back(i);
  std::vector<std::size_t> parts(is.size());
  for (std::size_t p = is.size(); p-- > 0;) {
    const auto& k = components_[is[p]];
    const std::size_t nf = k.hom(x[is[p]], y[is[p]]).count(n);
    const std::size_t ng = k.hom(y[is[p]], z[is[p]]).count(n);
    parts[p] = k.compose(x[is[p]], y[is[p]], z[is[p]], n, g % ng, f % nf);
    f /= nf;
    g /= ng;
  }
  for (std::size_t p = 0; p < is.size(); ++p)
    out = out * components_[is[p]].hom(x[is[p]], z[is[p]]).count(n) + parts[p];
  return out;
}

SimpSet EnrichedQuotient::germ_mapping_complex(const Object& x, const Object& y) const {
  return stage_hom(x, y, filter_.minimum());
}

std::size_t EnrichedQuotient::compose(const Object& x, const Object& y, const Object& z, std::size_t n, std::size_t g,
                                      std::size_t f) const {
  return compose_at(filter_.minimum(), x, y, z, n, g, f);
}

bool EnrichedQuotient::is_zero_truncated(const Object& x) const {
  if (dim_bound_ == 0) return true;
  const auto everything = objects();
  for (auto v : filter_.members()) {
    bool ok = true;
    for (const auto& t : everything) {
      const auto h = stage_hom(t, x, v);
      std::set<std::pair<std::size_t, std::size_t>> seen;
      for (std::size_t e = 0; e < h.count(1) && ok; ++e) ok = seen.insert({h.face(1, 1, e), h.face(1, 0, e)}).second;
      if (!ok) break;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace germcat
