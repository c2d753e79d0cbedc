// Structures derived from a validated category: monoids, endomorphism
// monoids, coslice categories, universal-property searches and
// factorizations.
#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "autocat/core.hpp"

namespace autocat {

/// A category with exactly one object.
class Monoid {
 public:
  const FiniteCategory& category() const noexcept { return carrier_; }
  const ObjectId& object() const { return carrier_.object(0); }
  const ArrowId& unit() const { return carrier_.arrow(carrier_.identity(0)); }
  std::size_t size() const noexcept { return carrier_.arrow_count(); }
  const std::vector<ArrowId>& elements() const noexcept { return carrier_.arrows(); }

  ArrowId compose(const ArrowId& outer, const ArrowId& inner) const { return carrier_.compose(outer, inner); }

 private:
  explicit Monoid(FiniteCategory c) : carrier_(std::move(c)) {}
  friend Monoid as_monoid(FiniteCategory c);

  FiniteCategory carrier_;
};

inline Monoid as_monoid(FiniteCategory c) {
  if (c.object_count() != 1) {
    throw Error(ErrorKind::NotAMonoid,
                "not a monoid: category " + c.name() + " has " + std::to_string(c.object_count()) + " objects");
  }
  return Monoid(std::move(c));
}

/// Full subcategory on a single object: hom(x, x) with the restricted
/// composition.
inline Monoid endo_monoid(const FiniteCategory& c, const ObjectId& x) {
  auto xi = c.object_index(x);
  RawCategory raw;
  raw.name = "End(" + x.str() + ")";
  raw.objects = {x.str()};
  auto endos = c.hom(xi, xi);
  for (auto a : endos) raw.arrows.push_back({c.arrow(a).str(), x.str(), x.str()});
  raw.identities.push_back({x.str(), c.arrow(c.identity(xi)).str()});
  for (auto g : endos) {
    for (auto f : endos) raw.composites.push_back({c.arrow(g).str(), c.arrow(f).str(), c.arrow(c.compose(g, f)).str()});
  }
  return as_monoid(make_category(raw));
}

/// An arrow (f, g, t) of a coslice category: t ∘ f = g in the source.
struct Triangle {
  ArrowId from;
  ArrowId to;
  ArrowId mediator;
  friend bool operator==(const Triangle&, const Triangle&) = default;
};

inline std::string triangle_name(const Triangle& t) {
  return "(" + t.from.str() + ">" + t.to.str() + ";" + t.mediator.str() + ")";
}

struct CosliceCategory {
  FiniteCategory result;
  std::reference_wrapper<const FiniteCategory> source;
  ObjectId anchor;
  std::map<ObjectId, ArrowId> object_origin;
  std::map<ArrowId, Triangle> arrow_origin;
};

/// The category anchor/c: objects are the arrows of c out of the anchor and
/// arrows are commuting triangles between them.
inline CosliceCategory coslice(const FiniteCategory& c, const ObjectId& anchor) {
  using Index = FiniteCategory::Index;
  const Index a = c.object_index(anchor);
  const auto out = c.outgoing(a);

  RawCategory raw;
  raw.name = anchor.str() + "/" + c.name();
  std::map<ObjectId, ArrowId> object_origin;
  std::map<ArrowId, Triangle> arrow_origin;
  // triangles_from[f] lists (g, t, name) for arrows out of coslice object f.
  std::map<Index, std::vector<std::tuple<Index, Index, std::string>>> triangles_from;

  for (Index f : out) {
    raw.objects.push_back(c.arrow(f).str());
    object_origin.emplace(ObjectId{c.arrow(f).str()}, c.arrow(f));
  }
  auto triangle = [&](Index f, Index g, Index t) {
    return triangle_name({c.arrow(f), c.arrow(g), c.arrow(t)});
  };
  for (Index f : out) {
    for (Index g : out) {
      for (Index t : c.hom(c.cod(f), c.cod(g))) {
        if (c.compose(t, f) != g) continue;
        std::string name = triangle(f, g, t);
        raw.arrows.push_back({name, c.arrow(f).str(), c.arrow(g).str()});
        arrow_origin.emplace(ArrowId{name}, Triangle{c.arrow(f), c.arrow(g), c.arrow(t)});
        triangles_from[f].emplace_back(g, t, std::move(name));
      }
    }
    raw.identities.push_back({c.arrow(f).str(), triangle(f, f, c.identity(c.cod(f)))});
  }
  // (g, h, s) ∘ (f, g, t) = (f, h, s ∘ t)
  for (const auto& [f, first] : triangles_from) {
    for (const auto& [g, t, inner] : first) {
      for (const auto& [h, s, outer] : triangles_from[g]) {
        raw.composites.push_back({outer, inner, triangle(f, h, c.compose(s, t))});
      }
    }
  }

  auto checked = validate_category(raw, ValidationOptions{std::numeric_limits<std::size_t>::max()});
  if (!checked.valid()) {
    throw Error(ErrorKind::Malformed, "coslice construction failed validation: " + describe(checked.violations.front()));
  }
  return {std::move(*checked.category), std::cref(c), anchor, std::move(object_origin), std::move(arrow_origin)};
}

namespace detail {

// counts[x][y] = |hom(x, y)|
inline std::vector<std::vector<std::size_t>> hom_counts(const FiniteCategory& c) {
  std::vector<std::vector<std::size_t>> counts(c.object_count(), std::vector<std::size_t>(c.object_count(), 0));
  for (FiniteCategory::Index a = 0; a < c.arrow_count(); ++a) ++counts[c.dom(a)][c.cod(a)];
  return counts;
}

template <class Pred>
std::vector<ObjectId> objects_where(const FiniteCategory& c, Pred pred) {
  auto counts = hom_counts(c);
  std::vector<ObjectId> out;
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    bool all = true;
    for (std::size_t y = 0; y < c.object_count() && all; ++y) all = pred(counts, x, y);
    if (all) out.push_back(c.object(x));
  }
  return out;
}

}  // namespace detail

/// Objects with exactly one arrow to every object, itself included.
inline std::vector<ObjectId> find_initial(const FiniteCategory& c) {
  return detail::objects_where(c, [](const auto& n, std::size_t x, std::size_t y) { return n[x][y] == 1; });
}

inline std::vector<ObjectId> find_terminal(const FiniteCategory& c) {
  return detail::objects_where(c, [](const auto& n, std::size_t x, std::size_t y) { return n[y][x] == 1; });
}

/// Objects with at least one arrow to every object.
inline std::vector<ObjectId> find_weakly_initial(const FiniteCategory& c) {
  return detail::objects_where(c, [](const auto& n, std::size_t x, std::size_t y) { return n[x][y] >= 1; });
}

inline std::vector<ObjectId> find_weakly_terminal(const FiniteCategory& c) {
  return detail::objects_where(c, [](const auto& n, std::size_t x, std::size_t y) { return n[y][x] >= 1; });
}

/// All (outer, inner) with outer ∘ inner = target, sorted.
inline std::vector<std::pair<ArrowId, ArrowId>> factorize(const Monoid& m, const ArrowId& target) {
  const auto& c = m.category();
  const auto t = c.arrow_index(target);
  std::vector<std::pair<ArrowId, ArrowId>> out;
  for (FiniteCategory::Index g = 0; g < c.arrow_count(); ++g) {
    for (FiniteCategory::Index f = 0; f < c.arrow_count(); ++f) {
      if (c.compose(g, f) == t) out.emplace_back(c.arrow(g), c.arrow(f));
    }
  }
  return out;
}

/// The dual category: same arrows with domain and codomain swapped.
inline FiniteCategory opposite(const FiniteCategory& c) {
  RawCategory raw = c.to_raw();
  raw.name = c.name() + "^op";
  for (auto& a : raw.arrows) std::swap(a.dom, a.cod);
  for (auto& e : raw.composites) std::swap(e.outer, e.inner);
  return make_category(raw);
}

}  // namespace autocat
