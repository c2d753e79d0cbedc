// Functors, natural transformations and discrete dynamical systems viewed
// as monoid actions on finite sets.
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "autocat/constructions.hpp"
#include "autocat/core.hpp"

namespace autocat {

struct Functor {
  std::string name;
  std::reference_wrapper<const FiniteCategory> source;
  std::reference_wrapper<const FiniteCategory> target;
  std::map<ObjectId, ObjectId> objects;
  std::map<ArrowId, ArrowId> arrows;
};

enum class FunctorViolationKind { EndpointsNotPreserved, IdentityNotPreserved, CompositionNotPreserved };

inline std::string_view to_string(FunctorViolationKind kind) noexcept {
  switch (kind) {
    case FunctorViolationKind::EndpointsNotPreserved: return "endpoints-not-preserved";
    case FunctorViolationKind::IdentityNotPreserved: return "identity-not-preserved";
    case FunctorViolationKind::CompositionNotPreserved: return "composition-not-preserved";
  }
  return "unknown";
}

struct FunctorViolation {
  FunctorViolationKind kind;
  std::vector<std::string> witness;
  std::string message;
};

struct FunctorReport {
  std::vector<FunctorViolation> violations;
  bool valid() const noexcept { return violations.empty(); }
};

namespace detail {

// Index-level view of a functor whose maps are total and name-correct.
struct ResolvedFunctor {
  std::vector<FiniteCategory::Index> objects;
  std::vector<FiniteCategory::Index> arrows;
};

inline ResolvedFunctor resolve(const Functor& F) {
  const FiniteCategory& src = F.source;
  const FiniteCategory& tgt = F.target;
  ResolvedFunctor r;
  for (const auto& x : src.objects()) {
    auto it = F.objects.find(x);
    if (it == F.objects.end()) {
      throw Error(ErrorKind::NotTotal, "functor " + F.name + " does not map object " + x.str());
    }
    r.objects.push_back(tgt.object_index(it->second));
  }
  for (const auto& a : src.arrows()) {
    auto it = F.arrows.find(a);
    if (it == F.arrows.end()) {
      throw Error(ErrorKind::NotTotal, "functor " + F.name + " does not map arrow " + a.str());
    }
    r.arrows.push_back(tgt.arrow_index(it->second));
  }
  for (const auto& [x, _] : F.objects) src.object_index(x);
  for (const auto& [a, _] : F.arrows) src.arrow_index(a);
  return r;
}

}  // namespace detail

/// Checks endpoint, identity and composition preservation; lists every
/// failing instance. Throws if either map is not total.
inline FunctorReport check_functor(const Functor& F) {
  using Index = FiniteCategory::Index;
  const FiniteCategory& src = F.source;
  const FiniteCategory& tgt = F.target;
  const auto r = detail::resolve(F);
  FunctorReport report;
  auto add = [&](FunctorViolationKind kind, std::vector<std::string> witness, std::string message) {
    report.violations.push_back({kind, std::move(witness), std::move(message)});
  };
  auto an = [&](Index a) -> const std::string& { return src.arrow(a).str(); };
  auto tn = [&](Index a) -> const std::string& { return tgt.arrow(a).str(); };

  for (Index a = 0; a < src.arrow_count(); ++a) {
    Index fa = r.arrows[a];
    if (tgt.dom(fa) != r.objects[src.dom(a)] || tgt.cod(fa) != r.objects[src.cod(a)]) {
      add(FunctorViolationKind::EndpointsNotPreserved, {an(a), tn(fa)},
          "image " + tn(fa) + " of " + an(a) + " does not run between the images of its endpoints");
    }
  }
  for (Index x = 0; x < src.object_count(); ++x) {
    Index image = r.arrows[src.identity(x)];
    Index expected = tgt.identity(r.objects[x]);
    if (image != expected) {
      add(FunctorViolationKind::IdentityNotPreserved, {src.object(x).str(), tn(image)},
          "identity of " + src.object(x).str() + " maps to " + tn(image) + ", expected " + tn(expected));
    }
  }
  for (Index g = 0; g < src.arrow_count(); ++g) {
    for (Index f : src.incoming(src.dom(g))) {
      Index lhs = r.arrows[src.compose(g, f)];
      Index Fg = r.arrows[g];
      Index Ff = r.arrows[f];
      if (!tgt.composable(Fg, Ff)) {
        add(FunctorViolationKind::CompositionNotPreserved, {an(g), an(f)},
            "images of " + an(g) + " . " + an(f) + " are not composable");
        continue;
      }
      Index rhs = tgt.compose(Fg, Ff);
      if (lhs != rhs) {
        add(FunctorViolationKind::CompositionNotPreserved, {an(g), an(f), tn(lhs), tn(rhs)},
            "F(" + an(g) + " . " + an(f) + ") = " + tn(lhs) + " but F(" + an(g) + ") . F(" + an(f) + ") = " + tn(rhs));
      }
    }
  }
  return report;
}

inline Functor identity_functor(const FiniteCategory& c) {
  Functor F{"id_" + c.name(), std::cref(c), std::cref(c), {}, {}};
  for (const auto& x : c.objects()) F.objects.emplace(x, x);
  for (const auto& a : c.arrows()) F.arrows.emplace(a, a);
  return F;
}

/// The collapse of `c` onto a one-object, one-arrow category.
inline Functor to_terminal(const FiniteCategory& c, const FiniteCategory& terminal) {
  if (terminal.object_count() != 1 || terminal.arrow_count() != 1) {
    throw Error(ErrorKind::InvalidArgument, "category " + terminal.name() + " is not terminal");
  }
  Functor F{"!_" + c.name(), std::cref(c), std::cref(terminal), {}, {}};
  for (const auto& x : c.objects()) F.objects.emplace(x, terminal.object(0));
  for (const auto& a : c.arrows()) F.arrows.emplace(a, terminal.arrow(0));
  return F;
}

/// outer ∘ inner; inner's target must be the very category outer starts from.
inline Functor compose(const Functor& outer, const Functor& inner) {
  if (&inner.target.get() != &outer.source.get()) {
    throw Error(ErrorKind::InvalidArgument, "functors " + outer.name + " and " + inner.name + " are not composable");
  }
  Functor F{outer.name + "." + inner.name, inner.source, outer.target, {}, {}};
  for (const auto& [x, y] : inner.objects) {
    auto it = outer.objects.find(y);
    if (it == outer.objects.end()) throw Error(ErrorKind::NotTotal, "functor " + outer.name + " does not map object " + y.str());
    F.objects.emplace(x, it->second);
  }
  for (const auto& [a, b] : inner.arrows) {
    auto it = outer.arrows.find(b);
    if (it == outer.arrows.end()) throw Error(ErrorKind::NotTotal, "functor " + outer.name + " does not map arrow " + b.str());
    F.arrows.emplace(a, it->second);
  }
  return F;
}

// ---------------------------------------------------------------------------

struct NaturalTransformation {
  std::string name;
  Functor from;
  Functor to;
  std::map<ObjectId, ArrowId> components;
};

/// A failing square for source arrow f: X -> Y, where
/// lhs = component(Y) ∘ from(f) and rhs = to(f) ∘ component(X).
struct NaturalityFailure {
  ArrowId arrow;
  ArrowId lhs;
  ArrowId rhs;
};

struct NaturalityResult {
  bool natural = true;
  std::optional<NaturalityFailure> failure;
};

inline NaturalityResult check_natural(const NaturalTransformation& nt) {
  using Index = FiniteCategory::Index;
  if (&nt.from.source.get() != &nt.to.source.get() || &nt.from.target.get() != &nt.to.target.get()) {
    throw Error(ErrorKind::InvalidArgument, "functors " + nt.from.name + " and " + nt.to.name + " are not parallel");
  }
  const FiniteCategory& src = nt.from.source;
  const FiniteCategory& tgt = nt.from.target;
  const auto F = detail::resolve(nt.from);
  const auto G = detail::resolve(nt.to);

  std::vector<Index> component;
  for (Index x = 0; x < src.object_count(); ++x) {
    auto it = nt.components.find(src.object(x));
    if (it == nt.components.end()) {
      throw Error(ErrorKind::NotTotal, "transformation " + nt.name + " has no component at " + src.object(x).str());
    }
    Index a = tgt.arrow_index(it->second);
    if (tgt.dom(a) != F.objects[x] || tgt.cod(a) != G.objects[x]) {
      throw Error(ErrorKind::IllTyped, "component " + it->second.str() + " at " + src.object(x).str() +
                                           " does not run from " + nt.from.name + "(" + src.object(x).str() + ") to " +
                                           nt.to.name + "(" + src.object(x).str() + ")");
    }
    component.push_back(a);
  }
  for (const auto& [x, _] : nt.components) src.object_index(x);

  for (Index f = 0; f < src.arrow_count(); ++f) {
    Index Ff = F.arrows[f];
    Index Gf = G.arrows[f];
    Index cx = component[src.dom(f)];
    Index cy = component[src.cod(f)];
    if (!tgt.composable(cy, Ff) || !tgt.composable(Gf, cx)) {
      throw Error(ErrorKind::IllTyped, "naturality square at " + src.arrow(f).str() + " is ill-typed");
    }
    Index lhs = tgt.compose(cy, Ff);
    Index rhs = tgt.compose(Gf, cx);
    if (lhs != rhs) return {false, NaturalityFailure{src.arrow(f), tgt.arrow(lhs), tgt.arrow(rhs)}};
  }
  return {};
}

inline NaturalTransformation identity_transformation(const Functor& F) {
  const FiniteCategory& tgt = F.target;
  NaturalTransformation nt{"id_" + F.name, F, F, {}};
  for (const auto& [x, y] : F.objects) nt.components.emplace(x, tgt.arrow(tgt.identity(tgt.object_index(y))));
  return nt;
}

// ---------------------------------------------------------------------------
// Dynamical systems

/// A map on states given by state indices.
using StateMap = std::vector<std::size_t>;

/// Finite state set with a total step function. States are kept sorted.
class DiscreteDynSys {
 public:
  DiscreteDynSys(std::vector<std::string> states, std::map<std::string, std::string> step)
      : states_(std::move(states)), step_(std::move(step)) {
    std::sort(states_.begin(), states_.end());
    if (states_.empty()) throw Error(ErrorKind::Malformed, "dynamical system has no states");
    if (std::adjacent_find(states_.begin(), states_.end()) != states_.end()) {
      throw Error(ErrorKind::Malformed, "duplicate state");
    }
    for (const auto& s : states_) {
      auto it = step_.find(s);
      if (it == step_.end()) throw Error(ErrorKind::NotTotal, "step is undefined on state " + s);
      if (!std::binary_search(states_.begin(), states_.end(), it->second)) {
        throw Error(ErrorKind::UnknownName, "step maps " + s + " to unknown state " + it->second);
      }
    }
    if (step_.size() != states_.size()) throw Error(ErrorKind::UnknownName, "step defined on an unknown state");
  }

  const std::vector<std::string>& states() const noexcept { return states_; }
  const std::map<std::string, std::string>& step() const noexcept { return step_; }

  std::size_t index_of(const std::string& s) const {
    return static_cast<std::size_t>(std::lower_bound(states_.begin(), states_.end(), s) - states_.begin());
  }

  StateMap step_map() const {
    StateMap m;
    for (const auto& s : states_) m.push_back(index_of(step_.at(s)));
    return m;
  }

  friend bool operator==(const DiscreteDynSys&, const DiscreteDynSys&) = default;

 private:
  std::vector<std::string> states_;
  std::map<std::string, std::string> step_;
};

inline StateMap after(const StateMap& outer, const StateMap& inner) {
  StateMap out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

inline StateMap identity_map(std::size_t n) {
  StateMap m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i;
  return m;
}

struct TransformationMonoid {
  Monoid monoid;
  std::vector<std::string> states;
  std::map<ArrowId, StateMap> action;
  std::size_t tail = 0;    // exponent of the first repeated iterate
  std::size_t period = 1;  // distance to its repetition
};

inline std::string iterate_name(std::size_t k) { return "s^" + std::to_string(k); }

/// Monoid generated by the identity map and `step` under composition. The
/// arrow "s^k" is the k-th iterate with the least such k.
inline TransformationMonoid transformation_monoid(const DiscreteDynSys& d, std::size_t cap = 4096) {
  if (cap == 0) throw Error(ErrorKind::InvalidArgument, "cap must be positive");
  const std::size_t n = d.states().size();
  const StateMap step = d.step_map();

  std::vector<StateMap> iterates{identity_map(n)};
  std::map<StateMap, std::size_t> seen{{iterates[0], 0}};
  std::size_t tail = 0;
  std::size_t period = 1;
  for (;;) {
    StateMap next = after(step, iterates.back());
    if (auto it = seen.find(next); it != seen.end()) {
      tail = it->second;
      period = iterates.size() - it->second;
      break;
    }
    if (iterates.size() == cap) {
      throw Error(ErrorKind::TooLarge, "transformation monoid exceeds cap of " + std::to_string(cap) + " arrows");
    }
    seen.emplace(next, iterates.size());
    iterates.push_back(std::move(next));
  }

  RawCategory raw;
  raw.name = "Trans";
  raw.objects = {"S"};
  for (std::size_t k = 0; k < iterates.size(); ++k) raw.arrows.push_back({iterate_name(k), "S", "S"});
  raw.identities.push_back({"S", iterate_name(0)});
  for (std::size_t i = 0; i < iterates.size(); ++i) {
    for (std::size_t j = 0; j < iterates.size(); ++j) {
      raw.composites.push_back({iterate_name(i), iterate_name(j), iterate_name(seen.at(after(iterates[i], iterates[j])))});
    }
  }

  std::map<ArrowId, StateMap> action;
  for (std::size_t k = 0; k < iterates.size(); ++k) action.emplace(ArrowId{iterate_name(k)}, iterates[k]);
  return {as_monoid(make_category(raw)), d.states(), std::move(action), tail, period};
}

struct ActionCheck {
  bool valid = true;
  bool identity_ok = true;
  std::optional<std::pair<ArrowId, ArrowId>> failing_pair;  // (outer, inner)
};

/// Whether `action` is a functor from the monoid into finite sets: the unit
/// acts as the identity and action(g ∘ f) = action(g) after action(f).
inline ActionCheck verify_action_functor(const Monoid& m, const std::map<ArrowId, StateMap>& action,
                                         std::size_t state_count) {
  const auto& c = m.category();
  std::vector<const StateMap*> maps;
  for (const auto& a : c.arrows()) {
    auto it = action.find(a);
    if (it == action.end()) throw Error(ErrorKind::NotTotal, "action is undefined on arrow " + a.str());
    if (it->second.size() != state_count ||
        std::any_of(it->second.begin(), it->second.end(), [&](std::size_t s) { return s >= state_count; })) {
      throw Error(ErrorKind::IllTyped, "action of " + a.str() + " is not a map on " + std::to_string(state_count) + " states");
    }
    maps.push_back(&it->second);
  }
  for (const auto& [a, _] : action) c.arrow_index(a);

  ActionCheck out;
  if (*maps[c.identity(0)] != identity_map(state_count)) {
    out.valid = false;
    out.identity_ok = false;
  }
  for (FiniteCategory::Index g = 0; g < c.arrow_count() && !out.failing_pair; ++g) {
    for (FiniteCategory::Index f = 0; f < c.arrow_count(); ++f) {
      if (*maps[c.compose(g, f)] != after(*maps[g], *maps[f])) {
        out.valid = false;
        out.failing_pair = std::pair{c.arrow(g), c.arrow(f)};
        break;
      }
    }
  }
  return out;
}

}  // namespace autocat
