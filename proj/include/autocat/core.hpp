// Explicitly finite categories: names, raw descriptions, axiom validation,
// hom-sets and commutativity of finite diagrams.
#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace autocat {

enum class ErrorKind {
  UnknownName,
  NotComposable,
  TooLarge,
  NotAMonoid,
  NotTotal,
  IllTyped,
  Malformed,
  EmptyClosure,
  InvalidArgument,
};

/// Thrown for malformed input or a violated precondition. A property that
/// simply does not hold is reported through a result value instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Named entity identifier. Equality is name equality; `Tag` keeps object
/// and arrow names from being mixed up.
template <class Tag>
class Name {
 public:
  Name() = default;
  explicit Name(std::string value) : value_(std::move(value)) {}

  const std::string& str() const noexcept { return value_; }
  bool empty() const noexcept { return value_.empty(); }

  friend bool operator==(const Name&, const Name&) = default;
  friend auto operator<=>(const Name&, const Name&) = default;

 private:
  std::string value_;
};

using ObjectId = Name<struct ObjectTag>;
using ArrowId = Name<struct ArrowTag>;

// ---------------------------------------------------------------------------
// Raw (unvalidated) description, as produced by the parser.

struct RawArrow {
  std::string name;
  std::string dom;
  std::string cod;
  friend auto operator<=>(const RawArrow&, const RawArrow&) = default;
};

struct RawIdentity {
  std::string object;
  std::string arrow;
  friend auto operator<=>(const RawIdentity&, const RawIdentity&) = default;
};

/// `compose outer . inner = result`, i.e. result = outer ∘ inner.
struct RawComposite {
  std::string outer;
  std::string inner;
  std::string result;
  friend auto operator<=>(const RawComposite&, const RawComposite&) = default;
};

struct RawCategory {
  std::string name;
  std::vector<std::string> objects;
  std::vector<RawArrow> arrows;
  std::vector<RawIdentity> identities;
  std::vector<RawComposite> composites;

  friend bool operator==(const RawCategory&, const RawCategory&) = default;
};

/// Canonical ordering of every declaration list (by name, composites by
/// (outer, inner)).
inline RawCategory normalized(RawCategory raw) {
  std::sort(raw.objects.begin(), raw.objects.end());
  std::sort(raw.arrows.begin(), raw.arrows.end());
  std::sort(raw.identities.begin(), raw.identities.end());
  std::sort(raw.composites.begin(), raw.composites.end());
  return raw;
}

/// Equality up to declaration order.
inline bool structurally_equal(const RawCategory& a, const RawCategory& b) {
  return normalized(a) == normalized(b);
}

// ---------------------------------------------------------------------------
// Violations

enum class ViolationKind {
  // structural: the description cannot denote a category at all
  EmptyName,
  DuplicateObject,
  DuplicateArrow,
  UnknownObject,
  UnknownArrow,
  DuplicateIdentity,
  IdentityEndpoints,
  NonComposableEntry,
  DuplicateComposite,
  // axiom instances
  MissingIdentity,
  CompositeEndpoints,
  MissingComposite,
  NonAssociative,
  LeftIdentity,
  RightIdentity,
};

inline bool is_structural(ViolationKind kind) noexcept {
  return kind < ViolationKind::MissingIdentity;
}

inline std::string_view to_string(ViolationKind kind) noexcept {
  switch (kind) {
    case ViolationKind::EmptyName: return "empty-name";
    case ViolationKind::DuplicateObject: return "duplicate-object";
    case ViolationKind::DuplicateArrow: return "duplicate-arrow";
    case ViolationKind::UnknownObject: return "unknown-object";
    case ViolationKind::UnknownArrow: return "unknown-arrow";
    case ViolationKind::DuplicateIdentity: return "duplicate-identity";
    case ViolationKind::IdentityEndpoints: return "identity-endpoints";
    case ViolationKind::NonComposableEntry: return "non-composable-entry";
    case ViolationKind::DuplicateComposite: return "duplicate-composite";
    case ViolationKind::MissingIdentity: return "missing-identity";
    case ViolationKind::CompositeEndpoints: return "composite-endpoints";
    case ViolationKind::MissingComposite: return "missing-composite";
    case ViolationKind::NonAssociative: return "non-associative";
    case ViolationKind::LeftIdentity: return "left-identity";
    case ViolationKind::RightIdentity: return "right-identity";
  }
  return "unknown";
}

/// One violated instance. The witness lists the names involved, in the
/// order `describe` prints them.
struct Violation {
  ViolationKind kind;
  std::vector<std::string> witness;

  friend bool operator==(const Violation&, const Violation&) = default;
  friend auto operator<=>(const Violation&, const Violation&) = default;
};

inline std::string describe(const Violation& v) {
  const auto& w = v.witness;
  auto at = [&](std::size_t i) -> const std::string& {
    static const std::string missing = "?";
    return i < w.size() ? w[i] : missing;
  };
  switch (v.kind) {
    case ViolationKind::EmptyName: return "names must be nonempty";
    case ViolationKind::DuplicateObject: return "object " + at(0) + " declared twice";
    case ViolationKind::DuplicateArrow: return "arrow " + at(0) + " declared twice";
    case ViolationKind::UnknownObject:
      if (w.size() == 1) return "identity declared for unknown object " + at(0);
      return "arrow " + at(0) + " refers to unknown object " + at(1);
    case ViolationKind::UnknownArrow:
      if (w.size() == 1) return "identity refers to unknown arrow " + at(0);
      return "composite " + at(0) + " . " + at(1) + " mentions unknown arrow " + at(2);
    case ViolationKind::DuplicateIdentity: return "identity of " + at(0) + " declared twice";
    case ViolationKind::IdentityEndpoints:
      return "identity " + at(1) + " of " + at(0) + " is not an arrow " + at(0) + " -> " + at(0);
    case ViolationKind::NonComposableEntry:
      return "composite given for non-composable pair " + at(0) + " . " + at(1);
    case ViolationKind::DuplicateComposite: return "composite " + at(0) + " . " + at(1) + " given twice";
    case ViolationKind::MissingIdentity: return "object " + at(0) + " has no identity";
    case ViolationKind::CompositeEndpoints:
      return "composite " + at(0) + " . " + at(1) + " = " + at(2) + " has the wrong domain or codomain";
    case ViolationKind::MissingComposite: return "missing composite " + at(0) + " . " + at(1);
    case ViolationKind::NonAssociative:
      return "(" + at(0) + " . " + at(1) + ") . " + at(2) + " = " + at(3) + " but " + at(0) + " . (" + at(1) + " . " +
             at(2) + ") = " + at(4);
    case ViolationKind::LeftIdentity:
      return at(1) + " . " + at(0) + " = " + at(2) + ", expected " + at(0);
    case ViolationKind::RightIdentity:
      return at(0) + " . " + at(1) + " = " + at(2) + ", expected " + at(0);
  }
  return "unknown violation";
}

struct ValidationOptions {
  /// Inputs with more arrows are rejected up front; associativity is cubic.
  std::size_t max_arrows = 10000;
};

class FiniteCategory;
struct ValidationResult;

ValidationResult validate_category(const RawCategory& raw, const ValidationOptions& options = {});

// ---------------------------------------------------------------------------

/// A validated finite category. Objects and arrows are indexed in name
/// order, so every enumeration below is lexicographic. Immutable.
class FiniteCategory {
 public:
  using Index = std::size_t;
  static constexpr Index npos = std::numeric_limits<Index>::max();

  const std::string& name() const noexcept { return name_; }
  std::size_t object_count() const noexcept { return objects_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }

  const std::vector<ObjectId>& objects() const noexcept { return objects_; }
  const std::vector<ArrowId>& arrows() const noexcept { return arrows_; }
  const ObjectId& object(Index x) const { return objects_.at(x); }
  const ArrowId& arrow(Index a) const { return arrows_.at(a); }

  std::optional<Index> find_object(const ObjectId& id) const { return find(objects_, id); }
  std::optional<Index> find_arrow(const ArrowId& id) const { return find(arrows_, id); }

  Index object_index(const ObjectId& id) const {
    if (auto x = find_object(id)) return *x;
    throw Error(ErrorKind::UnknownName, "unknown object '" + id.str() + "' in category " + name_);
  }
  Index arrow_index(const ArrowId& id) const {
    if (auto a = find_arrow(id)) return *a;
    throw Error(ErrorKind::UnknownName, "unknown arrow '" + id.str() + "' in category " + name_);
  }

  Index dom(Index a) const { return dom_[a]; }
  Index cod(Index a) const { return cod_[a]; }
  Index identity(Index x) const { return identity_[x]; }
  bool is_identity(Index a) const { return identity_[dom_[a]] == a; }
  bool composable(Index outer, Index inner) const { return cod_[inner] == dom_[outer]; }

  /// outer ∘ inner.
  Index compose(Index outer, Index inner) const {
    if (!composable(outer, inner)) {
      throw Error(ErrorKind::NotComposable,
                  "arrows " + arrows_[outer].str() + " . " + arrows_[inner].str() + " are not composable");
    }
    return table_[inner][out_position_[outer]];
  }

  ArrowId compose(const ArrowId& outer, const ArrowId& inner) const {
    return arrows_[compose(arrow_index(outer), arrow_index(inner))];
  }

  /// Arrows with the given domain, in name order.
  std::span<const Index> outgoing(Index x) const { return outgoing_[x]; }
  /// Arrows with the given codomain, in name order.
  std::span<const Index> incoming(Index x) const { return incoming_[x]; }

  std::vector<Index> hom(Index x, Index y) const {
    std::vector<Index> out;
    for (Index a : outgoing_[x]) {
      if (cod_[a] == y) out.push_back(a);
    }
    return out;
  }

  RawCategory to_raw() const {
    RawCategory raw;
    raw.name = name_;
    for (const auto& x : objects_) raw.objects.push_back(x.str());
    for (Index a = 0; a < arrows_.size(); ++a) {
      raw.arrows.push_back({arrows_[a].str(), objects_[dom_[a]].str(), objects_[cod_[a]].str()});
    }
    for (Index x = 0; x < objects_.size(); ++x) {
      raw.identities.push_back({objects_[x].str(), arrows_[identity_[x]].str()});
    }
    for (Index f = 0; f < arrows_.size(); ++f) {
      for (Index g : outgoing_[cod_[f]]) {
        raw.composites.push_back({arrows_[g].str(), arrows_[f].str(), arrows_[compose(g, f)].str()});
      }
    }
    return normalized(std::move(raw));
  }

  FiniteCategory renamed(std::string name) const {
    FiniteCategory copy = *this;
    copy.name_ = std::move(name);
    return copy;
  }

 private:
  friend ValidationResult validate_category(const RawCategory&, const ValidationOptions&);
  FiniteCategory() = default;

  template <class Id>
  static std::optional<Index> find(const std::vector<Id>& sorted, const Id& id) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), id);
    if (it == sorted.end() || *it != id) return std::nullopt;
    return static_cast<Index>(it - sorted.begin());
  }
  template <class Id>
  static std::optional<Index> find(const std::vector<Id>& sorted, std::string_view id) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), id,
                               [](const Id& a, std::string_view b) { return a.str() < b; });
    if (it == sorted.end() || it->str() != id) return std::nullopt;
    return static_cast<Index>(it - sorted.begin());
  }

  std::string name_;
  std::vector<ObjectId> objects_;
  std::vector<ArrowId> arrows_;
  std::vector<Index> dom_;
  std::vector<Index> cod_;
  std::vector<Index> identity_;
  std::vector<std::vector<Index>> outgoing_;
  std::vector<std::vector<Index>> incoming_;
  std::vector<Index> out_position_;
  // table_[f][out_position_[g]] = g ∘ f, one cell per composable pair.
  std::vector<std::vector<std::uint32_t>> table_;
};

struct ValidationResult {
  std::optional<FiniteCategory> category;
  std::vector<Violation> violations;  // sorted by (kind, witness)

  bool valid() const noexcept { return category.has_value(); }
  bool has_structural_errors() const {
    return std::any_of(violations.begin(), violations.end(),
                       [](const Violation& v) { return is_structural(v.kind); });
  }
};

namespace detail {

inline std::string join(std::span<const std::string> parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

template <class Id>
std::vector<Id> sorted_unique_names(const std::vector<std::string>& names) {
  std::vector<Id> ids;
  ids.reserve(names.size());
  for (const auto& n : names) ids.emplace_back(n);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

}  // namespace detail

/// Checks every axiom instance of a raw description and returns either the
/// validated category or the complete list of violations.
inline ValidationResult validate_category(const RawCategory& raw, const ValidationOptions& options) {
  using Index = FiniteCategory::Index;
  constexpr Index npos = FiniteCategory::npos;
  constexpr std::uint32_t unset = std::numeric_limits<std::uint32_t>::max();

  if (raw.arrows.size() > options.max_arrows) {
    throw Error(ErrorKind::TooLarge, "category " + raw.name + " has " + std::to_string(raw.arrows.size()) +
                                         " arrows; the limit is " + std::to_string(options.max_arrows));
  }

  ValidationResult result;
  auto report = [&](ViolationKind kind, std::vector<std::string> witness) {
    result.violations.push_back({kind, std::move(witness)});
  };

  FiniteCategory c;
  c.name_ = raw.name;

  // Names.
  {
    std::vector<std::string> object_names = raw.objects;
    std::sort(object_names.begin(), object_names.end());
    for (std::size_t i = 1; i < object_names.size(); ++i) {
      if (object_names[i] == object_names[i - 1] && (i == 1 || object_names[i - 2] != object_names[i])) {
        report(ViolationKind::DuplicateObject, {object_names[i]});
      }
    }
    std::vector<std::string> arrow_names;
    for (const auto& a : raw.arrows) arrow_names.push_back(a.name);
    std::sort(arrow_names.begin(), arrow_names.end());
    for (std::size_t i = 1; i < arrow_names.size(); ++i) {
      if (arrow_names[i] == arrow_names[i - 1] && (i == 1 || arrow_names[i - 2] != arrow_names[i])) {
        report(ViolationKind::DuplicateArrow, {arrow_names[i]});
      }
    }
    if (std::find(object_names.begin(), object_names.end(), "") != object_names.end() ||
        std::find(arrow_names.begin(), arrow_names.end(), "") != arrow_names.end()) {
      report(ViolationKind::EmptyName, {});
    }
    c.objects_ = detail::sorted_unique_names<ObjectId>(object_names);
    c.arrows_ = detail::sorted_unique_names<ArrowId>(arrow_names);
  }

  const std::size_t n_obj = c.objects_.size();
  const std::size_t n_arr = c.arrows_.size();
  c.dom_.assign(n_arr, npos);
  c.cod_.assign(n_arr, npos);
  c.identity_.assign(n_obj, npos);
  c.outgoing_.assign(n_obj, {});
  c.incoming_.assign(n_obj, {});
  c.out_position_.assign(n_arr, npos);

  std::vector<bool> arrow_seen(n_arr, false);
  for (const auto& a : raw.arrows) {
    Index i = *c.find(c.arrows_, a.name);
    if (arrow_seen[i]) continue;  // duplicate already reported
    arrow_seen[i] = true;
    auto d = c.find(c.objects_, a.dom);
    auto e = c.find(c.objects_, a.cod);
    if (!d) report(ViolationKind::UnknownObject, {a.name, a.dom});
    if (!e) report(ViolationKind::UnknownObject, {a.name, a.cod});
    if (d && e) {
      c.dom_[i] = *d;
      c.cod_[i] = *e;
    }
  }
  auto typed = [&](Index a) { return c.dom_[a] != npos; };

  for (Index a = 0; a < n_arr; ++a) {
    if (!typed(a)) continue;
    c.out_position_[a] = c.outgoing_[c.dom_[a]].size();
    c.outgoing_[c.dom_[a]].push_back(a);
    c.incoming_[c.cod_[a]].push_back(a);
  }

  // Identities.
  for (const auto& id : raw.identities) {
    auto x = c.find(c.objects_, id.object);
    auto a = c.find(c.arrows_, id.arrow);
    if (!x) {
      report(ViolationKind::UnknownObject, {id.object});
      continue;
    }
    if (!a) {
      report(ViolationKind::UnknownArrow, {id.arrow});
      continue;
    }
    if (c.identity_[*x] != npos) {
      report(ViolationKind::DuplicateIdentity, {id.object});
      continue;
    }
    if (typed(*a) && (c.dom_[*a] != *x || c.cod_[*a] != *x)) {
      report(ViolationKind::IdentityEndpoints, {id.object, id.arrow});
      continue;
    }
    c.identity_[*x] = *a;
  }

  // Composition table.
  c.table_.resize(n_arr);
  for (Index f = 0; f < n_arr; ++f) {
    if (typed(f)) c.table_[f].assign(c.outgoing_[c.cod_[f]].size(), unset);
  }
  for (const auto& entry : raw.composites) {
    auto g = c.find(c.arrows_, entry.outer);
    auto f = c.find(c.arrows_, entry.inner);
    auto h = c.find(c.arrows_, entry.result);
    bool known = true;
    for (auto [id, name] : {std::pair{g, &entry.outer}, std::pair{f, &entry.inner}, std::pair{h, &entry.result}}) {
      if (!id) {
        report(ViolationKind::UnknownArrow, {entry.outer, entry.inner, *name});
        known = false;
      }
    }
    if (!known || !typed(*g) || !typed(*f)) continue;
    if (!c.composable(*g, *f)) {
      report(ViolationKind::NonComposableEntry, {entry.outer, entry.inner});
      continue;
    }
    auto& cell = c.table_[*f][c.out_position_[*g]];
    if (cell != unset) {
      report(ViolationKind::DuplicateComposite, {entry.outer, entry.inner});
      continue;
    }
    cell = static_cast<std::uint32_t>(*h);
  }

  // Axiom instances.
  for (Index x = 0; x < n_obj; ++x) {
    if (c.identity_[x] == npos) {
      report(ViolationKind::MissingIdentity, {c.objects_[x].str()});
    }
  }

  auto name = [&](Index a) -> const std::string& { return c.arrows_[a].str(); };
  // Composite of outer ∘ inner if it is defined and correctly typed.
  auto lookup = [&](Index outer, Index inner) -> Index {
    if (!typed(outer) || !typed(inner) || c.cod_[inner] != c.dom_[outer]) return npos;
    std::uint32_t cell = c.table_[inner][c.out_position_[outer]];
    if (cell == unset) return npos;
    Index h = cell;
    if (!typed(h) || c.dom_[h] != c.dom_[inner] || c.cod_[h] != c.cod_[outer]) return npos;
    return h;
  };

  for (Index f = 0; f < n_arr; ++f) {
    if (!typed(f)) continue;
    for (Index g : c.outgoing_[c.cod_[f]]) {
      std::uint32_t cell = c.table_[f][c.out_position_[g]];
      if (cell == unset) {
        report(ViolationKind::MissingComposite, {name(g), name(f)});
        continue;
      }
      Index h = cell;
      if (!typed(h) || c.dom_[h] != c.dom_[f] || c.cod_[h] != c.cod_[g]) {
        report(ViolationKind::CompositeEndpoints, {name(g), name(f), name(h)});
      }
    }
  }

  for (Index f = 0; f < n_arr; ++f) {
    if (!typed(f)) continue;
    Index right = c.identity_[c.dom_[f]];
    if (right != npos) {
      Index h = lookup(f, right);
      if (h != npos && h != f) {
        report(ViolationKind::RightIdentity, {name(f), name(right), name(h)});
      }
    }
    Index left = c.identity_[c.cod_[f]];
    if (left != npos) {
      Index h = lookup(left, f);
      if (h != npos && h != f) {
        report(ViolationKind::LeftIdentity, {name(f), name(left), name(h)});
      }
    }
  }

  for (Index f = 0; f < n_arr; ++f) {
    if (!typed(f)) continue;
    for (Index g : c.outgoing_[c.cod_[f]]) {
      Index gf = lookup(g, f);
      for (Index h : c.outgoing_[c.cod_[g]]) {
        Index hg = lookup(h, g);
        if (gf == npos || hg == npos) continue;
        Index lhs = lookup(hg, f);
        Index rhs = lookup(h, gf);
        if (lhs != npos && rhs != npos && lhs != rhs) {
          report(ViolationKind::NonAssociative, {name(h), name(g), name(f), name(lhs), name(rhs)});
        }
      }
    }
  }

  std::sort(result.violations.begin(), result.violations.end());
  if (result.violations.empty()) {
    for (auto& row : c.table_) row.shrink_to_fit();
    result.category = std::move(c);
  }
  return result;
}

/// Validates and throws on any violation; for callers that construct
/// categories known to be lawful.
inline FiniteCategory make_category(const RawCategory& raw, const ValidationOptions& options = {}) {
  auto result = validate_category(raw, options);
  if (!result.valid()) {
    throw Error(ErrorKind::Malformed,
                "category " + raw.name + " is invalid: " + describe(result.violations.front()));
  }
  return std::move(*result.category);
}

/// The category with one object and its identity.
inline FiniteCategory terminal_category(std::string name = "One") {
  return make_category({std::move(name), {"pt"}, {{"id_pt", "pt", "pt"}}, {{"pt", "id_pt"}}, {{"id_pt", "id_pt", "id_pt"}}});
}

/// All arrows x -> y in name order.
inline std::vector<ArrowId> enumerate_homset(const FiniteCategory& c, const ObjectId& x, const ObjectId& y) {
  std::vector<ArrowId> out;
  for (auto a : c.hom(c.object_index(x), c.object_index(y))) out.push_back(c.arrow(a));
  return out;
}

// ---------------------------------------------------------------------------
// Diagrams

/// A path is written in composition order: {g, f} denotes g ∘ f.
struct Path {
  std::string name;
  std::vector<ArrowId> arrows;
};

struct Diagram {
  std::reference_wrapper<const FiniteCategory> carrier;
  std::vector<Path> paths;
};

/// Composite of a nonempty path. Throws if the path is empty or breaks.
inline ArrowId compose_path(const FiniteCategory& c, std::span<const ArrowId> arrows) {
  if (arrows.empty()) throw Error(ErrorKind::InvalidArgument, "empty path");
  auto acc = c.arrow_index(arrows.back());
  for (auto it = arrows.rbegin() + 1; it != arrows.rend(); ++it) {
    auto next = c.arrow_index(*it);
    if (!c.composable(next, acc)) {
      throw Error(ErrorKind::NotComposable,
                  "path breaks at " + it->str() + ": its domain is not the codomain of the arrows before it");
    }
    acc = c.compose(next, acc);
  }
  return c.arrow(acc);
}

struct CommuteCounterexample {
  std::string first_path;
  ArrowId first_composite;
  std::string second_path;
  ArrowId second_composite;
};

struct CommuteResult {
  bool commutes = true;
  std::optional<CommuteCounterexample> counterexample;
};

/// True iff every path composes to the same arrow. All paths must run
/// between one start and one end object.
inline CommuteResult check_commutes(const Diagram& d) {
  const FiniteCategory& c = d.carrier;
  if (d.paths.empty()) throw Error(ErrorKind::InvalidArgument, "diagram has no paths");
  std::vector<ArrowId> composites;
  for (const auto& p : d.paths) {
    try {
      composites.push_back(compose_path(c, p.arrows));
    } catch (const Error& e) {
      throw Error(e.kind(), "path " + p.name + ": " + e.what());
    }
  }
  auto ends = [&](const ArrowId& a) {
    auto i = c.arrow_index(a);
    return std::pair{c.dom(i), c.cod(i)};
  };
  for (std::size_t i = 1; i < composites.size(); ++i) {
    if (ends(composites[i]) != ends(composites[0])) {
      throw Error(ErrorKind::InvalidArgument,
                  "paths " + d.paths[0].name + " and " + d.paths[i].name + " do not share start and end objects");
    }
  }
  for (std::size_t i = 1; i < composites.size(); ++i) {
    if (composites[i] != composites[0]) {
      return {false, CommuteCounterexample{d.paths[0].name, composites[0], d.paths[i].name, composites[i]}};
    }
  }
  return {};
}

}  // namespace autocat
