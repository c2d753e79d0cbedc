// Enabling networks of processes: operational closure, precariousness and
// bounded self-mediation cycles.
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "autocat/core.hpp"

namespace autocat {

/// "Without source there would be no target."
struct Enabling {
  std::string label;
  std::string source;
  std::string target;
  friend auto operator<=>(const Enabling&, const Enabling&) = default;
};

/// Directed multigraph of processes. Processes are sorted by name and
/// enablings by label; parallel enablings are distinct when labels differ.
class EnablingNetwork {
 public:
  EnablingNetwork() = default;
  EnablingNetwork(std::string name, std::vector<std::string> processes, std::vector<Enabling> enablings)
      : name_(std::move(name)), processes_(std::move(processes)), enablings_(std::move(enablings)) {
    std::sort(processes_.begin(), processes_.end());
    if (auto it = std::adjacent_find(processes_.begin(), processes_.end()); it != processes_.end()) {
      throw Error(ErrorKind::Malformed, "process " + *it + " declared twice");
    }
    std::sort(enablings_.begin(), enablings_.end());
    for (std::size_t i = 0; i < enablings_.size(); ++i) {
      const auto& e = enablings_[i];
      if (i && enablings_[i - 1].label == e.label) {
        throw Error(ErrorKind::Malformed, "enabling label " + e.label + " used twice");
      }
      for (const auto* p : {&e.source, &e.target}) {
        if (!index_of(*p)) throw Error(ErrorKind::UnknownName, "enabling " + e.label + " refers to unknown process " + *p);
      }
    }
  }

  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& processes() const noexcept { return processes_; }
  const std::vector<Enabling>& enablings() const noexcept { return enablings_; }

  std::optional<std::size_t> index_of(std::string_view process) const {
    auto it = std::lower_bound(processes_.begin(), processes_.end(), process);
    if (it == processes_.end() || *it != process) return std::nullopt;
    return static_cast<std::size_t>(it - processes_.begin());
  }

  EnablingNetwork without(std::string_view label) const {
    EnablingNetwork copy = *this;
    std::erase_if(copy.enablings_, [&](const Enabling& e) { return e.label == label; });
    return copy;
  }

  EnablingNetwork with(Enabling e) const {
    auto enablings = enablings_;
    enablings.push_back(std::move(e));
    return {name_, processes_, std::move(enablings)};
  }

  /// Subnetwork on the given processes and the enablings among them.
  EnablingNetwork induced(std::span<const std::string> keep) const {
    std::set<std::string> members(keep.begin(), keep.end());
    std::vector<std::string> processes(members.begin(), members.end());
    std::vector<Enabling> enablings;
    for (const auto& e : enablings_) {
      if (members.count(e.source) && members.count(e.target)) enablings.push_back(e);
    }
    return {name_, std::move(processes), std::move(enablings)};
  }

  friend bool operator==(const EnablingNetwork&, const EnablingNetwork&) = default;

 private:
  std::string name_;
  std::vector<std::string> processes_;
  std::vector<Enabling> enablings_;
};

struct ClosureOptions {
  /// Count a self-loop as being enabled by / enabling "another" process.
  bool allow_self_enabling = false;
};

enum class RemovalReason { NoIncoming, NoOutgoing, NoIncomingOrOutgoing };

inline std::string_view to_string(RemovalReason reason) noexcept {
  switch (reason) {
    case RemovalReason::NoIncoming: return "no incoming enabling within set";
    case RemovalReason::NoOutgoing: return "no outgoing enabling within set";
    case RemovalReason::NoIncomingOrOutgoing: return "no incoming or outgoing enabling within set";
  }
  return "unknown";
}

struct Removal {
  std::string process;
  RemovalReason reason;
  friend bool operator==(const Removal&, const Removal&) = default;
};

struct ClosureResult {
  std::vector<std::string> closed;  // sorted
  std::vector<Removal> removed;     // in pruning order

  bool contains(std::string_view p) const { return std::binary_search(closed.begin(), closed.end(), p); }
};

/// Picks the smallest candidate by name.
struct FirstCandidate {
  std::size_t operator()(std::span<const std::size_t>) const { return 0; }
};

/// Prunes processes lacking a qualifying in- or out-enabling among the
/// survivors until a fixed point. `choose` receives the current removable
/// processes (sorted indices) and returns the position of the one to drop;
/// the survivor set does not depend on these choices.
template <class Chooser = FirstCandidate>
ClosureResult maximal_closure(const EnablingNetwork& n, ClosureOptions options = {}, Chooser&& choose = {}) {
  const auto& processes = n.processes();
  const std::size_t size = processes.size();
  std::vector<std::vector<std::size_t>> succ(size), pred(size);
  std::vector<std::size_t> in(size, 0), out(size, 0);
  for (const auto& e : n.enablings()) {
    std::size_t s = *n.index_of(e.source);
    std::size_t t = *n.index_of(e.target);
    if (s == t && !options.allow_self_enabling) continue;
    succ[s].push_back(t);
    pred[t].push_back(s);
    ++out[s];
    ++in[t];
  }

  std::vector<bool> alive(size, true);
  std::vector<std::size_t> candidates;
  std::vector<bool> queued(size, false);
  auto enqueue = [&](std::size_t p) {
    if (alive[p] && !queued[p] && (in[p] == 0 || out[p] == 0)) {
      queued[p] = true;
      candidates.insert(std::lower_bound(candidates.begin(), candidates.end(), p), p);
    }
  };
  for (std::size_t p = 0; p < size; ++p) enqueue(p);

  ClosureResult result;
  while (!candidates.empty()) {
    std::size_t pos = choose(std::span<const std::size_t>(candidates));
    if (pos >= candidates.size()) throw Error(ErrorKind::InvalidArgument, "pruning order chose an invalid candidate");
    std::size_t p = candidates[pos];
    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(pos));
    RemovalReason reason = in[p] == 0 && out[p] == 0 ? RemovalReason::NoIncomingOrOutgoing
                           : in[p] == 0              ? RemovalReason::NoIncoming
                                                     : RemovalReason::NoOutgoing;
    result.removed.push_back({processes[p], reason});
    alive[p] = false;
    for (std::size_t t : succ[p]) {
      if (alive[t]) {
        --in[t];
        enqueue(t);
      }
    }
    for (std::size_t s : pred[p]) {
      if (alive[s]) {
        --out[s];
        enqueue(s);
      }
    }
  }
  for (std::size_t p = 0; p < size; ++p) {
    if (alive[p]) result.closed.push_back(processes[p]);
  }
  return result;
}

enum class PrecariousMode { Strict, Weak };

inline std::string_view to_string(PrecariousMode mode) noexcept {
  return mode == PrecariousMode::Strict ? "strict" : "weak";
}

struct EdgeDeletion {
  Enabling enabling;
  std::vector<std::string> survivors;
};

struct PrecariousnessReport {
  bool precarious = false;
  PrecariousMode mode = PrecariousMode::Strict;
  std::vector<std::string> closure;
  std::vector<EdgeDeletion> deletions;  // by label
};

/// Deletes each enabling inside the maximal closure in turn. Strict:
/// precarious iff every deletion empties the closure. Weak: iff every
/// deletion shrinks it. Throws if the closure is empty to begin with.
inline PrecariousnessReport is_precarious(const EnablingNetwork& n, PrecariousMode mode = PrecariousMode::Strict,
                                          ClosureOptions options = {}) {
  PrecariousnessReport report;
  report.mode = mode;
  report.closure = maximal_closure(n, options).closed;
  if (report.closure.empty()) {
    throw Error(ErrorKind::EmptyClosure, "network " + n.name() + " has an empty maximal closure; nothing to assess");
  }
  auto inside = [&](const std::string& p) { return std::binary_search(report.closure.begin(), report.closure.end(), p); };
  report.precarious = true;
  for (const auto& e : n.enablings()) {
    if (!inside(e.source) || !inside(e.target)) continue;
    auto survivors = maximal_closure(n.without(e.label), options).closed;
    bool collapses = mode == PrecariousMode::Strict ? survivors.empty() : survivors.size() < report.closure.size();
    if (!collapses) report.precarious = false;
    report.deletions.push_back({e, std::move(survivors)});
  }
  return report;
}

/// Edge-label sequences from `anchor` back to `anchor` of length at most
/// `max_len` that do not pass through `anchor` in between; sorted by
/// (length, labels).
inline std::vector<std::vector<std::string>> self_mediation_cycles(const EnablingNetwork& n, const std::string& anchor,
                                                                   std::size_t max_len) {
  auto a = n.index_of(anchor);
  if (!a) throw Error(ErrorKind::UnknownName, "unknown process " + anchor);
  if (max_len == 0) throw Error(ErrorKind::InvalidArgument, "max_len must be positive");

  std::vector<std::vector<const Enabling*>> out(n.processes().size());
  for (const auto& e : n.enablings()) out[*n.index_of(e.source)].push_back(&e);

  std::vector<std::vector<std::string>> cycles;
  std::vector<std::string> path;
  auto walk = [&](auto&& self, std::size_t at) -> void {
    if (path.size() == max_len) return;
    for (const Enabling* e : out[at]) {
      std::size_t next = *n.index_of(e->target);
      path.push_back(e->label);
      if (next == *a) {
        cycles.push_back(path);
      } else {
        self(self, next);
      }
      path.pop_back();
    }
  };
  walk(walk, *a);
  std::sort(cycles.begin(), cycles.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return cycles;
}

namespace detail {

inline std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace detail

/// Graphviz rendering; processes in the closure are filled black.
inline std::string network_to_dot(const EnablingNetwork& n, const ClosureResult& highlight) {
  for (const auto& p : highlight.closed) {
    if (!n.index_of(p)) throw Error(ErrorKind::UnknownName, "highlighted process " + p + " is not in the network");
  }
  std::string dot = "digraph " + detail::dot_quote(n.name()) + " {\n";
  for (const auto& p : n.processes()) {
    dot += "  " + detail::dot_quote(p);
    if (highlight.contains(p)) dot += " [style=filled, fillcolor=black, fontcolor=white]";
    dot += ";\n";
  }
  for (const auto& e : n.enablings()) {
    dot += "  " + detail::dot_quote(e.source) + " -> " + detail::dot_quote(e.target) +
           " [label=" + detail::dot_quote(e.label) + "];\n";
  }
  return dot + "}\n";
}

}  // namespace autocat
