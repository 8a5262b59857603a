#pragma once

#include "desc/alphabet.hpp"
#include "desc/generator.hpp"
#include "desc/report.hpp"

namespace desc {

/// A natural projection from `source` onto the events in `target`.
class ProjectionSpec {
 public:
  /// Throws ReferenceError unless target is a subset of the source events.
  ProjectionSpec(Alphabet source, EventSet target);

  const Alphabet& source() const noexcept { return source_; }
  const EventSet& target() const noexcept { return target_; }
  /// Events erased by the projection.
  EventSet hidden() const;
  bool is_identity() const { return target_.size() == source_.size(); }
  Alphabet target_alphabet() const { return source_.restricted_to(target_); }

 private:
  Alphabet source_;
  EventSet target_;
};

/// L(g1) || L(g2): inverse projections intersected, over the union alphabet.
Generator sync_product(const Generator& g1, const Generator& g2);
Generator sync_product(const Generator& g1, const Generator& g2, const Generator& g3);

/// Deterministic generator of P(L(g)); spec.source must equal g's alphabet.
Generator project(const Generator& g, const ProjectionSpec& spec);

/// Projection onto `events` intersected with g's alphabet.
Generator project_onto(const Generator& g, const EventSet& events);

/// P^{-1}(L(g)) over `superset`: self-loops on the new events at every state.
Generator inverse_project(const Generator& g, const Alphabet& superset);

/// Shortest word in the symmetric difference, if any. Operands must share an event set.
PropertyReport language_equal(const Generator& g1, const Generator& g2);

/// Shortest word of L(g1) \ L(g2), if any. Operands must share an event set.
PropertyReport language_subset(const Generator& g1, const Generator& g2);

/// L(g1) ∪ L(g2) over a shared event set.
Generator language_union(const Generator& g1, const Generator& g2);

/// Language-preserving state minimization (for display; other operations never need it).
Generator minimize(const Generator& g);

}  // namespace desc
