#pragma once

#include "desc/generator.hpp"
#include "desc/report.hpp"

namespace desc {

/// A supervisor realized by an automaton; the closed loop is its synchronous
/// product with the plant.
struct Supervisor {
  Generator realization;
};

/// Checks K̄E_u ∩ L ⊆ K̄. The counterexample is the shortlex-least s·u with s in
/// K ∩ L, u in `eu`, s·u in L and s·u not in K.
PropertyReport is_controllable(const Generator& k, const Generator& l, const EventSet& eu);
PropertyReport is_controllable(const Generator& k, const Generator& l);

/// Supremal controllable sublanguage of K with respect to L. K need not be a
/// subset of L; the result is always a subset of K ∩ L.
Generator sup_c(const Generator& k, const Generator& l, const EventSet& eu);
Generator sup_c(const Generator& k, const Generator& l);

/// After every word of L(S) || L(G), every `eu` event enabled by G must be
/// enabled by S (events S does not know are never disabled).
PropertyReport is_admissible(const Supervisor& s, const Generator& g, const EventSet& eu);
PropertyReport is_admissible(const Supervisor& s, const Generator& g);

/// L(S/G) = L(S) || L(G). Throws PreconditionError for an inadmissible supervisor.
Generator closed_loop(const Supervisor& s, const Generator& g);

}  // namespace desc
