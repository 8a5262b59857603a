#pragma once

#include "desc/generator.hpp"
#include "desc/language_ops.hpp"
#include "desc/report.hpp"

namespace desc {

/// Whether the projection is an L(g)-observer: every projected continuation of
/// P(s) can be realized by extending s. A counterexample s·e means P(s)e is in
/// P(L) but no u in (E \ E_k)* gives s·u·e in L.
PropertyReport is_observer(const Generator& g, const ProjectionSpec& spec);

/// Output control consistency: whenever a path ends in an uncontrollable target
/// event and its preceding hidden segment starts at the initial state or right
/// after a target event, every hidden event in the segment is uncontrollable.
/// The counterexample is the shortest full violating word.
PropertyReport is_occ(const Generator& g, const ProjectionSpec& spec, const EventSet& eu);
PropertyReport is_occ(const Generator& g, const ProjectionSpec& spec);

}  // namespace desc
