#pragma once

#include <vector>

#include "desc/alphabet.hpp"
#include "desc/control.hpp"
#include "desc/generator.hpp"
#include "desc/report.hpp"

namespace desc {

/// Uncontrollable subsets of the three local event sets, as a named record.
struct LocalUncontrollables {
  EventSet k;      // E_{k,u}
  EventSet one_k;  // E_{1+k,u}
  EventSet two_k;  // E_{2+k,u}
};

/// Event sets of two subsystems and a coordinator, with the derived unions.
class CoordinationScheme {
 public:
  /// Throws ControllabilityConflict when an event's status differs between sets.
  CoordinationScheme(Alphabet e1, Alphabet e2, Alphabet ek);

  /// Scheme for two subsystem generators and a coordinator event set; statuses of
  /// coordinator events are taken from the subsystems.
  static CoordinationScheme for_plants(const Generator& g1, const Generator& g2, const EventSet& ek);

  const Alphabet& e1() const noexcept { return e1_; }
  const Alphabet& e2() const noexcept { return e2_; }
  const Alphabet& ek() const noexcept { return ek_; }
  const Alphabet& e1k() const noexcept { return e1k_; }
  const Alphabet& e2k() const noexcept { return e2k_; }
  const Alphabet& all() const noexcept { return all_; }

  /// E_{i+k} for i = 1, 2.
  const Alphabet& eik(int i) const { return i == 1 ? e1k_ : e2k_; }
  const Alphabet& ei(int i) const { return i == 1 ? e1_ : e2_; }

  EventSet uncontrollable() const { return all_.uncontrollable(); }
  LocalUncontrollables local_uncontrollables() const;

 private:
  Alphabet e1_, e2_, ek_, e1k_, e2k_, all_;
};

struct ConditionalControllabilityReport {
  PropertyReport condition_i;
  PropertyReport condition_iia;
  PropertyReport condition_iib;
  bool holds = false;
};

/// The three local supremal languages and their composition.
struct SynthesisResult {
  Generator sup_k;     // over E_k
  Generator sup_1k;    // over E_{1+k}
  Generator sup_2k;    // over E_{2+k}
  Generator composed;  // over E
  /// False when the observer/OCC hypotheses failed and the run was forced.
  bool certified = true;
  std::vector<PropertyReport> preconditions;
};

struct Supervisors {
  Supervisor k;    // realization over E_k
  Supervisor one;  // realization over E_{1+k}
  Supervisor two;  // realization over E_{2+k}
};

struct CoordinatedLoop {
  Generator loop_k;
  Generator loop_1;
  Generator loop_2;
  Generator composed;
};

struct SupccOptions {
  /// Compute even if the observer/OCC hypotheses fail; the result is then uncertified.
  bool force = false;
};

/// E_r(G1||G2) ∩ E_r(G1) ∩ E_r(G2) ⊆ E_r(Gk). Counterexample: the offending event.
PropertyReport conditionally_independent(const Generator& g1, const Generator& g2, const Generator& gk);

/// K = P_{1+k}(K) || P_{2+k}(K) || P_k(K). Counterexample: a word of the
/// composition outside K.
PropertyReport conditionally_decomposable(const Generator& k, const CoordinationScheme& scheme);

/// Conditions (i), (ii.a), (ii.b). Throws PreconditionError unless K ⊆ L(G1||G2||Gk).
ConditionalControllabilityReport is_conditionally_controllable(const Generator& k, const Generator& g1,
                                                               const Generator& g2, const Generator& gk,
                                                               const CoordinationScheme& scheme);

/// Checks of the supcC hypotheses, in order: decomposability of K, then for
/// i = 1, 2 the observer and OCC properties of P^{i+k}_k on (P^{i+k}_i)^{-1}(L_i).
std::vector<PropertyReport> supcc_preconditions(const Generator& k, const Generator& g1, const Generator& g2,
                                                const CoordinationScheme& scheme);

/// Supervisors realized by P_k(K), P_{1+k}(K), P_{2+k}(K). Throws
/// PreconditionError unless K is conditionally controllable, conditionally
/// decomposable and G1, G2 are conditionally independent given Gk.
Supervisors synthesize_supervisors(const Generator& k, const Generator& g1, const Generator& g2,
                                   const Generator& gk, const CoordinationScheme& scheme);

/// Closed loops of the coordination architecture: S_k/G_k, then each S_i on
/// G_i || (S_k/G_k) augmented by the coordinator-level view of the other side.
CoordinatedLoop coordinated_closed_loop(const Supervisors& sups, const Generator& g1, const Generator& g2,
                                        const Generator& gk, const CoordinationScheme& scheme);

/// Distributed computation of the supremal conditionally controllable sublanguage of K ∩ L.
SynthesisResult sup_cc(const Generator& k, const Generator& g1, const Generator& g2, const Generator& gk,
                       const CoordinationScheme& scheme, SupccOptions options = {});

/// Same result for K ⊆ L through the shorter chain without the extra products.
/// Throws PreconditionError when K is not a subset of L.
SynthesisResult sup_cc_simplified(const Generator& k, const Generator& g1, const Generator& g2,
                                  const Generator& gk, const CoordinationScheme& scheme,
                                  SupccOptions options = {});

/// L_k ⊆ P_k(L_i) for i = 1, 2 and P_{i+k} OCC for P_{i+k}^{-1}(L_i || L_k).
/// When it holds (on top of the supcC hypotheses), supcC coincides with supC.
PropertyReport check_optimality_conditions(const Generator& g1, const Generator& g2, const Generator& gk,
                                           const CoordinationScheme& scheme);

/// L(P^1_{1∩k}(G1) || P^2_{2∩k}(G2)); never restricts G1 || G2.
Generator default_coordinator(const Generator& g1, const Generator& g2, const EventSet& ek);

/// Greedy coordinator event set: starts from the reachable shared events and
/// extends in lexicographic order until K is conditionally decomposable and the
/// observer/OCC hypotheses hold.
Alphabet suggest_coordinator_events(const Generator& k, const Generator& g1, const Generator& g2);

}  // namespace desc
