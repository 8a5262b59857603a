#include "desc/coordination.hpp"

#include <future>

#include "desc/errors.hpp"
#include "desc/language_ops.hpp"
#include "desc/structural.hpp"

namespace desc {
namespace {

void require_events(const Generator& g, const Alphabet& expected, const char* what) {
  if (!g.alphabet().same_events(expected)) {
    throw AlphabetMismatch(std::string(what) + " is over " + to_string(g.alphabet().events()) + ", expected " +
                           to_string(expected.events()));
  }
}

void require_plants(const Generator& g1, const Generator& g2, const Generator& gk, const CoordinationScheme& scheme) {
  require_events(g1, scheme.e1(), "G1");
  require_events(g2, scheme.e2(), "G2");
  require_events(gk, scheme.ek(), "Gk");
}

PropertyReport labelled(PropertyReport report, const std::string& name) {
  report.detail = report.detail.empty() ? name : name + ": " + report.detail;
  return report;
}

const PropertyReport* first_failure(const std::vector<PropertyReport>& reports) {
  for (const auto& r : reports)
    if (!r.holds) return &r;
  return nullptr;
}

void apply_preconditions(SynthesisResult& result, std::vector<PropertyReport> reports, const SupccOptions& options,
                         const char* op) {
  if (const auto* failed = first_failure(reports)) {
    if (!options.force) throw PreconditionError(std::string(op) + ": hypothesis failed", *failed);
    result.certified = false;
  }
  result.preconditions = std::move(reports);
}

}  // namespace

CoordinationScheme::CoordinationScheme(Alphabet e1, Alphabet e2, Alphabet ek)
    : e1_(std::move(e1)), e2_(std::move(e2)), ek_(std::move(ek)) {
  e1k_ = merge(e1_, ek_);
  e2k_ = merge(e2_, ek_);
  all_ = merge(e1k_, e2k_);
}

CoordinationScheme CoordinationScheme::for_plants(const Generator& g1, const Generator& g2, const EventSet& ek) {
  const Alphabet plant = merge(g1.alphabet(), g2.alphabet());
  for (const auto& e : ek)
    if (!plant.contains(e)) throw ReferenceError("coordinator event '" + e + "' occurs in neither subsystem");
  return CoordinationScheme(g1.alphabet(), g2.alphabet(), plant.restricted_to(ek));
}

LocalUncontrollables CoordinationScheme::local_uncontrollables() const {
  return {ek_.uncontrollable(), e1k_.uncontrollable(), e2k_.uncontrollable()};
}

PropertyReport conditionally_independent(const Generator& g1, const Generator& g2, const Generator& gk) {
  const EventSet shared = set_intersection(
      set_intersection(reachable_events(sync_product(g1, g2)), reachable_events(g1)), reachable_events(g2));
  const EventSet missing = set_difference(shared, reachable_events(gk));
  if (missing.empty()) return PropertyReport::pass();
  const Event& e = *missing.begin();
  return PropertyReport::fail({e}, "shared event '" + e + "' is not reachable in the coordinator");
}

PropertyReport conditionally_decomposable(const Generator& k, const CoordinationScheme& scheme) {
  require_events(k, scheme.all(), "K");
  const Generator composed = sync_product(project_onto(k, scheme.e1k().events()),
                                          project_onto(k, scheme.e2k().events()),
                                          project_onto(k, scheme.ek().events()));
  auto report = language_subset(composed, k);
  if (!report) report.detail = "word of P_1k(K) || P_2k(K) || P_k(K) outside K";
  return report;
}

ConditionalControllabilityReport is_conditionally_controllable(const Generator& k, const Generator& g1,
                                                               const Generator& g2, const Generator& gk,
                                                               const CoordinationScheme& scheme) {
  require_plants(g1, g2, gk, scheme);
  require_events(k, scheme.all(), "K");
  if (auto inside = language_subset(k, sync_product(g1, g2, gk)); !inside)
    throw PreconditionError("is_conditionally_controllable: K is not contained in L(G1||G2||Gk)", inside);

  const auto eu = scheme.local_uncontrollables();
  const EventSet ek = scheme.ek().events();
  const Generator pk = project_onto(k, ek);

  ConditionalControllabilityReport out;
  out.condition_i = labelled(is_controllable(pk, gk, eu.k), "condition (i)");
  auto side = [&](const Generator& gi, const Generator& gj, int i, const EventSet& eiku, const char* name) {
    const Generator other_view = project_onto(sync_product(gj, pk), ek);
    const Generator plant = sync_product(gi, pk, other_view);
    return labelled(is_controllable(project_onto(k, scheme.eik(i).events()), plant, eiku), name);
  };
  out.condition_iia = side(g1, g2, 1, eu.one_k, "condition (ii.a)");
  out.condition_iib = side(g2, g1, 2, eu.two_k, "condition (ii.b)");
  out.holds = out.condition_i.holds && out.condition_iia.holds && out.condition_iib.holds;
  return out;
}

std::vector<PropertyReport> supcc_preconditions(const Generator& k, const Generator& g1, const Generator& g2,
                                                const CoordinationScheme& scheme) {
  std::vector<PropertyReport> out;
  out.push_back(labelled(conditionally_decomposable(k, scheme), "conditional decomposability"));
  const EventSet ek = scheme.ek().events();
  for (int i = 1; i <= 2; ++i) {
    const Generator& gi = i == 1 ? g1 : g2;
    const Alphabet& eik = scheme.eik(i);
    const Generator lifted = inverse_project(gi, eik);
    const ProjectionSpec spec(eik, ek);
    const std::string tag = "P^{" + std::to_string(i) + "+k}_k";
    out.push_back(labelled(is_observer(lifted, spec), "observer " + tag));
    out.push_back(labelled(is_occ(lifted, spec, eik.uncontrollable()), "OCC " + tag));
  }
  return out;
}

Supervisors synthesize_supervisors(const Generator& k, const Generator& g1, const Generator& g2,
                                   const Generator& gk, const CoordinationScheme& scheme) {
  require_plants(g1, g2, gk, scheme);
  if (auto r = conditionally_independent(g1, g2, gk); !r)
    throw PreconditionError("synthesize_supervisors: G1, G2 not conditionally independent", r);
  if (auto r = conditionally_decomposable(k, scheme); !r)
    throw PreconditionError("synthesize_supervisors: K not conditionally decomposable", r);
  const auto cc = is_conditionally_controllable(k, g1, g2, gk, scheme);
  if (!cc.holds) {
    const PropertyReport& failed =
        !cc.condition_i.holds ? cc.condition_i : (!cc.condition_iia.holds ? cc.condition_iia : cc.condition_iib);
    throw PreconditionError("synthesize_supervisors: K not conditionally controllable", failed);
  }
  return Supervisors{{project_onto(k, scheme.ek().events())},
                     {project_onto(k, scheme.e1k().events())},
                     {project_onto(k, scheme.e2k().events())}};
}

CoordinatedLoop coordinated_closed_loop(const Supervisors& sups, const Generator& g1, const Generator& g2,
                                        const Generator& gk, const CoordinationScheme& scheme) {
  require_plants(g1, g2, gk, scheme);
  const EventSet ek = scheme.ek().events();
  Generator loop_k = closed_loop(sups.k, gk);
  auto local = [&](const Supervisor& s, const Generator& gi, const Generator& gj) {
    const Generator plant = sync_product(gi, loop_k, project_onto(sync_product(gj, loop_k), ek));
    return closed_loop(s, plant);
  };
  Generator loop_1 = local(sups.one, g1, g2);
  Generator loop_2 = local(sups.two, g2, g1);
  Generator composed = sync_product(loop_1, loop_2, loop_k);
  return {std::move(loop_k), std::move(loop_1), std::move(loop_2), std::move(composed)};
}

SynthesisResult sup_cc(const Generator& k, const Generator& g1, const Generator& g2, const Generator& gk,
                       const CoordinationScheme& scheme, SupccOptions options) {
  require_plants(g1, g2, gk, scheme);
  require_events(k, scheme.all(), "K");

  SynthesisResult result{Generator::empty_generator(scheme.ek()), Generator::empty_generator(scheme.e1k()),
                         Generator::empty_generator(scheme.e2k()), Generator::empty_generator(scheme.all()), true, {}};
  apply_preconditions(result, supcc_preconditions(k, g1, g2, scheme), options, "sup_cc");

  const auto eu = scheme.local_uncontrollables();
  const EventSet ek = scheme.ek().events();
  const Generator spec_k =
      sync_product(project_onto(k, ek), project_onto(sync_product(g1, g2), ek), gk);
  result.sup_k = sup_c(spec_k, gk, eu.k);

  auto local = [&](const Generator& gi, int i, const EventSet& eiku) {
    return sup_c(sync_product(project_onto(k, scheme.eik(i).events()), gi), sync_product(gi, result.sup_k), eiku);
  };
  auto second = std::async(std::launch::async, local, std::cref(g2), 2, std::cref(eu.two_k));
  result.sup_1k = local(g1, 1, eu.one_k);
  result.sup_2k = second.get();
  result.composed = sync_product(result.sup_k, result.sup_1k, result.sup_2k);
  return result;
}

SynthesisResult sup_cc_simplified(const Generator& k, const Generator& g1, const Generator& g2,
                                  const Generator& gk, const CoordinationScheme& scheme, SupccOptions options) {
  require_plants(g1, g2, gk, scheme);
  require_events(k, scheme.all(), "K");
  if (auto inside = language_subset(k, sync_product(g1, g2, gk)); !inside)
    throw PreconditionError("sup_cc_simplified: K is not contained in L", inside);

  SynthesisResult result{Generator::empty_generator(scheme.ek()), Generator::empty_generator(scheme.e1k()),
                         Generator::empty_generator(scheme.e2k()), Generator::empty_generator(scheme.all()), true, {}};
  apply_preconditions(result, supcc_preconditions(k, g1, g2, scheme), options, "sup_cc_simplified");

  const auto eu = scheme.local_uncontrollables();
  result.sup_k = sup_c(project_onto(k, scheme.ek().events()), gk, eu.k);
  result.sup_1k = sup_c(project_onto(k, scheme.e1k().events()), sync_product(g1, result.sup_k), eu.one_k);
  result.sup_2k = sup_c(project_onto(k, scheme.e2k().events()), sync_product(g2, result.sup_k), eu.two_k);
  result.composed = sync_product(result.sup_k, result.sup_1k, result.sup_2k);
  return result;
}

PropertyReport check_optimality_conditions(const Generator& g1, const Generator& g2, const Generator& gk,
                                           const CoordinationScheme& scheme) {
  require_plants(g1, g2, gk, scheme);
  const EventSet ek = scheme.ek().events();
  const bool shared_in_k = is_subset(set_intersection(scheme.e1().events(), scheme.e2().events()), ek);

  if (shared_in_k) {
    // P_k(L) = P_k(L_1) ∩ P_k(L_2) ∩ L_k, so L_k ⊆ P_k(L) splits per subsystem.
    for (int i = 1; i <= 2; ++i) {
      const Generator& gi = i == 1 ? g1 : g2;
      const Generator view = inverse_project(project_onto(gi, ek), scheme.ek());
      if (auto r = language_subset(gk, view); !r)
        return labelled(r, "L_k not contained in P_k(L_" + std::to_string(i) + ")");
    }
  } else if (auto r = language_subset(gk, project_onto(sync_product(g1, g2, gk), ek)); !r) {
    return labelled(r, "L_k not contained in P_k(L)");
  }

  for (int i = 1; i <= 2; ++i) {
    const Generator& gi = i == 1 ? g1 : g2;
    const Generator lifted = inverse_project(sync_product(gi, gk), scheme.all());
    const ProjectionSpec spec(scheme.all(), scheme.eik(i).events());
    if (auto r = is_occ(lifted, spec, scheme.uncontrollable()); !r)
      return labelled(r, "P_{" + std::to_string(i) + "+k} not OCC");
  }
  return PropertyReport::pass("L_k within P_k(L) and P_{i+k} OCC");
}

Generator default_coordinator(const Generator& g1, const Generator& g2, const EventSet& ek) {
  const EventSet plant_events = set_union(g1.alphabet().events(), g2.alphabet().events());
  for (const auto& e : ek)
    if (!plant_events.count(e)) throw ReferenceError("coordinator event '" + e + "' occurs in neither subsystem");
  const EventSet shared = set_intersection(reachable_events(g1), reachable_events(g2));
  const EventSet outside = set_difference(shared, ek);
  if (!outside.empty()) {
    const Event& e = *outside.begin();
    throw PreconditionError("default_coordinator",
                            PropertyReport::fail({e}, "shared event '" + e + "' is outside the coordinator set"));
  }
  return sync_product(project_onto(g1, ek), project_onto(g2, ek));
}

Alphabet suggest_coordinator_events(const Generator& k, const Generator& g1, const Generator& g2) {
  const Alphabet plant = merge(g1.alphabet(), g2.alphabet());
  require_events(k, plant, "K");
  auto passes = [&](const EventSet& ek) {
    const auto scheme = CoordinationScheme::for_plants(g1, g2, ek);
    return first_failure(supcc_preconditions(k, g1, g2, scheme)) == nullptr;
  };

  EventSet current = set_intersection(reachable_events(g1), reachable_events(g2));
  while (!passes(current)) {
    const EventSet candidates = set_difference(plant.events(), current);
    if (candidates.empty()) break;
    bool done = false;
    for (const auto& e : candidates) {
      EventSet trial = current;
      trial.insert(e);
      if (passes(trial)) {
        current = std::move(trial);
        done = true;
        break;
      }
    }
    if (done) break;
    current.insert(*candidates.begin());
  }
  return plant.restricted_to(current);
}

}  // namespace desc
