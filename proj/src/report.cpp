#include "qhsing/report.hpp"

#include <json.hpp>

#include <sstream>

#include "qhsing/parse.hpp"
#include "qhsing/version.hpp"

namespace qhsing {

using ordered_json = nlohmann::ordered_json;

AnalysisReport analyze(const std::string& text,
                       const std::vector<std::string>& vars, const Rat& p) {
  AnalysisReport r;
  r.input_text = text;
  r.vars = vars;
  r.n = static_cast<int>(vars.size()) - 1;
  r.p = p;

  r.poly = parse_polynomial(text, vars);
  r.weights = find_weights(r.poly);
  r.newton_dist = newton_distance(r.weights);

  r.isolated = is_isolated(r.poly, r.weights);
  if (!r.isolated) {
    throw Error(errc::not_isolated,
                "the critical point is not isolated: the Jacobian quotient "
                "stays nonzero above the top Milnor degree");
  }

  r.mu = milnor_number(r.weights);
  r.poincare = poincare_polynomial(r.weights);
  r.spec = spectrum(r.weights);
  r.delta = characteristic_polynomial(r.weights);
  r.delta_expanded = r.delta.expand();

  r.link = classify_link(r.delta, r.n);
  r.type = recognize_type(r.weights, r.mu);

  if (r.n >= 2) {
    Rat low = 1 + Rat(1, 2 * r.n - 1);
    if (p >= low) r.target = perversity_target(p, r.n).tag;
  }
  r.lift = lift_verdict(r.weights, r.spec, r.delta, r.n, p);
  return r;
}

namespace {

std::string sphere_str(const LinkClass& lc) {
  switch (lc.sphere) {
    case SphereAnswer::Yes: return "yes";
    case SphereAnswer::No: return "no";
    case SphereAnswer::NotApplicable: return "not-applicable";
  }
  return "";
}

std::string factored_str(const CycloFactorization& f) {
  if (f.factors.empty()) return "1";
  std::string out;
  for (const auto& [k, mult] : f.factors) {
    if (!out.empty()) out += " * ";
    out += "Phi_" + std::to_string(k);
    if (mult != 1) out += "^" + int_str(mult);
  }
  return out;
}

}  // namespace

std::string to_json(const AnalysisReport& r) {
  ordered_json j;
  j["input"] = {
      {"polynomial", r.input_text},
      {"canonical", to_string(r.poly, r.vars)},
      {"vars", r.vars},
      {"n", r.n},
  };

  ordered_json weights = ordered_json::object();
  {
    ordered_json a = ordered_json::array();
    for (const Rat& ai : r.weights.a) a.push_back(rat_str(ai));
    ordered_json q = ordered_json::array();
    for (const Int& qi : r.weights.q) q.push_back(int_str(qi));
    weights["a"] = a;
    weights["d"] = int_str(r.weights.d);
    weights["q"] = q;
    weights["Q"] = int_str(r.weights.Q);
    weights["kappa"] = rat_str(r.weights.kappa);
    weights["unique"] = r.weights.unique;
    weights["newton_distance"] = rat_str(r.newton_dist);
  }
  j["weights"] = weights;

  ordered_json inv = ordered_json::object();
  inv["isolated"] = r.isolated;
  inv["mu"] = int_str(r.mu);
  inv["poincare"] = r.poincare.str();
  {
    ordered_json sp = ordered_json::array();
    for (const auto& e : r.spec.entries) {
      sp.push_back({{"alpha", rat_str(e.alpha)}, {"mult", int_str(e.mult)}});
    }
    inv["spectrum"] = sp;
    ordered_json fac = ordered_json::array();
    for (const auto& [k, mult] : r.delta.factors) {
      fac.push_back({{"k", k}, {"mult", int_str(mult)}});
    }
    inv["delta_factors"] = fac;
    inv["delta"] = r.delta_expanded.str();
  }
  j["invariants"] = inv;

  j["link"] = {
      {"delta_at_one", int_str(r.link.delta_at_one)},
      {"rational_sphere", r.link.rational_sphere},
      {"sphere", sphere_str(r.link)},
      {"sphere_note", r.link.sphere_note},
      {"type", to_string(r.type)},
  };

  ordered_json lift = ordered_json::object();
  lift["p"] = rat_str(r.p);
  lift["target_group"] = r.target ? to_string(*r.target) : "not-applicable";
  lift["kappa"] = rat_str(r.lift.kappa);
  lift["kappa_criterion"] = r.lift.kappa_criterion;
  lift["spectrum_criterion"] = r.lift.spectrum_criterion;
  lift["rational_sphere_criterion"] = r.lift.rational_sphere_criterion;
  lift["lifts_to_intersection_homology"] = to_string(r.lift.lifts_to_ih);
  lift["lifts_to_cohomology"] = to_string(r.lift.lifts_to_cohomology);
  if (r.lift.chosen_m) {
    lift["m"] = *r.lift.chosen_m;
  } else {
    lift["m"] = nullptr;
  }
  if (r.lift.alpha) {
    lift["alpha"] = rat_str(*r.lift.alpha);
  } else {
    lift["alpha"] = nullptr;
  }
  lift["notes"] = r.lift.notes;
  j["lift"] = lift;

  j["meta"] = {
      {"tool", "qhsing"},
      {"version", kVersion},
      {"schema", 1},
  };
  return j.dump(2) + "\n";
}

std::string to_markdown(const AnalysisReport& r) {
  std::ostringstream out;
  out << "# Singularity analysis\n\n";
  out << "- input: `" << r.input_text << "`\n";
  out << "- canonical: `" << to_string(r.poly, r.vars) << "`\n";
  out << "- variables:";
  for (const auto& v : r.vars) out << " " << v;
  out << " (n = " << r.n << ")\n\n";

  out << "## Weights\n\n";
  out << "- a = (";
  for (std::size_t i = 0; i < r.weights.a.size(); ++i) {
    if (i) out << ", ";
    out << rat_str(r.weights.a[i]);
  }
  out << ")" << (r.weights.unique ? "" : "  [minimum-norm pick: underdetermined]")
      << "\n";
  out << "- d = " << int_str(r.weights.d) << ", q = (";
  for (std::size_t i = 0; i < r.weights.q.size(); ++i) {
    if (i) out << ", ";
    out << int_str(r.weights.q[i]);
  }
  out << "), Q = " << int_str(r.weights.Q) << "\n";
  out << "- kappa = " << rat_str(r.weights.kappa)
      << ", Newton distance = " << rat_str(r.newton_dist) << "\n\n";

  out << "## Invariants\n\n";
  out << "- mu = " << int_str(r.mu) << "\n";
  out << "- Poincare polynomial: " << r.poincare.str() << "\n";
  out << "- spectrum: {";
  for (std::size_t i = 0; i < r.spec.entries.size(); ++i) {
    if (i) out << ", ";
    out << rat_str(r.spec.entries[i].alpha) << " x "
        << int_str(r.spec.entries[i].mult);
  }
  out << "}\n";
  out << "- Delta = " << factored_str(r.delta) << " = "
      << r.delta_expanded.str() << "\n\n";

  out << "## Link\n\n";
  out << "- Delta(1) = " << int_str(r.link.delta_at_one) << "\n";
  out << "- rational homology sphere: "
      << (r.link.rational_sphere ? "yes" : "no") << "\n";
  out << "- sphere: " << sphere_str(r.link) << " (" << r.link.sphere_note
      << ")\n";
  out << "- recognized type: " << to_string(r.type) << "\n\n";

  out << "## Residue lift (p = " << rat_str(r.p) << ")\n\n";
  out << "- target group: "
      << (r.target ? to_string(*r.target) : std::string("not-applicable"))
      << "\n";
  out << "- kappa criterion (kappa > 1): "
      << (r.lift.kappa_criterion ? "yes" : "no") << "\n";
  out << "- spectrum criterion (0 not in spectrum): "
      << (r.lift.spectrum_criterion ? "yes" : "no") << "\n";
  out << "- rational sphere criterion (Delta(1) != 0): "
      << (r.lift.rational_sphere_criterion ? "yes" : "no") << "\n";
  out << "- lifts to intersection homology: " << to_string(r.lift.lifts_to_ih)
      << "\n";
  out << "- lifts to cohomology: " << to_string(r.lift.lifts_to_cohomology)
      << "\n";
  if (r.lift.chosen_m) {
    out << "- scaling m = " << *r.lift.chosen_m
        << ", growth exponent alpha = " << rat_str(*r.lift.alpha) << "\n";
  }
  for (const auto& note : r.lift.notes) out << "- note: " << note << "\n";
  return out.str();
}

}  // namespace qhsing
