#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhsing/linktopo.hpp"
#include "qhsing/milnor.hpp"
#include "qhsing/poly.hpp"
#include "qhsing/residue.hpp"
#include "qhsing/weights.hpp"

namespace qhsing {

/// Aggregate result of the full pipeline for one input germ. All exact
/// quantities are kept exact; serialization renders them as canonical
/// integer/rational strings so output is byte-stable.
struct AnalysisReport {
  std::string input_text;
  std::vector<std::string> vars;
  int n = 0;

  Poly poly;
  WeightSystem weights;
  Rat newton_dist;

  bool isolated = false;
  Int mu;
  IntPoly poincare;
  Spectrum spec;
  CycloFactorization delta;
  IntPoly delta_expanded;

  LinkClass link;
  TypeTag type;

  Rat p;
  std::optional<TargetTag> target;
  LiftReport lift;
};

/// parse -> weights -> isolatedness -> Milnor data -> link -> lift.
/// Throws the originating module's Error; errc::not_isolated when the
/// critical point is not isolated.
AnalysisReport analyze(const std::string& text,
                       const std::vector<std::string>& vars, const Rat& p);

std::string to_json(const AnalysisReport& r);
std::string to_markdown(const AnalysisReport& r);

}  // namespace qhsing
