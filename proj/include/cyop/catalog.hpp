#pragma once

#include <functional>
#include <optional>

#include "cyop/recurrence.hpp"

namespace cyop {

struct CatalogCase {
  std::string id;
  std::string label;        // the paper's name for the case
  std::string description;
  std::optional<ThetaOperator> op;
  std::optional<Recurrence> rec;          // set for recurrence-only entries
  std::function<Rational(int)> term;      // closed-form n-th coefficient, when printed
  std::vector<std::string> tags;

  bool has_operator() const { return op.has_value(); }
  bool has_closed_form() const { return static_cast<bool>(term); }
};

const std::vector<CatalogCase>& catalog();
const CatalogCase& catalog_case(const std::string& id);  // throws UnknownCase

/// Closed-form sequence values A_0..A_upto; throws NoClosedFormSequence when
/// the paper prints no formula for this case.
Sequence catalog_sequence(const std::string& id, int upto);

/// Analytic solution y0 head from the case's own recurrence (works for every
/// MUM operator entry and for recurrence-only entries with stored seeds).
Sequence catalog_y0(const std::string& id, int upto);

}  // namespace cyop
