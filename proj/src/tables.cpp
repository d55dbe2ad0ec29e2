#include "qhsing/tables.hpp"

#include <sstream>

#include "qhsing/catalog.hpp"
#include "qhsing/linktopo.hpp"
#include "qhsing/milnor.hpp"
#include "qhsing/parse.hpp"
#include "qhsing/weights.hpp"

namespace qhsing {

namespace {

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

std::string sphere_str(const LinkClass& lc) {
  switch (lc.sphere) {
    case SphereAnswer::Yes: return "yes";
    case SphereAnswer::No: return "no";
    case SphereAnswer::NotApplicable: return "n/a";
  }
  return "";
}

struct Row {
  std::string type;
  std::vector<std::string> cells;
};

std::string render(const std::vector<std::string>& header,
                   const std::vector<Row>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const Row& r : rows) {
    width[0] = std::max(width[0], r.type.size());
    for (std::size_t c = 0; c < r.cells.size(); ++c) {
      width[c + 1] = std::max(width[c + 1], r.cells[c].size());
    }
  }
  std::ostringstream out;
  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w - s.size(), ' ');
  };
  out << "| ";
  for (std::size_t c = 0; c < header.size(); ++c) {
    out << pad(header[c], width[c]) << " | ";
  }
  out << "\n|";
  for (std::size_t c = 0; c < header.size(); ++c) {
    out << std::string(width[c] + 2, '-') << "|";
  }
  out << "\n";
  for (const Row& r : rows) {
    out << "| " << pad(r.type, width[0]) << " | ";
    for (std::size_t c = 0; c < r.cells.size(); ++c) {
      out << pad(r.cells[c], width[c + 1]) << " | ";
    }
    out << "\n";
  }
  return out.str();
}

Row link_row(const TypeTag& tag, int n) {
  Poly p = catalog_normal_form(tag, n);
  WeightSystem w = find_weights(p);
  CycloFactorization delta = characteristic_polynomial(w);
  LinkClass lc = classify_link(delta, n);
  Row row;
  row.type = to_string(tag);
  row.cells = {factored_str(delta), delta.expand().str(),
               int_str(lc.delta_at_one), sphere_str(lc),
               lc.rational_sphere ? "yes" : "no"};
  return row;
}

Row weight_row(const TypeTag& tag, int n) {
  Poly p = catalog_normal_form(tag, n);
  WeightSystem w = find_weights(p);
  std::string ws;
  for (const Rat& ai : w.a) {
    if (!ws.empty()) ws += ", ";
    ws += rat_str(ai);
  }
  Row row;
  row.type = to_string(tag);
  row.cells = {ws, rat_str(w.kappa)};
  return row;
}

std::pair<int, int> clamp_range(Family f,
                                std::optional<std::pair<int, int>> k_range) {
  int lo = (f == Family::D) ? 4 : 1;
  int hi = 8;
  if (k_range) {
    lo = std::max(lo, k_range->first);
    hi = k_range->second;
  }
  if (hi < lo) {
    throw Error(errc::out_of_range, "empty k range for family " +
                                        family_name(f));
  }
  return {lo, hi};
}

}  // namespace

std::string emit_tables(TableKind kind, int n,
                        std::optional<std::pair<int, int>> k_range) {
  if (n < 1) {
    throw Error(errc::out_of_range, "n must be >= 1");
  }
  std::vector<Row> rows;
  if (kind == TableKind::Simple || kind == TableKind::Parabolic) {
    if (kind == TableKind::Simple) {
      auto [alo, ahi] = clamp_range(Family::A, k_range);
      for (int k = alo; k <= ahi; ++k) rows.push_back(link_row({Family::A, k}, n));
      auto [dlo, dhi] = clamp_range(Family::D, k_range);
      for (int k = dlo; k <= dhi; ++k) rows.push_back(link_row({Family::D, k}, n));
      for (Family f : {Family::E6, Family::E7, Family::E8}) {
        rows.push_back(link_row({f, std::nullopt}, n));
      }
    } else {
      for (Family f : {Family::P8, Family::X9, Family::J10}) {
        if (n < catalog_min_n(f)) continue;
        rows.push_back(link_row({f, std::nullopt}, n));
      }
    }
    std::ostringstream head;
    head << "characteristic polynomials at n = " << n
         << " (a: sphere, b: rational sphere)\n";
    return head.str() + render({"type", "Delta factored", "Delta expanded",
                                "Delta(1)", "a", "b"},
                               rows);
  }

  auto [alo, ahi] = clamp_range(Family::A, k_range);
  for (int k = alo; k <= ahi; ++k) rows.push_back(weight_row({Family::A, k}, n));
  auto [dlo, dhi] = clamp_range(Family::D, k_range);
  for (int k = dlo; k <= dhi; ++k) rows.push_back(weight_row({Family::D, k}, n));
  for (Family f : {Family::E6, Family::E7, Family::E8, Family::P8, Family::X9,
                   Family::J10}) {
    if (n < catalog_min_n(f)) continue;
    rows.push_back(weight_row({f, std::nullopt}, n));
  }
  std::ostringstream head;
  head << "weights and kappa at n = " << n << "\n";
  return head.str() + render({"type", "weights", "kappa"}, rows);
}

}  // namespace qhsing
