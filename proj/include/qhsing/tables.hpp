#pragma once

#include <optional>
#include <string>
#include <utility>

#include "qhsing/poly.hpp"

namespace qhsing {

enum class TableKind { Simple, Parabolic, Weights };

/// Regenerate one of the reference tables from first principles: each row
/// instantiates the normal form, solves for the weights and derives the
/// characteristic polynomial / sphere columns or the weights/kappa
/// columns. Nothing is read from stored answers.
///   Simple    -> A_k, D_k, E6, E7, E8 at the given n
///   Parabolic -> P8, X9, J10 at the given n
///   Weights   -> weight vectors and kappa for every family
/// k_range bounds the k parameter for A (k >= 1) and D (k >= 4).
std::string emit_tables(TableKind kind, int n,
                        std::optional<std::pair<int, int>> k_range);

}  // namespace qhsing
