#pragma once

#include "fullwiener/graph.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace fullwiener {

/// Cap types of the nanotubical fullerenes that maximise the Wiener index.
enum class FamilyKind { A, B, C1, C2, D1, D2 };

inline constexpr std::array<FamilyKind, 6> kAllFamilies = {
    FamilyKind::A, FamilyKind::B, FamilyKind::C1, FamilyKind::C2, FamilyKind::D1, FamilyKind::D2};

std::string_view to_string(FamilyKind kind);  // "a", "b", "c1", ...
std::optional<FamilyKind> parse_family(std::string_view text);

class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class KTooSmall : public FamilyError {
 public:
  using FamilyError::FamilyError;
};
class OrderNotInFamily : public FamilyError {
 public:
  using FamilyError::FamilyError;
};
class OddOrder : public FamilyError {
 public:
  using FamilyError::FamilyError;
};
class NonIntegerResult : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Whether a value comes from the closed form or from the table of small-order
/// corrections.
enum class Provenance { Formula, Exception };

std::string_view to_string(Provenance p);

struct FamilyValue {
  std::uint64_t value = 0;
  Provenance provenance = Provenance::Formula;

  bool operator==(const FamilyValue&) const = default;
};

/// (5,0)-nanotube of order 10k: a cap pentagon, k-1 rings of ten vertices, a
/// second cap pentagon. Top cap spokes land on even ring positions.
FullereneGraph construct_type_a(unsigned k);

bool in_family(FamilyKind kind, std::uint64_t n);

FamilyValue wiener_formula(FamilyKind kind, std::uint64_t n);
FamilyValue complexity_formula(FamilyKind kind, std::uint64_t n);
FamilyValue diameter_formula(FamilyKind kind, std::uint64_t n);

/// Kinds whose order sequence contains n, in enum order. Throws OddOrder.
std::vector<FamilyKind> classify_order(std::uint64_t n);

/// Among classify_order(n), the kind with the largest Wiener formula value.
std::optional<FamilyKind> best_family(std::uint64_t n);

struct FamilyRow {
  std::uint64_t n = 0;
  FamilyKind kind = FamilyKind::A;
  std::uint64_t wiener = 0;
  std::uint64_t complexity = 0;
  std::uint64_t diameter = 0;
  Provenance provenance = Provenance::Formula;  // Exception if any column is
};

FamilyRow family_row(FamilyKind kind, std::uint64_t n);

/// One row per (kind, admissible n <= max_n), sorted by n then kind.
std::vector<FamilyRow> family_table(std::uint64_t max_n);

}  // namespace fullwiener
