#include "fullwiener/families.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <utility>

namespace fullwiener {

namespace {

// W(n) = (n^3 + a2 n^2 + a1 n + a0) / den, valid from n = min_n on.
struct WienerPolynomial {
  std::int64_t a2, a1, a0, den;
  std::uint64_t min_n;
};

constexpr WienerPolynomial polynomial(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::A: return {0, 1175, -20100, 30, 50};
    case FamilyKind::B: return {27, 156, -4352, 36, 26};
    case FamilyKind::C1: return {24, 336, -7128, 36, 36};
    case FamilyKind::C2: return {24, 336, -7192, 36, 52};
    case FamilyKind::D1: return {15, 1068, -22788, 36, 54};
    case FamilyKind::D2: return {15, 1068, -22756, 36, 58};
  }
  return {0, 0, 0, 1, 0};
}

// Orders n = 60k + base (k >= 0) with C_W = cw_k k + cw_0 and D = d_k k + d_0.
struct ResidueRow {
  std::uint64_t base;
  std::uint64_t cw_k, cw_0;
  std::uint64_t d_k, d_0;
};

using ResidueRows = std::array<ResidueRow, 4>;

constexpr ResidueRows kC1Rows{{{36, 15, 9, 10, 7}, {48, 15, 12, 10, 9}, {72, 15, 18, 10, 13}, {84, 15, 21, 10, 15}}};
constexpr ResidueRows kC2Rows{{{52, 15, 12, 10, 10}, {64, 15, 15, 10, 12}, {76, 15, 18, 10, 14}, {88, 15, 21, 10, 16}}};
constexpr ResidueRows kD1Rows{{{54, 25, 27, 10, 10}, {66, 25, 32, 10, 12}, {78, 25, 37, 10, 14}, {102, 25, 47, 10, 18}}};
constexpr ResidueRows kD2Rows{{{58, 15, 35, 10, 11}, {82, 15, 41, 10, 15}, {94, 15, 44, 10, 17}, {106, 15, 47, 10, 19}}};

const ResidueRows* residue_rows(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::C1: return &kC1Rows;
    case FamilyKind::C2: return &kC2Rows;
    case FamilyKind::D1: return &kD1Rows;
    case FamilyKind::D2: return &kD2Rows;
    default: return nullptr;
  }
}

std::optional<std::pair<ResidueRow, std::uint64_t>> residue_match(FamilyKind kind, std::uint64_t n) {
  const auto* rows = residue_rows(kind);
  if (rows == nullptr) return std::nullopt;
  for (const auto& row : *rows) {
    if (n >= row.base && (n - row.base) % 60 == 0) return std::pair{row, (n - row.base) / 60};
  }
  return std::nullopt;
}

struct ExceptionEntry {
  std::optional<std::uint64_t> wiener, complexity, diameter;
};

// Small-order values where the closed forms do not apply, plus the two
// d-family members (42, 46) below the residue rows.
const std::map<std::pair<FamilyKind, std::uint64_t>, ExceptionEntry>& exceptions() {
  static const std::map<std::pair<FamilyKind, std::uint64_t>, ExceptionEntry> table = {
      {{FamilyKind::A, 20}, {500, 1, 5}},
      {{FamilyKind::A, 30}, {1435, 3, 6}},
      {{FamilyKind::A, 40}, {3035, 4, 8}},
      {{FamilyKind::B, 26}, {std::nullopt, 2, std::nullopt}},
      {{FamilyKind::C1, 36}, {std::nullopt, 8, std::nullopt}},
      {{FamilyKind::C2, 52}, {std::nullopt, 13, std::nullopt}},
      {{FamilyKind::D1, 42}, {3415, 19, 8}},
      {{FamilyKind::D1, 54}, {std::nullopt, 22, std::nullopt}},
      {{FamilyKind::D1, 66}, {std::nullopt, 30, std::nullopt}},
      {{FamilyKind::D2, 46}, {4322, 19, 9}},
      {{FamilyKind::D2, 58}, {std::nullopt, 25, std::nullopt}},
      {{FamilyKind::D2, 82}, {std::nullopt, 38, std::nullopt}},
  };
  return table;
}

const ExceptionEntry* find_exception(FamilyKind kind, std::uint64_t n) {
  const auto& table = exceptions();
  const auto it = table.find({kind, n});
  return it == table.end() ? nullptr : &it->second;
}

void require_member(FamilyKind kind, std::uint64_t n) {
  if (!in_family(kind, n)) {
    throw OrderNotInFamily("order " + std::to_string(n) + " is not in family " +
                           std::string(to_string(kind)));
  }
}

std::optional<FamilyValue> exception_value(std::optional<std::uint64_t> ExceptionEntry::*field,
                                           FamilyKind kind, std::uint64_t n) {
  const auto* e = find_exception(kind, n);
  if (e == nullptr || !(e->*field)) return std::nullopt;
  return FamilyValue{*(e->*field), Provenance::Exception};
}

}  // namespace

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::A: return "a";
    case FamilyKind::B: return "b";
    case FamilyKind::C1: return "c1";
    case FamilyKind::C2: return "c2";
    case FamilyKind::D1: return "d1";
    case FamilyKind::D2: return "d2";
  }
  return "?";
}

std::optional<FamilyKind> parse_family(std::string_view text) {
  for (auto kind : kAllFamilies) {
    const auto name = to_string(kind);
    if (text.size() == name.size() &&
        std::equal(text.begin(), text.end(), name.begin(),
                   [](char a, char b) { return std::tolower(static_cast<unsigned char>(a)) == b; })) {
      return kind;
    }
  }
  return std::nullopt;
}

std::string_view to_string(Provenance p) { return p == Provenance::Formula ? "formula" : "exception"; }

FullereneGraph construct_type_a(unsigned k) {
  if (k < 2) throw KTooSmall("type-a nanotubes need k >= 2, got " + std::to_string(k));
  const unsigned rings = k - 1;
  const Vertex n = 10 * k;
  auto top = [](unsigned i) { return static_cast<Vertex>(i % 5); };
  auto ring = [](unsigned r, unsigned j) { return static_cast<Vertex>(5 + 10 * (r - 1) + j % 10); };
  auto bottom = [n](unsigned i) { return static_cast<Vertex>(n - 5 + i % 5); };
  const unsigned bottom_parity = rings % 2;

  // Drawn as concentric cycles: top pentagon innermost, bottom pentagon
  // outermost. "right" is index + 1. Clockwise order is (up, right, left) for
  // a vertex whose third edge points inward and (down, left, right) otherwise.
  std::vector<Rotation> rot(n);
  for (unsigned i = 0; i < 5; ++i) {
    rot[top(i)] = {ring(1, 2 * i), top(i + 4), top(i + 1)};
    rot[bottom(i)] = {ring(rings, 2 * i + bottom_parity), bottom(i + 1), bottom(i + 4)};
  }
  for (unsigned r = 1; r <= rings; ++r) {
    const unsigned up_parity = (r + 1) % 2;
    for (unsigned j = 0; j < 10; ++j) {
      const Vertex right = ring(r, j + 1);
      const Vertex left = ring(r, j + 9);
      if (j % 2 == up_parity) {
        const Vertex up = r == 1 ? top(j / 2) : ring(r - 1, j);
        rot[ring(r, j)] = {up, right, left};
      } else {
        const Vertex down = r == rings ? bottom((j - bottom_parity) / 2) : ring(r + 1, j);
        rot[ring(r, j)] = {down, left, right};
      }
    }
  }
  return FullereneGraph::from_rotation(std::move(rot), "type-a k=" + std::to_string(k));
}

bool in_family(FamilyKind kind, std::uint64_t n) {
  switch (kind) {
    case FamilyKind::A: return n >= 20 && n % 10 == 0;
    case FamilyKind::B: return n >= 26 && (n + 4) % 6 == 0;
    default: break;
  }
  if (residue_match(kind, n)) return true;
  // d-family members below the residue rows.
  return find_exception(kind, n) != nullptr;
}

FamilyValue wiener_formula(FamilyKind kind, std::uint64_t n) {
  require_member(kind, n);
  if (auto v = exception_value(&ExceptionEntry::wiener, kind, n)) return *v;
  const auto p = polynomial(kind);
  if (n < p.min_n) {
    throw NonIntegerResult("no Wiener value for family " + std::string(to_string(kind)) +
                           " at order " + std::to_string(n));
  }
  const auto x = static_cast<__int128>(n);
  const __int128 num = x * x * x + p.a2 * x * x + p.a1 * x + p.a0;
  if (num % p.den != 0) {
    throw NonIntegerResult("Wiener polynomial of family " + std::string(to_string(kind)) +
                           " is not divisible by " + std::to_string(p.den) + " at n = " +
                           std::to_string(n));
  }
  return {static_cast<std::uint64_t>(num / p.den), Provenance::Formula};
}

FamilyValue complexity_formula(FamilyKind kind, std::uint64_t n) {
  require_member(kind, n);
  if (auto v = exception_value(&ExceptionEntry::complexity, kind, n)) return *v;
  switch (kind) {
    case FamilyKind::A: return {n / 10, Provenance::Formula};
    case FamilyKind::B: return {((n + 4) / 6 + 1) / 2, Provenance::Formula};
    default: break;
  }
  const auto [row, k] = *residue_match(kind, n);
  return {row.cw_k * k + row.cw_0, Provenance::Formula};
}

FamilyValue diameter_formula(FamilyKind kind, std::uint64_t n) {
  require_member(kind, n);
  if (auto v = exception_value(&ExceptionEntry::diameter, kind, n)) return *v;
  switch (kind) {
    case FamilyKind::A: return {2 * (n / 10) - 1, Provenance::Formula};
    case FamilyKind::B: return {(n + 4) / 6 + 1, Provenance::Formula};
    default: break;
  }
  const auto [row, k] = *residue_match(kind, n);
  return {row.d_k * k + row.d_0, Provenance::Formula};
}

std::vector<FamilyKind> classify_order(std::uint64_t n) {
  if (n % 2 != 0) throw OddOrder("order " + std::to_string(n) + " is odd");
  std::vector<FamilyKind> kinds;
  for (auto kind : kAllFamilies) {
    if (in_family(kind, n)) kinds.push_back(kind);
  }
  return kinds;
}

std::optional<FamilyKind> best_family(std::uint64_t n) {
  std::optional<FamilyKind> best;
  std::uint64_t best_w = 0;
  for (auto kind : classify_order(n)) {
    const auto w = wiener_formula(kind, n).value;
    if (best && w == best_w) {
      throw std::logic_error("families " + std::string(to_string(*best)) + " and " +
                             std::string(to_string(kind)) + " tie at order " + std::to_string(n));
    }
    if (!best || w > best_w) {
      best = kind;
      best_w = w;
    }
  }
  return best;
}

FamilyRow family_row(FamilyKind kind, std::uint64_t n) {
  const auto w = wiener_formula(kind, n);
  const auto c = complexity_formula(kind, n);
  const auto d = diameter_formula(kind, n);
  FamilyRow row{n, kind, w.value, c.value, d.value, Provenance::Formula};
  if (w.provenance == Provenance::Exception || c.provenance == Provenance::Exception ||
      d.provenance == Provenance::Exception) {
    row.provenance = Provenance::Exception;
  }
  return row;
}

std::vector<FamilyRow> family_table(std::uint64_t max_n) {
  std::vector<FamilyRow> rows;
  for (std::uint64_t n = kMinFullereneOrder; n <= max_n; n += 2) {
    for (auto kind : classify_order(n)) rows.push_back(family_row(kind, n));
  }
  return rows;
}

}  // namespace fullwiener
