#pragma once

// Partially labelled Dyck paths and two-car parking functions, with the Dyck
// area word, underlined area, dinv and pmaj.

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "polyo/polyomino.hpp"

namespace polyo {

using DyckAreaWord = std::vector<int>;

/// a_i = (y - x) at the start of the i-th north step.
DyckAreaWord dyck_area_word(const Path& path);
Path dyck_path_from_area_word(const DyckAreaWord& word);
/// Empty iff the path has equal north/east counts and never dips below y = x.
std::vector<std::string> validate_dyck_path(const Path& path);

/// x coordinate of every north step, bottom to top.
std::vector<int> north_step_columns(const Path& path);

/// Rows (1-based) whose north step is preceded by an east step.
std::vector<int> dyck_valleys(const Path& path);
/// Rows (1-based) whose north step is preceded by a north step.
std::vector<int> dyck_rises(const Path& path);

/// A Dyck path of size N whose north steps carry labels bottom to top; 0 is a
/// blank and may only sit on a valley.
struct PartiallyLabelledDyckPath {
  Path path;
  std::vector<int> labels;
  std::vector<int> decorated_rises;  // 1-based rows, sorted

  int size() const { return static_cast<int>(labels.size()); }
  int blanks() const;
  auto operator<=>(const PartiallyLabelledDyckPath&) const = default;
};

/// Labels in {1, 2}, strictly increasing up columns.
struct TwoCarParkingFunction {
  Path path;
  std::vector<int> labels;
  std::vector<int> decorated_rises;  // 1-based rows, sorted

  int ones() const;
  int twos() const;
  auto operator<=>(const TwoCarParkingFunction&) const = default;
};

std::vector<std::string> validate(const PartiallyLabelledDyckPath& p);
std::vector<std::string> validate(const TwoCarParkingFunction& f);

int underlined_area(const PartiallyLabelledDyckPath& p);
int pmaj(const PartiallyLabelledDyckPath& p);
/// The word written by the column-by-column multiset reading, before reversal.
std::vector<int> pmaj_reading_word(const PartiallyLabelledDyckPath& p);
int pldp_dinv(const PartiallyLabelledDyckPath& p);

struct Pf2Stats {
  int dinv = 0;
  int underlined_area = 0;
  auto operator<=>(const Pf2Stats&) const = default;
};
Pf2Stats pf2_stats(const TwoCarParkingFunction& f);

/// Number of label-2 rows on the main diagonal (a_i = 0).
int diagonal_twos(const TwoCarParkingFunction& f);

template <class Visitor>
void for_each_dyck_path(int size, Visitor&& visit);

/// PLDPs of size m+n+1 with m blanks, the given multiset of n+1 positive
/// labels, and k decorated rises. An empty content means labels 1..n+1.
std::vector<PartiallyLabelledDyckPath> enumerate_pldp(int m, int n, int k, std::vector<int> content = {});
std::vector<TwoCarParkingFunction> enumerate_pf2(int ones, int twos, int k);

// ---------------------------------------------------------------------------

namespace detail {

template <class Visitor>
void visit_dyck(Path& path, int norths, int easts, int size, Visitor& visit) {
  if (norths == size && easts == size) {
    visit(static_cast<const Path&>(path));
    return;
  }
  if (norths < size) {
    path.push_back(1);
    visit_dyck(path, norths + 1, easts, size, visit);
    path.pop_back();
  }
  if (easts < norths) {
    path.push_back(0);
    visit_dyck(path, norths, easts + 1, size, visit);
    path.pop_back();
  }
}

}  // namespace detail

template <class Visitor>
void for_each_dyck_path(int size, Visitor&& visit) {
  if (size < 0) return;
  Path path;
  path.reserve(static_cast<std::size_t>(2 * size));
  detail::visit_dyck(path, 0, 0, size, visit);
}

}  // namespace polyo
