#pragma once

// area, underlined area, dinv, bounce and underlined bounce on (decorated)
// reduced polyominoes.

#include <utility>
#include <vector>

#include "polyo/polyomino.hpp"

namespace polyo {

int area(const AreaWord& word);
/// Letter sum over undecorated positions. Throws InvalidObject if a decoration
/// is not a rise.
int area_dec(const AreaWord& word, const std::vector<int>& rise_decorations);
/// Pairs i < j with word[i] = succ(word[j]).
int dinv(const AreaWord& word);

/// Number of unit cells between the paths, counted column by column.
int cell_area(const ReducedPolyomino& p);

struct BounceStep {
  bool north = false;
  Letter label;
};

struct BouncePath {
  std::vector<BounceStep> steps;

  /// run_lengths()[c] = number of steps labelled with letter code c. Entry 0
  /// (the vertical 0 run) may be zero; later entries are positive.
  std::vector<int> run_lengths() const;
  /// Lattice points where the direction changes, plus both endpoints.
  std::vector<std::pair<int, int>> corners() const;
};

BouncePath bounce_path(const ReducedPolyomino& p);

/// For each row y, the letter labelling the (unique) vertical bounce step in it.
std::vector<Letter> bounce_row_labels(const ReducedPolyomino& p);

int bounce(const ReducedPolyomino& p);
/// Excludes the labels of rows holding a decorated red valley. Throws
/// InvalidObject if a decoration is not a red valley.
int bounce_dec(const ReducedPolyomino& p, const std::vector<int>& valley_decorations);

/// Number of 0 labels on the bounce path (= s - 1 for the bullet families).
int zero_count_bullet(const ReducedPolyomino& p);
/// Number of 0 letters in the area word (= s for the star families).
int zero_count_star(const AreaWord& word);

}  // namespace polyo
