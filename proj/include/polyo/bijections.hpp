#pragma once

// The three bijections: zeta (valley-decorated m x n polyominoes to
// rise-decorated n x m ones, (area, bounce_dec) -> (dinv, area_dec)), two-car
// parking functions <-> rise-decorated polyominoes, and fully rise-decorated
// partially labelled Dyck paths <-> labelled polyominoes.

#include <vector>

#include "polyo/dyck.hpp"
#include "polyo/polyomino.hpp"

namespace polyo {

/// Per letter code c, the word restricted to {c, c+1} in reading order.
/// interlacings(w)[0] includes the leading artificial 0.
std::vector<AreaWord> interlacings(const AreaWord& word);

/// Inverse of interlacings: rebuild the word level by level, inserting each
/// block of c+1 letters right after the c it follows.
AreaWord assemble_from_interlacings(const std::vector<AreaWord>& levels);

DecoratedPolyomino zeta(const DecoratedPolyomino& p);
DecoratedPolyomino zeta_inverse(const DecoratedPolyomino& q);

/// Area word with the 1-labelled letters barred and a 0 prepended; n ones and
/// m twos give an m x n polyomino.
DecoratedPolyomino pf2_to_polyomino(const TwoCarParkingFunction& f);
TwoCarParkingFunction pf2_from_polyomino(const DecoratedPolyomino& q);

/// Requires every rise decorated and every valley blank.
LabelledPolyomino pldp_to_labelled_polyomino(const PartiallyLabelledDyckPath& p);
PartiallyLabelledDyckPath pldp_from_labelled_polyomino(const LabelledPolyomino& q);

int polyomino_pmaj(const LabelledPolyomino& q);
int polyomino_dinv(const LabelledPolyomino& q);

}  // namespace polyo
