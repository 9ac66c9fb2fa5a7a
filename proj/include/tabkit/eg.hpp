#pragma once

#include "tabkit/tableaux.hpp"

namespace tabkit {

struct EgReverseOutcome {
    DecreasingTableau tableau;
    int ejected = 0;
};

/// Classical Edelman-Greene reverse row insertion, valid when row_word(P)
/// is reduced: remove the path value at s, then walking upward either leave
/// a row untouched (its value has its predecessor alongside) or replace the
/// path value by the one ejected from below.
EgReverseOutcome eg_reverse_insert(const DecreasingTableau& p, Cell s);

/// Jeu-de-taquin evacuation without relabeling: slides each value class
/// outward past larger values, smallest class first; values already settled
/// act as walls.  Sends semistandard to reverse semistandard tableaux with
/// Knuth-equivalent (reversed) reading words.
ReverseSetValuedTableau evacuate_ssyt(const SetValuedTableau& q);

/// Mirror procedure (largest class first, sliding inward); inverse of
/// evacuate_ssyt.
SetValuedTableau evacuate_rssyt(const ReverseSetValuedTableau& q);

}  // namespace tabkit
