#pragma once

#include <nlohmann/json.hpp>

#include "klrbraid/klr.hpp"
#include "klrbraid/klrchar.hpp"
#include "klrbraid/scalars.hpp"
#include "klrbraid/uqfull.hpp"

namespace klrbraid {

using nlohmann::json;

// Big integers and rationals are written as decimal strings; letters of
// words, sequences and reduced words are 1-based.
json to_json(const LaurentPoly& p);  // [[exp, "coeff"], ...]
json to_json(const RationalQ& x);    // {"num": [...], "den": [...]}
json to_json(const FWordElem& x);    // {"terms": [{"word": [...], "coeff": ...}]}
json to_json(const TriangularElem& x);
json to_json(const KLRAlgebra& r, const KLRElem& x);  // {"beta": [...], "terms": [{"nu", "w", "a", "coeff"}]}
json to_json(const GradedSeries& s);
json to_json(const CharVector& c);

LaurentPoly laurent_from_json(const json& j);
RationalQ rational_from_json(const json& j);
FWordElem fword_from_json(const json& j);
KLRElem klr_from_json(const KLRAlgebra& r, const json& j);

json word_json(const Word& w);
Word word_from_json(const json& j);

}  // namespace klrbraid
