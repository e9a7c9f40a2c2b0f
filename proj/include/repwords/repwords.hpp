#pragma once

// Umbrella header for the repwords library: exact fractional-power checking,
// Thue-Morse structure decompositions, pruned enumeration, power-free word
// families, and automaton growth bounds for binary words.

#include "repwords/bignat.hpp"
#include "repwords/construct.hpp"
#include "repwords/decompose.hpp"
#include "repwords/enumerate.hpp"
#include "repwords/growth.hpp"
#include "repwords/morphism.hpp"
#include "repwords/verify.hpp"
#include "repwords/word.hpp"
