#pragma once

#include <string>
#include <vector>

#include "knotamp/morse.hpp"

namespace knotamp {

enum class LetterKind { positive, negative, virtual_swap };

struct BraidLetter {
    int index;  // generator index, 1-based: sigma_i twists strands i, i+1
    LetterKind kind;
};

struct BraidWord {
    int strands = 1;
    std::vector<BraidLetter> letters;
};

// grammar: "n: s1 s2^-1 v1 ..."; an empty letter list ("1:") is allowed
BraidWord parse_braid(const std::string& text);
std::string braid_str(const BraidWord& b);

// #positive - #negative; virtual letters contribute 0
int exponent_sum(const BraidWord& b);

// open: n parallel strands with crossing events.
// closed: standard closure, nested non-crossing return arcs to the right.
MorseDiagram braid_to_morse(const BraidWord& b, bool close);

}  // namespace knotamp
