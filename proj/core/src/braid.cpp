#include "knotamp/braid.hpp"

#include <cctype>

#include "knotamp/error.hpp"

namespace knotamp {

BraidWord parse_braid(const std::string& text) {
    BraidWord b;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_int = [&]() -> int {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) fail_parse("braid: expected number at offset " + std::to_string(start));
        return std::stoi(text.substr(start, i - start));
    };

    skip_ws();
    b.strands = read_int();
    if (b.strands < 1) fail_parse("braid: strand count must be >= 1");
    skip_ws();
    if (i >= text.size() || text[i] != ':') fail_parse("braid: expected ':' after strand count");
    ++i;

    skip_ws();
    while (i < text.size()) {
        char tok = text[i];
        if (tok != 's' && tok != 'v')
            fail_parse(std::string("braid: unknown token '") + tok + "'");
        ++i;
        int idx = read_int();
        if (idx < 1 || idx >= b.strands)
            fail_parse("braid: generator index " + std::to_string(idx) + " out of range for " +
                       std::to_string(b.strands) + " strands");
        LetterKind kind = (tok == 'v') ? LetterKind::virtual_swap : LetterKind::positive;
        if (i < text.size() && text[i] == '^') {
            if (tok != 's' || text.compare(i, 3, "^-1") != 0)
                fail_parse("braid: only s<i>^-1 is supported");
            kind = LetterKind::negative;
            i += 3;
        }
        b.letters.push_back({idx, kind});
        skip_ws();
    }
    return b;
}

std::string braid_str(const BraidWord& b) {
    std::string out = std::to_string(b.strands) + ":";
    for (const auto& l : b.letters) {
        out += " ";
        out += (l.kind == LetterKind::virtual_swap) ? "v" : "s";
        out += std::to_string(l.index);
        if (l.kind == LetterKind::negative) out += "^-1";
    }
    return out;
}

int exponent_sum(const BraidWord& b) {
    int s = 0;
    for (const auto& l : b.letters) {
        if (l.kind == LetterKind::positive) ++s;
        else if (l.kind == LetterKind::negative) --s;
    }
    return s;
}

MorseDiagram braid_to_morse(const BraidWord& b, bool close) {
    MorseDiagram d;
    const int n = b.strands;
    if (!close) d.initial_width = n;
    if (close) {
        // nested cups: after Cup(0)..Cup(n-1) the pairs are (i, 2n-1-i) with
        // braid strands at 0..n-1 and return arcs to their right
        for (int i = 0; i < n; ++i) d.events.push_back({EventKind::cup, i});
    }
    for (const auto& l : b.letters) {
        EventKind k = l.kind == LetterKind::positive    ? EventKind::cross_pos
                      : l.kind == LetterKind::negative ? EventKind::cross_neg
                                                       : EventKind::cross_virtual;
        d.events.push_back({k, l.index - 1});
    }
    if (close) {
        for (int i = n - 1; i >= 0; --i) d.events.push_back({EventKind::cap, i});
    }
    validate(d);
    return d;
}

}  // namespace knotamp
