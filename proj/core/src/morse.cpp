#include "knotamp/morse.hpp"

#include <algorithm>
#include <cctype>

#include "internal/seg_graph.hpp"
#include "knotamp/error.hpp"

namespace knotamp {

using internal::SegGraph;
using internal::UnionFind;

std::vector<int> validate(const MorseDiagram& d) {
    if (d.initial_width < 0) fail_pre("diagram: negative initial width");
    std::vector<int> widths;
    widths.reserve(d.events.size());
    int w = d.initial_width;
    for (std::size_t i = 0; i < d.events.size(); ++i) {
        const MorseEvent& e = d.events[i];
        if (e.pos < 0) fail_pre("diagram: negative position at event " + std::to_string(i));
        if (e.kind == EventKind::cup) {
            if (e.pos > w) fail_pre("diagram: cup beyond width at event " + std::to_string(i));
            w += 2;
        } else if (e.kind == EventKind::cap) {
            if (e.pos + 2 > w) fail_pre("diagram: cap beyond width at event " + std::to_string(i));
            w -= 2;
        } else {
            if (e.pos + 2 > w) fail_pre("diagram: crossing off edge at event " + std::to_string(i));
        }
        if (w < 0) fail_pre("diagram: negative width at event " + std::to_string(i));
        widths.push_back(w);
    }
    return widths;
}

bool is_closed(const MorseDiagram& d) {
    if (d.initial_width != 0) return false;
    auto widths = validate(d);
    return widths.empty() ? true : widths.back() == 0;
}

std::string morse_str(const MorseDiagram& d) {
    std::string out;
    for (const auto& e : d.events) {
        if (!out.empty()) out += ",";
        switch (e.kind) {
            case EventKind::cup: out += "U"; break;
            case EventKind::cap: out += "A"; break;
            case EventKind::cross_pos: out += "X"; break;
            case EventKind::cross_neg: out += "Y"; break;
            case EventKind::cross_virtual: out += "V"; break;
        }
        out += std::to_string(e.pos);
    }
    return out;
}

MorseDiagram parse_morse(const std::string& text) {
    MorseDiagram d;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        char k = text[i++];
        EventKind kind;
        switch (k) {
            case 'U': kind = EventKind::cup; break;
            case 'A': kind = EventKind::cap; break;
            case 'X': kind = EventKind::cross_pos; break;
            case 'Y': kind = EventKind::cross_neg; break;
            case 'V': kind = EventKind::cross_virtual; break;
            default: fail_parse(std::string("morse word: unknown event '") + k + "'");
        }
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) fail_parse("morse word: missing position after event letter");
        d.events.push_back({kind, std::stoi(text.substr(start, i - start))});
        skip_ws();
        if (i < text.size()) {
            if (text[i] != ',') fail_parse("morse word: expected ','");
            ++i;
            skip_ws();
        }
    }
    validate(d);
    return d;
}

DiagramStats analyze(const MorseDiagram& d) {
    SegGraph g(d);
    DiagramStats st;
    st.max_width = g.max_width;
    const int ns = static_cast<int>(g.segs.size());

    // Oriented traversal: walk each component once, assigning each segment a
    // direction relative to that component's orientation.
    std::vector<int> dir(ns, 0);
    std::vector<int> comp(ns, -1);
    int ncomp = 0;
    for (int start = 0; start < ns; ++start) {
        if (comp[start] != -1) continue;
        int seg = start;
        bool down = true;
        do {
            comp[seg] = ncomp;
            dir[seg] = down ? 1 : -1;
            if (down) {
                int ev = g.segs[seg].to_event, port = g.segs[seg].to_port;
                switch (g.kinds[ev]) {
                    case EventKind::cap:
                        seg = g.in_segs[ev][1 - port];
                        down = false;
                        break;
                    default:  // crossings: path goes in-left <-> out-right
                        seg = g.out_segs[ev][1 - port];
                        down = true;
                        break;
                }
            } else {
                int ev = g.segs[seg].from_event, port = g.segs[seg].from_port;
                switch (g.kinds[ev]) {
                    case EventKind::cup:
                        seg = g.out_segs[ev][1 - port];
                        down = true;
                        break;
                    default:
                        seg = g.in_segs[ev][1 - port];
                        down = false;
                        break;
                }
            }
        } while (seg != start);
        ++ncomp;
    }
    st.components = ncomp;
    st.segment_component = comp;

    // Crossing signs and Seifert smoothing both need the two directions
    // through each crossing.
    UnionFind seifert(ns);
    for (std::size_t ev = 0; ev < g.kinds.size(); ++ev) {
        switch (g.kinds[ev]) {
            case EventKind::cup:
                seifert.join(g.out_segs[ev][0], g.out_segs[ev][1]);
                break;
            case EventKind::cap:
                seifert.join(g.in_segs[ev][0], g.in_segs[ev][1]);
                break;
            case EventKind::cross_virtual:
                ++st.virtual_crossings;
                seifert.join(g.in_segs[ev][0], g.out_segs[ev][1]);
                seifert.join(g.in_segs[ev][1], g.out_segs[ev][0]);
                break;
            default: {
                ++st.crossings;
                int d1 = dir[g.in_segs[ev][0]];
                int d2 = dir[g.in_segs[ev][1]];
                int base = (g.kinds[ev] == EventKind::cross_pos) ? 1 : -1;
                int sign = base * d1 * d2;
                (sign > 0 ? st.positive : st.negative)++;
                if (d1 * d2 > 0) {
                    // parallel strands: oriented smoothing passes straight through
                    seifert.join(g.in_segs[ev][0], g.out_segs[ev][0]);
                    seifert.join(g.in_segs[ev][1], g.out_segs[ev][1]);
                } else {
                    seifert.join(g.in_segs[ev][0], g.in_segs[ev][1]);
                    seifert.join(g.out_segs[ev][0], g.out_segs[ev][1]);
                }
                break;
            }
        }
    }
    st.writhe = st.positive - st.negative;
    st.seifert_circles = ns == 0 ? 0 : seifert.roots();
    return st;
}

int writhe(const MorseDiagram& d) { return analyze(d).writhe; }
int components(const MorseDiagram& d) { return analyze(d).components; }
int seifert_count(const MorseDiagram& d) { return analyze(d).seifert_circles; }

bool has_virtual(const MorseDiagram& d) {
    return std::any_of(d.events.begin(), d.events.end(),
                       [](const MorseEvent& e) { return e.kind == EventKind::cross_virtual; });
}

MorseDiagram mirror(const MorseDiagram& d) {
    MorseDiagram m = d;
    for (auto& e : m.events) {
        if (e.kind == EventKind::cross_pos) e.kind = EventKind::cross_neg;
        else if (e.kind == EventKind::cross_neg) e.kind = EventKind::cross_pos;
    }
    return m;
}

}  // namespace knotamp
