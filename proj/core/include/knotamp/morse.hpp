#pragma once

#include <string>
#include <vector>

namespace knotamp {

// Cup creates two adjacent strands, Cap annihilates two, crossings swap two.
// pos is the leftmost strand affected, 0-based in the current slice.
enum class EventKind { cup, cap, cross_pos, cross_neg, cross_virtual };

inline bool is_crossing(EventKind k) {
    return k == EventKind::cross_pos || k == EventKind::cross_neg ||
           k == EventKind::cross_virtual;
}
inline bool is_classical_crossing(EventKind k) {
    return k == EventKind::cross_pos || k == EventKind::cross_neg;
}

struct MorseEvent {
    EventKind kind;
    int pos;
};

inline bool operator==(const MorseEvent& a, const MorseEvent& b) {
    return a.kind == b.kind && a.pos == b.pos;
}

struct MorseDiagram {
    int initial_width = 0;  // 0 for closed diagrams
    std::vector<MorseEvent> events;
};

inline bool operator==(const MorseDiagram& a, const MorseDiagram& b) {
    return a.initial_width == b.initial_width && a.events == b.events;
}

// Per-event running width (width after the event). Throws on negative width,
// crossings off the edge, or width bookkeeping errors.
std::vector<int> validate(const MorseDiagram& d);
bool is_closed(const MorseDiagram& d);

// word form: comma-separated U<i> (cup), A<i> (cap), X<i> (positive),
// Y<i> (negative), V<i> (virtual); circle = "U0,A0"
std::string morse_str(const MorseDiagram& d);
MorseDiagram parse_morse(const std::string& text);

// Arc-level combinatorics of a closed diagram. Segments are maximal strand
// pieces between events; each component gets the orientation of its first
// traversal and every segment a direction (+1 down, -1 up) in that
// orientation. Crossing signs come from the event kind and the two strand
// directions, so they are stable under re-slicing isotopies.
struct DiagramStats {
    int components = 0;
    int crossings = 0;  // classical only
    int virtual_crossings = 0;
    int positive = 0;  // oriented sign counts
    int negative = 0;
    int writhe = 0;
    int seifert_circles = 0;
    int max_width = 0;
    std::vector<int> segment_component;  // component label per segment
};

DiagramStats analyze(const MorseDiagram& d);

int writhe(const MorseDiagram& d);
int components(const MorseDiagram& d);
int seifert_count(const MorseDiagram& d);
bool has_virtual(const MorseDiagram& d);

// swap crossing signs
MorseDiagram mirror(const MorseDiagram& d);

}  // namespace knotamp
