#pragma once

// Internal arc-segment decomposition shared by diagram combinatorics and the
// skein oracle. Not installed.

#include <array>
#include <numeric>
#include <vector>

#include "knotamp/error.hpp"
#include "knotamp/morse.hpp"

namespace knotamp::internal {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void join(int a, int b) { parent[find(a)] = find(b); }
    int roots() {
        int c = 0;
        for (std::size_t i = 0; i < parent.size(); ++i)
            if (find(static_cast<int>(i)) == static_cast<int>(i)) ++c;
        return c;
    }
    void reset() { std::iota(parent.begin(), parent.end(), 0); }
};

// Segment endpoints: "from" is the upper end (an event out-port), "to" the
// lower end (an in-port). Ports are 0 = left, 1 = right.
struct SegGraph {
    struct Seg {
        int from_event = -1, from_port = -1;
        int to_event = -1, to_port = -1;
    };
    std::vector<Seg> segs;
    std::vector<std::array<int, 2>> in_segs, out_segs;
    std::vector<EventKind> kinds;
    int max_width = 0;

    explicit SegGraph(const MorseDiagram& d) {
        if (!is_closed(d)) fail_pre("diagram analysis requires a closed diagram");
        const int ne = static_cast<int>(d.events.size());
        in_segs.assign(ne, {-1, -1});
        out_segs.assign(ne, {-1, -1});
        kinds.reserve(ne);
        std::vector<int> dangling;
        for (int e = 0; e < ne; ++e) {
            const MorseEvent& ev = d.events[e];
            kinds.push_back(ev.kind);
            switch (ev.kind) {
                case EventKind::cup: {
                    int s0 = new_seg(e, 0), s1 = new_seg(e, 1);
                    dangling.insert(dangling.begin() + ev.pos, {s0, s1});
                    break;
                }
                case EventKind::cap: {
                    close_seg(dangling[ev.pos], e, 0);
                    close_seg(dangling[ev.pos + 1], e, 1);
                    dangling.erase(dangling.begin() + ev.pos, dangling.begin() + ev.pos + 2);
                    break;
                }
                default: {
                    close_seg(dangling[ev.pos], e, 0);
                    close_seg(dangling[ev.pos + 1], e, 1);
                    dangling[ev.pos] = new_seg(e, 0);
                    dangling[ev.pos + 1] = new_seg(e, 1);
                    break;
                }
            }
            max_width = std::max(max_width, static_cast<int>(dangling.size()));
        }
    }

    int new_seg(int ev, int port) {
        Seg s;
        s.from_event = ev;
        s.from_port = port;
        segs.push_back(s);
        out_segs[ev][port] = static_cast<int>(segs.size() - 1);
        return static_cast<int>(segs.size() - 1);
    }
    void close_seg(int seg, int ev, int port) {
        segs[seg].to_event = ev;
        segs[seg].to_port = port;
        in_segs[ev][port] = seg;
    }
};

}  // namespace knotamp::internal
