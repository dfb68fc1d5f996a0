#include "dirdiam/search.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <queue>

namespace dirdiam {

namespace {

using HeapEntry = std::pair<Distance, Vertex>;

void heap_push(std::vector<HeapEntry> &heap, HeapEntry e) {
    heap.push_back(e);
    std::push_heap(heap.begin(), heap.end(), std::greater<>());
}

HeapEntry heap_pop(std::vector<HeapEntry> &heap) {
    std::pop_heap(heap.begin(), heap.end(), std::greater<>());
    HeapEntry e = heap.back();
    heap.pop_back();
    return e;
}

void relax(SearchWorkspace &ws, Vertex v, Distance d) {
    if (d < ws.dist[v]) {
        if (ws.dist[v] == kInfinity) {
            ws.touched.push_back(v);
        }
        ws.dist[v] = d;
        heap_push(ws.heap, {d, v});
    }
}

// Settles vertices in (distance, id) order until `stop` says so. Calls
// visit(v, d) for each settled vertex. Returns true when the heap ran dry.
template <class Stop, class Visit>
bool run_dijkstra(const DirectedGraph &g, Vertex source, Direction dir, SearchWorkspace &ws,
                  Stop stop, Visit visit) {
    ws.ensure(g.num_vertices());
    ws.reset();
    relax(ws, source, 0);
    while (!ws.heap.empty()) {
        HeapEntry top = ws.heap.front();
        if (ws.settled[top.second] || top.first != ws.dist[top.second]) {
            heap_pop(ws.heap);
            continue;
        }
        if (stop(top.first)) {
            return false;
        }
        heap_pop(ws.heap);
        Vertex u = top.second;
        ws.settled[u] = 1;
        visit(u, top.first);
        for (const Arc &a : g.arcs(u, dir)) {
            if (!ws.settled[a.head]) {
                relax(ws, a.head, saturating_add(top.first, a.weight));
            }
        }
    }
    return true;
}

std::vector<Distance> zero_one_bfs(const DirectedGraph &g, Vertex source, Direction dir) {
    std::vector<Distance> dist(g.num_vertices(), kInfinity);
    std::deque<Vertex> dq;
    dist[source] = 0;
    dq.push_back(source);
    while (!dq.empty()) {
        Vertex u = dq.front();
        dq.pop_front();
        for (const Arc &a : g.arcs(u, dir)) {
            Distance nd = dist[u] + a.weight;
            if (nd < dist[a.head]) {
                dist[a.head] = nd;
                if (a.weight == 0) {
                    dq.push_front(a.head);
                } else {
                    dq.push_back(a.head);
                }
            }
        }
    }
    return dist;
}

} // namespace

std::vector<Distance> sssp(const DirectedGraph &g, Vertex source, Direction dir) {
    if (g.zero_one_weights()) {
        return zero_one_bfs(g, source, dir);
    }
    std::vector<Distance> dist(g.num_vertices(), kInfinity);
    std::vector<HeapEntry> heap;
    dist[source] = 0;
    heap_push(heap, {0, source});
    while (!heap.empty()) {
        auto [d, u] = heap_pop(heap);
        if (d != dist[u]) {
            continue;
        }
        for (const Arc &a : g.arcs(u, dir)) {
            Distance nd = saturating_add(d, a.weight);
            if (nd < dist[a.head]) {
                dist[a.head] = nd;
                heap_push(heap, {nd, a.head});
            }
        }
    }
    return dist;
}

PartialSearchResult partial_search(const DirectedGraph &g, Vertex source, Direction dir,
                                   std::size_t budget, SearchWorkspace *ws) {
    SearchWorkspace local;
    SearchWorkspace &w = ws != nullptr ? *ws : local;
    PartialSearchResult res;
    res.exhausted = run_dijkstra(
        g, source, dir, w, [&](Distance) { return res.exact.size() >= budget; },
        [&](Vertex v, Distance d) { res.exact.push_back({v, d}); });
    res.visited_count = res.exact.size();
    for (Vertex v : w.touched) {
        if (!w.settled[v]) {
            res.frontier.push_back({v, w.dist[v]});
        }
    }
    std::sort(res.frontier.begin(), res.frontier.end(),
              [](const VertexDistance &a, const VertexDistance &b) { return a.vertex < b.vertex; });
    return res;
}

std::vector<VertexDistance> plus_extension(const DirectedGraph &g,
                                           const std::vector<VertexDistance> &core,
                                           Direction dir, SearchWorkspace *ws) {
    SearchWorkspace local;
    SearchWorkspace &w = ws != nullptr ? *ws : local;
    w.ensure(g.num_vertices());
    w.reset();
    // settled: 1 marks the core, 2 a reached outside vertex whose bound is in dist.
    for (const VertexDistance &c : core) {
        if (!w.settled[c.vertex]) {
            w.touched.push_back(c.vertex);
        }
        w.settled[c.vertex] = 1;
    }
    std::vector<Vertex> outside;
    for (const VertexDistance &c : core) {
        for (const Arc &a : g.arcs(c.vertex, dir)) {
            if (w.settled[a.head] == 1) {
                continue;
            }
            Distance nd = saturating_add(c.distance, a.weight);
            if (w.settled[a.head] == 0) {
                w.settled[a.head] = 2;
                w.touched.push_back(a.head);
                outside.push_back(a.head);
            }
            w.dist[a.head] = std::min(w.dist[a.head], nd);
        }
    }
    std::sort(outside.begin(), outside.end());
    std::vector<VertexDistance> out;
    out.reserve(outside.size());
    for (Vertex v : outside) {
        out.push_back({v, w.dist[v]});
    }
    w.reset();
    return out;
}

BallResult ball(const DirectedGraph &g, Vertex v, Distance r, Direction dir, bool plus,
                SearchWorkspace *ws) {
    SearchWorkspace local;
    SearchWorkspace &w = ws != nullptr ? *ws : local;
    BallResult res;
    run_dijkstra(
        g, v, dir, w, [&](Distance d) { return d > r; },
        [&](Vertex u, Distance d) { res.core.push_back({u, d}); });
    if (plus) {
        res.plus = plus_extension(g, res.core, dir, &w);
    }
    std::sort(res.core.begin(), res.core.end(),
              [](const VertexDistance &a, const VertexDistance &b) { return a.vertex < b.vertex; });
    return res;
}

Distance eccentricity(const DirectedGraph &g, Vertex v, Direction dir) {
    std::vector<Distance> dist = sssp(g, v, dir);
    return *std::max_element(dist.begin(), dist.end());
}

bool is_strongly_connected(const DirectedGraph &g) {
    std::size_t n = g.num_vertices();
    if (n <= 1) {
        return true;
    }
    for (Direction dir : {Direction::kOut, Direction::kIn}) {
        std::vector<char> seen(n, 0);
        std::vector<Vertex> stack{0};
        seen[0] = 1;
        std::size_t count = 1;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (const Arc &a : g.arcs(u, dir)) {
                if (!seen[a.head]) {
                    seen[a.head] = 1;
                    ++count;
                    stack.push_back(a.head);
                }
            }
        }
        if (count != n) {
            return false;
        }
    }
    return true;
}

} // namespace dirdiam
