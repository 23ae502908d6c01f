#include "myxo/geometry/delaunay.hpp"

#include <algorithm>
#include <numeric>

#include "myxo/errors.hpp"
#include "myxo/geometry/predicates.hpp"

namespace myxo::geom {

namespace {

inline std::uint32_t next_he(std::uint32_t e) { return e % 3 == 2 ? e - 2 : e + 1; }
inline std::uint32_t prev_he(std::uint32_t e) { return e % 3 == 0 ? e + 2 : e - 1; }

// Half-edge triangulation builder. Halfedge e of triangle e/3 runs from
// tri[e] to tri[next_he(e)]; halfedge[e] is the opposite halfedge or -1 on
// the hull. The hull is a doubly linked list over vertex ids; hull_he[v] is
// the halfedge of hull edge v -> hull_next[v] (its pair is always -1).
struct Builder {
    const std::vector<Point>& pts;
    std::vector<std::uint32_t> tri;
    std::vector<std::int32_t> halfedge;
    std::vector<std::uint32_t> hull_next, hull_prev;
    std::vector<std::uint32_t> hull_he;
    std::uint32_t hull_start = 0;
    std::size_t hull_size = 0;
    std::uint32_t recent = 0; // hull vertex where the visibility search starts
    std::vector<std::uint32_t> worklist;

    explicit Builder(const std::vector<Point>& p) : pts(p) {
        tri.reserve(6 * p.size());
        halfedge.reserve(6 * p.size());
        hull_next.resize(p.size());
        hull_prev.resize(p.size());
        hull_he.resize(p.size());
    }

    void link(std::uint32_t e, std::int32_t pair) {
        halfedge[e] = pair;
        if (pair >= 0) halfedge[static_cast<std::uint32_t>(pair)] = static_cast<std::int32_t>(e);
    }

    // Adds CCW triangle (a, b, c); pairs pa/pb/pc attach to edges
    // a->b, b->c, c->a. Returns the first halfedge id.
    std::uint32_t add_triangle(std::uint32_t a, std::uint32_t b, std::uint32_t c,
                               std::int32_t pa, std::int32_t pb, std::int32_t pc) {
        const auto e = static_cast<std::uint32_t>(tri.size());
        tri.push_back(a);
        tri.push_back(b);
        tri.push_back(c);
        halfedge.resize(tri.size(), -1);
        link(e, pa);
        link(e + 1, pb);
        link(e + 2, pc);
        return e;
    }

    bool visible(std::uint32_t u, std::uint32_t v, std::uint32_t p) const {
        return orient2d(pts[u], pts[v], pts[p]) < 0;
    }

    // Lawson legalization: flips edge e when the opposite apex lies strictly
    // inside the circumcircle, then re-queues the quad's outer edges.
    void legalize(std::uint32_t seed) {
        worklist.clear();
        worklist.push_back(seed);
        while (!worklist.empty()) {
            const std::uint32_t a = worklist.back();
            worklist.pop_back();
            const std::int32_t b_signed = halfedge[a];
            if (b_signed < 0) continue;
            const auto b = static_cast<std::uint32_t>(b_signed);

            const std::uint32_t u = tri[a];
            const std::uint32_t v = tri[next_he(a)];
            const std::uint32_t w1 = tri[prev_he(a)];
            const std::uint32_t w2 = tri[prev_he(b)];
            if (incircle(pts[u], pts[v], pts[w1], pts[w2]) <= 0) continue;

            // Flip to the w1-w2 diagonal, reusing both triangle slots.
            const std::uint32_t ta = a - a % 3;
            const std::uint32_t tb = b - b % 3;
            const std::int32_t p_vw1 = halfedge[next_he(a)];
            const std::int32_t p_w1u = halfedge[prev_he(a)];
            const std::int32_t p_uw2 = halfedge[next_he(b)];
            const std::int32_t p_w2v = halfedge[prev_he(b)];

            tri[ta] = u;
            tri[ta + 1] = w2;
            tri[ta + 2] = w1;
            tri[tb] = w2;
            tri[tb + 1] = v;
            tri[tb + 2] = w1;

            link(ta, p_uw2);
            link(ta + 1, static_cast<std::int32_t>(tb + 2));
            link(ta + 2, p_w1u);
            link(tb, p_w2v);
            link(tb + 1, p_vw1);

            // Re-point hull records whose owning halfedge moved.
            if (p_uw2 < 0) hull_he[u] = ta;
            if (p_w1u < 0) hull_he[w1] = ta + 2;
            if (p_w2v < 0) hull_he[w2] = tb;
            if (p_vw1 < 0) hull_he[v] = tb + 1;

            worklist.push_back(ta);
            worklist.push_back(ta + 2);
            worklist.push_back(tb);
            worklist.push_back(tb + 1);
        }
    }

    // Seeds the triangulation from a lex-sorted collinear chain plus the
    // first off-line point p.
    void start_fan(const std::vector<std::uint32_t>& chain, std::uint32_t p, int side) {
        const std::size_t m = chain.size();
        std::int32_t prev_pair = -1;
        if (side > 0) {
            // p left of the chain direction: hull = chain forward, then p.
            for (std::size_t i = 0; i + 1 < m; ++i) {
                const std::uint32_t t =
                    add_triangle(chain[i], chain[i + 1], p, -1, -1, prev_pair);
                hull_he[chain[i]] = t;
                prev_pair = static_cast<std::int32_t>(t + 1);
            }
            for (std::size_t i = 0; i + 1 < m; ++i) {
                hull_next[chain[i]] = chain[i + 1];
                hull_prev[chain[i + 1]] = chain[i];
            }
            hull_next[chain[m - 1]] = p;
            hull_prev[p] = chain[m - 1];
            hull_next[p] = chain[0];
            hull_prev[chain[0]] = p;
            hull_he[chain[m - 1]] = static_cast<std::uint32_t>(prev_pair);
            hull_he[p] = 2; // first triangle's (p -> chain[0]) edge
        } else {
            // p right of the chain direction: hull = chain reversed, then p.
            for (std::size_t i = 0; i + 1 < m; ++i) {
                const std::uint32_t t =
                    add_triangle(chain[i + 1], chain[i], p, -1, prev_pair, -1);
                hull_he[chain[i + 1]] = t;
                prev_pair = static_cast<std::int32_t>(t + 2);
            }
            for (std::size_t i = 0; i + 1 < m; ++i) {
                hull_next[chain[i + 1]] = chain[i];
                hull_prev[chain[i]] = chain[i + 1];
            }
            hull_next[chain[0]] = p;
            hull_prev[p] = chain[0];
            hull_next[p] = chain[m - 1];
            hull_prev[chain[m - 1]] = p;
            hull_he[chain[0]] = 1; // first triangle's (chain[0] -> p) edge
            hull_he[p] = static_cast<std::uint32_t>(prev_pair);
        }
        hull_start = chain[0];
        hull_size = m + 1;
        recent = p;
        for (std::uint32_t e = 0; e < tri.size(); ++e) legalize(e);
    }

    // Inserts a point that lies strictly outside the current hull.
    void insert(std::uint32_t p) {
        // Any visible hull edge, searched from the most recent hull vertex.
        std::uint32_t s = recent;
        std::size_t guard = 0;
        while (!visible(s, hull_next[s], p)) {
            s = hull_next[s];
            if (++guard > hull_size) {
                throw RuntimeError("delaunay: no hull edge visible from point " +
                                   std::to_string(p));
            }
        }
        while (visible(hull_prev[s], s, p)) s = hull_prev[s];
        const std::uint32_t run_start = s;

        // Build the fan over the visible run.
        std::vector<std::uint32_t> bases;
        std::int32_t prev_e1 = -1;
        std::uint32_t first_e0 = 0;
        std::uint32_t v = run_start;
        std::size_t removed = 0;
        while (visible(v, hull_next[v], p)) {
            const std::uint32_t w = hull_next[v];
            const std::uint32_t t = add_triangle(
                v, p, w, prev_e1, -1, static_cast<std::int32_t>(hull_he[v]));
            if (prev_e1 < 0) first_e0 = t;
            bases.push_back(t + 2);
            prev_e1 = static_cast<std::int32_t>(t + 1);
            v = w;
            ++removed;
        }
        const std::uint32_t run_end = v;

        hull_next[run_start] = p;
        hull_prev[p] = run_start;
        hull_next[p] = run_end;
        hull_prev[run_end] = p;
        hull_he[run_start] = first_e0;
        hull_he[p] = static_cast<std::uint32_t>(prev_e1);
        hull_size = hull_size + 2 - removed;
        hull_start = p;
        recent = p;

        for (std::uint32_t e : bases) legalize(e);
    }
};

} // namespace

Triangulation triangulate(const PointSet& ps) {
    const auto& pts = ps.points();
    const auto n = static_cast<std::uint32_t>(pts.size());

    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (pts[a].x != pts[b].x) return pts[a].x < pts[b].x;
        return pts[a].y < pts[b].y;
    });

    // Collinear prefix of the canonical order.
    std::vector<std::uint32_t> chain = {order[0], order[1]};
    std::uint32_t k = 2;
    int side = 0;
    while (k < n) {
        side = orient2d(pts[order[0]], pts[order[1]], pts[order[k]]);
        if (side != 0) break;
        chain.push_back(order[k]);
        ++k;
    }

    Triangulation out;
    if (k == n) {
        out.collinear = true;
        out.hull = std::move(chain);
        return out;
    }

    Builder b(pts);
    b.start_fan(chain, order[k], side);
    for (std::uint32_t i = k + 1; i < n; ++i) b.insert(order[i]);

    out.triangles.reserve(b.tri.size() / 3);
    for (std::size_t t = 0; t < b.tri.size(); t += 3) {
        out.triangles.push_back({b.tri[t], b.tri[t + 1], b.tri[t + 2]});
    }
    std::uint32_t h = b.hull_start;
    do {
        out.hull.push_back(h);
        h = b.hull_next[h];
    } while (h != b.hull_start && out.hull.size() <= pts.size());
    return out;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Triangulation::edges() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    if (collinear) {
        for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
            auto [a, b] = std::minmax(hull[i], hull[i + 1]);
            out.emplace_back(a, b);
        }
    } else {
        out.reserve(triangles.size() * 3);
        for (const auto& t : triangles) {
            for (int i = 0; i < 3; ++i) {
                auto [a, b] = std::minmax(t[i], t[(i + 1) % 3]);
                out.emplace_back(a, b);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace myxo::geom
