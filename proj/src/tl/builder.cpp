#include "shadowsum/tl/builder.hpp"

#include <algorithm>
#include <string>

#include "shadowsum/error.hpp"

namespace shadowsum::tl {

int SliceBuilder::new_point(int node, int slot, bool upper) {
    points_.push_back(Point{node, slot, upper});
    return static_cast<int>(points_.size()) - 1;
}

void SliceBuilder::check_position(int i, int span) const {
    if (i < 0 || i + span > width())
        throw DomainError("slice position " + std::to_string(i) + " out of range for width " +
                          std::to_string(width()));
}

void SliceBuilder::end_strand(const Strand &s, int point) {
    links_.push_back(Link{s.point, point, s.color, s.framing2, s.tag, false});
}

SliceBuilder &SliceBuilder::cup(int i, int color, int tag) {
    if (i < 0 || i > width())
        throw DomainError("cup position out of range");
    const int j = new_point(-1, -1, false);
    strands_.insert(strands_.begin() + i, {Strand{j, color, 0, tag}, Strand{j, color, 0, tag}});
    return *this;
}

SliceBuilder &SliceBuilder::cap(int i) {
    check_position(i, 2);
    const Strand &l = strands_[i], &r = strands_[i + 1];
    if (l.color != r.color)
        throw DomainError("cap joins strands of colors " + std::to_string(l.color) + " and " +
                          std::to_string(r.color));
    links_.push_back(Link{l.point, r.point, l.color, l.framing2 + r.framing2,
                          l.tag >= 0 ? l.tag : r.tag, false});
    strands_.erase(strands_.begin() + i, strands_.begin() + i + 2);
    return *this;
}

SliceBuilder &SliceBuilder::cross(int i, bool positive) {
    check_position(i, 2);
    const int c = crossings_++;
    Strand left = strands_[i], right = strands_[i + 1];
    if (positive) {
        // Slots counterclockwise: BR (under), TR (over), TL (under), BL (over).
        const int br = new_point(c, 0, false), tr = new_point(c, 1, true);
        const int tl = new_point(c, 2, true), bl = new_point(c, 3, false);
        end_strand(left, bl);
        end_strand(right, br);
        strands_[i] = Strand{tl, right.color, 0, right.tag};
        strands_[i + 1] = Strand{tr, left.color, 0, left.tag};
    } else {
        // Slots counterclockwise: BL (under), BR (over), TR (under), TL (over).
        const int bl = new_point(c, 0, false), br = new_point(c, 1, false);
        const int tr = new_point(c, 2, true), tl = new_point(c, 3, true);
        end_strand(left, bl);
        end_strand(right, br);
        strands_[i] = Strand{tl, right.color, 0, right.tag};
        strands_[i + 1] = Strand{tr, left.color, 0, left.tag};
    }
    return *this;
}

SliceBuilder &SliceBuilder::split(int i, int left_color, int right_color, int left_tag, int right_tag) {
    check_position(i, 1);
    const int v = kVertexBase + vertices_++;
    // Slots counterclockwise: TR, TL, B.
    const int tr = new_point(v, 0, true), tl = new_point(v, 1, true), b = new_point(v, 2, false);
    end_strand(strands_[i], b);
    strands_[i] = Strand{tl, left_color, 0, left_tag};
    strands_.insert(strands_.begin() + i + 1, Strand{tr, right_color, 0, right_tag});
    return *this;
}

SliceBuilder &SliceBuilder::merge(int i, int color, int tag) {
    check_position(i, 2);
    const int v = kVertexBase + vertices_++;
    // Slots counterclockwise: T, BL, BR.
    const int t = new_point(v, 0, true), bl = new_point(v, 1, false), br = new_point(v, 2, false);
    end_strand(strands_[i], bl);
    end_strand(strands_[i + 1], br);
    strands_.erase(strands_.begin() + i + 1);
    strands_[i] = Strand{t, color, 0, tag};
    return *this;
}

SliceBuilder &SliceBuilder::twist(int i, int framing2) {
    check_position(i, 1);
    strands_[i].framing2 += framing2;
    return *this;
}

SliceBuilder::Result SliceBuilder::finish() const {
    if (!strands_.empty())
        throw DomainError("diagram still has " + std::to_string(strands_.size()) + " open strands");
    Result res;
    auto &d = res.diagram;
    d.crossings.resize(crossings_);
    d.vertices.resize(vertices_);

    std::vector<std::vector<int>> incident(points_.size());
    for (int l = 0; l < static_cast<int>(links_.size()); ++l) {
        incident[links_[l].a].push_back(l);
        incident[links_[l].b].push_back(l);
    }
    std::vector<char> used(links_.size(), 0);
    auto attach = [&](int point, int arc, int side) {
        const Point &p = points_[point];
        const ArcEnd e{arc, side};
        if (p.node >= kVertexBase)
            d.vertices[p.node - kVertexBase].ends[p.slot] = e;
        else
            d.crossings[p.node].ends[p.slot] = e;
    };

    for (int start = 0; start < static_cast<int>(points_.size()); ++start) {
        if (points_[start].node < 0 || used[incident[start].at(0)])
            continue;
        int cur = start, link = incident[start][0];
        int framing = 0, tag = -1, color = links_[link].color;
        while (true) {
            used[link] = 1;
            framing += links_[link].framing2;
            if (tag < 0)
                tag = links_[link].tag;
            cur = links_[link].a == cur ? links_[link].b : links_[link].a;
            if (points_[cur].node >= 0)
                break;
            const auto &inc = incident[cur];
            link = inc[0] == link ? inc[1] : inc[0];
        }
        const int arc = static_cast<int>(d.arcs.size());
        d.arcs.push_back(Arc{color, framing, false});
        res.arc_tags.push_back(tag);
        // Orient from the end that leaves a node upwards when possible.
        bool start_is_tail = start < cur;
        if (points_[start].upper != points_[cur].upper)
            start_is_tail = points_[start].upper;
        attach(start, arc, start_is_tail ? 0 : 1);
        attach(cur, arc, start_is_tail ? 1 : 0);
    }
    for (int l = 0; l < static_cast<int>(links_.size()); ++l) {
        if (used[l])
            continue;
        int framing = 0, tag = -1;
        int cur = links_[l].a, link = l;
        while (!used[link]) {
            used[link] = 1;
            framing += links_[link].framing2;
            if (tag < 0)
                tag = links_[link].tag;
            cur = links_[link].a == cur ? links_[link].b : links_[link].a;
            const auto &inc = incident[cur];
            link = inc[0] == link ? inc[1] : inc[0];
        }
        d.arcs.push_back(Arc{links_[l].color, framing, true});
        res.arc_tags.push_back(tag);
    }

    // Make each link component consistently oriented.
    for (const auto &chain : d.chains()) {
        if (!chain.closed || chain.arcs.size() < 2)
            continue;
        for (std::size_t i = 0; i < chain.arcs.size(); ++i) {
            if (chain.forward[i])
                continue;
            Chain single;
            single.arcs = {chain.arcs[i]};
            d.reverse_chain(single);
        }
    }
    return res;
}

FramedGraphDiagram unknot_diagram(int color, int framing2) {
    SliceBuilder b;
    b.cup(0, color).twist(0, framing2).cap(0);
    return b.finish().diagram;
}

FramedGraphDiagram theta_diagram(int a, int b, int c) {
    SliceBuilder s;
    s.cup(0, a).split(0, b, c).merge(1, b).cap(0);
    return s.finish().diagram;
}

FramedGraphDiagram tet_diagram(int a, int b, int c, int d, int e, int f) {
    SliceBuilder s;
    // c splits into (a,b) and (d,e); then (b,d) -> f and (f,e) -> a.
    s.cup(0, c).split(0, a, b).split(2, d, e).merge(1, f).merge(1, a).cap(0);
    return s.finish().diagram;
}

SliceBuilder::Result braid_closure(int strands, const std::vector<int> &word,
                                   const std::vector<int> &component_colors) {
    // Permutation induced by the word to find components.
    std::vector<int> perm(strands);
    for (int i = 0; i < strands; ++i)
        perm[i] = i;
    std::vector<int> at(strands);  // at[pos] = starting position of the strand now at pos
    for (int i = 0; i < strands; ++i)
        at[i] = i;
    for (int g : word) {
        const int i = std::abs(g) - 1;
        if (g == 0 || i + 1 >= strands)
            throw DomainError("braid generator " + std::to_string(g) + " out of range");
        std::swap(at[i], at[i + 1]);
    }
    // The strand starting at at[p] ends at p and continues at start p.
    std::vector<int> next(strands);
    for (int p = 0; p < strands; ++p)
        next[at[p]] = p;
    std::vector<int> comp(strands, -1);
    int ncomp = 0;
    for (int p = 0; p < strands; ++p) {
        if (comp[p] >= 0)
            continue;
        for (int q = p; comp[q] < 0; q = next[q])
            comp[q] = ncomp;
        ++ncomp;
    }
    SliceBuilder b;
    for (int k = 0; k < strands; ++k) {
        const int pos = k;
        const int c = comp[pos];
        const int color = c < static_cast<int>(component_colors.size()) ? component_colors[c] : 1;
        b.cup(k, color, c);
    }
    for (int g : word)
        b.cross(std::abs(g) - 1, g > 0);
    for (int k = strands - 1; k >= 0; --k)
        b.cap(k);
    return b.finish();
}

} // namespace shadowsum::tl
