#include "shadowsum/shadow/families.hpp"

#include "shadowsum/error.hpp"

namespace shadowsum::shadow {

Shadow closed_surface(int genus, int gleam2) {
    if (genus < 0)
        throw ValidationError("genus must be non-negative");
    Shadow s;
    s.regions.push_back({.id = 1, .gleam2 = gleam2, .chi = 2 - 2 * genus, .orientable = true});
    return s;
}

Shadow three_disks(int g1, int g2, int g3) {
    Shadow s;
    const int gl[3] = {g1, g2, g3};
    for (int i = 0; i < 3; ++i)
        s.regions.push_back({.id = i + 1, .gleam2 = 2 * gl[i], .chi = 1, .orientable = true});
    s.edges.push_back({.id = 1,
                       .chi = 0,
                       .regions = {1, 2, 3},
                       .signs = std::array<int, 3>{1, 1, 1},
                       .nonorientable = std::array<bool, 3>{false, false, false}});
    return s;
}

Shadow colored_disk(int color, int gleam2) {
    Shadow s;
    s.regions.push_back({.id = 1, .gleam2 = gleam2, .chi = 1, .external = true, .color = color, .orientable = true});
    s.boundary_edges.push_back({.id = 1, .chi = 0, .region = 1, .color = color});
    return s;
}

Shadow theta_book(int a, int b, int c) {
    Shadow s;
    const int col[3] = {a, b, c};
    for (int i = 0; i < 3; ++i) {
        s.regions.push_back({.id = i + 1, .chi = 1, .external = true, .color = col[i], .orientable = true});
        s.boundary_edges.push_back({.id = i + 1, .chi = 1, .region = i + 1, .color = col[i]});
    }
    s.edges.push_back({.id = 1,
                       .chi = 1,
                       .regions = {1, 2, 3},
                       .signs = std::array<int, 3>{1, 1, 1},
                       .nonorientable = std::array<bool, 3>{false, false, false}});
    s.boundary_vertices.push_back({.id = 1, .edges = {1, 2, 3}});
    s.boundary_vertices.push_back({.id = 2, .edges = {1, 2, 3}});
    return s;
}

} // namespace shadowsum::shadow
