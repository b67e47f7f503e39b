#pragma once

#include "shadowsum/shadow/shadow.hpp"

namespace shadowsum::shadow {

// Closed orientable surface of the given genus with gleam gleam2/2.
Shadow closed_surface(int genus, int gleam2);
inline Shadow sphere(int gleam2) { return closed_surface(0, gleam2); }

// Three disks glued along a common circle.
Shadow three_disks(int g1, int g2, int g3);

// A disk whose boundary circle carries the given colour; a shadow of the
// colour-c unknot in S^3.
Shadow colored_disk(int color, int gleam2);

// Three disks glued along a common arc, the remaining arcs forming a theta
// graph coloured (a, b, c).
Shadow theta_book(int a, int b, int c);

} // namespace shadowsum::shadow
