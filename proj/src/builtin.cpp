#include "matchstick/construct.hpp"

namespace matchstick {

namespace {

// Orientation signs were produced by `matchstick calibrate` on the same
// script with every sign set to '?', taking the branch with P3 above P1P2.
constexpr std::string_view kGraph54 = R"(# 3-regular matchstick graph of girth 5 on 54 vertices.
#
# Fixed angles, plus the free angle mu that closes the last edge.
param alpha   = 102
param beta    = 67
param gamma   = 74
param delta   = 81
param epsilon = 24
param zeta    = 69
param eta     = 106
param theta   = 3
param iota    = 61
param kappa   = 85
param lambda  = 91
param mu      = 38 in 37 39
param nu      = 65

points P1 P2
angle_edge P3  base P1  ref P2  angle alpha   turn +
angle_edge P4  base P3  ref P1  angle beta    turn +
angle_edge P5  base P3  ref P4  angle gamma   turn +
angle_edge P6  base P5  ref P3  angle delta   turn +
apex P7  over P2 P4   side +
apex P8  over P4 P6   side +
angle_edge P9  base P8  ref P4  angle epsilon turn +
apex P10 over P9 P7   side +
angle_edge P11 base P5  ref P6  angle zeta    turn +
angle_edge P12 base P11 ref P5  angle eta     turn +
apex P13 over P6 P12  side +
apex P14 over P13 P9  side +
angle_edge P15 base P14 ref P9  angle theta   turn +
angle_edge P16 base P11 ref P12 angle iota    turn +
apex P17 over P12 P15 side +
apex P18 over P17 P16 side +
angle_edge P19 base P1  ref P2  angle kappa   turn -
angle_edge P20 base P19 ref P1  angle lambda  turn -
apex P21 over P20 P2  side +
apex P22 over P10 P21 side +
apex P23 over P15 P22 side +
apex P24 over P18 P23 side +
angle_edge P25 base P19 ref P20 angle mu      turn -
angle_edge P26 base P16 ref P18 angle nu      turn +
apex P27 over P24 P26 side +

# Second half: point reflection of P1..P27 about the midpoint of P25, P26.
copy P1..P27 about P25 P26 map P1..P24=P28..P51 P25=P26 P26=P25 P27=P52

apex P53 over P47 P27 side +
apex P54 over P20 P52 side +
closing_edge P53 P54

solve mu target 1 bracket 37 39

rigid G1 P1..P24 P26 P27
rigid G2 P25 P28..P52
symmetry about P25 P26 map P1..P24=P28..P51 P25=P26 P27=P52 P53=P54
)";

}  // namespace

std::string_view builtin_graph54_script() { return kGraph54; }

Construction builtin_graph54() { return parse_script(kGraph54); }

}  // namespace matchstick
