#pragma once

#include "vrsp/document.hpp"

namespace vrsp {
namespace figures {

// Regression fixtures, shipped under fixtures/ as JSON. fig1: 9 vertices,
// 16 arcs, one complete 2x4 block among trivial blocks. fig2: 30 vertices,
// 41 arcs, four overlapping grids feeding one sink. fig4: the 3x4 Cartesian
// grid. fig5: reconstructed mixed instance, two Cartesian blocks bridged by
// bipartite blocks (5 rows, 6 columns).
GraphDocument fig1();
GraphDocument fig2();
GraphDocument fig4();
GraphDocument fig5();

}  // namespace figures
}  // namespace vrsp
