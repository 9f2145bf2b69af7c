#pragma once

// Signed graphs transcribed from the drawings, in the graph text format.

#include <string>

#include "mforge/graph.hpp"

namespace mforge::figures {

// Doubled K4. Drawn vertices 1, 2, 3 are 0, 1, 2; the centre is 3. Edge order
// matches the columns of the PG(3,2)\L matrix in the catalog.
inline const char* const kDoubledK4 = R"(vertices: 4
0 3
1 3
2 3
0 1
0 2
1 2
0 3 odd
1 3 odd
2 3 odd
0 1 odd
0 2 odd
1 2 odd
)";

// H12: the 5-cycle 0-1-2-3-4 with chord 1-4, every edge doubled.
inline const char* const kH12 = R"(vertices: 5
0 1
0 1 odd
1 2
1 2 odd
2 3
2 3 odd
3 4
3 4 odd
0 4
0 4 odd
1 4
1 4 odd
)";

// M*(K5). Vertices top, left, lower-left, centre, right, lower-right = 0..5.
inline const char* const kDualK5 = R"(vertices: 6
0 1
1 2
1 3
0 4
4 3
4 5
0 3 odd
3 2 odd
3 5 odd
5 2 odd
)";

// M*(K6\e). Vertices: top row 0, 1, 2; right column 3, 4 (2 is its top);
// bottom 5, 6; inner 7 (right), 8 (left). The drawing omits one edge; the
// plain edge 0-4 is the only single edge that makes the matroid M*(K6\e).
inline const char* const kDualK6MinusEdge = R"(vertices: 9
0 1
1 2
2 3
3 4
4 5
6 0
8 5 odd
8 1
8 7 odd
7 2 odd
7 3
5 6
5 6 odd
0 4
)";

inline SignedGraph load(const char* text) {
  GraphFile f = parse_graph(text);
  return SignedGraph{f.graph, f.odd_edges};
}

}  // namespace mforge::figures
