// Static triangulation of real projective 3-space: barycentric
// subdivision of the join of two 4-gon circles, divided by the free
// simultaneous half-rotation, with two designated disjoint torsion
// cycles. Same construction as the lens builders; frozen here as data
// and revalidated on every load.

#include "rp3_data.hpp"

namespace torlink::manifold::rp3_data {

const std::size_t vertex_count = 40;

const std::array<int, 4> tets[192] = {
    {0, 1, 2, 3},    {0, 1, 3, 4},    {0, 5, 3, 2},    {0, 5, 6, 3},
    {0, 7, 4, 3},    {0, 7, 3, 6},    {8, 1, 3, 2},    {8, 1, 4, 3},
    {8, 9, 2, 3},    {8, 9, 3, 10},    {8, 11, 3, 4},    {8, 11, 10, 3},
    {12, 5, 2, 3},    {12, 5, 3, 6},    {12, 9, 3, 2},    {12, 9, 10, 3},
    {12, 13, 6, 3},    {12, 13, 3, 10},    {14, 7, 3, 4},    {14, 7, 6, 3},
    {14, 11, 4, 3},    {14, 11, 3, 10},    {14, 13, 3, 6},    {14, 13, 10, 3},
    {0, 1, 4, 15},    {0, 1, 15, 16},    {0, 7, 15, 4},    {0, 7, 17, 15},
    {0, 18, 16, 15},    {0, 18, 15, 17},    {8, 1, 15, 4},    {8, 1, 16, 15},
    {8, 11, 4, 15},    {8, 11, 15, 19},    {8, 20, 15, 16},    {8, 20, 19, 15},
    {14, 7, 4, 15},    {14, 7, 15, 17},    {14, 11, 15, 4},    {14, 11, 19, 15},
    {14, 21, 17, 15},    {14, 21, 15, 19},    {0, 1, 16, 22},    {0, 1, 22, 23},
    {0, 18, 22, 16},    {0, 18, 24, 22},    {0, 25, 23, 22},    {0, 25, 22, 24},
    {8, 1, 22, 16},    {8, 1, 23, 22},    {8, 20, 16, 22},    {8, 20, 22, 26},
    {8, 27, 22, 23},    {8, 27, 26, 22},    {0, 1, 28, 2},    {0, 1, 23, 28},
    {0, 5, 2, 28},    {0, 5, 28, 29},    {0, 25, 28, 23},    {0, 25, 29, 28},
    {8, 1, 2, 28},    {8, 1, 28, 23},    {8, 9, 28, 2},    {8, 9, 30, 28},
    {8, 27, 23, 28},    {8, 27, 28, 30},    {12, 5, 28, 2},    {12, 5, 29, 28},
    {12, 9, 2, 28},    {12, 9, 28, 30},    {12, 21, 28, 29},    {12, 21, 30, 28},
    {8, 31, 32, 33},    {8, 31, 33, 34},    {8, 9, 33, 32},    {8, 9, 10, 33},
    {8, 11, 34, 33},    {8, 11, 33, 10},    {12, 9, 32, 33},    {12, 9, 33, 10},
    {12, 18, 33, 32},    {12, 18, 24, 33},    {12, 13, 10, 33},    {12, 13, 33, 24},
    {14, 11, 33, 34},    {14, 11, 10, 33},    {14, 25, 34, 33},    {14, 25, 33, 24},
    {14, 13, 33, 10},    {14, 13, 24, 33},    {8, 31, 34, 35},    {8, 31, 35, 36},
    {8, 11, 35, 34},    {8, 11, 19, 35},    {8, 20, 36, 35},    {8, 20, 35, 19},
    {14, 11, 34, 35},    {14, 11, 35, 19},    {14, 25, 35, 34},    {14, 25, 29, 35},
    {14, 21, 19, 35},    {14, 21, 35, 29},    {8, 31, 36, 37},    {8, 31, 37, 38},
    {8, 20, 37, 36},    {8, 20, 26, 37},    {8, 27, 38, 37},    {8, 27, 37, 26},
    {8, 31, 39, 32},    {8, 31, 38, 39},    {8, 9, 32, 39},    {8, 9, 39, 30},
    {8, 27, 39, 38},    {8, 27, 30, 39},    {12, 9, 39, 32},    {12, 9, 30, 39},
    {12, 18, 32, 39},    {12, 18, 39, 17},    {12, 21, 39, 30},    {12, 21, 17, 39},
    {12, 18, 16, 22},    {12, 18, 22, 24},    {12, 20, 22, 16},    {12, 20, 26, 22},
    {12, 13, 24, 22},    {12, 13, 22, 26},    {14, 25, 22, 23},    {14, 25, 24, 22},
    {14, 27, 23, 22},    {14, 27, 22, 26},    {14, 13, 22, 24},    {14, 13, 26, 22},
    {14, 25, 23, 28},    {14, 25, 28, 29},    {14, 27, 28, 23},    {14, 27, 30, 28},
    {14, 21, 29, 28},    {14, 21, 28, 30},    {12, 18, 15, 16},    {12, 18, 17, 15},
    {12, 20, 16, 15},    {12, 20, 15, 19},    {12, 21, 15, 17},    {12, 21, 19, 15},
    {0, 31, 37, 36},    {0, 31, 38, 37},    {0, 5, 36, 37},    {0, 5, 37, 6},
    {0, 7, 37, 38},    {0, 7, 6, 37},    {12, 5, 37, 36},    {12, 5, 6, 37},
    {12, 20, 36, 37},    {12, 20, 37, 26},    {12, 13, 37, 6},    {12, 13, 26, 37},
    {14, 7, 38, 37},    {14, 7, 37, 6},    {14, 27, 37, 38},    {14, 27, 26, 37},
    {14, 13, 6, 37},    {14, 13, 37, 26},    {0, 31, 39, 38},    {0, 31, 32, 39},
    {0, 7, 38, 39},    {0, 7, 39, 17},    {0, 18, 39, 32},    {0, 18, 17, 39},
    {14, 7, 39, 38},    {14, 7, 17, 39},    {14, 27, 38, 39},    {14, 27, 39, 30},
    {14, 21, 39, 17},    {14, 21, 30, 39},    {0, 31, 33, 32},    {0, 31, 34, 33},
    {0, 18, 32, 33},    {0, 18, 33, 24},    {0, 25, 33, 34},    {0, 25, 24, 33},
    {0, 31, 36, 35},    {0, 31, 35, 34},    {0, 5, 35, 36},    {0, 5, 29, 35},
    {0, 25, 34, 35},    {0, 25, 35, 29},    {12, 5, 36, 35},    {12, 5, 35, 29},
    {12, 20, 35, 36},    {12, 20, 19, 35},    {12, 21, 29, 35},    {12, 21, 35, 19},
};

const std::size_t tau1_walk[16] = {125, 131, 129, 128, 134, 64, 61, 60, 6, 0, 2, 12, 13, 16, 154, 155};
const std::size_t tau2_walk[16] = {106, 107, 53, 51, 50, 34, 31, 30, 7, 1, 4, 18, 19, 157, 156, 158};

const std::size_t tau1_len = 16;
const std::size_t tau2_len = 16;
const std::size_t tet_count = 192;

}  // namespace torlink::manifold::rp3_data
