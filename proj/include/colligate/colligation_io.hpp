#ifndef COLLIGATE_COLLIGATION_IO_HPP
#define COLLIGATE_COLLIGATION_IO_HPP

#include "colligate/colligation.hpp"

#include <string>

namespace colligate {

// JSON colligation file: {"name": ..., "structure": {...}, "A": ..., "B": ...,
// "C": ..., "D": ...}. Structures are {"kind":"partition","dims":[...]} or
// {"kind":"matrix_ball","s":s,"r":r,"dim_h":h,"q":[Q_1,...]}. Matrices are
// row-major nested arrays, complex entries two-element [re, im] arrays.
std::string save(const Colligation& v);
Colligation load(const std::string& text);

Colligation load_file(const std::string& path);
void save_file(const Colligation& v, const std::string& path);

}  // namespace colligate

#endif  // COLLIGATE_COLLIGATION_IO_HPP
