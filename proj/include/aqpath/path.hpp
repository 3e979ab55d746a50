#ifndef AQPATH_PATH_HPP
#define AQPATH_PATH_HPP

#include <vector>

#include "aqpath/cube.hpp"

namespace aqpath {

/// A path is its vertex sequence; a PathSet is an ordered list of paths.
using Path = std::vector<Vertex>;
using PathSet = std::vector<Path>;

}  // namespace aqpath

#endif  // AQPATH_PATH_HPP
