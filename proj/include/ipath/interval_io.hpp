#ifndef IPATH_INTERVAL_IO_HPP
#define IPATH_INTERVAL_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "ipath/interval_graph.hpp"

namespace ipath {

// Text format: first line `n`, then n lines `vertex_id left right
// [weight_num weight_den]`.  `#` starts a comment.  Vertex ids must be a
// permutation of 0..n-1.  Throws ParseError, DuplicateVertexId and the
// IntervalGraph construction errors.
IntervalGraph read_intervals(std::istream& in);
IntervalGraph read_intervals_file(const std::string& path);

// Writes every weight explicitly.  `notes`, when nonempty, holds one trailing
// comment per vertex.
void write_intervals(std::ostream& out, const IntervalGraph& graph,
                     const std::vector<std::string>& notes = {});

} // namespace ipath

#endif
